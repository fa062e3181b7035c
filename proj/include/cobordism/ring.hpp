#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "cobordism/partition.hpp"

namespace cobordism {

/// Raised when operands live in different coefficient domains or an
/// operation is not defined for the given domain.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Scalar ring underneath the graded variables: Z, Z/m or Z[1/2].
struct BaseRing {
    enum class Kind { Integers, Modular, Dyadic };
    Kind kind = Kind::Integers;
    long modulus = 0;  // only for Modular

    static BaseRing integers() { return {}; }
    static BaseRing modular(long m);
    static BaseRing dyadic() { return {Kind::Dyadic, 0}; }

    friend bool operator==(const BaseRing&, const BaseRing&) = default;
    [[nodiscard]] std::string name() const;
};

/// The graded variables adjoined to the base ring.
enum class Vars {
    None,  // just the base ring
    B,     // R[b_1, b_2, ...], b_i of degree -i
    T,     // R[t], t of degree -1
    TEps,  // R[t, eps]/eps^2, eps of degree 0
};

/// A coefficient domain: Z, Z/p, Z[1/2], Z[b], F_p[b], Z[1/2][b], Z[t], Z[t,eps]/eps^2, ...
struct Domain {
    BaseRing base;
    Vars vars = Vars::None;

    static Domain integers() { return {}; }
    static Domain modular(long m) { return {BaseRing::modular(m), Vars::None}; }
    static Domain dyadic() { return {BaseRing::dyadic(), Vars::None}; }
    static Domain lazard() { return {BaseRing::integers(), Vars::B}; }
    static Domain lazard_mod(long p) { return {BaseRing::modular(p), Vars::B}; }
    static Domain lazard_dyadic() { return {BaseRing::dyadic(), Vars::B}; }
    static Domain chx() { return {BaseRing::integers(), Vars::T}; }
    static Domain cha() { return {BaseRing::integers(), Vars::TEps}; }

    friend bool operator==(const Domain&, const Domain&) = default;

    /// Names like "Z", "Z/2", "Z[1/2][b]", "Z[t]", "Z[t,eps]".
    [[nodiscard]] std::string name() const;
    static Domain parse(const std::string& name);
};

/// An element of a base ring. Dyadic values are num / 2^two_exp with num odd
/// whenever two_exp > 0; for the other rings two_exp is always 0.
struct Coeff {
    mpz_class num;
    int two_exp = 0;

    Coeff() = default;
    Coeff(long v) : num(v) {}  // NOLINT(google-explicit-constructor)
    Coeff(mpz_class v, int e = 0) : num(std::move(v)), two_exp(e) {}  // NOLINT

    [[nodiscard]] bool is_zero() const { return num == 0; }
    friend bool operator==(const Coeff& a, const Coeff& b) { return a.num == b.num && a.two_exp == b.two_exp; }

    [[nodiscard]] std::string to_string() const;
};

/// Base-ring arithmetic; results are normalized (reduced mod m, lowest terms for Z[1/2]).
namespace base {
Coeff normalize(const BaseRing& r, Coeff c);
Coeff add(const BaseRing& r, const Coeff& a, const Coeff& b);
Coeff mul(const BaseRing& r, const Coeff& a, const Coeff& b);
Coeff neg(const BaseRing& r, const Coeff& a);
bool is_unit(const BaseRing& r, const Coeff& a);
Coeff inverse(const BaseRing& r, const Coeff& a);
/// Parses "123", "-7" or "5/2^3".
Coeff parse(const BaseRing& r, const std::string& s);
}  // namespace base

/// A monomial b_alpha * t^t * eps^eps.
struct Monomial {
    Partition b;
    int t = 0;
    int eps = 0;

    /// |alpha| + t; the graded degree is the negative of this.
    [[nodiscard]] int weight() const { return b.weight() + t; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

/// An element of a Domain, stored sparsely as monomial -> nonzero coefficient.
/// Monomials are ordered by weight, then partition, then t, then eps.
class RingElement {
public:
    using Terms = std::map<Monomial, Coeff>;

    explicit RingElement(Domain d = Domain::integers()) : domain_(d) {}
    RingElement(Domain d, const Coeff& c);

    static RingElement constant(Domain d, const Coeff& c) { return {d, c}; }
    static RingElement monomial(Domain d, Monomial m, const Coeff& c = Coeff(1));
    /// b_i (b_0 = 1).
    static RingElement b(Domain d, int i);
    static RingElement b(Domain d, const Partition& alpha);
    static RingElement t(Domain d, int power = 1);
    static RingElement eps(Domain d);

    [[nodiscard]] const Domain& domain() const { return domain_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    /// Coefficient of the empty monomial.
    [[nodiscard]] Coeff constant_term() const;
    [[nodiscard]] Coeff coefficient(const Monomial& m) const;

    /// True if every monomial has weight w (the zero element is homogeneous of every weight).
    [[nodiscard]] bool is_homogeneous(int w) const;
    [[nodiscard]] RingElement weight_part(int w) const;
    /// Largest monomial weight, or -1 for zero.
    [[nodiscard]] int max_weight() const;

    /// Units: a unit constant, plus (in Z[t,eps]) a nilpotent eps-multiple.
    [[nodiscard]] bool is_unit() const;
    [[nodiscard]] RingElement inverse() const;

    /// True when no coefficient has a power of two in its denominator.
    [[nodiscard]] bool is_integral() const;

    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    RingElement& operator*=(const RingElement& o);
    RingElement& scale(const Coeff& c);
    /// Adds c * m in place.
    void add_term(const Monomial& m, const Coeff& c);

    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a);
    friend bool operator==(const RingElement& a, const RingElement& b);

    /// Change of base ring, e.g. reduction mod p or Z -> Z[1/2].
    [[nodiscard]] RingElement map_base(const BaseRing& target) const;
    /// Z[b]-type element -> target domain, sending b_i to image(i). t/eps must be absent.
    [[nodiscard]] RingElement substitute_b(const std::function<RingElement(int)>& image, const Domain& target) const;

    [[nodiscard]] std::string to_string() const;

private:
    void check_same(const RingElement& o) const;

    Domain domain_;
    Terms terms_;
};

RingElement pow(const RingElement& a, unsigned e);

}  // namespace cobordism
