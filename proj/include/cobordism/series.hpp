#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cobordism/ring.hpp"

namespace cobordism {

/// Raised for ill-posed series operations (mismatched variables or order,
/// inexact division, non-invertible leading coefficients, ...).
class SeriesError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A power series in up to seven named variables over a Domain, truncated at
/// total degree < order. Exponents are packed into a 64-bit key whose top byte
/// is the total degree, so iteration runs through monomials by degree.
class TruncatedSeries {
public:
    using Exponents = std::vector<int>;
    using Key = std::uint64_t;
    static constexpr int kMaxVars = 7;

    TruncatedSeries(Domain d, std::vector<std::string> vars, int order);

    static TruncatedSeries constant(Domain d, std::vector<std::string> vars, int order, const RingElement& c);
    static TruncatedSeries variable(Domain d, std::vector<std::string> vars, int order, int index);
    /// Univariate series sum_i coeffs[i] x^i.
    static TruncatedSeries univariate(Domain d, const std::string& var, int order, const std::vector<RingElement>& coeffs);

    [[nodiscard]] const Domain& domain() const { return domain_; }
    [[nodiscard]] const std::vector<std::string>& vars() const { return vars_; }
    [[nodiscard]] int nvars() const { return static_cast<int>(vars_.size()); }
    [[nodiscard]] int order() const { return order_; }
    [[nodiscard]] const std::map<Key, RingElement>& raw() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

    [[nodiscard]] RingElement coefficient(const Exponents& e) const;
    /// Coefficient of x^i in a univariate series.
    [[nodiscard]] RingElement coefficient(int i) const;
    [[nodiscard]] RingElement constant_term() const;
    void add_term(const Exponents& e, const RingElement& c);
    /// All (exponents, coefficient) pairs in key order.
    [[nodiscard]] std::vector<std::pair<Exponents, RingElement>> terms() const;
    /// Lowest total degree with a nonzero coefficient, or order() for zero.
    [[nodiscard]] int valuation() const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator-(const TruncatedSeries& a);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    [[nodiscard]] TruncatedSeries scaled(const RingElement& c) const;
    /// Same series viewed at a smaller order.
    [[nodiscard]] TruncatedSeries truncated(int order) const;
    [[nodiscard]] TruncatedSeries derivative(int var) const;
    [[nodiscard]] TruncatedSeries map_coefficients(const std::function<RingElement(const RingElement&)>& fn,
                                                   const Domain& target) const;
    /// Same coefficients with variables renamed (count must match).
    [[nodiscard]] TruncatedSeries renamed(std::vector<std::string> vars) const;

    [[nodiscard]] std::string to_string() const;

    static Key pack(const Exponents& e);
    [[nodiscard]] Exponents unpack(Key k) const;
    static int key_degree(Key k) { return static_cast<int>(k >> 56U); }

private:
    void check_compatible(const TruncatedSeries& o) const;

    Domain domain_;
    std::vector<std::string> vars_;
    int order_;
    std::map<Key, RingElement> coeffs_;
};

TruncatedSeries pow(const TruncatedSeries& f, unsigned e);

/// f(g) for univariate f and g with zero constant term; the result has g's variables.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// f(s_1, ..., s_k) where f has k variables and every s_i has zero constant term.
TruncatedSeries substitute(const TruncatedSeries& f, const std::vector<TruncatedSeries>& subs);

/// Compositional inverse of a univariate f with f(0) = 0 and unit linear coefficient.
TruncatedSeries reversion(const TruncatedSeries& f);

/// Multiplicative inverse; the constant term must be a unit.
TruncatedSeries inverse(const TruncatedSeries& f);

/// h with f = g h. g must be x^k u where x is variable `var` and u has unit
/// constant term, and f must be divisible by x^k. The result has order D - k.
TruncatedSeries divide(const TruncatedSeries& f, const TruncatedSeries& g, int var = 0);

/// Laurent series in one variable y with coefficients in a Domain: finitely many
/// negative powers plus a truncated regular part.
class LaurentSeries {
public:
    LaurentSeries(Domain d, std::string var, int order);
    /// y^shift * s for a univariate series s (shift may be negative).
    static LaurentSeries shifted(const TruncatedSeries& s, int shift);

    [[nodiscard]] const Domain& domain() const { return regular_.domain(); }
    [[nodiscard]] const std::map<int, RingElement>& principal() const { return principal_; }
    [[nodiscard]] const TruncatedSeries& regular() const { return regular_; }
    /// Coefficient of y^k; k must be below the regular part's order.
    [[nodiscard]] RingElement coefficient(int k) const;
    /// Coefficient of y^-1.
    [[nodiscard]] RingElement residue() const { return coefficient(-1); }

    void add_term(int k, const RingElement& c);
    LaurentSeries& operator+=(const LaurentSeries& o);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

private:
    std::map<int, RingElement> principal_;
    TruncatedSeries regular_;
};

RingElement residue(const LaurentSeries& f);

}  // namespace cobordism
