#pragma once

#include <functional>
#include <string>

#include "cobordism/series.hpp"

namespace cobordism {

/// A commutative formal group law F(x, y) over a Domain, truncated at total degree < order.
class FormalGroupLaw {
public:
    FormalGroupLaw(TruncatedSeries f, std::string name);

    [[nodiscard]] const TruncatedSeries& series() const { return f_; }
    [[nodiscard]] const Domain& domain() const { return f_.domain(); }
    [[nodiscard]] int order() const { return f_.order(); }
    [[nodiscard]] const std::string& name() const { return name_; }
    /// Coefficient a_{i,j} of x^i y^j.
    [[nodiscard]] RingElement coefficient(int i, int j) const { return f_.coefficient({i, j}); }
    /// Formal sum F(u, v) of two series sharing variables and order.
    [[nodiscard]] TruncatedSeries add(const TruncatedSeries& u, const TruncatedSeries& v) const;
    [[nodiscard]] FormalGroupLaw truncated(int order) const;

private:
    TruncatedSeries f_;
    std::string name_;
};

/// exp(x) = x pi(x) = sum_{i>=0} b_i x^{i+1} over Z[b].
TruncatedSeries exp_series(int order, const std::string& var = "x");
/// pi(x) = sum_{i>=0} b_i x^i over Z[b].
TruncatedSeries pi_series(int order, const std::string& var = "x");
/// Compositional inverse of exp.
TruncatedSeries log_series(int order, const std::string& var = "x");

/// The universal law exp(exp^-1(x) + exp^-1(y)) over Z[b]. Cached per order.
FormalGroupLaw universal_fgl(int order);
/// The universal law reduced to F_p[b].
FormalGroupLaw universal_fgl_mod(long p, int order);
/// x + y over the given domain.
FormalGroupLaw additive_fgl(const Domain& d, int order);

/// Pushes a Z[b] law along b_i -> image(i). Each image must be homogeneous of
/// weight i in the target (graded degree -i); otherwise DomainError.
FormalGroupLaw specialize(const FormalGroupLaw& law, const std::function<RingElement(int)>& image, const Domain& target,
                          std::string name);

/// b_i -> (-1)^i t^i and b_i -> eps t^i.
RingElement chx_image(int i);
RingElement cha_image(int i);
FormalGroupLaw chx_fgl(int order);
FormalGroupLaw cha_fgl(int order);
/// (x + y - 2txy)/(1 - t^2 xy) expanded directly.
TruncatedSeries chx_closed_form(int order);
/// x + y + eps sum_{i>=1} ((x+y)^{i+1} - x^{i+1} - y^{i+1}) t^i expanded directly.
TruncatedSeries cha_closed_form(int order);
/// ax / (1 + (a-1)tx) expanded directly.
TruncatedSeries chx_mult_closed_form(long a, int order);

/// m(x) with F(x, m(x)) = 0; leading term -x.
TruncatedSeries formal_inverse(const FormalGroupLaw& law);
/// [a](x): [0] = 0, [a] = F([a-1](x), x) for a > 0, [a] = [-1]([-a](x)) for a < 0.
TruncatedSeries formal_mult(const FormalGroupLaw& law, long a);

struct AxiomCheck {
    bool commutative = false;
    bool unital = false;
    bool associative = false;
    bool linear_term = false;  // F = x + y + higher terms
    [[nodiscard]] bool ok() const { return commutative && unital && associative && linear_term; }
};

/// Checks the formal group law axioms; associativity on a trivariate series
/// of order min(order, assoc_order).
AxiomCheck check_axioms(const FormalGroupLaw& law, int assoc_order = 9);

}  // namespace cobordism
