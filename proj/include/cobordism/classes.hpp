#pragma once

#include <map>
#include <vector>

#include "cobordism/chow.hpp"
#include "cobordism/partition.hpp"

namespace cobordism {

/// Polynomial in y with Chow-element coefficients; entry k is the y^k coefficient.
using YPoly = std::vector<ChowElement>;

/// sum_k f[k] l^k for a Chow element l of codimension >= 1.
ChowElement evaluate_series(const std::vector<RingElement>& f, const ChowElement& l);

/// Coefficients 1, b_1, b_2, ... of pi(x), and of 1/pi(x), up to x^n.
const std::vector<RingElement>& pi_coefficients(int n);
const std::vector<RingElement>& pi_inverse_coefficients(int n);

/// P(E) over Z[b]: pi(l) per plus line, 1/pi(l) per minus line.
ChowElement total_P(const VirtualSplitBundle& e);

/// P(E{y} + F) truncated after y^y_order.
YPoly total_P_deformed(const VirtualSplitBundle& deformed, const VirtualSplitBundle& plain, int y_order);

/// Integer Chow class given by the b_alpha coefficient of a Z[b] class.
ChowElement b_coefficient(const ChowElement& u, const Partition& alpha);

/// Conner-Floyd class c_alpha(E): the b_alpha coefficient of P(E). Also evaluates
/// Q_alpha at the ordinary Chern classes and throws std::logic_error on disagreement.
ChowElement cf_class(const VirtualSplitBundle& e, const Partition& alpha);
/// Q_alpha(c_1(E), c_2(E), ...) alone.
ChowElement cf_class_q(const VirtualSplitBundle& e, const Partition& alpha);

/// Class of c1(O(1))^m on P(V) -> S pushed to the point, by the residue formula
/// sum_i Res_y y^{-r-i} exp(y)^m deg(c_i(-V) P(-V{y} - T_S)). V lives on build_model(s).
RingElement quillen_pushforward(const VarietySpec& s, const VirtualSplitBundle& v, int m);

enum class Theory { L, Lp, CHX, CHA };

/// [X] over Z[b] as deg P(-T_X), summed over components.
RingElement fundamental_class(const VarietySpec& spec);
/// [X] in the given theory. CHX and CHA are computed by specialization and by the
/// closed forms chi(X) t^n and c_(n)(X) eps t^n; std::logic_error if they differ.
RingElement fundamental_class(const VarietySpec& spec, Theory theory, long p = 2);

/// deg c_n(T_X), summed over components.
mpz_class euler_number(const VarietySpec& spec);
/// deg c_alpha(-T_X) summed over components; components of dimension != |alpha| contribute 0.
mpz_class chern_number(const VarietySpec& spec, const Partition& alpha);
/// c_(n)(X) = deg of the n-th power sum of the Chern roots of -T_X. A point counts 1.
mpz_class additive_chern_number(const VarietySpec& spec);

}  // namespace cobordism
