#pragma once

#include <gmpxx.h>

#include <map>

#include "cobordism/partition.hpp"

namespace cobordism {

/// Integer polynomial in the elementary symmetric functions: the key mu stands
/// for e_mu = e_{mu_1} e_{mu_2} ...
using EPoly = std::map<Partition, mpz_class>;

/// Expansion of a polynomial over the Q_gamma basis: key gamma -> coefficient.
using QExpansion = std::map<Partition, mpz_class>;

EPoly epoly_mul(const EPoly& a, const EPoly& b);

/// Q_alpha: the monomial symmetric function of alpha (orbit sum of
/// x_1^{alpha_1} ... x_m^{alpha_m}) written in e_1, e_2, .... Computed by
/// lexicographic elimination in max(n_vars, |alpha|) variables; throws if
/// n_vars < len(alpha). Memoized.
EPoly q_alpha(const Partition& alpha, int n_vars);
/// Q_alpha computed at |alpha| and |alpha|+1 variables, with the two results compared.
EPoly q_alpha(const Partition& alpha);

/// Writes a weight-homogeneous e-polynomial in the Q-basis (unitriangular solve over Z).
QExpansion q_expand(const EPoly& p);

/// lambda_{alpha, beta} with c_alpha(E) = sum_beta lambda_{alpha,beta} c_beta(-E). Memoized.
const std::map<Partition, mpz_class>& lambda_coeffs(const Partition& alpha);

}  // namespace cobordism
