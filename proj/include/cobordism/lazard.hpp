#pragma once

#include <vector>

#include "cobordism/chow.hpp"
#include "cobordism/lattice.hpp"
#include "cobordism/partition.hpp"
#include "cobordism/ring.hpp"

namespace cobordism {

/// The degree -n part of the Lazard ring inside Z[b], as a lattice over the
/// monomial basis b_alpha, |alpha| = n (ordered as partitions_of(n)).
struct LazardDegreePiece {
    int degree = 0;
    std::vector<Partition> monomials;
    IntegerLattice lattice;

    /// Coordinates of a Z[b] element homogeneous of weight n; std::invalid_argument otherwise.
    [[nodiscard]] IntVector coordinates(const RingElement& v) const;
    [[nodiscard]] RingElement element(const IntVector& coords) const;
};

/// Span of all degree -n monomials in the coefficients a_{i,j} of the universal law,
/// taken at truncation order `order` (0 picks n + 2). Requires order > n + 1. Cached.
const LazardDegreePiece& lazard_basis(int n, int order = 0);

/// Degree -n part of Dec(L): span of products of two positive-degree pieces.
const IntegerLattice& decomposable_lattice(int n);

/// v in m L (m >= 1) or v in L (m = 0). std::invalid_argument if v is not of weight n.
bool lattice_member_mod(const LazardDegreePiece& piece, const RingElement& v, long m);

/// p if n + 1 is a power of the prime p, else 0.
long prime_power_base(int n);
/// gcd of C(n+1, i) for 0 < i < n+1, computed directly.
mpz_class binomial_gcd(int n);

struct DecomposableVerdict {
    mpz_class additive;              // c_(n)(X)
    bool in_Lp_decomposable = false;
    bool in_Lmodp_decomposable = false;
    bool lattice_Lmodp_decomposable = false;  // [X] in Dec(L) + pL, decided by HNF
    [[nodiscard]] bool consistent() const { return in_Lmodp_decomposable == lattice_Lmodp_decomposable; }
};

/// Additive Chern number criterion for decomposability in L/p and L_p, together with
/// the lattice decision of [X] in Dec(L) + pL. Needs pure dimension n >= 1.
DecomposableVerdict decomposable_test(const VarietySpec& spec, long p);

struct PTypicalRecord {
    Partition alpha;
    mpz_class value;     // c_alpha(X)
    bool need_p_squared = false;
    bool ok = false;
};

/// c_alpha(X) for every alpha of n with all alpha_i + 1 powers of p: divisible by p,
/// and by p^2 when [X] is decomposable in L/p.
std::vector<PTypicalRecord> p_typical_chern_check(const VarietySpec& spec, long p);

/// a_{i,j} with i + j > 1 and i + j - 1 <= max_degree vanish after b_i -> b_i
/// (i + 1 a power of p, else 0) followed by reduction mod p.
bool psi_kernel_check(long p, int max_degree);

}  // namespace cobordism
