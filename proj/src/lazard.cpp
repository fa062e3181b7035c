#include "cobordism/lazard.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "cobordism/classes.hpp"
#include "cobordism/fgl.hpp"

namespace cobordism {

namespace {

const Domain kZb = Domain::lazard();

std::recursive_mutex piece_mutex;
std::map<int, LazardDegreePiece> piece_cache;
std::map<int, IntegerLattice> dec_cache;

// a_{i,j} of weight w = i + j - 1, i <= j
std::vector<RingElement> generators_of_weight(int w) {
    const FormalGroupLaw f = universal_fgl(w + 2);
    std::vector<RingElement> out;
    for (int i = 1; i <= (w + 1) / 2; ++i) {
        const RingElement a = f.coefficient(i, w + 1 - i);
        if (!a.is_zero()) out.push_back(a);
    }
    return out;
}

bool is_power_of(long v, long p) {
    if (v < 1) return false;
    while (v % p == 0) v /= p;
    return v == 1;
}

}  // namespace

IntVector LazardDegreePiece::coordinates(const RingElement& v) const {
    if (!v.is_homogeneous(degree)) throw std::invalid_argument("element is not of degree -" + std::to_string(degree));
    IntVector out(monomials.size(), 0);
    for (const auto& [m, c] : v.terms()) {
        if (m.t != 0 || m.eps != 0 || c.two_exp != 0) throw std::invalid_argument("not an element of Z[b]");
        const auto it = std::find(monomials.begin(), monomials.end(), m.b);
        out[static_cast<std::size_t>(it - monomials.begin())] = c.num;
    }
    return out;
}

RingElement LazardDegreePiece::element(const IntVector& coords) const {
    RingElement out(kZb);
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        if (coords[i] != 0) out += RingElement::b(kZb, monomials[i]).scale(Coeff(coords[i]));
    }
    return out;
}

const LazardDegreePiece& lazard_basis(int n, int order) {
    if (n < 0) throw std::invalid_argument("negative degree");
    if (order == 0) order = n + 2;
    if (order <= n + 1) throw std::invalid_argument("truncation order " + std::to_string(order) + " too small for degree " + std::to_string(n));
    std::lock_guard<std::recursive_mutex> lock(piece_mutex);
    auto it = piece_cache.find(n);
    if (it != piece_cache.end()) return it->second;

    LazardDegreePiece piece;
    piece.degree = n;
    piece.monomials = partitions_of(n);
    piece.lattice = IntegerLattice(piece.monomials.size());
    if (n == 0) {
        piece.lattice.add({1});
    } else {
        // L is generated as a ring by the a_{i,j}: L_n = sum_w a_{i,j} L_{n-w}
        for (int w = 1; w <= n; ++w) {
            const LazardDegreePiece& lower = lazard_basis(n - w);
            for (const RingElement& a : generators_of_weight(w)) {
                for (const IntVector& row : lower.lattice.basis()) piece.lattice.add(piece.coordinates(a * lower.element(row)));
            }
        }
    }
    return piece_cache.emplace(n, std::move(piece)).first->second;
}

const IntegerLattice& decomposable_lattice(int n) {
    std::lock_guard<std::recursive_mutex> lock(piece_mutex);
    auto it = dec_cache.find(n);
    if (it != dec_cache.end()) return it->second;
    const LazardDegreePiece& piece = lazard_basis(n);
    IntegerLattice dec(piece.monomials.size());
    for (int i = 1; 2 * i <= n; ++i) {
        const LazardDegreePiece& a = lazard_basis(i);
        const LazardDegreePiece& b = lazard_basis(n - i);
        for (const IntVector& ra : a.lattice.basis()) {
            const RingElement ea = a.element(ra);
            for (const IntVector& rb : b.lattice.basis()) dec.add(piece.coordinates(ea * b.element(rb)));
        }
    }
    return dec_cache.emplace(n, std::move(dec)).first->second;
}

bool lattice_member_mod(const LazardDegreePiece& piece, const RingElement& v, long m) {
    if (m < 0) throw std::invalid_argument("negative modulus");
    const IntVector c = piece.coordinates(v);
    return m == 0 ? piece.lattice.member(c) : piece.lattice.scaled(m).member(c);
}

long prime_power_base(int n) {
    const long v = n + 1;
    if (v < 2) return 0;
    long p = 2;
    while (v % p != 0) ++p;
    return is_power_of(v, p) ? p : 0;
}

mpz_class binomial_gcd(int n) {
    mpz_class g = 0;
    for (int i = 1; i <= n; ++i) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(i));
        g = gcd(g, c);
    }
    return g;
}

DecomposableVerdict decomposable_test(const VarietySpec& spec, long p) {
    const int n = spec.dimension();
    if (n <= 0) throw std::invalid_argument("decomposability needs positive dimension");
    DecomposableVerdict v;
    v.additive = additive_chern_number(spec);
    const bool special = prime_power_base(n) == p;
    const mpz_class modulus = special ? mpz_class(p * p) : mpz_class(p);
    v.in_Lmodp_decomposable = v.additive % modulus == 0;
    v.in_Lp_decomposable = special || v.in_Lmodp_decomposable;

    const LazardDegreePiece& piece = lazard_basis(n);
    IntegerLattice target = decomposable_lattice(n);
    for (const IntVector& row : piece.lattice.basis()) {
        IntVector scaled = row;
        for (auto& x : scaled) x *= p;
        target.add(scaled);
    }
    v.lattice_Lmodp_decomposable = target.member(piece.coordinates(fundamental_class(spec)));
    return v;
}

std::vector<PTypicalRecord> p_typical_chern_check(const VarietySpec& spec, long p) {
    const int n = spec.dimension();
    if (n <= 0) throw std::invalid_argument("p-typical check needs positive dimension");
    const bool dec = decomposable_test(spec, p).in_Lmodp_decomposable;
    const RingElement cls = fundamental_class(spec);
    std::vector<PTypicalRecord> out;
    for (const Partition& a : partitions_of(n)) {
        bool qualifies = true;
        for (int part : a.parts()) qualifies = qualifies && is_power_of(part + 1, p);
        if (!qualifies) continue;
        PTypicalRecord r;
        r.alpha = a;
        r.value = chern_number(spec, a);
        if (r.value != cls.coefficient(Monomial{a, 0, 0}).num) throw std::logic_error("Chern number differs from the class coefficient");
        r.need_p_squared = dec;
        r.ok = r.value % (dec ? p * p : p) == 0;
        out.push_back(r);
    }
    return out;
}

bool psi_kernel_check(long p, int max_degree) {
    const Domain target = Domain::lazard_mod(p);
    const auto phi = [&](int i) {
        return is_power_of(i + 1, p) ? RingElement::b(target, i) : RingElement(target);
    };
    const FormalGroupLaw f = universal_fgl(max_degree + 2);
    for (int i = 1; i <= max_degree; ++i) {
        for (int j = i; i + j - 1 <= max_degree; ++j) {
            if (!f.coefficient(i, j).map_base(BaseRing::modular(p)).substitute_b(phi, target).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace cobordism
