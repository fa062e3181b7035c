#include "doctest.h"

#include <random>

#include "cobordism/symmfunc.hpp"
#include "cobordism/ring.hpp"

using namespace cobordism;

namespace {

const Domain kZb = Domain::lazard();

// prod_i pi(x_i)^{sign} over Z[b], kept up to weight w, for integer roots x_i
RingElement total_pi(const std::vector<long>& roots, int w, bool invert) {
    RingElement out(kZb, Coeff(1));
    for (long x : roots) {
        RingElement u(kZb);
        mpz_class xp = 1;
        for (int i = 1; i <= w; ++i) {
            xp *= x;
            u += RingElement::b(kZb, i).scale(Coeff(xp));
        }
        RingElement factor(kZb, Coeff(1));
        if (invert) {
            // (1 + u)^{-1} = sum_k (-u)^k, u has weight >= 1
            RingElement term(kZb, Coeff(1));
            for (int k = 1; k <= w; ++k) {
                term = term * (-u);
                factor += term;
            }
        } else {
            factor += u;
        }
        RingElement next(kZb);
        const RingElement prod = out * factor;
        for (int k = 0; k <= w; ++k) next += prod.weight_part(k);
        out = next;
    }
    return out;
}

mpz_class b_coeff(const RingElement& r, const Partition& alpha) { return r.coefficient(Monomial{alpha, 0, 0}).num; }

mpz_class e_value(const EPoly& p, const std::vector<long>& roots) {
    // e_k(roots) by expanding prod (1 + x_i z)
    std::vector<mpz_class> e{1};
    for (long x : roots) {
        e.push_back(0);
        for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += e[k - 1] * x;
    }
    mpz_class total = 0;
    for (const auto& [mu, c] : p) {
        mpz_class term = c;
        for (int part : mu.parts()) term *= static_cast<std::size_t>(part) < e.size() ? e[static_cast<std::size_t>(part)] : mpz_class(0);
        total += term;
    }
    return total;
}

}  // namespace

TEST_CASE("Q_alpha examples") {
    CHECK(q_alpha(Partition{1}) == EPoly{{Partition{1}, 1}});
    CHECK(q_alpha(Partition{1, 1}) == EPoly{{Partition{2}, 1}});
    CHECK(q_alpha(Partition{2}) == EPoly{{Partition{1, 1}, 1}, {Partition{2}, -2}});
    CHECK(q_alpha(Partition{}) == EPoly{{Partition{}, 1}});
    CHECK_THROWS(q_alpha(Partition{1, 1, 1}, 2));
}

TEST_CASE("Q_alpha is independent of the number of variables") {
    for (int n = 1; n <= 6; ++n) {
        for (const Partition& a : partitions_of(n)) {
            const EPoly q = q_alpha(a);
            CHECK(q == q_alpha(a, n + 3));
        }
    }
}

TEST_CASE("Q_alpha evaluates to the monomial symmetric function") {
    // oracle: the b_alpha coefficient of prod pi(x_i) is the orbit sum of x^alpha
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<long> roots;
        const int k = static_cast<int>(rng() % 5) + 1;
        for (int i = 0; i < k; ++i) roots.push_back(static_cast<long>(rng() % 9) - 4);
        const RingElement p = total_pi(roots, 5, false);
        for (int n = 1; n <= 5; ++n) {
            for (const Partition& a : partitions_of(n)) CHECK(e_value(q_alpha(a), roots) == b_coeff(p, a));
        }
    }
}

TEST_CASE("Q-basis products re-expand over Z") {
    for (int n = 1; n <= 5; ++n) {
        for (int m = 1; m <= 5; ++m) {
            for (const Partition& a : partitions_of(n)) {
                for (const Partition& b : partitions_of(m)) {
                    const EPoly prod = epoly_mul(q_alpha(a), q_alpha(b));
                    const QExpansion ex = q_expand(prod);
                    EPoly back;
                    for (const auto& [g, c] : ex) {
                        CHECK(g.weight() == n + m);
                        for (const auto& [mu, v] : q_alpha(g)) back[mu] += c * v;
                    }
                    for (auto it = back.begin(); it != back.end();) it = it->second == 0 ? back.erase(it) : std::next(it);
                    CHECK(back == prod);
                }
            }
        }
    }
}

TEST_CASE("lambda coefficient examples") {
    using L = std::map<Partition, mpz_class>;
    CHECK(lambda_coeffs(Partition{}) == L{{Partition{}, 1}});
    CHECK(lambda_coeffs(Partition{1}) == L{{Partition{1}, -1}});
    CHECK(lambda_coeffs(Partition{1, 1}) == L{{Partition{1, 1}, 1}, {Partition{2}, 1}});
    for (int n = 1; n <= 5; ++n) CHECK(lambda_coeffs(Partition::single(n)) == L{{Partition::single(n), -1}});
}

TEST_CASE("lambda coefficients invert P(E) P(-E) = 1") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<long> roots;
        const int k = static_cast<int>(rng() % 4) + 1;
        for (int i = 0; i < k; ++i) roots.push_back(static_cast<long>(rng() % 7) - 3);
        const RingElement plus = total_pi(roots, 4, false);
        const RingElement minus = total_pi(roots, 4, true);
        for (int n = 0; n <= 4; ++n) {
            for (const Partition& a : partitions_of(n)) {
                mpz_class rhs = 0;
                for (const auto& [beta, lam] : lambda_coeffs(a)) {
                    CHECK(beta.weight() == n);
                    rhs += lam * b_coeff(minus, beta);
                }
                CHECK(b_coeff(plus, a) == rhs);
            }
        }
    }
}
