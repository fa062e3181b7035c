#include "doctest.h"

#include <random>

#include "cobordism/lattice.hpp"

using namespace cobordism;

namespace {

IntVector vec(std::initializer_list<long> v) {
    IntVector out;
    for (long x : v) out.emplace_back(x);
    return out;
}

IntVector random_vector(std::mt19937_64& rng, std::size_t n, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    IntVector v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

}  // namespace

TEST_CASE("hnf_lattice examples") {
    const IntegerLattice a(2, {vec({2, 0}), vec({0, 2})});
    CHECK_FALSE(a.member(vec({1, 0})));
    CHECK(a.member(vec({4, -2})));

    const IntegerLattice b(2, {vec({2, 0}), vec({1, 1})});
    CHECK(b.member(vec({0, 2})));
    CHECK_FALSE(b.member(vec({0, 1})));

    const IntegerLattice empty(2);
    CHECK(empty.member(vec({0, 0})));
    CHECK_FALSE(empty.member(vec({0, 1})));
    CHECK(empty.rank() == 0);
}

TEST_CASE("member_mod adds m Z^n") {
    const IntegerLattice a(2, {vec({3, 0})});
    CHECK_FALSE(a.member(vec({1, 2})));
    CHECK(a.member_mod(vec({1, 2}), mpz_class(2)));
    CHECK_FALSE(a.member_mod(vec({1, 1}), mpz_class(3)));
    CHECK(a.member_mod(vec({3, 0}), mpz_class(0)));
}

TEST_CASE("hnf shape") {
    const IntegerLattice l(3, {vec({4, 6, 2}), vec({6, 9, 3}), vec({0, 0, 5})});
    // pivots strictly increase, pivots positive, entries above pivots reduced
    std::size_t last = 0;
    bool first = true;
    for (const auto& row : l.basis()) {
        std::size_t p = 0;
        while (row[p] == 0) ++p;
        CHECK(row[p] > 0);
        if (!first) CHECK(p > last);
        last = p;
        first = false;
    }
    CHECK(l.rank() == 2);
}

TEST_CASE("generators are members and HNF is invariant under row operations") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const std::size_t k = rng() % 6;
        std::vector<IntVector> gens;
        for (std::size_t i = 0; i < k; ++i) gens.push_back(random_vector(rng, n, 6));
        const IntegerLattice l(n, gens);
        for (const auto& g : gens) CHECK(l.member(g));

        // unimodular row operations: add a multiple of one row to another, swap, negate
        std::vector<IntVector> ops = gens;
        if (k >= 2) {
            const std::size_t i = rng() % k;
            std::size_t j = rng() % k;
            if (j == i) j = (i + 1) % k;
            const long c = static_cast<long>(rng() % 7) - 3;
            for (std::size_t col = 0; col < n; ++col) ops[i][col] += c * ops[j][col];
            std::swap(ops[0], ops[k - 1]);
        }
        if (k >= 1) {
            for (auto& x : ops[0]) x = -x;
        }
        const IntegerLattice l2(n, ops);
        CHECK(l2 == l);

        // a random integer combination is a member
        IntVector comb(n);
        for (const auto& g : gens) {
            const long c = static_cast<long>(rng() % 9) - 4;
            for (std::size_t col = 0; col < n; ++col) comb[col] += c * g[col];
        }
        CHECK(l.member(comb));
        CHECK(l.scaled(mpz_class(2)).member_mod(comb, mpz_class(0)) == l.scaled(mpz_class(2)).member(comb));
    }
}
