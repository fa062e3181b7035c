#include "doctest.h"

#include "cobordism/series.hpp"
#include "generators.hpp"

using namespace cobordism;

namespace {

const Domain kZ = Domain::integers();
const Domain kZb = Domain::lazard();

RingElement z(long v) { return RingElement(kZ, Coeff(v)); }
RingElement bz(int i) { return RingElement::b(kZb, i); }

TruncatedSeries x_of(const Domain& d, int order) { return TruncatedSeries::variable(d, {"x"}, order, 0); }

TruncatedSeries exp_series(int order) {
    std::vector<RingElement> c{RingElement(kZb)};
    for (int i = 0; i + 1 < order; ++i) c.push_back(bz(i));
    return TruncatedSeries::univariate(kZb, "x", order, c);
}

}  // namespace

TEST_CASE("series_mul examples") {
    const TruncatedSeries one_plus_x = TruncatedSeries::univariate(kZ, "x", 3, {z(1), z(1)});
    const TruncatedSeries one_minus_x = TruncatedSeries::univariate(kZ, "x", 3, {z(1), z(-1)});
    CHECK(one_plus_x * one_minus_x == TruncatedSeries::univariate(kZ, "x", 3, {z(1), z(0), z(-1)}));

    // pi(x) * pi(x)^-1 = 1 at order 5
    std::vector<RingElement> pc;
    for (int i = 0; i < 5; ++i) pc.push_back(bz(i));
    const TruncatedSeries pi = TruncatedSeries::univariate(kZb, "x", 5, pc);
    const TruncatedSeries pi_inv = inverse(pi);
    CHECK(pi * pi_inv == TruncatedSeries::constant(kZb, {"x"}, 5, bz(0)));
    // first terms of the inverse: 1 - b1 x + (b1^2 - b2) x^2
    CHECK(pi_inv.coefficient(1) == -bz(1));
    CHECK(pi_inv.coefficient(2) == bz(1) * bz(1) - bz(2));

    const TruncatedSeries x = TruncatedSeries::variable(kZ, {"x", "y"}, 2, 0);
    const TruncatedSeries y = TruncatedSeries::variable(kZ, {"x", "y"}, 2, 1);
    CHECK((x * y).is_zero());

    CHECK_THROWS_AS(x * TruncatedSeries::variable(kZ, {"x", "y"}, 3, 0), SeriesError);
    CHECK_THROWS_AS(x * TruncatedSeries::variable(kZ, {"x", "z"}, 2, 0), SeriesError);
}

TEST_CASE("series_compose examples") {
    const int order = 6;
    const TruncatedSeries x = TruncatedSeries::variable(kZ, {"x", "y"}, order, 0);
    const TruncatedSeries y = TruncatedSeries::variable(kZ, {"x", "y"}, order, 1);
    const TruncatedSeries sq = TruncatedSeries::univariate(kZ, "x", order, {z(0), z(0), z(1)});
    CHECK(compose(sq, x + y) == (x + y) * (x + y));

    const TruncatedSeries id = x_of(kZ, order);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        TruncatedSeries g = gen::series(rng, kZ, {"x", "y"}, order);
        g.add_term({0, 0}, -g.constant_term());
        CHECK(compose(id, g) == g);
    }

    const TruncatedSeries e = exp_series(8);
    CHECK(compose(e, reversion(e)) == x_of(kZb, 8));

    TruncatedSeries bad = id;
    bad.add_term({0}, z(1));
    CHECK_THROWS_AS(compose(sq, bad), SeriesError);
}

TEST_CASE("series_reversion examples") {
    CHECK(reversion(x_of(kZ, 7)) == x_of(kZ, 7));

    const TruncatedSeries e = exp_series(4);
    const TruncatedSeries log = reversion(e);
    // x - b1 x^2 + (2 b1^2 - b2) x^3, obtained by solving e(g(x)) = x degree by degree
    CHECK(log.coefficient(1) == bz(0));
    CHECK(log.coefficient(2) == -bz(1));
    RingElement c3 = bz(1) * bz(1);
    c3.scale(Coeff(2));
    CHECK(log.coefficient(3) == c3 - bz(2));
    CHECK(compose(e, log) == x_of(kZb, 4));
    CHECK(compose(log, e) == x_of(kZb, 4));

    const TruncatedSeries two_x = TruncatedSeries::univariate(kZ, "x", 5, {z(0), z(2)});
    CHECK_THROWS_AS(reversion(two_x), SeriesError);
    // over Z[1/2] the same series is invertible
    const TruncatedSeries two_x_half = two_x.map_coefficients(
        [](const RingElement& c) { return c.map_base(BaseRing::dyadic()); }, Domain::dyadic());
    CHECK(compose(two_x_half, reversion(two_x_half)) == x_of(Domain::dyadic(), 5));
}

TEST_CASE("reversion round trip on random series") {
    std::mt19937_64 rng(77);
    int cases = 0;
    for (const auto& d : gen::all_domains()) {
        for (int i = 0; i < 25; ++i) {
            const int order = static_cast<int>(gen::small_int(rng, 2, 9));
            TruncatedSeries f = gen::series(rng, d, {"x"}, order);
            f.add_term({0}, -f.constant_term());
            f.add_term({1}, -f.coefficient(1));
            // a unit linear coefficient, possibly with a nilpotent part
            RingElement lin(d, Coeff(gen::small_int(rng, 0, 1) ? 1 : -1));
            if (d.vars == Vars::TEps) lin += RingElement::eps(d) * gen::element(rng, d, 2, 2);
            f.add_term({1}, lin);
            const TruncatedSeries g = reversion(f);
            CHECK(compose(f, g) == x_of(d, order));
            CHECK(compose(g, f) == x_of(d, order));
            ++cases;
        }
    }
    CHECK(cases >= 200);
}

TEST_CASE("series_divide examples and property") {
    const TruncatedSeries x = x_of(kZ, 5);
    CHECK(divide(x * x, x) == x_of(kZ, 4));
    CHECK_THROWS_AS(divide(x, x * x), SeriesError);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 60; ++i) {
        const Domain d = gen::all_domains()[static_cast<std::size_t>(i) % gen::all_domains().size()];
        const int order = 7;
        TruncatedSeries g = gen::series(rng, d, {"x", "y"}, order);
        g.add_term({0, 0}, RingElement(d, Coeff(1)) - g.constant_term());
        const int k = static_cast<int>(gen::small_int(rng, 0, 2));
        TruncatedSeries xk = pow(TruncatedSeries::variable(d, {"x", "y"}, order, 0), static_cast<unsigned>(k));
        g = g * xk;
        const TruncatedSeries h = gen::series(rng, d, {"x", "y"}, order);
        const TruncatedSeries q = divide(g * h, g, 0);
        CHECK(q == h.truncated(order - k));
    }
}

TEST_CASE("residue examples") {
    LaurentSeries f(kZb, "y", 4);
    f.add_term(-1, bz(0));
    CHECK(residue(f) == bz(0));

    LaurentSeries g(kZb, "y", 4);
    g.add_term(-2, bz(0));
    g.add_term(0, RingElement(kZb, Coeff(3)));
    CHECK(residue(g).is_zero());

    // y^-2 exp(y)
    const LaurentSeries h = LaurentSeries::shifted(exp_series(6).renamed({"y"}), -2);
    CHECK(residue(h) == bz(0));
    CHECK(h.coefficient(0) == bz(1));

    LaurentSeries inv_y(kZb, "y", 3);
    inv_y.add_term(-1, bz(0));
    const LaurentSeries prod = inv_y * LaurentSeries::shifted(exp_series(6).renamed({"y"}), 0);
    CHECK(prod.coefficient(0) == bz(0));
    CHECK(prod.coefficient(1) == bz(1));
}

TEST_CASE("derivative and multivariate substitution") {
    const int order = 6;
    const TruncatedSeries x = TruncatedSeries::variable(kZ, {"x", "y"}, order, 0);
    const TruncatedSeries y = TruncatedSeries::variable(kZ, {"x", "y"}, order, 1);
    const TruncatedSeries f = x * x * y + y;
    CHECK(f.derivative(0) == (x * y).scaled(z(2)).truncated(order - 1));

    const TruncatedSeries u = TruncatedSeries::variable(kZ, {"u"}, order, 0);
    // f(u, u^2) = u^4 + u^2
    const TruncatedSeries sub = substitute(f, {u, u * u});
    CHECK(sub == pow(u, 4) + u * u);
}
