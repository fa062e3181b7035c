#include "doctest.h"

#include <random>

#include "cobordism/classes.hpp"
#include "cobordism/fgl.hpp"
#include "cobordism/symmfunc.hpp"

using namespace cobordism;

namespace {

const Domain kZ = Domain::integers();
const Domain kZb = Domain::lazard();

RingElement bz(int i) { return RingElement::b(kZb, i); }
RingElement bz(const Partition& a) { return RingElement::b(kZb, a); }
RingElement zb(long v) { return RingElement(kZb, Coeff(v)); }

VarietySpec pn(int n) { return VarietySpec::projective_space(n); }

std::vector<VarietySpec> small_catalog() {
    return {VarietySpec::point(),
            pn(1),
            pn(2),
            pn(3),
            VarietySpec::multiproj({1, 1}),
            VarietySpec::multiproj({2, 1}),
            VarietySpec::projbundle(pn(1), {{0}, {1}}),
            VarietySpec::projbundle(pn(2), {{0}, {2}}),
            VarietySpec::product({pn(1), VarietySpec::projbundle(pn(1), {{0}, {-1}})})};
}

long rnd(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

LinearForm random_form(std::mt19937_64& rng, const ChowModel& m) {
    LinearForm f(static_cast<std::size_t>(m.generator_count()));
    for (auto& v : f) v = rnd(rng, -2, 2);
    return f;
}

VirtualSplitBundle random_bundle(std::mt19937_64& rng, const ChowModel& m) {
    VirtualSplitBundle v(m);
    const long np = rnd(rng, 0, 3);
    const long nm = rnd(rng, 0, 2);
    for (long i = 0; i < np; ++i) v.plus_lines.push_back(random_form(rng, m));
    for (long i = 0; i < nm; ++i) v.minus_lines.push_back(random_form(rng, m));
    v.plus_trivial = static_cast<int>(rnd(rng, 0, 2));
    v.minus_trivial = static_cast<int>(rnd(rng, 0, 1));
    return v;
}

// [P^k] = deg pi(h)^{-(k+1)} computed from the series coefficients alone
RingElement pn_class(int k) {
    if (k < 0) return RingElement(kZb);
    const TruncatedSeries w = pow(inverse(pi_series(k + 2)), static_cast<unsigned>(k + 1));
    return w.coefficient(k);
}

}  // namespace

TEST_CASE("total P examples") {
    const ChowModel p1 = build_model(pn(1));
    CHECK(total_P(VirtualSplitBundle::trivial(p1, 3)) == ChowElement::one(p1, kZb));
    const ChowElement h1 = ChowElement::generator(p1, kZb, 0);
    CHECK(total_P(tangent_bundle(pn(1)).negated()) == ChowElement::one(p1, kZb) + h1.scaled(-(bz(1) + bz(1))));

    const ChowModel p3 = build_model(pn(3));
    const ChowElement h = ChowElement::generator(p3, kZb, 0);
    ChowElement expect = ChowElement::one(p3, kZb);
    for (int i = 1; i <= 3; ++i) expect += pow(h, static_cast<unsigned>(i)).scaled(bz(i));
    CHECK(total_P(VirtualSplitBundle::lines(p3, {{1}})) == expect);
}

TEST_CASE("P(E) P(-E) = 1") {
    std::mt19937_64 rng(101);
    const auto catalog = small_catalog();
    int cases = 0;
    for (int trial = 0; trial < 220; ++trial) {
        const ChowModel m = build_model(catalog[static_cast<std::size_t>(rnd(rng, 0, static_cast<long>(catalog.size()) - 1))]);
        const VirtualSplitBundle e = random_bundle(rng, m);
        CHECK(total_P(e) * total_P(e.negated()) == ChowElement::one(m, kZb));
        ++cases;
    }
    CHECK(cases >= 200);
}

TEST_CASE("deformed classes") {
    const ChowModel pt = build_model(VarietySpec::point());
    const int k = 5;
    const YPoly a = total_P_deformed(VirtualSplitBundle::trivial(pt, 1), VirtualSplitBundle(pt), k);
    const YPoly b = total_P_deformed(VirtualSplitBundle::trivial(pt, -1), VirtualSplitBundle(pt), k);
    const TruncatedSeries w = inverse(pi_series(k + 1));
    for (int i = 0; i <= k; ++i) {
        CHECK(degree(a[static_cast<std::size_t>(i)]) == bz(i));
        CHECK(degree(b[static_cast<std::size_t>(i)]) == w.coefficient(i));
    }

    // b_1^n coefficient of prod pi(x_j + y) is e_n(x_1 + y, ..., x_n + y); on P^3 with x_j = a_j h
    const ChowModel p3 = build_model(pn(3));
    const std::vector<long> roots{1, -2, 3};
    std::vector<LinearForm> ls;
    for (long r : roots) ls.push_back({r});
    const YPoly d = total_P_deformed(VirtualSplitBundle::lines(p3, ls), VirtualSplitBundle(p3), 3);
    // e_3(a_j h + y) = prod (a_j h + y)
    const ChowElement h = ChowElement::generator(p3, kZ, 0);
    std::vector<ChowElement> poly{ChowElement::one(p3, kZ)};
    for (long r : roots) {
        std::vector<ChowElement> next(poly.size() + 1, ChowElement(p3, kZ));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i] * h.scaled(RingElement(kZ, Coeff(r)));
            next[i + 1] += poly[i];
        }
        poly = next;
    }
    for (std::size_t i = 0; i <= 3; ++i) CHECK(b_coefficient(d[i], Partition{1, 1, 1}) == poly[i]);
}

TEST_CASE("substituting y by c1(L) gives the twisted bundle") {
    std::mt19937_64 rng(7);
    const auto catalog = small_catalog();
    for (int trial = 0; trial < 40; ++trial) {
        const ChowModel m = build_model(catalog[static_cast<std::size_t>(rnd(rng, 1, static_cast<long>(catalog.size()) - 1))]);
        VirtualSplitBundle e = random_bundle(rng, m);
        const LinearForm l = random_form(rng, m);
        const YPoly d = total_P_deformed(e, VirtualSplitBundle(m), m.dimension());
        const ChowElement c1 = ChowElement::from_linear_form(m, kZb, l);
        ChowElement sub(m, kZb);
        ChowElement power = ChowElement::one(m, kZb);
        for (const auto& coeff : d) {
            sub += coeff * power;
            power = power * c1;
        }
        CHECK(sub == total_P(e.twisted(l)));
    }
}

TEST_CASE("Conner-Floyd class examples") {
    const ChowModel p2 = build_model(pn(2));
    const VirtualSplitBundle mt = tangent_bundle(pn(2)).negated();
    const ChowElement h2 = pow(ChowElement::generator(p2, kZ, 0), 2);
    CHECK(cf_class(mt, Partition{2}) == h2.scaled(RingElement(kZ, Coeff(-3))));
    CHECK(cf_class(mt, Partition{1, 1}) == mt.chern(2));
    CHECK(cf_class(mt, Partition{1}) == mt.chern(1));
    CHECK(cf_class(VirtualSplitBundle::trivial(p2, 4), Partition{1}).is_zero());
    CHECK(cf_class(VirtualSplitBundle::trivial(p2, 4), Partition{2}).is_zero());
}

TEST_CASE("lambda inversion on random bundles") {
    std::mt19937_64 rng(55);
    const auto catalog = small_catalog();
    int cases = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const ChowModel m = build_model(catalog[static_cast<std::size_t>(rnd(rng, 1, static_cast<long>(catalog.size()) - 1))]);
        const VirtualSplitBundle e = random_bundle(rng, m);
        const ChowElement pe = total_P(e);
        const ChowElement pm = total_P(e.negated());
        for (int n = 0; n <= std::min(4, m.dimension()); ++n) {
            for (const Partition& a : partitions_of(n)) {
                ChowElement rhs(m, kZ);
                for (const auto& [beta, lam] : lambda_coeffs(a)) {
                    rhs += b_coefficient(pm, beta).scaled(RingElement(kZ, Coeff(lam)));
                }
                CHECK(b_coefficient(pe, a) == rhs);
            }
        }
        ++cases;
    }
    CHECK(cases >= 200);
}

TEST_CASE("Quillen pushforward examples") {
    const VarietySpec pt = VarietySpec::point();
    const ChowModel m = build_model(pt);
    CHECK(quillen_pushforward(pt, VirtualSplitBundle::trivial(m, 2), 0) == -(bz(1) + bz(1)));
    CHECK(quillen_pushforward(pt, VirtualSplitBundle::trivial(m, 2), 1) == zb(1));
    CHECK(quillen_pushforward(pt, VirtualSplitBundle::trivial(m, 2), 2).is_zero());
    CHECK_THROWS_AS(quillen_pushforward(pt, VirtualSplitBundle::trivial(m, 0), 0), std::invalid_argument);
}

TEST_CASE("Quillen pushforward of trivial bundles agrees with the direct classes") {
    std::mt19937_64 rng(303);
    const std::vector<VarietySpec> bases{VarietySpec::point(), pn(1), pn(2), VarietySpec::multiproj({1, 1})};
    int cases = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const VarietySpec& s = bases[static_cast<std::size_t>(rnd(rng, 0, 3))];
        const int r = static_cast<int>(rnd(rng, 1, 5));
        const int m = static_cast<int>(rnd(rng, 0, r));
        const RingElement value = quillen_pushforward(s, VirtualSplitBundle::trivial(build_model(s), r), m);
        CHECK(value == pn_class(r - 1 - m) * fundamental_class(s));
        ++cases;
    }
    CHECK(cases >= 200);
}

TEST_CASE("Quillen pushforward at m = 0 is the class of the projective bundle") {
    std::mt19937_64 rng(9);
    const std::vector<VarietySpec> bases{pn(1), pn(2), VarietySpec::multiproj({1, 1})};
    for (int trial = 0; trial < 30; ++trial) {
        const VarietySpec& s = bases[static_cast<std::size_t>(rnd(rng, 0, 2))];
        const ChowModel m = build_model(s);
        std::vector<LinearForm> lines;
        const long r = rnd(rng, 1, 3);
        for (long i = 0; i < r; ++i) lines.push_back(random_form(rng, m));
        const VarietySpec bundle = VarietySpec::projbundle(s, lines);
        CHECK(quillen_pushforward(s, VirtualSplitBundle::lines(m, lines), 0) == fundamental_class(bundle));
    }
}

TEST_CASE("Quillen pushforward in CHX") {
    std::mt19937_64 rng(19);
    const std::vector<VarietySpec> bases{VarietySpec::point(), pn(1), pn(2), VarietySpec::multiproj({1, 1})};
    const Domain d = Domain::chx();
    for (int trial = 0; trial < 40; ++trial) {
        const VarietySpec& s = bases[static_cast<std::size_t>(rnd(rng, 0, 3))];
        const ChowModel model = build_model(s);
        std::vector<LinearForm> lines;
        const long r = rnd(rng, 1, 6);
        for (long i = 0; i < r; ++i) lines.push_back(random_form(rng, model));
        const VirtualSplitBundle v = VirtualSplitBundle::lines(model, lines);
        const RingElement base = fundamental_class(s, Theory::CHX);
        for (int m = 0; m <= 3; ++m) {
            if (m > 0 && r <= s.dimension() + m) continue;
            const RingElement value = quillen_pushforward(s, v, m).substitute_b(chx_image, d);
            CHECK(value == RingElement::t(d, static_cast<int>(r) - 1 - m).scale(Coeff(r - m)) * base);
        }
    }
}

TEST_CASE("fundamental classes") {
    CHECK(fundamental_class(pn(1)) == -(bz(1) + bz(1)));
    CHECK(fundamental_class(pn(2)) == bz(Partition{1, 1}).scale(Coeff(6)) - bz(2).scale(Coeff(3)));
    CHECK(fundamental_class(VarietySpec::point()) == zb(1));
    for (int n = 0; n <= 6; ++n) {
        CHECK(fundamental_class(pn(n)) == pn_class(n));
        // route through the projective bundle of a trivial bundle over the point
        const ChowModel pt = build_model(VarietySpec::point());
        CHECK(quillen_pushforward(VarietySpec::point(), VirtualSplitBundle::trivial(pt, n + 1), 0) == fundamental_class(pn(n)));
        const Domain d = Domain::chx();
        CHECK(fundamental_class(pn(n), Theory::CHX) == RingElement::t(d, n).scale(Coeff(n + 1)));
    }
    // a_{1,1} = -[P^1]
    CHECK(universal_fgl(4).coefficient(1, 1) == -fundamental_class(pn(1)));
    // classes add over disjoint unions
    const VarietySpec two = VarietySpec::disjoint({pn(2), VarietySpec::multiproj({1, 1})});
    CHECK(fundamental_class(two) == fundamental_class(pn(2)) + fundamental_class(VarietySpec::multiproj({1, 1})));
    CHECK(fundamental_class(pn(1), Theory::Lp, 2).is_zero());
    for (const auto& s : small_catalog()) {
        CHECK_NOTHROW(fundamental_class(s, Theory::CHX));
        CHECK_NOTHROW(fundamental_class(s, Theory::CHA));
    }
}

TEST_CASE("Chern numbers") {
    CHECK(euler_number(pn(3)) == 4);
    CHECK(euler_number(VarietySpec::multiproj({1, 1})) == 4);
    CHECK(euler_number(VarietySpec::point()) == 1);
    CHECK(chern_number(pn(2), Partition{2}) == -3);
    CHECK(additive_chern_number(pn(2)) == -3);
    CHECK(additive_chern_number(pn(3)) == -4);
    CHECK(additive_chern_number(VarietySpec::multiproj({1, 1})) == 0);
    for (int n = 2; n <= 4; ++n) {
        CHECK(additive_chern_number(VarietySpec::multiproj(std::vector<int>(static_cast<std::size_t>(n), 1))) == 0);
    }
    CHECK(chern_number(pn(3), Partition{1, 1, 1}) == -20);
    // additive Chern number equals the (n) Chern number
    for (const auto& s : small_catalog()) {
        const int n = s.dimension();
        if (n == 0) continue;
        CHECK(additive_chern_number(s) == chern_number(s, Partition::single(n)));
        // Chern numbers are the coefficients of the fundamental class
        const RingElement cls = fundamental_class(s);
        for (const Partition& a : partitions_of(n)) CHECK(cls.coefficient(Monomial{a, 0, 0}).num == chern_number(s, a));
    }
}
