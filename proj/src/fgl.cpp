#include "cobordism/fgl.hpp"

#include <map>
#include <mutex>

namespace cobordism {

namespace {

const std::vector<std::string> kXY = {"x", "y"};

TruncatedSeries var(const Domain& d, int order, int i) { return TruncatedSeries::variable(d, kXY, order, i); }

}  // namespace

FormalGroupLaw::FormalGroupLaw(TruncatedSeries f, std::string name) : f_(std::move(f)), name_(std::move(name)) {
    if (f_.nvars() != 2) throw SeriesError("a formal group law is a series in two variables");
    if (f_.order() < 2) throw SeriesError("formal group law order must be at least 2");
}

TruncatedSeries FormalGroupLaw::add(const TruncatedSeries& u, const TruncatedSeries& v) const {
    return substitute(f_, {u, v});
}

FormalGroupLaw FormalGroupLaw::truncated(int order) const { return {f_.truncated(order), name_}; }

TruncatedSeries pi_series(int order, const std::string& v) {
    const Domain d = Domain::lazard();
    std::vector<RingElement> c;
    for (int i = 0; i < order; ++i) c.push_back(RingElement::b(d, i));
    return TruncatedSeries::univariate(d, v, order, c);
}

TruncatedSeries exp_series(int order, const std::string& v) {
    const Domain d = Domain::lazard();
    std::vector<RingElement> c{RingElement(d)};
    for (int i = 0; i + 1 < order; ++i) c.push_back(RingElement::b(d, i));
    return TruncatedSeries::univariate(d, v, order, c);
}

TruncatedSeries log_series(int order, const std::string& v) { return reversion(exp_series(order, v)); }

FormalGroupLaw universal_fgl(int order) {
    if (order < 2) throw SeriesError("universal_fgl needs order >= 2");
    static std::mutex mutex;
    static std::map<int, TruncatedSeries> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.lower_bound(order);
        if (it != cache.end()) return {it->second.truncated(order), "universal"};
    }
    const Domain d = Domain::lazard();
    const TruncatedSeries log = log_series(order);
    const TruncatedSeries u = substitute(log, {var(d, order, 0)}) + substitute(log, {var(d, order, 1)});
    TruncatedSeries f = compose(exp_series(order), u);
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(order, f);
    return {std::move(f), "universal"};
}

FormalGroupLaw universal_fgl_mod(long p, int order) {
    const BaseRing fp = BaseRing::modular(p);
    const Domain target{fp, Vars::B};
    return {universal_fgl(order).series().map_coefficients([&](const RingElement& c) { return c.map_base(fp); },
                                                            target),
            "universal-mod-" + std::to_string(p)};
}

FormalGroupLaw additive_fgl(const Domain& d, int order) { return {var(d, order, 0) + var(d, order, 1), "additive"}; }

FormalGroupLaw specialize(const FormalGroupLaw& law, const std::function<RingElement(int)>& image, const Domain& target,
                          std::string name) {
    if (law.domain().vars != Vars::B) throw DomainError("specialize expects a law over a b-domain");
    for (int i = 1; i < law.order(); ++i) {
        const RingElement v = image(i);
        if (!(v.domain() == target)) throw DomainError("substitution image lies in the wrong domain");
        if (!v.is_homogeneous(i)) {
            throw DomainError("substitution is not degree preserving: b_" + std::to_string(i) + " -> " + v.to_string());
        }
    }
    auto img = [&](int i) { return i == 0 ? RingElement(target, Coeff(1)) : image(i); };
    return {law.series().map_coefficients([&](const RingElement& c) { return c.substitute_b(img, target); }, target),
            std::move(name)};
}

RingElement chx_image(int i) {
    RingElement r = RingElement::t(Domain::chx(), i);
    if (i % 2 != 0) r.scale(Coeff(-1));
    return r;
}

RingElement cha_image(int i) {
    const Domain d = Domain::cha();
    if (i == 0) return {d, Coeff(1)};
    return RingElement::eps(d) * RingElement::t(d, i);
}

FormalGroupLaw chx_fgl(int order) { return specialize(universal_fgl(order), chx_image, Domain::chx(), "chx"); }

FormalGroupLaw cha_fgl(int order) { return specialize(universal_fgl(order), cha_image, Domain::cha(), "cha"); }

TruncatedSeries chx_closed_form(int order) {
    const Domain d = Domain::chx();
    const TruncatedSeries x = var(d, order, 0);
    const TruncatedSeries y = var(d, order, 1);
    const RingElement t = RingElement::t(d);
    TruncatedSeries numerator = x + y - (x * y).scaled(t).scaled(RingElement(d, Coeff(2)));
    TruncatedSeries denominator = TruncatedSeries::constant(d, kXY, order, RingElement(d, Coeff(1))) -
                                  (x * y).scaled(RingElement::t(d, 2));
    return numerator * inverse(denominator);
}

TruncatedSeries cha_closed_form(int order) {
    const Domain d = Domain::cha();
    const TruncatedSeries x = var(d, order, 0);
    const TruncatedSeries y = var(d, order, 1);
    TruncatedSeries f = x + y;
    const RingElement eps = RingElement::eps(d);
    for (int i = 1; i + 1 < order; ++i) {
        const auto e = static_cast<unsigned>(i + 1);
        const TruncatedSeries term = pow(x + y, e) - pow(x, e) - pow(y, e);
        f += term.scaled(eps * RingElement::t(d, i));
    }
    return f;
}

TruncatedSeries chx_mult_closed_form(long a, int order) {
    const Domain d = Domain::chx();
    const TruncatedSeries x = TruncatedSeries::variable(d, {"x"}, order, 0);
    TruncatedSeries denominator = TruncatedSeries::constant(d, {"x"}, order, RingElement(d, Coeff(1)));
    RingElement c = RingElement::t(d);
    c.scale(Coeff(a - 1));
    denominator += x.scaled(c);
    return x.scaled(RingElement(d, Coeff(a))) * inverse(denominator);
}

TruncatedSeries formal_inverse(const FormalGroupLaw& law) {
    const Domain& d = law.domain();
    const int order = law.order();
    const TruncatedSeries x = TruncatedSeries::variable(d, {"x"}, order, 0);
    // F(x, m) = x + m + G(x, m) with G of degree >= 2, so m = -x - G(x, m); each pass fixes one more degree
    TruncatedSeries m = -x;
    for (int k = 1; k < order; ++k) {
        const TruncatedSeries value = law.add(x, m);
        if (value.is_zero()) return m;
        m = m - value;
    }
    if (!law.add(x, m).is_zero()) throw std::logic_error("formal_inverse did not converge");
    return m;
}

TruncatedSeries formal_mult(const FormalGroupLaw& law, long a) {
    const Domain& d = law.domain();
    const int order = law.order();
    const TruncatedSeries x = TruncatedSeries::variable(d, {"x"}, order, 0);
    if (a < 0) return compose(formal_inverse(law), formal_mult(law, -a));
    TruncatedSeries result(d, {"x"}, order);
    for (long i = 0; i < a; ++i) result = law.add(result, x);
    return result;
}

AxiomCheck check_axioms(const FormalGroupLaw& law, int assoc_order) {
    AxiomCheck out;
    const Domain& d = law.domain();
    const int order = law.order();
    const TruncatedSeries& f = law.series();
    const TruncatedSeries x = var(d, order, 0);
    const TruncatedSeries y = var(d, order, 1);
    out.commutative = substitute(f, {y, x}) == f;
    const TruncatedSeries zero(d, kXY, order);
    out.unital = substitute(f, {x, zero}) == x && substitute(f, {zero, y}) == y;
    out.linear_term = f.truncated(std::min(order, 2)) == (x + y).truncated(std::min(order, 2)) &&
                      f.constant_term().is_zero();

    const int a = std::min(order, assoc_order);
    const std::vector<std::string> xyz = {"x", "y", "z"};
    const TruncatedSeries fa = f.truncated(a);
    const TruncatedSeries tx = TruncatedSeries::variable(d, xyz, a, 0);
    const TruncatedSeries ty = TruncatedSeries::variable(d, xyz, a, 1);
    const TruncatedSeries tz = TruncatedSeries::variable(d, xyz, a, 2);
    const TruncatedSeries left = substitute(fa, {tx, substitute(fa, {ty, tz})});
    const TruncatedSeries right = substitute(fa, {substitute(fa, {tx, ty}), tz});
    out.associative = left == right;
    return out;
}

}  // namespace cobordism
