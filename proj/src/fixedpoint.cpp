#include "cobordism/fixedpoint.hpp"

#include <algorithm>
#include <stdexcept>

#include "cobordism/classes.hpp"
#include "cobordism/fgl.hpp"
#include "cobordism/lazard.hpp"
#include "cobordism/symmfunc.hpp"

namespace cobordism {

namespace {

const Domain kZ = Domain::integers();
const Domain kZb = Domain::lazard();

const char* const kRefL2 = "projective completion relations in L_2";
const char* const kRefParity = "Conner-Floyd parity of Chern numbers for even normal bundles";
const char* const kRefKS = "Kosniowski-Stong formula";
const char* const kRefLmod2 = "cobordism modulo two through x/[2](x)";
const char* const kRefEuler = "Euler number congruence for involutions";
const char* const kRefEuler4 = "fixed-locus Euler number divisible by four";
const char* const kRefEulerDim = "odd Euler number forces large fixed locus";
const char* const kRefAdditive = "additive Chern number of the projective completion";
const char* const kRefAdditiveDiv = "additive Chern number divisibility for small fixed loci";
const char* const kRefDecomp = "decomposability criterion by the additive Chern number";
const char* const kRefPTypical = "p-typical Chern number divisibility";
const char* const kRefDecompFix = "decomposability in L/2 for small fixed loci";

RingElement zint(const mpz_class& v) { return RingElement(kZ, Coeff(v)); }

RingElement mod2(const RingElement& r) { return r.map_base(BaseRing::modular(2)); }

bool divisible(const mpz_class& v, long m) { return v % m == 0; }

CheckRecord record(std::string id, const char* ref, std::string relation, bool pass, RingElement lhs, RingElement rhs,
                   std::string note = {}) {
    CheckRecord r;
    r.id = std::move(id);
    r.reference = ref;
    r.relation = std::move(relation);
    r.status = pass ? Status::Pass : Status::Fail;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.note = std::move(note);
    return r;
}

CheckRecord skipped(std::string id, const char* ref, std::string note) {
    CheckRecord r;
    r.id = std::move(id);
    r.reference = ref;
    r.relation = "hypothesis";
    r.status = Status::HypothesisNotMet;
    r.note = std::move(note);
    return r;
}

LinearForm hyperplane(const VarietySpec& s) {
    LinearForm f(static_cast<std::size_t>(s.generator_count()), 0);
    if (!f.empty()) f[0] = 1;
    return f;
}

bool is_power_of_two(long v) { return v > 0 && (v & (v - 1)) == 0; }

// c(E{1} + F) graded by codimension + y-degree and then evaluated at y = 1
std::vector<ChowElement> deformed_chern(const VirtualSplitBundle& e, const VirtualSplitBundle& f, int n) {
    const ChowModel& m = f.model;
    using TPoly = std::vector<ChowElement>;
    const ChowElement one = ChowElement::one(m, kZ);
    auto mul = [&](const TPoly& a, const TPoly& b) {
        TPoly out(static_cast<std::size_t>(n) + 1, ChowElement(m, kZ));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < out.size(); ++j) {
                if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
            }
        }
        return out;
    };
    // 1 + t u, or (1 + t u)^{-1}
    auto factor = [&](const ChowElement& u, bool invert) {
        TPoly p(static_cast<std::size_t>(n) + 1, ChowElement(m, kZ));
        p[0] = one;
        if (!invert) {
            if (n >= 1) p[1] = u;
            return p;
        }
        ChowElement power = one;
        for (int k = 1; k <= n; ++k) {
            power = power * (-u);
            p[static_cast<std::size_t>(k)] = power;
        }
        return p;
    };
    TPoly c(static_cast<std::size_t>(n) + 1, ChowElement(m, kZ));
    c[0] = one;
    for (const auto& l : e.plus_lines) c = mul(c, factor(ChowElement::from_linear_form(m, kZ, l) + one, false));
    for (const auto& l : e.minus_lines) c = mul(c, factor(ChowElement::from_linear_form(m, kZ, l) + one, true));
    for (int i = 0; i < e.plus_trivial; ++i) c = mul(c, factor(one, false));
    for (int i = 0; i < e.minus_trivial; ++i) c = mul(c, factor(one, true));
    for (const auto& l : f.plus_lines) c = mul(c, factor(ChowElement::from_linear_form(m, kZ, l), false));
    for (const auto& l : f.minus_lines) c = mul(c, factor(ChowElement::from_linear_form(m, kZ, l), true));
    return c;
}

ChowElement evaluate_chern_polynomial(const ChernPolynomial& f, const std::vector<ChowElement>& c, const ChowModel& m) {
    ChowElement out(m, kZ);
    for (const auto& [mu, coeff] : f) {
        ChowElement term = ChowElement::one(m, kZ);
        for (int part : mu.parts()) {
            if (part >= static_cast<int>(c.size())) {
                term = ChowElement(m, kZ);
                break;
            }
            term = term * c[static_cast<std::size_t>(part)];
        }
        out += term.scaled(zint(coeff));
    }
    return out;
}

// sum of l^k over the plus lines minus over the minus lines; c_(0) = 1
ChowElement power_sum(const VirtualSplitBundle& e, int k) {
    const ChowModel& m = e.model;
    if (k == 0) return ChowElement::one(m, kZ);
    ChowElement out(m, kZ);
    for (const auto& l : e.plus_lines) out += pow(ChowElement::from_linear_form(m, kZ, l), static_cast<unsigned>(k));
    for (const auto& l : e.minus_lines) out -= pow(ChowElement::from_linear_form(m, kZ, l), static_cast<unsigned>(k));
    return out;
}

// Z[1/2][b] element with no denominators, as an element of Z[b]
RingElement to_integral(const RingElement& r) {
    RingElement out(kZb);
    for (const auto& [m, c] : r.terms()) out.add_term(m, Coeff(c.num));
    return out;
}

TruncatedSeries to_dyadic(const TruncatedSeries& s) {
    const Domain d = Domain::lazard_dyadic();
    return s.map_coefficients([](const RingElement& r) { return r.map_base(BaseRing::dyadic()); }, d);
}

}  // namespace

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::HypothesisNotMet: return "hypothesis-not-met";
    }
    return "fail";
}

bool Report::ok() const {
    return std::none_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.status == Status::Fail; });
}

void Report::append(const Report& other) { records.insert(records.end(), other.records.begin(), other.records.end()); }

int MuTwoActionModel::fixed_dimension() const {
    int d = -1;
    for (const auto& c : components) d = std::max(d, c.spec.dimension());
    return d;
}

void MuTwoActionModel::validate() const {
    const int n = ambient.dimension();
    for (std::size_t i = 0; i < components.size(); ++i) {
        const FixedComponent& c = components[i];
        const std::string where = "component " + std::to_string(i) + ": ";
        if (c.codim < 0) throw std::invalid_argument(where + "negative codimension");
        if (c.spec.dimension() + c.codim != n) throw std::invalid_argument(where + "dimension plus codimension differs from the ambient dimension");
        if (!(c.normal.model == build_model(c.spec))) throw std::invalid_argument(where + "normal bundle lives on another model");
        if (c.normal.rank() != c.codim) throw std::invalid_argument(where + "normal bundle rank differs from the codimension");
        if (!c.normal.minus_lines.empty()) throw std::invalid_argument(where + "normal bundle has minus lines");
        if (c.codim == 0 && (components.size() != 1 || !(c.spec == ambient))) {
            throw std::invalid_argument(where + "a codimension-0 component must be the whole ambient");
        }
    }
}

FixedComponent make_component(const VarietySpec& spec, int codim, std::vector<LinearForm> normal_lines,
                              int normal_trivial_rank) {
    FixedComponent c{spec, codim, VirtualSplitBundle::lines(build_model(spec), std::move(normal_lines))};
    if (normal_trivial_rank < 0) throw std::invalid_argument("negative trivial rank");
    c.normal.plus_trivial = normal_trivial_rank;
    return c;
}

MuTwoActionModel linear_pn(int n, int a) {
    if (n < 1 || a < 0 || a >= n) throw std::invalid_argument("linear_pn needs 0 <= a < n");
    MuTwoActionModel m;
    m.name = "linear_pn(" + std::to_string(n) + "," + std::to_string(a) + ")";
    m.ambient = VarietySpec::projective_space(n);
    const VarietySpec f1 = VarietySpec::projective_space(a);
    const VarietySpec f2 = VarietySpec::projective_space(n - a - 1);
    m.components.push_back(make_component(f1, n - a, std::vector<LinearForm>(static_cast<std::size_t>(n - a), hyperplane(f1)), 0));
    m.components.push_back(make_component(f2, a + 1, std::vector<LinearForm>(static_cast<std::size_t>(a + 1), hyperplane(f2)), 0));
    m.validate();
    return m;
}

MuTwoActionModel factorwise_p1n(int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("factorwise_p1n needs 1 <= n <= 16");
    MuTwoActionModel m;
    m.name = "factorwise_p1n(" + std::to_string(n) + ")";
    m.ambient = VarietySpec::multiproj(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (long i = 0; i < (1L << n); ++i) m.components.push_back(make_component(VarietySpec::point(), n, {}, n));
    m.validate();
    return m;
}

MuTwoActionModel swap_square(const VarietySpec& spec) {
    if (!spec.is_connected()) throw std::invalid_argument("swap_square needs a connected variety");
    if (spec.dimension() < 1) throw std::invalid_argument("swap_square needs positive dimension");
    MuTwoActionModel m;
    m.name = "swap_square(" + spec.to_string() + ")";
    m.ambient = VarietySpec::product({spec, spec});
    m.components.push_back(FixedComponent{spec, spec.dimension(), tangent_bundle(spec)});
    m.validate();
    return m;
}

VirtualSplitBundle completion_bundle(const FixedComponent& c) {
    VirtualSplitBundle v = c.normal;
    v.plus_trivial += 1;
    const int common = std::min(v.plus_trivial, v.minus_trivial);
    v.plus_trivial -= common;
    v.minus_trivial -= common;
    return v;
}

VarietySpec completion_spec(const FixedComponent& c) {
    const VirtualSplitBundle v = completion_bundle(c);
    std::vector<LinearForm> lines = v.plus_lines;
    for (int i = 0; i < v.plus_trivial; ++i) lines.emplace_back(static_cast<std::size_t>(c.spec.generator_count()), 0);
    int minus = v.minus_trivial;
    // cancel trivial summands that came with the normal lines
    for (auto it = lines.begin(); minus > 0 && it != lines.end();) {
        if (std::all_of(it->begin(), it->end(), [](long x) { return x == 0; })) {
            it = lines.erase(it);
            --minus;
        } else {
            ++it;
        }
    }
    return VarietySpec::projbundle(c.spec, lines, minus);
}

Report verify_l2_relations(const MuTwoActionModel& action, int max_m) {
    action.validate();
    Report rep;
    rep.command = "verify l2 " + action.name;
    const int n = action.dimension();
    const RingElement x_class = fundamental_class(action.ambient);
    const int last = max_m < 0 ? n : std::min(n, max_m);
    for (int m = 0; m <= last; ++m) {
        RingElement quillen(kZb);
        for (const auto& c : action.components) quillen += quillen_pushforward(c.spec, completion_bundle(c), m);
        const std::string id = "l2.m" + std::to_string(m);
        if (m == 0) {
            RingElement direct(kZb);
            for (const auto& c : action.components) direct += fundamental_class(completion_spec(c));
            rep.add(record(id + ".routes", kRefL2, "residue formula equals the direct class in Z[b]", quillen == direct,
                           quillen, direct));
            rep.add(record(id, kRefL2, "[P(N+1)] = [X] in F2[b]", mod2(quillen) == mod2(x_class), mod2(quillen),
                           mod2(x_class)));
        } else {
            rep.add(record(id, kRefL2, "[c1(O(1))^m] = 0 in F2[b]", mod2(quillen).is_zero(), mod2(quillen),
                           RingElement(Domain::lazard_mod(2))));
        }
    }
    return rep;
}

Report verify_trivial_normal(const MuTwoActionModel& action) {
    action.validate();
    Report rep;
    rep.command = "verify trivial-normal " + action.name;
    for (const auto& c : action.components) {
        if (c.codim == 0) {
            rep.add(skipped("trivial-normal.hypothesis", kRefParity, "a component of X is fixed"));
            return rep;
        }
        const ChowElement cn = c.normal.chern_total();
        const ChowModel& m = c.normal.model;
        for (std::size_t i = 0; i < m.rank(); ++i) {
            if (m.codim(i) > 0 && !divisible(cn[i].constant_term().num, 2)) {
                rep.add(skipped("trivial-normal.hypothesis", kRefParity,
                                "normal bundle of " + c.spec.to_string() + " has a Chern class that is not even"));
                return rep;
            }
        }
    }
    const int n = action.dimension();
    for (const Partition& a : partitions_of(n)) {
        const mpz_class v = chern_number(action.ambient, a);
        rep.add(record("trivial-normal.X." + a.to_string(), kRefParity, "even", divisible(v, 2), zint(v), zint(0)));
    }
    std::map<int, std::vector<VarietySpec>> by_dim;
    for (const auto& c : action.components) by_dim[c.spec.dimension()].push_back(c.spec);
    for (const auto& [d, specs] : by_dim) {
        const VarietySpec group = VarietySpec::disjoint(specs);
        for (const Partition& a : partitions_of(d)) {
            const mpz_class v = chern_number(group, a);
            rep.add(record("trivial-normal.F" + std::to_string(d) + "." + a.to_string(), kRefParity, "even",
                           divisible(v, 2), zint(v), zint(0)));
        }
    }
    return rep;
}

Report verify_ks(const MuTwoActionModel& action, const Partition& alpha) {
    action.validate();
    const int n = action.dimension();
    if (alpha.weight() > n) throw std::invalid_argument("partition weight exceeds the dimension");
    Report rep;
    rep.command = "verify ks " + action.name + " alpha=" + alpha.to_string();

    // c_alpha(X) = deg(c(-N) c_alpha(-N{1} - T_F)) in F2
    const mpz_class lhs = alpha.weight() == n ? chern_number(action.ambient, alpha) : mpz_class(0);
    mpz_class rhs = 0;
    for (const auto& c : action.components) {
        const VirtualSplitBundle minus_n = c.normal.negated();
        const YPoly d = total_P_deformed(minus_n, tangent_bundle(c.spec).negated(), alpha.weight());
        ChowElement at_one(c.normal.model, kZ);
        for (const auto& dk : d) at_one += b_coefficient(dk, alpha);
        rhs += degree(minus_n.chern_total() * at_one).constant_term().num;
    }
    rep.add(record("ks.partition." + alpha.to_string(), kRefKS, "congruent mod 2", divisible(lhs - rhs, 2), zint(lhs),
                   zint(rhs)));
    ChernPolynomial f{{alpha, 1}};
    rep.append(verify_ks_polynomial(action, f));
    return rep;
}

Report verify_ks_polynomial(const MuTwoActionModel& action, const ChernPolynomial& f) {
    action.validate();
    const int n = action.dimension();
    std::string name;
    for (const auto& [mu, c] : f) {
        if (mu.weight() > n) throw std::invalid_argument("polynomial degree exceeds the dimension");
        name += (name.empty() ? "" : "+") + c.get_str() + "*y" + mu.to_string();
    }
    Report rep;
    rep.command = "verify ks " + action.name + " f=" + name;
    mpz_class lhs = 0;
    for (const auto& x : action.ambient.components()) {
        const ChowModel m = build_model(x);
        const ChowElement total = tangent_bundle(x).chern_total();
        std::vector<ChowElement> c;
        for (int k = 0; k <= n; ++k) c.push_back(total.codim_part(k));
        lhs += degree(evaluate_chern_polynomial(f, c, m)).constant_term().num;
    }
    mpz_class rhs = 0;
    for (const auto& comp : action.components) {
        const ChowModel& m = comp.normal.model;
        const std::vector<ChowElement> c = deformed_chern(comp.normal, tangent_bundle(comp.spec), n);
        rhs += degree(comp.normal.negated().chern_total() * evaluate_chern_polynomial(f, c, m)).constant_term().num;
    }
    rep.add(record("ks.polynomial." + name, kRefKS, "congruent mod 2", divisible(lhs - rhs, 2), zint(lhs), zint(rhs)));
    return rep;
}

Report verify_ks_all(const MuTwoActionModel& action) {
    Report rep;
    rep.command = "verify ks " + action.name;
    for (int w = 0; w <= action.dimension(); ++w) {
        for (const Partition& a : partitions_of(w)) rep.append(verify_ks(action, a));
    }
    return rep;
}

Report verify_lmod2(const MuTwoActionModel& action, int order, int max_dim) {
    action.validate();
    const int n = action.dimension();
    if (n > max_dim) throw std::invalid_argument("dimension " + std::to_string(n) + " exceeds the configured bound " + std::to_string(max_dim));
    if (order == 0) order = n + 3;
    if (order < n + 2) {
        throw std::invalid_argument("truncation order " + std::to_string(order) + " is insufficient: need at least " +
                                    std::to_string(n + 2));
    }
    Report rep;
    rep.command = "verify lmod2 " + action.name;
    const Domain dy = Domain::lazard_dyadic();
    const FormalGroupLaw law = universal_fgl(order);
    const TruncatedSeries two = to_dyadic(formal_mult(law, 2));
    const TruncatedSeries neg = to_dyadic(formal_mult(law, -1));
    const TruncatedSeries x = TruncatedSeries::variable(dy, {"x"}, order, 0);
    const TruncatedSeries v = divide(x, two);

    // [x^j] on the projective completions, pushed to the point
    std::vector<RingElement> q;
    for (int j = 0; j <= n; ++j) {
        RingElement s(kZb);
        for (const auto& c : action.components) s += quillen_pushforward(c.spec, completion_bundle(c), j);
        q.push_back(s.map_base(BaseRing::dyadic()));
    }
    // zeta = [-1](x) with x = c1(O(1)): [g(zeta)] = sum_j (g o [-1])_j [x^j]
    auto push = [&](const TruncatedSeries& g) {
        const TruncatedSeries h = compose(g.truncated(v.order()), neg.truncated(v.order()));
        RingElement total(dy);
        for (int j = 0; j <= n && j < h.order(); ++j) total += h.coefficient(j) * q[static_cast<std::size_t>(j)];
        return total;
    };

    const RingElement x_class = fundamental_class(action.ambient);
    const RingElement value0 = push(v.scaled(RingElement(dy, Coeff(2))));
    const bool integral0 = value0.is_integral();
    rep.add(record("lmod2.m0.integral", kRefLmod2, "[2v(zeta)] has no denominators", integral0, value0, RingElement(dy)));
    if (integral0) {
        const RingElement w = to_integral(value0);
        const LazardDegreePiece& piece = lazard_basis(n);
        rep.add(record("lmod2.m0.member", kRefLmod2, "[2v(zeta)] lies in L", lattice_member_mod(piece, w, 0), w, x_class));
        rep.add(record("lmod2.m0", kRefLmod2, "[2v(zeta)] - [X] lies in 2L", lattice_member_mod(piece, w - x_class, 2),
                       w, x_class));
    }
    TruncatedSeries xm = TruncatedSeries::constant(dy, {"x"}, order, RingElement(dy, Coeff(1)));
    for (int m = 1; m <= n; ++m) {
        xm = xm * x;
        const RingElement value = push(xm.truncated(v.order()) * v);
        const std::string id = "lmod2.m" + std::to_string(m);
        const bool integral = value.is_integral();
        rep.add(record(id + ".integral", kRefLmod2, "[zeta^m v(zeta)] has no denominators", integral, value, RingElement(dy)));
        if (integral) {
            const RingElement w = to_integral(value);
            rep.add(record(id + ".member", kRefLmod2, "[zeta^m v(zeta)] lies in L",
                           lattice_member_mod(lazard_basis(n - m), w, 0), w, RingElement(kZb)));
        }
    }
    return rep;
}

Report verify_euler(const MuTwoActionModel& action) {
    action.validate();
    Report rep;
    rep.command = "verify euler " + action.name;
    const int n = action.dimension();
    const int f = action.fixed_dimension();
    const mpz_class chi_x = euler_number(action.ambient);
    mpz_class chi_f = 0;
    for (const auto& c : action.components) chi_f += euler_number(c.spec);
    rep.add(record("euler.mod2", kRefEuler, "congruent mod 2", divisible(chi_x - chi_f, 2), zint(chi_x), zint(chi_f)));
    if (n % 2 == 1) {
        rep.add(record("euler.mod4", kRefEuler, "congruent mod 4", divisible(chi_x - chi_f, 4), zint(chi_x), zint(chi_f)));
    }
    if (2 * f < n - 1) {
        rep.add(record("euler.fix4", kRefEuler4, "divisible by 4", divisible(chi_f, 4), zint(chi_f), zint(0)));
    } else {
        rep.add(skipped("euler.fix4", kRefEuler4, "2 dim fix >= n - 1"));
    }
    if (!divisible(chi_x, 2)) {
        rep.add(record("euler.dim_odd", kRefEulerDim, "2 dim fix >= n", 2 * f >= n, zint(2 * f), zint(n)));
    } else {
        rep.add(skipped("euler.dim_odd", kRefEulerDim, "chi(X) is even"));
    }
    if (n % 2 == 1 && !divisible(chi_x, 4)) {
        rep.add(record("euler.dim_mod4", kRefEulerDim, "2 dim fix + 1 >= n", 2 * f + 1 >= n, zint(2 * f + 1), zint(n)));
    } else {
        rep.add(skipped("euler.dim_mod4", kRefEulerDim, "n even or 4 divides chi(X)"));
    }
    return rep;
}

Report verify_additive(const MuTwoActionModel& action) {
    action.validate();
    Report rep;
    rep.command = "verify additive " + action.name;
    const int n = action.dimension();
    const int f = action.fixed_dimension();
    const mpz_class cx = additive_chern_number(action.ambient);

    mpz_class cp = 0;
    std::vector<mpz_class> d(static_cast<std::size_t>(n) + 1, 0);  // d[j] = deg(xi^j c_(n-j)(T_P))
    for (const auto& c : action.components) {
        const VarietySpec p = completion_spec(c);
        cp += additive_chern_number(p);
        const ChowModel m = build_model(p);
        const VirtualSplitBundle t = tangent_bundle(p);
        const ChowElement xi = ChowElement::from_linear_form(m, kZ, xi_form(m));
        for (int j = 1; j <= n; ++j) {
            d[static_cast<std::size_t>(j)] += degree(pow(xi, static_cast<unsigned>(j)) * power_sum(t, n - j)).constant_term().num;
        }
    }
    rep.add(record("additive.completion", kRefAdditive, "congruent mod 2", divisible(cx - cp, 2), zint(cx), zint(cp)));
    for (int j = 1; j <= n; ++j) {
        const std::string id = "additive.xi" + std::to_string(j);
        const mpz_class dj = d[static_cast<std::size_t>(j)];
        rep.add(record(id, kRefAdditive, "even", divisible(dj, 2), zint(dj), zint(0)));
        if (is_power_of_two(n + 1) && is_power_of_two(n - j + 1)) {
            rep.add(record(id + ".mod4", kRefAdditive, "congruent mod 4", divisible(cx - cp - dj, 4), zint(cx),
                           zint(cp + dj)));
        }
    }
    if (2 * f < n - 1) {
        rep.add(record("additive.even", kRefAdditiveDiv, "even", divisible(cx, 2), zint(cx), zint(0)));
        if (is_power_of_two(n + 1)) {
            rep.add(record("additive.four", kRefAdditiveDiv, "divisible by 4", divisible(cx, 4), zint(cx), zint(0)));
        }
    } else {
        rep.add(skipped("additive.even", kRefAdditiveDiv, "2 dim fix >= n - 1"));
    }
    return rep;
}

Report verify_decomposable(const MuTwoActionModel& action) {
    action.validate();
    Report rep;
    rep.command = "verify decomposable " + action.name;
    const int n = action.dimension();
    const int f = action.fixed_dimension();
    if (n < 1) {
        rep.add(skipped("decomposable", kRefDecomp, "dimension 0"));
        return rep;
    }
    for (long p : {2L, 3L}) {
        const DecomposableVerdict v = decomposable_test(action.ambient, p);
        const std::string id = "decomposable.p" + std::to_string(p);
        rep.add(record(id, kRefDecomp, "additive criterion agrees with the lattice decision", v.consistent(),
                       zint(v.in_Lmodp_decomposable ? 1 : 0), zint(v.lattice_Lmodp_decomposable ? 1 : 0),
                       "c_(n) = " + v.additive.get_str()));
        if (action.ambient.is_connected()) {
            for (const auto& r : p_typical_chern_check(action.ambient, p)) {
                rep.add(record(id + ".ptypical." + r.alpha.to_string(), kRefPTypical,
                               r.need_p_squared ? "divisible by p^2" : "divisible by p", r.ok, zint(r.value), zint(0)));
            }
        }
        if (p == 2) {
            if (2 * f < n - 1) {
                rep.add(record("decomposable.fix", kRefDecompFix, "decomposable in L/2",
                               v.in_Lmodp_decomposable && v.lattice_Lmodp_decomposable, zint(v.additive), zint(0)));
            } else {
                rep.add(skipped("decomposable.fix", kRefDecompFix, "2 dim fix >= n - 1"));
            }
        }
    }
    return rep;
}

}  // namespace cobordism
