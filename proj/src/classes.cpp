#include "cobordism/classes.hpp"

#include <mutex>
#include <stdexcept>

#include "cobordism/fgl.hpp"
#include "cobordism/symmfunc.hpp"

namespace cobordism {

namespace {

const Domain kZb = Domain::lazard();

std::mutex coeff_mutex;
std::map<int, std::vector<RingElement>> pi_cache;
std::map<int, std::vector<RingElement>> pi_inv_cache;

ChowElement lift(const ChowElement& integral) { return integral.to_domain(kZb); }

ChowElement scalar(const ChowModel& m, const RingElement& c) { return ChowElement::one(m, kZb).scaled(c); }

mpz_class binom(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

YPoly ypoly_one(const ChowModel& m, int y_order) {
    YPoly p(static_cast<std::size_t>(y_order) + 1, ChowElement(m, kZb));
    p[0] = ChowElement::one(m, kZb);
    return p;
}

YPoly ypoly_mul(const YPoly& a, const YPoly& b) {
    YPoly out(a.size(), ChowElement(a[0].model(), kZb));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < a.size(); ++j) {
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// f(l + y) = sum_k y^k sum_j C(j+k, k) f_{j+k} l^j
YPoly deformed_factor(const std::vector<RingElement>& f, const ChowElement& l, int y_order) {
    const int dim = l.model().dimension();
    std::vector<ChowElement> powers{ChowElement::one(l.model(), kZb)};
    for (int j = 1; j <= dim; ++j) powers.push_back(powers.back() * l);
    YPoly out;
    for (int k = 0; k <= y_order; ++k) {
        ChowElement c(l.model(), kZb);
        for (int j = 0; j <= dim; ++j) {
            if (powers[static_cast<std::size_t>(j)].is_zero()) break;
            RingElement coeff = f.at(static_cast<std::size_t>(j + k));
            coeff.scale(Coeff(binom(j + k, k)));
            c += powers[static_cast<std::size_t>(j)].scaled(coeff);
        }
        out.push_back(std::move(c));
    }
    return out;
}

YPoly constant_factor(const ChowModel& m, const std::vector<RingElement>& f, int y_order) {
    YPoly out;
    for (int k = 0; k <= y_order; ++k) out.push_back(scalar(m, f.at(static_cast<std::size_t>(k))));
    return out;
}

ChowElement q_evaluate(const EPoly& q, const VirtualSplitBundle& e) {
    const ChowElement total = e.chern_total();
    const ChowModel& m = e.model;
    std::vector<ChowElement> c;
    for (int k = 0; k <= m.dimension(); ++k) c.push_back(total.codim_part(k));
    ChowElement out(m, Domain::integers());
    for (const auto& [mu, coeff] : q) {
        ChowElement term = ChowElement::one(m, Domain::integers());
        for (int part : mu.parts()) {
            term = part <= m.dimension() ? term * c[static_cast<std::size_t>(part)] : ChowElement(m, Domain::integers());
        }
        out += term.scaled(RingElement(Domain::integers(), Coeff(coeff)));
    }
    return out;
}

}  // namespace

ChowElement evaluate_series(const std::vector<RingElement>& f, const ChowElement& l) {
    const int dim = l.model().dimension();
    ChowElement out(l.model(), l.domain());
    ChowElement power = ChowElement::one(l.model(), l.domain());
    for (int k = 0; k <= dim && k < static_cast<int>(f.size()); ++k) {
        if (k > 0) power = power * l;
        if (power.is_zero()) break;
        out += power.scaled(f[static_cast<std::size_t>(k)]);
    }
    return out;
}

const std::vector<RingElement>& pi_coefficients(int n) {
    std::lock_guard<std::mutex> lock(coeff_mutex);
    auto it = pi_cache.find(n);
    if (it != pi_cache.end()) return it->second;
    std::vector<RingElement> f;
    for (int i = 0; i <= n; ++i) f.push_back(RingElement::b(kZb, i));
    return pi_cache.emplace(n, std::move(f)).first->second;
}

const std::vector<RingElement>& pi_inverse_coefficients(int n) {
    {
        std::lock_guard<std::mutex> lock(coeff_mutex);
        auto it = pi_inv_cache.find(n);
        if (it != pi_inv_cache.end()) return it->second;
    }
    const TruncatedSeries w = inverse(pi_series(n + 1));
    std::vector<RingElement> f;
    for (int i = 0; i <= n; ++i) f.push_back(w.coefficient(i));
    std::lock_guard<std::mutex> lock(coeff_mutex);
    return pi_inv_cache.emplace(n, std::move(f)).first->second;
}

ChowElement total_P(const VirtualSplitBundle& e) {
    const ChowModel& m = e.model;
    const int dim = m.dimension();
    ChowElement out = ChowElement::one(m, kZb);
    for (const auto& l : e.plus_lines) {
        out = out * evaluate_series(pi_coefficients(dim), ChowElement::from_linear_form(m, kZb, l));
    }
    for (const auto& l : e.minus_lines) {
        out = out * evaluate_series(pi_inverse_coefficients(dim), ChowElement::from_linear_form(m, kZb, l));
    }
    return out;
}

YPoly total_P_deformed(const VirtualSplitBundle& deformed, const VirtualSplitBundle& plain, int y_order) {
    if (!(deformed.model == plain.model)) throw std::invalid_argument("bundles live on different models");
    if (y_order < 0) throw std::invalid_argument("negative y order");
    const ChowModel& m = plain.model;
    const int n = m.dimension() + y_order;
    YPoly out = ypoly_one(m, y_order);
    out[0] = total_P(plain);
    for (const auto& l : deformed.plus_lines) {
        out = ypoly_mul(out, deformed_factor(pi_coefficients(n), ChowElement::from_linear_form(m, kZb, l), y_order));
    }
    for (const auto& l : deformed.minus_lines) {
        out = ypoly_mul(out,
                        deformed_factor(pi_inverse_coefficients(n), ChowElement::from_linear_form(m, kZb, l), y_order));
    }
    for (int i = 0; i < deformed.plus_trivial; ++i) out = ypoly_mul(out, constant_factor(m, pi_coefficients(n), y_order));
    for (int i = 0; i < deformed.minus_trivial; ++i) {
        out = ypoly_mul(out, constant_factor(m, pi_inverse_coefficients(n), y_order));
    }
    return out;
}

ChowElement b_coefficient(const ChowElement& u, const Partition& alpha) {
    const Domain z = Domain::integers();
    ChowElement out(u.model(), z);
    const Monomial mono{alpha, 0, 0};
    for (std::size_t i = 0; i < u.model().rank(); ++i) {
        const Coeff c = u[i].coefficient(mono);
        if (c.num != 0) out.add_to(i, RingElement(z, c));
    }
    return out;
}

ChowElement cf_class_q(const VirtualSplitBundle& e, const Partition& alpha) {
    return q_evaluate(q_alpha(alpha), e);
}

ChowElement cf_class(const VirtualSplitBundle& e, const Partition& alpha) {
    const ChowElement direct = b_coefficient(total_P(e), alpha);
    if (!(direct == cf_class_q(e, alpha))) {
        throw std::logic_error("Conner-Floyd class disagrees with Q_" + alpha.to_string());
    }
    return direct;
}

RingElement quillen_pushforward(const VarietySpec& s, const VirtualSplitBundle& v, int m) {
    if (!s.is_connected()) {
        throw std::invalid_argument("quillen_pushforward needs a connected base");
    }
    if (m < 0) throw std::invalid_argument("negative power of c1(O(1))");
    const ChowModel model = build_model(s);
    if (!(v.model == model)) throw std::invalid_argument("bundle does not live on the base model");
    const int r = v.rank();
    if (r <= 0) throw std::invalid_argument("projective bundle of non-positive rank");
    const int d = model.dimension();
    const int top = r + d - 1;

    const VirtualSplitBundle minus_v = v.negated();
    const VirtualSplitBundle minus_t = tangent_bundle(s).negated();
    const YPoly a = total_P_deformed(minus_v, minus_t, top);
    const ChowElement c_minus_v = minus_v.chern_total();

    // exp(y)^m = y^m pi(y)^m
    const TruncatedSeries pim = pow(pi_series(top + 1, "y"), static_cast<unsigned>(m));

    RingElement total(kZb);
    for (int i = 0; i <= d; ++i) {
        const int want = r + i - 1 - m;
        if (want < 0) continue;
        const ChowElement ci = lift(c_minus_v.codim_part(i));
        if (ci.is_zero()) continue;
        for (int k = 0; k <= want; ++k) {
            const RingElement dk = degree(ci * a[static_cast<std::size_t>(k)]);
            if (dk.is_zero()) continue;
            total += dk * pim.coefficient(want - k);
        }
    }
    return total;
}

RingElement fundamental_class(const VarietySpec& spec) {
    RingElement total(kZb);
    for (const auto& c : spec.components()) total += degree(total_P(tangent_bundle(c).negated()));
    return total;
}

mpz_class euler_number(const VarietySpec& spec) {
    mpz_class total = 0;
    for (const auto& c : spec.components()) {
        const ChowModel m = build_model(c);
        total += degree(tangent_bundle(c).chern(m.dimension())).constant_term().num;
    }
    return total;
}

mpz_class chern_number(const VarietySpec& spec, const Partition& alpha) {
    mpz_class total = 0;
    for (const auto& c : spec.components()) {
        if (c.dimension() != alpha.weight()) continue;
        total += degree(cf_class(tangent_bundle(c).negated(), alpha)).constant_term().num;
    }
    return total;
}

mpz_class additive_chern_number(const VarietySpec& spec) {
    mpz_class total = 0;
    for (const auto& c : spec.components()) {
        const ChowModel m = build_model(c);
        const int n = m.dimension();
        if (n == 0) {
            total += 1;
            continue;
        }
        const VirtualSplitBundle t = tangent_bundle(c);
        const Domain z = Domain::integers();
        ChowElement sum(m, z);
        for (const auto& l : t.plus_lines) sum -= pow(ChowElement::from_linear_form(m, z, l), static_cast<unsigned>(n));
        for (const auto& l : t.minus_lines) sum += pow(ChowElement::from_linear_form(m, z, l), static_cast<unsigned>(n));
        total += degree(sum).constant_term().num;
    }
    return total;
}

RingElement fundamental_class(const VarietySpec& spec, Theory theory, long p) {
    const RingElement l = fundamental_class(spec);
    switch (theory) {
        case Theory::L: return l;
        case Theory::Lp: return l.map_base(BaseRing::modular(p));
        case Theory::CHX: {
            const Domain d = Domain::chx();
            const RingElement special = l.substitute_b(chx_image, d);
            RingElement closed(d);
            for (const auto& c : spec.components()) {
                closed += RingElement::t(d, c.dimension()).scale(Coeff(euler_number(c)));
            }
            if (!(special == closed)) throw std::logic_error("CHX class differs from chi(X) t^n");
            return special;
        }
        case Theory::CHA: {
            const Domain d = Domain::cha();
            const RingElement special = l.substitute_b(cha_image, d);
            RingElement closed(d);
            for (const auto& c : spec.components()) {
                const int n = c.dimension();
                if (n == 0) {
                    closed += RingElement(d, Coeff(1));
                } else {
                    closed += (RingElement::eps(d) * RingElement::t(d, n)).scale(Coeff(additive_chern_number(c)));
                }
            }
            if (!(special == closed)) throw std::logic_error("CHA class differs from c_(n)(X) eps t^n");
            return special;
        }
    }
    return l;
}

}  // namespace cobordism
