#include "cobordism/series.hpp"

#include <algorithm>
#include <sstream>

namespace cobordism {

namespace {

constexpr unsigned kDegreeShift = 56;

unsigned var_shift(int i) { return 48U - 8U * static_cast<unsigned>(i); }

}  // namespace

TruncatedSeries::TruncatedSeries(Domain d, std::vector<std::string> vars, int order)
    : domain_(d), vars_(std::move(vars)), order_(order) {
    if (vars_.empty() || static_cast<int>(vars_.size()) > kMaxVars) {
        throw SeriesError("a series needs between 1 and 7 variables");
    }
    if (order_ < 1 || order_ > 255) throw SeriesError("series order must lie in [1, 255]");
}

TruncatedSeries TruncatedSeries::constant(Domain d, std::vector<std::string> vars, int order, const RingElement& c) {
    TruncatedSeries s(d, std::move(vars), order);
    s.add_term(Exponents(s.vars_.size(), 0), c);
    return s;
}

TruncatedSeries TruncatedSeries::variable(Domain d, std::vector<std::string> vars, int order, int index) {
    TruncatedSeries s(d, std::move(vars), order);
    if (index < 0 || index >= s.nvars()) throw SeriesError("variable index out of range");
    Exponents e(s.vars_.size(), 0);
    e[static_cast<std::size_t>(index)] = 1;
    s.add_term(e, RingElement(d, Coeff(1)));
    return s;
}

TruncatedSeries TruncatedSeries::univariate(Domain d, const std::string& var, int order,
                                            const std::vector<RingElement>& coeffs) {
    TruncatedSeries s(d, {var}, order);
    for (std::size_t i = 0; i < coeffs.size() && static_cast<int>(i) < order; ++i) {
        s.add_term({static_cast<int>(i)}, coeffs[i]);
    }
    return s;
}

TruncatedSeries::Key TruncatedSeries::pack(const Exponents& e) {
    Key k = 0;
    int deg = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] > 255) throw SeriesError("exponent out of range");
        deg += e[i];
        k |= static_cast<Key>(e[i]) << var_shift(static_cast<int>(i));
    }
    if (deg > 255) throw SeriesError("total degree out of range");
    return k | (static_cast<Key>(deg) << kDegreeShift);
}

TruncatedSeries::Exponents TruncatedSeries::unpack(Key k) const {
    Exponents e(vars_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<int>((k >> var_shift(static_cast<int>(i))) & 0xFFU);
    return e;
}

RingElement TruncatedSeries::coefficient(const Exponents& e) const {
    if (e.size() != vars_.size()) throw SeriesError("exponent vector has wrong length");
    auto it = coeffs_.find(pack(e));
    return it == coeffs_.end() ? RingElement(domain_) : it->second;
}

RingElement TruncatedSeries::coefficient(int i) const {
    if (nvars() != 1) throw SeriesError("coefficient(int) needs a univariate series");
    return coefficient(Exponents{i});
}

RingElement TruncatedSeries::constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

void TruncatedSeries::add_term(const Exponents& e, const RingElement& c) {
    if (!(c.domain() == domain_)) throw DomainError("series coefficient has wrong domain");
    if (e.size() != vars_.size()) throw SeriesError("exponent vector has wrong length");
    const Key k = pack(e);
    if (key_degree(k) >= order_ || c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

std::vector<std::pair<TruncatedSeries::Exponents, RingElement>> TruncatedSeries::terms() const {
    std::vector<std::pair<Exponents, RingElement>> out;
    out.reserve(coeffs_.size());
    for (const auto& [k, c] : coeffs_) out.emplace_back(unpack(k), c);
    return out;
}

int TruncatedSeries::valuation() const { return coeffs_.empty() ? order_ : key_degree(coeffs_.begin()->first); }

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
    if (!(domain_ == o.domain_)) throw DomainError("series domain mismatch");
    if (vars_ != o.vars_) throw SeriesError("series variable mismatch");
    if (order_ != o.order_) throw SeriesError("series order mismatch");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.coeffs_) {
        auto [it, inserted] = coeffs_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) { return *this += -o; }

TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries r(a.domain_, a.vars_, a.order_);
    for (const auto& [k, c] : a.coeffs_) r.coeffs_.emplace(k, -c);
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b);
    TruncatedSeries r(a.domain_, a.vars_, a.order_);
    for (const auto& [ka, ca] : a.coeffs_) {
        const int room = a.order_ - TruncatedSeries::key_degree(ka);
        for (const auto& [kb, cb] : b.coeffs_) {
            if (TruncatedSeries::key_degree(kb) >= room) break;
            RingElement prod = ca * cb;
            if (prod.is_zero()) continue;
            auto [it, inserted] = r.coeffs_.try_emplace(ka + kb, std::move(prod));
            if (!inserted) {
                it->second += prod;
                if (it->second.is_zero()) r.coeffs_.erase(it);
            }
        }
    }
    return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.domain_ == b.domain_ && a.vars_ == b.vars_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

TruncatedSeries TruncatedSeries::scaled(const RingElement& c) const {
    TruncatedSeries r(domain_, vars_, order_);
    for (const auto& [k, v] : coeffs_) {
        RingElement p = v * c;
        if (!p.is_zero()) r.coeffs_.emplace(k, std::move(p));
    }
    return r;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    if (order > order_) throw SeriesError("cannot raise the order of a truncated series");
    TruncatedSeries r(domain_, vars_, order);
    for (const auto& [k, c] : coeffs_) {
        if (key_degree(k) >= order) break;
        r.coeffs_.emplace(k, c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::derivative(int var) const {
    if (var < 0 || var >= nvars()) throw SeriesError("variable index out of range");
    if (order_ < 2) throw SeriesError("derivative of an order-1 series");
    TruncatedSeries r(domain_, vars_, order_ - 1);
    for (const auto& [k, c] : coeffs_) {
        Exponents e = unpack(k);
        const int ev = e[static_cast<std::size_t>(var)];
        if (ev == 0) continue;
        e[static_cast<std::size_t>(var)] = ev - 1;
        RingElement v = c;
        v.scale(Coeff(ev));
        r.add_term(e, v);
    }
    return r;
}

TruncatedSeries TruncatedSeries::map_coefficients(const std::function<RingElement(const RingElement&)>& fn,
                                                  const Domain& target) const {
    TruncatedSeries r(target, vars_, order_);
    for (const auto& [k, c] : coeffs_) {
        RingElement v = fn(c);
        if (!(v.domain() == target)) throw DomainError("map_coefficients produced the wrong domain");
        if (!v.is_zero()) r.coeffs_.emplace(k, std::move(v));
    }
    return r;
}

TruncatedSeries TruncatedSeries::renamed(std::vector<std::string> vars) const {
    if (vars.size() != vars_.size()) throw SeriesError("renamed: variable count mismatch");
    TruncatedSeries r(domain_, std::move(vars), order_);
    r.coeffs_ = coeffs_;
    return r;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        const Exponents e = unpack(k);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    if (first) os << "0";
    os << " + O(" << order_ << ")";
    return os.str();
}

TruncatedSeries pow(const TruncatedSeries& f, unsigned e) {
    TruncatedSeries result =
        TruncatedSeries::constant(f.domain(), f.vars(), f.order(), RingElement(f.domain(), Coeff(1)));
    TruncatedSeries base_power = f;
    while (e > 0) {
        if (e & 1U) result = result * base_power;
        e >>= 1U;
        if (e > 0) base_power = base_power * base_power;
    }
    return result;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.nvars() != 1) throw SeriesError("compose: outer series must be univariate");
    if (!(f.domain() == g.domain())) throw DomainError("compose: domain mismatch");
    if (!g.constant_term().is_zero()) throw SeriesError("compose: inner series has nonzero constant term");
    const int order = std::min(f.order(), g.order());
    const TruncatedSeries inner = g.truncated(order);
    // Horner from the top coefficient
    TruncatedSeries result(g.domain(), g.vars(), order);
    for (int i = order - 1; i >= 0; --i) {
        result = result * inner;
        const RingElement c = f.coefficient(i);
        if (!c.is_zero()) result.add_term(TruncatedSeries::Exponents(static_cast<std::size_t>(g.nvars()), 0), c);
    }
    return result;
}

TruncatedSeries substitute(const TruncatedSeries& f, const std::vector<TruncatedSeries>& subs) {
    if (static_cast<int>(subs.size()) != f.nvars()) throw SeriesError("substitute: wrong number of series");
    if (subs.empty()) throw SeriesError("substitute: no series");
    for (const auto& s : subs) {
        if (!(s.domain() == f.domain())) throw DomainError("substitute: domain mismatch");
        if (s.vars() != subs[0].vars() || s.order() != subs[0].order()) {
            throw SeriesError("substitute: inner series must share variables and order");
        }
        if (!s.constant_term().is_zero()) throw SeriesError("substitute: inner series has nonzero constant term");
    }
    const int order = std::min(f.order(), subs[0].order());
    const std::vector<std::string>& vars = subs[0].vars();
    const Domain& d = f.domain();
    // powers[i][e] = subs[i]^e, built on demand
    std::vector<std::vector<TruncatedSeries>> powers(subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i) {
        powers[i].push_back(TruncatedSeries::constant(d, vars, order, RingElement(d, Coeff(1))));
    }
    auto power = [&](std::size_t i, int e) -> const TruncatedSeries& {
        while (static_cast<int>(powers[i].size()) <= e) {
            powers[i].push_back(powers[i].back() * subs[i].truncated(order));
        }
        return powers[i][static_cast<std::size_t>(e)];
    };
    TruncatedSeries result(d, vars, order);
    for (const auto& [e, c] : f.terms()) {
        int deg = 0;
        for (int v : e) deg += v;
        if (deg >= order) break;
        TruncatedSeries term = TruncatedSeries::constant(d, vars, order, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) term = term * power(i, e[i]);
        }
        result += term;
    }
    return result;
}

TruncatedSeries inverse(const TruncatedSeries& f) {
    const RingElement c0 = f.constant_term();
    if (!c0.is_unit()) throw SeriesError("inverse: constant term is not a unit");
    const Domain& d = f.domain();
    const auto zero_exp = TruncatedSeries::Exponents(static_cast<std::size_t>(f.nvars()), 0);
    TruncatedSeries two = TruncatedSeries::constant(d, f.vars(), f.order(), RingElement(d, Coeff(2)));
    TruncatedSeries h = TruncatedSeries::constant(d, f.vars(), f.order(), c0.inverse());
    // Newton: h <- h (2 - f h); the error's valuation doubles each step
    for (int precision = 1; precision < f.order(); precision *= 2) {
        h = h * (two - f * h);
    }
    TruncatedSeries check = f * h;
    check.add_term(zero_exp, RingElement(d, Coeff(-1)));
    if (!check.is_zero()) throw std::logic_error("inverse: Newton iteration did not converge");
    return h;
}

TruncatedSeries reversion(const TruncatedSeries& f) {
    if (f.nvars() != 1) throw SeriesError("reversion: series must be univariate");
    if (!f.constant_term().is_zero()) throw SeriesError("reversion: f(0) must vanish");
    const Domain& d = f.domain();
    const int order = f.order();
    const RingElement a1 = f.coefficient(1);
    if (!a1.is_unit()) throw SeriesError("reversion: linear coefficient is not a unit");
    const TruncatedSeries x = TruncatedSeries::variable(d, f.vars(), order, 0);
    if (order <= 2) return x.scaled(a1.inverse());
    const TruncatedSeries fprime = f.derivative(0);
    TruncatedSeries g = x.scaled(a1.inverse());
    // Newton: g <- g - (f(g) - x) / f'(g)
    for (int precision = 2; precision < order; precision *= 2) {
        const TruncatedSeries residual = compose(f, g) - x;
        TruncatedSeries slope = compose(fprime, g.truncated(order - 1));
        // f'(g) is only known to order - 1, but the residual has valuation >= 2
        TruncatedSeries slope_full(d, f.vars(), order);
        for (const auto& [e, c] : slope.terms()) slope_full.add_term(e, c);
        g = g - residual * inverse(slope_full);
    }
    if (!(compose(f, g) == x)) throw std::logic_error("reversion: Newton iteration did not converge");
    return g;
}

TruncatedSeries divide(const TruncatedSeries& f, const TruncatedSeries& g, int var) {
    if (!(f.domain() == g.domain())) throw DomainError("divide: domain mismatch");
    if (f.vars() != g.vars() || f.order() != g.order()) throw SeriesError("divide: variable/order mismatch");
    if (var < 0 || var >= f.nvars()) throw SeriesError("divide: variable index out of range");
    if (g.is_zero()) throw SeriesError("divide: division by zero");
    const auto v = static_cast<std::size_t>(var);
    // k = exponent of x_var dividing every term of g
    int k = 255;
    for (const auto& [e, c] : g.terms()) k = std::min(k, e[v]);
    for (const auto& [e, c] : f.terms()) {
        if (e[v] < k) throw SeriesError("divide: inexact division");
    }
    const int order = f.order() - k;
    if (order < 1) throw SeriesError("divide: nothing left after removing x^k");
    auto shift_down = [&](const TruncatedSeries& s) {
        TruncatedSeries r(s.domain(), s.vars(), order);
        for (auto [e, c] : s.terms()) {
            e[v] -= k;
            r.add_term(e, c);
        }
        return r;
    };
    const TruncatedSeries u = shift_down(g);
    if (!u.constant_term().is_unit()) throw SeriesError("divide: inexact division (leading coefficient is not a unit)");
    return shift_down(f) * inverse(u);
}

LaurentSeries::LaurentSeries(Domain d, std::string var, int order) : regular_(d, {std::move(var)}, order) {}

LaurentSeries LaurentSeries::shifted(const TruncatedSeries& s, int shift) {
    if (s.nvars() != 1) throw SeriesError("Laurent series are univariate");
    const int order = s.order() + shift;
    LaurentSeries r(s.domain(), s.vars()[0], std::max(order, 1));
    for (const auto& [e, c] : s.terms()) r.add_term(e[0] + shift, c);
    if (order < 1) {
        // only the principal part is known; keep it, regular part is meaningless
        r.regular_ = TruncatedSeries(s.domain(), s.vars(), 1);
    }
    return r;
}

RingElement LaurentSeries::coefficient(int k) const {
    if (k < 0) {
        auto it = principal_.find(k);
        return it == principal_.end() ? RingElement(domain()) : it->second;
    }
    if (k >= regular_.order()) throw SeriesError("Laurent coefficient beyond truncation order");
    return regular_.coefficient(k);
}

void LaurentSeries::add_term(int k, const RingElement& c) {
    if (k >= 0) {
        regular_.add_term({k}, c);
        return;
    }
    if (c.is_zero()) return;
    auto [it, inserted] = principal_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) principal_.erase(it);
    }
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
    if (!(domain() == o.domain())) throw DomainError("Laurent domain mismatch");
    if (regular_.order() != o.regular_.order()) {
        const int order = std::min(regular_.order(), o.regular_.order());
        regular_ = regular_.truncated(order);
        TruncatedSeries other = o.regular_.truncated(order);
        regular_ += other.renamed(regular_.vars());
    } else {
        regular_ += o.regular_.renamed(regular_.vars());
    }
    for (const auto& [k, c] : o.principal_) add_term(k, c);
    return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    const int low_a = a.principal_.empty() ? 0 : a.principal_.begin()->first;
    const int low_b = b.principal_.empty() ? 0 : b.principal_.begin()->first;
    const int order = std::min(a.regular_.order() + low_b, b.regular_.order() + low_a);
    LaurentSeries r(a.domain(), a.regular_.vars()[0], std::max(order, 1));
    auto all_terms = [](const LaurentSeries& s) {
        std::vector<std::pair<int, RingElement>> out(s.principal_.begin(), s.principal_.end());
        for (const auto& [e, c] : s.regular_.terms()) out.emplace_back(e[0], c);
        return out;
    };
    const auto ta = all_terms(a);
    const auto tb = all_terms(b);
    for (const auto& [ea, ca] : ta) {
        for (const auto& [eb, cb] : tb) {
            if (ea + eb >= order) continue;
            r.add_term(ea + eb, ca * cb);
        }
    }
    return r;
}

RingElement residue(const LaurentSeries& f) { return f.residue(); }

}  // namespace cobordism
