#include "cobordism/ring.hpp"

#include <sstream>
#include <unordered_map>

namespace cobordism {

BaseRing BaseRing::modular(long m) {
    if (m < 2) throw DomainError("modulus must be at least 2");
    return {Kind::Modular, m};
}

std::string BaseRing::name() const {
    switch (kind) {
        case Kind::Integers: return "Z";
        case Kind::Modular: return "Z/" + std::to_string(modulus);
        case Kind::Dyadic: return "Z[1/2]";
    }
    return "?";
}

std::string Domain::name() const {
    std::string s = base.name();
    switch (vars) {
        case Vars::None: break;
        case Vars::B: s += "[b]"; break;
        case Vars::T: s += "[t]"; break;
        case Vars::TEps: s += "[t,eps]"; break;
    }
    return s;
}

Domain Domain::parse(const std::string& name) {
    Domain d;
    std::string rest = name;
    auto strip_suffix = [&](const std::string& suffix) {
        if (rest.size() >= suffix.size() && rest.compare(rest.size() - suffix.size(), suffix.size(), suffix) == 0) {
            rest.resize(rest.size() - suffix.size());
            return true;
        }
        return false;
    };
    if (strip_suffix("[b]")) {
        d.vars = Vars::B;
    } else if (strip_suffix("[t,eps]")) {
        d.vars = Vars::TEps;
    } else if (strip_suffix("[t]")) {
        d.vars = Vars::T;
    }
    if (rest == "Z") {
        d.base = BaseRing::integers();
    } else if (rest == "Z[1/2]") {
        d.base = BaseRing::dyadic();
    } else if (rest.rfind("Z/", 0) == 0 || rest.rfind("F_", 0) == 0) {
        try {
            d.base = BaseRing::modular(std::stol(rest.substr(2)));
        } catch (const std::logic_error&) {
            throw DomainError("unknown domain: " + name);
        }
    } else {
        throw DomainError("unknown domain: " + name);
    }
    if ((d.vars == Vars::T || d.vars == Vars::TEps) && d.base.kind != BaseRing::Kind::Integers) {
        throw DomainError("t-domains are only defined over Z: " + name);
    }
    return d;
}

std::string Coeff::to_string() const {
    if (two_exp == 0) return num.get_str();
    return num.get_str() + "/2^" + std::to_string(two_exp);
}

namespace base {

Coeff normalize(const BaseRing& r, Coeff c) {
    switch (r.kind) {
        case BaseRing::Kind::Integers:
            if (c.two_exp != 0) throw DomainError("denominator in Z");
            break;
        case BaseRing::Kind::Modular: {
            if (c.two_exp != 0) throw DomainError("denominator in Z/m");
            mpz_class m(r.modulus);
            mpz_fdiv_r(c.num.get_mpz_t(), c.num.get_mpz_t(), m.get_mpz_t());
            break;
        }
        case BaseRing::Kind::Dyadic: {
            if (c.num == 0) {
                c.two_exp = 0;
                break;
            }
            if (c.two_exp < 0) {
                c.num <<= -c.two_exp;
                c.two_exp = 0;
                break;
            }
            const auto tz = static_cast<int>(mpz_scan1(c.num.get_mpz_t(), 0));
            const int shift = std::min(tz, c.two_exp);
            if (shift > 0) {
                c.num >>= shift;
                c.two_exp -= shift;
            }
            break;
        }
    }
    return c;
}

Coeff add(const BaseRing& r, const Coeff& a, const Coeff& b) {
    if (a.two_exp == b.two_exp) return normalize(r, Coeff(a.num + b.num, a.two_exp));
    if (a.two_exp > b.two_exp) {
        mpz_class bn = b.num << (a.two_exp - b.two_exp);
        return normalize(r, Coeff(a.num + bn, a.two_exp));
    }
    mpz_class an = a.num << (b.two_exp - a.two_exp);
    return normalize(r, Coeff(an + b.num, b.two_exp));
}

Coeff mul(const BaseRing& r, const Coeff& a, const Coeff& b) {
    return normalize(r, Coeff(a.num * b.num, a.two_exp + b.two_exp));
}

Coeff neg(const BaseRing& r, const Coeff& a) { return normalize(r, Coeff(-a.num, a.two_exp)); }

bool is_unit(const BaseRing& r, const Coeff& a) {
    switch (r.kind) {
        case BaseRing::Kind::Integers: return abs(a.num) == 1;
        case BaseRing::Kind::Modular: {
            mpz_class g;
            mpz_class m(r.modulus);
            mpz_gcd(g.get_mpz_t(), a.num.get_mpz_t(), m.get_mpz_t());
            return g == 1;
        }
        case BaseRing::Kind::Dyadic: {
            if (a.num == 0) return false;
            mpz_class odd = a.num >> static_cast<unsigned long>(mpz_scan1(a.num.get_mpz_t(), 0));
            return abs(odd) == 1;
        }
    }
    return false;
}

Coeff inverse(const BaseRing& r, const Coeff& a) {
    if (r.kind == BaseRing::Kind::Dyadic) {
        // a = num / 2^e with num = +-2^j after normalization only if e == 0
        if (a.num == 0) throw DomainError("inverse of zero");
        mpz_class n = a.num;
        const auto tz = static_cast<int>(mpz_scan1(n.get_mpz_t(), 0));
        mpz_class odd = n >> tz;
        if (abs(odd) != 1) throw DomainError("not a unit in Z[1/2]: " + a.to_string());
        mpz_class num = odd;
        num <<= a.two_exp;
        return normalize(r, Coeff(num, tz));
    }
    if (!is_unit(r, a)) throw DomainError("not a unit in " + r.name() + ": " + a.to_string());
    if (r.kind == BaseRing::Kind::Integers) return a;
    mpz_class inv;
    mpz_class m(r.modulus);
    mpz_invert(inv.get_mpz_t(), a.num.get_mpz_t(), m.get_mpz_t());
    return normalize(r, Coeff(inv));
}

Coeff parse(const BaseRing& r, const std::string& s) {
    Coeff c;
    const auto slash = s.find('/');
    std::string numer = s.substr(0, slash);
    if (c.num.set_str(numer, 10) != 0) throw DomainError("bad coefficient: " + s);
    if (slash != std::string::npos) {
        const std::string den = s.substr(slash + 1);
        if (den.rfind("2^", 0) != 0) throw DomainError("only power-of-two denominators allowed: " + s);
        try {
            c.two_exp = std::stoi(den.substr(2));
        } catch (const std::logic_error&) {
            throw DomainError("bad coefficient: " + s);
        }
        if (c.two_exp < 0) throw DomainError("bad coefficient: " + s);
        if (r.kind != BaseRing::Kind::Dyadic && c.two_exp > 0) throw DomainError("denominator outside Z[1/2]: " + s);
    }
    return normalize(r, c);
}

}  // namespace base

namespace {

Coeff convert(const Coeff& c, const BaseRing& from, const BaseRing& to) {
    if (from == to) return c;
    using K = BaseRing::Kind;
    if (from.kind == K::Integers) return base::normalize(to, c);
    if (from.kind == K::Modular && to.kind == K::Modular && from.modulus % to.modulus == 0) {
        return base::normalize(to, c);
    }
    if (from.kind == K::Dyadic && to.kind == K::Modular && to.modulus % 2 == 1) {
        Coeff half_power = base::inverse(to, base::normalize(to, Coeff(mpz_class(1) << c.two_exp)));
        return base::mul(to, base::normalize(to, Coeff(c.num)), half_power);
    }
    throw DomainError("no ring map from " + from.name() + " to " + to.name());
}

void check_monomial(const Domain& d, const Monomial& m) {
    const bool ok = (m.b.empty() || d.vars == Vars::B) && (m.t == 0 || d.vars == Vars::T || d.vars == Vars::TEps) &&
                    (m.eps == 0 || d.vars == Vars::TEps) && m.t >= 0 && (m.eps == 0 || m.eps == 1);
    if (!ok) throw DomainError("monomial not in domain " + d.name());
}

}  // namespace

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.weight() <=> b.weight(); c != 0) return c;
    if (auto c = a.b <=> b.b; c != 0) return c;
    if (auto c = a.t <=> b.t; c != 0) return c;
    return a.eps <=> b.eps;
}

RingElement::RingElement(Domain d, const Coeff& c) : domain_(d) {
    Coeff n = base::normalize(d.base, c);
    if (!n.is_zero()) terms_.emplace(Monomial{}, std::move(n));
}

RingElement RingElement::monomial(Domain d, Monomial m, const Coeff& c) {
    check_monomial(d, m);
    RingElement r(d);
    r.add_term(m, c);
    return r;
}

RingElement RingElement::b(Domain d, int i) {
    if (i < 0) throw DomainError("b_i needs i >= 0");
    return monomial(d, Monomial{Partition::single(i)});
}

RingElement RingElement::b(Domain d, const Partition& alpha) { return monomial(d, Monomial{alpha}); }

RingElement RingElement::t(Domain d, int power) { return monomial(d, Monomial{{}, power, 0}); }

RingElement RingElement::eps(Domain d) { return monomial(d, Monomial{{}, 0, 1}); }

bool RingElement::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }

Coeff RingElement::constant_term() const { return coefficient(Monomial{}); }

Coeff RingElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff() : it->second;
}

bool RingElement::is_homogeneous(int w) const {
    for (const auto& [m, c] : terms_) {
        if (m.weight() != w) return false;
    }
    return true;
}

RingElement RingElement::weight_part(int w) const {
    RingElement r(domain_);
    for (const auto& [m, c] : terms_) {
        if (m.weight() == w) r.terms_.emplace(m, c);
    }
    return r;
}

int RingElement::max_weight() const { return terms_.empty() ? -1 : terms_.rbegin()->first.weight(); }

bool RingElement::is_unit() const {
    const Coeff c = constant_term();
    if (!base::is_unit(domain_.base, c)) return false;
    for (const auto& [m, v] : terms_) {
        if (!(m == Monomial{}) && m.eps == 0) return false;
    }
    return true;
}

RingElement RingElement::inverse() const {
    if (!is_unit()) throw DomainError("not a unit: " + to_string());
    // (c + e)^-1 = c^-1 - c^-2 e when e^2 = 0
    const Coeff cinv = base::inverse(domain_.base, constant_term());
    RingElement r(domain_, cinv);
    const Coeff c2 = base::neg(domain_.base, base::mul(domain_.base, cinv, cinv));
    for (const auto& [m, v] : terms_) {
        if (m == Monomial{}) continue;
        r.add_term(m, base::mul(domain_.base, v, c2));
    }
    return r;
}

bool RingElement::is_integral() const {
    for (const auto& [m, c] : terms_) {
        if (c.two_exp != 0) return false;
    }
    return true;
}

void RingElement::check_same(const RingElement& o) const {
    if (!(domain_ == o.domain_)) {
        throw DomainError("domain mismatch: " + domain_.name() + " vs " + o.domain_.name());
    }
}

void RingElement::add_term(const Monomial& m, const Coeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m);
    if (inserted) {
        it->second = base::normalize(domain_.base, c);
    } else {
        it->second = base::add(domain_.base, it->second, c);
    }
    if (it->second.is_zero()) terms_.erase(it);
}

RingElement& RingElement::operator+=(const RingElement& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, base::neg(domain_.base, c));
    return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    a.check_same(b);
    RingElement r(a.domain_);
    if (a.is_zero() || b.is_zero()) return r;
    const BaseRing& br = a.domain_.base;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            if (ma.eps + mb.eps > 1) continue;
            Monomial m;
            if (ma.b.empty()) {
                m.b = mb.b;
            } else if (mb.b.empty()) {
                m.b = ma.b;
            } else {
                m.b = ma.b.merged(mb.b);
            }
            m.t = ma.t + mb.t;
            m.eps = ma.eps + mb.eps;
            r.add_term(m, base::mul(br, ca, cb));
        }
    }
    return r;
}

RingElement& RingElement::operator*=(const RingElement& o) { return *this = *this * o; }

RingElement& RingElement::scale(const Coeff& c) {
    const Coeff cn = base::normalize(domain_.base, c);
    if (cn.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second = base::mul(domain_.base, it->second, cn);
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    return *this;
}

RingElement operator-(const RingElement& a) {
    RingElement r(a.domain_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, base::neg(a.domain_.base, c));
    return r;
}

bool operator==(const RingElement& a, const RingElement& b) { return a.domain_ == b.domain_ && a.terms_ == b.terms_; }

RingElement RingElement::map_base(const BaseRing& target) const {
    RingElement r(Domain{target, domain_.vars});
    for (const auto& [m, c] : terms_) r.add_term(m, convert(c, domain_.base, target));
    return r;
}

RingElement RingElement::substitute_b(const std::function<RingElement(int)>& image, const Domain& target) const {
    std::unordered_map<int, RingElement> cache;
    auto img = [&](int i) -> const RingElement& {
        auto it = cache.find(i);
        if (it == cache.end()) {
            RingElement v = image(i);
            if (!(v.domain() == target)) throw DomainError("substitution image has wrong domain");
            it = cache.emplace(i, std::move(v)).first;
        }
        return it->second;
    };
    RingElement r(target);
    for (const auto& [m, c] : terms_) {
        if (m.t != 0 || m.eps != 0) throw DomainError("substitute_b expects an element of a b-domain");
        RingElement term(target, convert(c, domain_.base, target.base));
        for (int part : m.b.parts()) {
            term *= img(part);
            if (term.is_zero()) break;
        }
        r += term;
    }
    return r;
}

std::string RingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.to_string();
        const bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs.erase(0, 1);
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        std::string mono;
        auto append = [&](const std::string& s) {
            if (!mono.empty()) mono += "*";
            mono += s;
        };
        int i = 0;
        const auto parts = m.b.parts();
        while (i < static_cast<int>(parts.size())) {
            int j = i;
            while (j < static_cast<int>(parts.size()) && parts[j] == parts[i]) ++j;
            std::string s = "b" + std::to_string(parts[i]);
            if (j - i > 1) s += "^" + std::to_string(j - i);
            append(s);
            i = j;
        }
        if (m.t > 0) append(m.t == 1 ? "t" : "t^" + std::to_string(m.t));
        if (m.eps > 0) append("eps");
        if (mono.empty()) {
            os << cs;
        } else if (cs == "1") {
            os << mono;
        } else {
            os << cs << "*" << mono;
        }
    }
    return os.str();
}

RingElement pow(const RingElement& a, unsigned e) {
    RingElement result(a.domain(), Coeff(1));
    RingElement base_power = a;
    while (e > 0) {
        if (e & 1U) result *= base_power;
        e >>= 1U;
        if (e > 0) base_power *= base_power;
    }
    return result;
}

}  // namespace cobordism
