#include "cobordism/chow.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>

namespace cobordism {

// ---------------------------------------------------------------------------
// VarietySpec

VarietySpec VarietySpec::multiproj(std::vector<int> dims) {
    for (int d : dims) {
        if (d < 0) throw std::invalid_argument("projective space dimension must be non-negative");
    }
    VarietySpec s;
    s.kind = Kind::MultiProj;
    s.dims = std::move(dims);
    return s;
}

VarietySpec VarietySpec::projbundle(VarietySpec base, std::vector<LinearForm> lines, int minus_trivial) {
    if (!base.is_connected()) throw std::invalid_argument("projective bundle base must be connected");
    const int g = base.generator_count();
    for (const auto& l : lines) {
        if (static_cast<int>(l.size()) != g) {
            throw std::invalid_argument("bundle line has " + std::to_string(l.size()) + " entries, base has " +
                                        std::to_string(g) + " generators");
        }
    }
    if (minus_trivial < 0) throw std::invalid_argument("negative trivial rank");
    if (static_cast<int>(lines.size()) - minus_trivial < 1) throw std::invalid_argument("projective bundle needs rank >= 1");
    VarietySpec s;
    s.kind = Kind::ProjBundle;
    s.base = std::make_shared<const VarietySpec>(std::move(base));
    s.lines = std::move(lines);
    s.minus_trivial = minus_trivial;
    return s;
}

VarietySpec VarietySpec::product(std::vector<VarietySpec> factors) {
    if (factors.empty()) return point();
    if (factors.size() == 1) return factors[0];
    VarietySpec s;
    s.kind = Kind::Product;
    s.parts = std::move(factors);
    return s;
}

VarietySpec VarietySpec::disjoint(std::vector<VarietySpec> components) {
    if (components.size() == 1) return components[0];
    VarietySpec s;
    s.kind = Kind::Disjoint;
    s.parts = std::move(components);
    return s;
}

std::vector<VarietySpec> VarietySpec::components() const {
    switch (kind) {
        case Kind::MultiProj:
        case Kind::ProjBundle: return {*this};
        case Kind::Disjoint: {
            std::vector<VarietySpec> out;
            for (const auto& p : parts) {
                auto c = p.components();
                out.insert(out.end(), c.begin(), c.end());
            }
            return out;
        }
        case Kind::Product: {
            std::vector<std::vector<VarietySpec>> acc{{}};
            for (const auto& f : parts) {
                std::vector<std::vector<VarietySpec>> next;
                for (const auto& prefix : acc) {
                    for (const auto& c : f.components()) {
                        auto v = prefix;
                        v.push_back(c);
                        next.push_back(std::move(v));
                    }
                }
                acc = std::move(next);
            }
            std::vector<VarietySpec> out;
            for (auto& factors : acc) out.push_back(product(std::move(factors)));
            return out;
        }
    }
    return {};
}

bool VarietySpec::is_connected() const {
    switch (kind) {
        case Kind::MultiProj:
        case Kind::ProjBundle: return true;
        case Kind::Disjoint: return false;
        case Kind::Product:
            return std::all_of(parts.begin(), parts.end(), [](const VarietySpec& p) { return p.is_connected(); });
    }
    return false;
}

int VarietySpec::dimension() const {
    switch (kind) {
        case Kind::MultiProj: {
            int d = 0;
            for (int n : dims) d += n;
            return d;
        }
        case Kind::ProjBundle: return base->dimension() + static_cast<int>(lines.size()) - minus_trivial - 1;
        case Kind::Product: {
            int d = 0;
            for (const auto& p : parts) d += p.dimension();
            return d;
        }
        case Kind::Disjoint: {
            if (parts.empty()) return 0;
            const int d = parts[0].dimension();
            for (const auto& p : parts) {
                if (p.dimension() != d) throw std::invalid_argument("disjoint union of mixed dimension");
            }
            return d;
        }
    }
    return 0;
}

int VarietySpec::generator_count() const {
    switch (kind) {
        case Kind::MultiProj: return static_cast<int>(dims.size());
        case Kind::ProjBundle: return base->generator_count() + 1;
        case Kind::Product: {
            int g = 0;
            for (const auto& p : parts) g += p.generator_count();
            return g;
        }
        case Kind::Disjoint: throw std::invalid_argument("a disjoint union has no single model");
    }
    return 0;
}

std::string VarietySpec::to_string() const {
    std::ostringstream os;
    auto join = [&](const std::vector<VarietySpec>& v, const char* sep) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << sep;
            os << v[i].to_string();
        }
    };
    switch (kind) {
        case Kind::MultiProj:
            if (dims.empty()) return "pt";
            os << "P(";
            for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
            os << ")";
            break;
        case Kind::ProjBundle:
            os << "PB[" << base->to_string() << ";";
            for (std::size_t i = 0; i < lines.size(); ++i) {
                if (i) os << "|";
                for (std::size_t j = 0; j < lines[i].size(); ++j) os << (j ? "," : "") << lines[i][j];
            }
            if (minus_trivial) os << ";-" << minus_trivial;
            os << "]";
            break;
        case Kind::Product:
            os << "(";
            join(parts, " x ");
            os << ")";
            break;
        case Kind::Disjoint:
            os << "(";
            join(parts, " + ");
            os << ")";
            break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// ChowModel

using IntPoly = std::map<ChowModel::Exps, mpz_class>;

struct ChowModel::Data {
    VarietySpec spec;
    int dim = 0;
    std::vector<std::string> names;
    std::vector<int> caps;
    std::vector<IntPoly> rhs;
    std::vector<Exps> basis;
    std::map<Exps, std::size_t> index;
    std::vector<int> codims;
    std::size_t top = 0;
    int sign = 1;
    std::vector<std::vector<std::vector<std::pair<std::size_t, mpz_class>>>> table;
    std::vector<std::vector<std::pair<std::size_t, mpz_class>>> generator_expansion;
    bool bundle = false;
    std::optional<ChowModel> base;
    int rank = 0;
    int zeta = -1;
};

namespace {

void add_into(IntPoly& p, const ChowModel::Exps& e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = p.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            ChowModel::Exps e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add_into(r, e, ca * cb);
        }
    }
    return r;
}

IntPoly linear_poly(const LinearForm& f, std::size_t ngens) {
    IntPoly p;
    for (std::size_t j = 0; j < f.size(); ++j) {
        ChowModel::Exps e(ngens, 0);
        e[j] = 1;
        add_into(p, e, mpz_class(f[j]));
    }
    return p;
}

int total(const ChowModel::Exps& e) {
    int s = 0;
    for (int v : e) s += v;
    return s;
}

struct Reducer {
    const std::vector<int>& caps;
    const std::vector<IntPoly>& rhs;
    int dim;
    std::map<ChowModel::Exps, IntPoly> memo;

    IntPoly operator()(const ChowModel::Exps& e) {
        if (total(e) > dim) return {};
        int j = static_cast<int>(e.size()) - 1;
        while (j >= 0 && e[static_cast<std::size_t>(j)] < caps[static_cast<std::size_t>(j)]) --j;
        if (j < 0) return {{e, 1}};
        auto it = memo.find(e);
        if (it != memo.end()) return it->second;
        ChowModel::Exps rest = e;
        rest[static_cast<std::size_t>(j)] -= caps[static_cast<std::size_t>(j)];
        IntPoly out;
        for (const auto& [m, c] : rhs[static_cast<std::size_t>(j)]) {
            ChowModel::Exps f = rest;
            for (std::size_t i = 0; i < f.size(); ++i) f[i] += m[i];
            for (const auto& [k, v] : (*this)(f)) add_into(out, k, c * v);
        }
        memo.emplace(e, out);
        return out;
    }
};

// Fills basis, index, table etc. from names/caps/rhs/sign.
void finish(ChowModel::Data& d) {
    const std::size_t k = d.caps.size();
    d.dim = 0;
    for (int c : d.caps) d.dim += c - 1;
    // enumerate exponent vectors below the caps
    std::vector<ChowModel::Exps> all{ChowModel::Exps{}};
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<ChowModel::Exps> next;
        for (const auto& prefix : all) {
            for (int a = 0; a < d.caps[j]; ++a) {
                auto e = prefix;
                e.push_back(a);
                next.push_back(std::move(e));
            }
        }
        all = std::move(next);
    }
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        const int ta = total(a);
        const int tb = total(b);
        return ta != tb ? ta < tb : a > b;
    });
    d.basis = all;
    for (std::size_t i = 0; i < d.basis.size(); ++i) {
        d.index.emplace(d.basis[i], i);
        d.codims.push_back(total(d.basis[i]));
    }
    std::size_t tops = 0;
    for (std::size_t i = 0; i < d.basis.size(); ++i) {
        if (d.codims[i] == d.dim) {
            d.top = i;
            ++tops;
        }
    }
    if (tops != 1) throw std::logic_error("Chow model must have a one-dimensional top degree");

    Reducer reduce{d.caps, d.rhs, d.dim, {}};
    const std::size_t n = d.basis.size();
    d.table.assign(n, std::vector<std::vector<std::pair<std::size_t, mpz_class>>>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (d.codims[i] + d.codims[j] > d.dim) continue;
            ChowModel::Exps e(k);
            for (std::size_t g = 0; g < k; ++g) e[g] = d.basis[i][g] + d.basis[j][g];
            std::vector<std::pair<std::size_t, mpz_class>> row;
            for (const auto& [m, c] : reduce(e)) row.emplace_back(d.index.at(m), c);
            d.table[i][j] = row;
            d.table[j][i] = row;
        }
    }
    d.generator_expansion.assign(k, {});
    for (std::size_t g = 0; g < k; ++g) {
        ChowModel::Exps e(k, 0);
        e[g] = 1;
        for (const auto& [m, c] : reduce(e)) d.generator_expansion[g].emplace_back(d.index.at(m), c);
    }
}

}  // namespace

namespace {

std::mutex model_mutex;
std::map<std::string, ChowModel> model_cache;

}  // namespace

int ChowModel::dimension() const { return data_->dim; }
int ChowModel::generator_count() const { return static_cast<int>(data_->caps.size()); }
const std::vector<std::string>& ChowModel::generator_names() const { return data_->names; }
std::size_t ChowModel::rank() const { return data_->basis.size(); }
const ChowModel::Exps& ChowModel::basis_monomial(std::size_t i) const { return data_->basis[i]; }
int ChowModel::codim(std::size_t i) const { return data_->codims[i]; }
int ChowModel::top_sign() const { return data_->sign; }
std::size_t ChowModel::top_index() const { return data_->top; }
const VarietySpec& ChowModel::spec() const { return data_->spec; }
bool ChowModel::is_projective_bundle() const { return data_->bundle; }
int ChowModel::bundle_rank() const { return data_->rank; }
int ChowModel::zeta_index() const { return data_->zeta; }

const ChowModel& ChowModel::bundle_base() const {
    if (!data_->bundle) throw std::invalid_argument("not a projective bundle model");
    return *data_->base;
}

std::vector<std::size_t> ChowModel::basis_in_codim(int c) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (data_->codims[i] == c) out.push_back(i);
    }
    return out;
}

const std::vector<std::pair<std::size_t, mpz_class>>& ChowModel::product(std::size_t i, std::size_t j) const {
    return data_->table[i][j];
}

std::size_t ChowModel::index_of(const Exps& e) const {
    auto it = data_->index.find(e);
    return it == data_->index.end() ? rank() : it->second;
}

std::vector<std::pair<std::size_t, mpz_class>> ChowModel::reduce(const Exps& e) const {
    if (static_cast<int>(e.size()) != generator_count()) throw std::invalid_argument("exponent vector has wrong length");
    // multiply generators one at a time through the product table
    std::map<std::size_t, mpz_class> cur{{index_of(Exps(e.size(), 0)), 1}};
    for (std::size_t g = 0; g < e.size(); ++g) {
        for (int a = 0; a < e[g]; ++a) {
            std::map<std::size_t, mpz_class> next;
            const auto& gen = data_->generator_expansion[g];
            for (const auto& [i, c] : cur) {
                for (const auto& [j, v] : gen) {
                    for (const auto& [k, w] : product(i, j)) {
                        mpz_class& slot = next[k];
                        slot += c * v * w;
                    }
                }
            }
            for (auto it = next.begin(); it != next.end();) it = it->second == 0 ? next.erase(it) : std::next(it);
            cur = std::move(next);
        }
    }
    return {cur.begin(), cur.end()};
}

namespace {

std::shared_ptr<ChowModel::Data> assemble(const VarietySpec& spec) {
    auto d = std::make_shared<ChowModel::Data>();
    d->spec = spec;
    switch (spec.kind) {
        case VarietySpec::Kind::MultiProj: {
            const std::size_t k = spec.dims.size();
            for (std::size_t i = 0; i < k; ++i) {
                d->names.push_back(k == 1 ? "h" : "h" + std::to_string(i + 1));
                d->caps.push_back(spec.dims[i] + 1);
                d->rhs.emplace_back();
            }
            break;
        }
        case VarietySpec::Kind::Product: {
            std::vector<ChowModel> factors;
            std::size_t width = 0;
            for (const auto& f : spec.parts) {
                factors.push_back(build_model(f));
                width += static_cast<std::size_t>(factors.back().generator_count());
            }
            std::size_t offset = 0;
            for (std::size_t fi = 0; fi < factors.size(); ++fi) {
                const ChowModel& m = factors[fi];
                const auto add = static_cast<std::size_t>(m.generator_count());
                for (std::size_t g = 0; g < add; ++g) {
                    d->names.push_back(m.generator_names()[g] + "_" + std::to_string(fi + 1));
                    d->caps.push_back(m.relation_cap(g));
                    IntPoly shifted;
                    for (const auto& [e, c] : m.relation_rhs(g)) {
                        ChowModel::Exps full(width, 0);
                        for (std::size_t i = 0; i < add; ++i) full[offset + i] = e[i];
                        shifted.emplace(full, c);
                    }
                    d->rhs.push_back(std::move(shifted));
                }
                d->sign *= m.top_sign();
                offset += add;
            }
            break;
        }
        case VarietySpec::Kind::ProjBundle: {
            const ChowModel base = build_model(*spec.base);
            const std::size_t bg = static_cast<std::size_t>(base.generator_count());
            const int r = static_cast<int>(spec.lines.size()) - spec.minus_trivial;
            // c(V) = prod (1 + l_j), as polynomials in the base generators
            std::vector<IntPoly> c{IntPoly{{ChowModel::Exps(bg, 0), 1}}};
            for (const auto& l : spec.lines) {
                const IntPoly lp = linear_poly(l, bg);
                c.emplace_back();
                for (std::size_t i = c.size() - 1; i >= 1; --i) {
                    for (const auto& [e, v] : poly_mul(c[i - 1], lp)) add_into(c[i], e, v);
                }
            }
            // classes above the rank must vanish for the virtual bundle to have rank r
            for (std::size_t i = static_cast<std::size_t>(r) + 1; i < c.size(); ++i) {
                bool zero = true;
                std::map<std::size_t, mpz_class> acc;
                for (const auto& [e, v] : c[i]) {
                    for (const auto& [k, w] : base.reduce(e)) acc[k] += v * w;
                }
                for (const auto& [k, w] : acc) zero = zero && w == 0;
                if (!zero) {
                    throw std::invalid_argument("virtual bundle has a nonzero Chern class above its rank");
                }
            }
            for (std::size_t g = 0; g < bg; ++g) {
                d->names.push_back(base.generator_names()[g]);
                d->caps.push_back(base.relation_cap(g));
                IntPoly shifted;
                for (const auto& [e, v] : base.relation_rhs(g)) {
                    auto f = e;
                    f.push_back(0);
                    shifted.emplace(f, v);
                }
                d->rhs.push_back(std::move(shifted));
            }
            int level = 1;
            for (const auto& n : d->names) {
                if (n.rfind("z", 0) == 0) ++level;
            }
            d->names.push_back(level == 1 ? "z" : "z" + std::to_string(level));
            d->caps.push_back(r);
            // zeta^r = -sum_{i=1}^r (-1)^i c_i(V) zeta^{r-i}
            IntPoly rel;
            for (int i = 1; i <= r; ++i) {
                const mpz_class sign = (i % 2 == 0) ? -1 : 1;
                for (const auto& [e, v] : c[static_cast<std::size_t>(i)]) {
                    auto f = e;
                    f.push_back(r - i);
                    add_into(rel, f, sign * v);
                }
            }
            d->rhs.push_back(std::move(rel));
            d->sign = base.top_sign() * ((r - 1) % 2 == 0 ? 1 : -1);
            d->bundle = true;
            d->base = base;
            d->rank = r;
            d->zeta = static_cast<int>(bg);
            break;
        }
        case VarietySpec::Kind::Disjoint: throw std::invalid_argument("build_model needs a connected spec");
    }
    finish(*d);
    return d;
}

}  // namespace

int ChowModel::relation_cap(std::size_t g) const { return data_->caps[g]; }
const std::map<ChowModel::Exps, mpz_class>& ChowModel::relation_rhs(std::size_t g) const { return data_->rhs[g]; }

ChowModel build_model(const VarietySpec& spec) {
    if (!spec.is_connected()) throw std::invalid_argument("build_model needs a connected spec");
    const std::string key = spec.to_string();
    {
        std::lock_guard<std::mutex> lock(model_mutex);
        auto it = model_cache.find(key);
        if (it != model_cache.end()) return it->second;
    }
    ChowModel m;
    m.data_ = assemble(spec);
    std::lock_guard<std::mutex> lock(model_mutex);
    return model_cache.emplace(key, m).first->second;
}

// ---------------------------------------------------------------------------
// ChowElement

ChowElement::ChowElement(ChowModel m, Domain d) : model_(std::move(m)), domain_(d), c_(model_.rank(), RingElement(d)) {}

ChowElement ChowElement::one(const ChowModel& m, const Domain& d) {
    ChowElement e(m, d);
    e.c_[0] = RingElement(d, Coeff(1));
    return e;
}

ChowElement ChowElement::from_monomial(const ChowModel& m, const Domain& d, const ChowModel::Exps& e) {
    ChowElement out(m, d);
    for (const auto& [i, c] : m.reduce(e)) out.c_[i] += RingElement(d, Coeff(c));
    return out;
}

ChowElement ChowElement::generator(const ChowModel& m, const Domain& d, int g) {
    ChowModel::Exps e(static_cast<std::size_t>(m.generator_count()), 0);
    e.at(static_cast<std::size_t>(g)) = 1;
    return from_monomial(m, d, e);
}

ChowElement ChowElement::from_linear_form(const ChowModel& m, const Domain& d, const LinearForm& f) {
    if (static_cast<int>(f.size()) != m.generator_count()) throw std::invalid_argument("linear form has wrong length");
    ChowElement out(m, d);
    for (std::size_t g = 0; g < f.size(); ++g) {
        if (f[g] != 0) out += generator(m, d, static_cast<int>(g)).scaled(RingElement(d, Coeff(f[g])));
    }
    return out;
}

void ChowElement::add_to(std::size_t i, const RingElement& v) { c_.at(i) += v; }

bool ChowElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const RingElement& r) { return r.is_zero(); });
}

ChowElement ChowElement::codim_part(int c) const {
    ChowElement out(model_, domain_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (model_.codim(i) == c) out.c_[i] = c_[i];
    }
    return out;
}

bool ChowElement::is_homogeneous(int c) const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].is_zero() && model_.codim(i) != c) return false;
    }
    return true;
}

void ChowElement::check_same(const ChowElement& o) const {
    if (!(model_ == o.model_)) throw std::invalid_argument("Chow elements live on different models");
    if (!(domain_ == o.domain_)) throw DomainError("Chow element domain mismatch");
}

ChowElement& ChowElement::operator+=(const ChowElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    }
    return *this;
}

ChowElement& ChowElement::operator-=(const ChowElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
    }
    return *this;
}

ChowElement operator-(const ChowElement& a) {
    ChowElement out(a.model_, a.domain_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = -a.c_[i];
    return out;
}

ChowElement operator*(const ChowElement& a, const ChowElement& b) {
    a.check_same(b);
    ChowElement out(a.model_, a.domain_);
    const std::size_t n = a.c_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.c_[j].is_zero()) continue;
            const auto& row = a.model_.product(i, j);
            if (row.empty()) continue;
            const RingElement prod = a.c_[i] * b.c_[j];
            if (prod.is_zero()) continue;
            for (const auto& [k, w] : row) {
                if (w == 1) {
                    out.c_[k] += prod;
                } else {
                    RingElement t = prod;
                    t.scale(Coeff(w));
                    out.c_[k] += t;
                }
            }
        }
    }
    return out;
}

bool operator==(const ChowElement& a, const ChowElement& b) {
    return a.model_ == b.model_ && a.domain_ == b.domain_ && a.c_ == b.c_;
}

ChowElement ChowElement::scaled(const RingElement& c) const {
    ChowElement out(model_, domain_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) out.c_[i] = c_[i] * c;
    }
    return out;
}

ChowElement ChowElement::map_coefficients(const std::function<RingElement(const RingElement&)>& fn,
                                          const Domain& target) const {
    ChowElement out(model_, target);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        out.c_[i] = fn(c_[i]);
        if (!(out.c_[i].domain() == target)) throw DomainError("map_coefficients produced the wrong domain");
    }
    return out;
}

ChowElement ChowElement::to_domain(const Domain& target) const {
    if (domain_.vars != Vars::None) throw DomainError("to_domain expects an element with scalar coefficients");
    return map_coefficients(
        [&](const RingElement& r) {
            RingElement out(target);
            for (const auto& [m, c] : r.terms()) out += RingElement(target, c);
            return out;
        },
        target);
}

std::string ChowElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[i].to_string() << ")";
        const auto& e = model_.basis_monomial(i);
        for (std::size_t g = 0; g < e.size(); ++g) {
            if (e[g] == 0) continue;
            os << "*" << model_.generator_names()[g];
            if (e[g] > 1) os << "^" << e[g];
        }
    }
    return first ? "0" : os.str();
}

ChowElement pow(const ChowElement& a, unsigned e) {
    ChowElement result = ChowElement::one(a.model(), a.domain());
    for (unsigned i = 0; i < e; ++i) result = result * a;
    return result;
}

RingElement degree(const ChowElement& u) {
    RingElement r = u[u.model().top_index()];
    if (u.model().top_sign() < 0) r = -r;
    return r;
}

ChowElement pushforward_projbundle(const ChowElement& u) {
    const ChowModel& p = u.model();
    const ChowModel& base = p.bundle_base();
    const int r = p.bundle_rank();
    const auto z = static_cast<std::size_t>(p.zeta_index());
    ChowElement out(base, u.domain());
    for (std::size_t i = 0; i < p.rank(); ++i) {
        if (u[i].is_zero()) continue;
        const auto& e = p.basis_monomial(i);
        if (e[z] != r - 1) continue;
        // p_*(zeta^{r-1}) = (-1)^{r-1} p_*(xi^{r-1}) = (-1)^{r-1}
        const ChowModel::Exps prefix(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(z));
        const std::size_t k = base.index_of(prefix);
        out.add_to(k, (r - 1) % 2 == 0 ? u[i] : -u[i]);
    }
    return out;
}

ChowElement pullback_projbundle(const ChowModel& bundle, const ChowElement& base_class) {
    if (!(bundle.bundle_base() == base_class.model())) throw std::invalid_argument("class does not live on the base");
    ChowElement out(bundle, base_class.domain());
    for (std::size_t i = 0; i < base_class.model().rank(); ++i) {
        if (base_class[i].is_zero()) continue;
        ChowModel::Exps e = base_class.model().basis_monomial(i);
        e.push_back(0);
        out.add_to(bundle.index_of(e), base_class[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// VirtualSplitBundle

VirtualSplitBundle VirtualSplitBundle::trivial(const ChowModel& m, int rank) {
    VirtualSplitBundle v(m);
    if (rank >= 0) {
        v.plus_trivial = rank;
    } else {
        v.minus_trivial = -rank;
    }
    return v;
}

VirtualSplitBundle VirtualSplitBundle::lines(const ChowModel& m, std::vector<LinearForm> ls) {
    VirtualSplitBundle v(m);
    for (const auto& l : ls) {
        if (static_cast<int>(l.size()) != m.generator_count()) throw std::invalid_argument("line has wrong length");
    }
    v.plus_lines = std::move(ls);
    return v;
}

int VirtualSplitBundle::rank() const {
    return static_cast<int>(plus_lines.size()) + plus_trivial - static_cast<int>(minus_lines.size()) - minus_trivial;
}

VirtualSplitBundle VirtualSplitBundle::negated() const {
    VirtualSplitBundle v(model);
    v.plus_lines = minus_lines;
    v.minus_lines = plus_lines;
    v.plus_trivial = minus_trivial;
    v.minus_trivial = plus_trivial;
    return v;
}

VirtualSplitBundle& VirtualSplitBundle::operator+=(const VirtualSplitBundle& o) {
    if (!(model == o.model)) throw std::invalid_argument("bundles live on different models");
    plus_lines.insert(plus_lines.end(), o.plus_lines.begin(), o.plus_lines.end());
    minus_lines.insert(minus_lines.end(), o.minus_lines.begin(), o.minus_lines.end());
    plus_trivial += o.plus_trivial;
    minus_trivial += o.minus_trivial;
    return *this;
}

VirtualSplitBundle VirtualSplitBundle::twisted(const LinearForm& l) const {
    auto shift = [&](LinearForm f) {
        for (std::size_t i = 0; i < f.size(); ++i) f[i] += l[i];
        return f;
    };
    VirtualSplitBundle v(model);
    for (const auto& f : plus_lines) v.plus_lines.push_back(shift(f));
    for (const auto& f : minus_lines) v.minus_lines.push_back(shift(f));
    for (int i = 0; i < plus_trivial; ++i) v.plus_lines.push_back(l);
    for (int i = 0; i < minus_trivial; ++i) v.minus_lines.push_back(l);
    return v;
}

ChowElement VirtualSplitBundle::chern_total() const {
    const Domain z = Domain::integers();
    ChowElement c = ChowElement::one(model, z);
    const ChowElement one = ChowElement::one(model, z);
    for (const auto& l : plus_lines) c = c * (one + ChowElement::from_linear_form(model, z, l));
    for (const auto& l : minus_lines) {
        // (1 + l)^-1 = sum_k (-l)^k, finite since l is nilpotent
        const ChowElement neg = -ChowElement::from_linear_form(model, z, l);
        ChowElement inv = one;
        ChowElement term = one;
        for (int k = 1; k <= model.dimension(); ++k) {
            term = term * neg;
            inv += term;
        }
        c = c * inv;
    }
    return c;
}

ChowElement VirtualSplitBundle::chern(int i) const { return chern_total().codim_part(i); }

LinearForm xi_form(const ChowModel& bundle) {
    LinearForm f(static_cast<std::size_t>(bundle.generator_count()), 0);
    f.at(static_cast<std::size_t>(bundle.zeta_index())) = -1;
    return f;
}

LinearForm embed_form(const LinearForm& f, int offset, int total) {
    LinearForm out(static_cast<std::size_t>(total), 0);
    for (std::size_t i = 0; i < f.size(); ++i) out.at(static_cast<std::size_t>(offset) + i) = f[i];
    return out;
}

VirtualSplitBundle tangent_bundle(const VarietySpec& spec) {
    const ChowModel m = build_model(spec);
    const int g = m.generator_count();
    VirtualSplitBundle t(m);
    switch (spec.kind) {
        case VarietySpec::Kind::MultiProj:
            // Euler sequence: T = (n+1) O(1) - 1 on each factor
            for (std::size_t i = 0; i < spec.dims.size(); ++i) {
                LinearForm h(static_cast<std::size_t>(g), 0);
                h[i] = 1;
                for (int k = 0; k <= spec.dims[i]; ++k) t.plus_lines.push_back(h);
                t.minus_trivial += 1;
            }
            break;
        case VarietySpec::Kind::ProjBundle: {
            const VirtualSplitBundle tb = tangent_bundle(*spec.base);
            for (const auto& f : tb.plus_lines) t.plus_lines.push_back(embed_form(f, 0, g));
            for (const auto& f : tb.minus_lines) t.minus_lines.push_back(embed_form(f, 0, g));
            t.plus_trivial = tb.plus_trivial;
            t.minus_trivial = tb.minus_trivial;
            // relative tangent bundle V(1) - 1
            const LinearForm xi = xi_form(m);
            for (const auto& l : spec.lines) {
                LinearForm f = embed_form(l, 0, g);
                for (std::size_t i = 0; i < f.size(); ++i) f[i] += xi[i];
                t.plus_lines.push_back(f);
            }
            for (int i = 0; i < spec.minus_trivial; ++i) t.minus_lines.push_back(xi);
            t.minus_trivial += 1;
            break;
        }
        case VarietySpec::Kind::Product: {
            int offset = 0;
            for (const auto& f : spec.parts) {
                const VirtualSplitBundle tf = tangent_bundle(f);
                const int fg = f.generator_count();
                for (const auto& l : tf.plus_lines) t.plus_lines.push_back(embed_form(l, offset, g));
                for (const auto& l : tf.minus_lines) t.minus_lines.push_back(embed_form(l, offset, g));
                t.plus_trivial += tf.plus_trivial;
                t.minus_trivial += tf.minus_trivial;
                offset += fg;
            }
            break;
        }
        case VarietySpec::Kind::Disjoint: throw std::invalid_argument("tangent_bundle needs a connected spec");
    }
    // cancel trivial summands that appear on both sides
    const int common = std::min(t.plus_trivial, t.minus_trivial);
    t.plus_trivial -= common;
    t.minus_trivial -= common;
    return t;
}

}  // namespace cobordism
