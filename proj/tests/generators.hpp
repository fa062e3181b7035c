#pragma once

// Hand-rolled random generators for property tests. All seeds are fixed.

#include <random>
#include <vector>

#include "cobordism/ring.hpp"
#include "cobordism/series.hpp"

namespace gen {

using cobordism::Coeff;
using cobordism::Domain;
using cobordism::Monomial;
using cobordism::Partition;
using cobordism::RingElement;
using cobordism::TruncatedSeries;
using cobordism::Vars;

inline long small_int(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Coeff coeff(std::mt19937_64& rng, const Domain& d) {
    Coeff c(small_int(rng, -9, 9));
    if (d.base.kind == cobordism::BaseRing::Kind::Dyadic) c.two_exp = static_cast<int>(small_int(rng, 0, 3));
    return cobordism::base::normalize(d.base, c);
}

inline Monomial monomial(std::mt19937_64& rng, const Domain& d, int max_weight) {
    Monomial m;
    switch (d.vars) {
        case Vars::None: break;
        case Vars::B: {
            std::vector<int> parts;
            int w = static_cast<int>(small_int(rng, 0, max_weight));
            while (w > 0) {
                const int p = static_cast<int>(small_int(rng, 1, w));
                parts.push_back(p);
                w -= p;
            }
            m.b = Partition(parts);
            break;
        }
        case Vars::T: m.t = static_cast<int>(small_int(rng, 0, max_weight)); break;
        case Vars::TEps:
            m.t = static_cast<int>(small_int(rng, 0, max_weight));
            m.eps = static_cast<int>(small_int(rng, 0, 1));
            break;
    }
    return m;
}

inline RingElement element(std::mt19937_64& rng, const Domain& d, int terms = 4, int max_weight = 4) {
    RingElement r(d);
    const long n = small_int(rng, 0, terms);
    for (long i = 0; i < n; ++i) r.add_term(monomial(rng, d, max_weight), coeff(rng, d));
    return r;
}

/// Univariate series in x with the given order; coefficient of x^i has weight i-shift when homogeneous.
inline TruncatedSeries series(std::mt19937_64& rng, const Domain& d, const std::vector<std::string>& vars, int order,
                              int terms = 6) {
    TruncatedSeries s(d, vars, order);
    const long n = small_int(rng, 1, terms);
    for (long i = 0; i < n; ++i) {
        TruncatedSeries::Exponents e(vars.size());
        int budget = static_cast<int>(small_int(rng, 0, order - 1));
        for (auto& x : e) {
            x = static_cast<int>(small_int(rng, 0, budget));
            budget -= x;
        }
        s.add_term(e, element(rng, d, 2, 3));
    }
    return s;
}

inline const std::vector<Domain>& all_domains() {
    static const std::vector<Domain> domains = {
        Domain::integers(),      Domain::modular(2), Domain::modular(5),      Domain::dyadic(),
        Domain::lazard(),        Domain::lazard_mod(2), Domain::lazard_mod(3), Domain::lazard_dyadic(),
        Domain::chx(),           Domain::cha(),
    };
    return domains;
}

}  // namespace gen
