#include "cobordism/symmfunc.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace cobordism {

namespace {

using Exps = std::vector<int>;

// Number of 0-1 matrices with row sums `rows` and column sums `cols`, i.e. the
// coefficient of x^cols in e_rows.
struct ZeroOneCounter {
    std::vector<int> rows;
    std::map<std::pair<std::size_t, Exps>, mpz_class> memo;

    mpz_class count(std::size_t r, const Exps& cols) {
        if (r == rows.size()) {
            for (int c : cols) {
                if (c != 0) return 0;
            }
            return 1;
        }
        const auto key = std::make_pair(r, cols);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        mpz_class total = 0;
        Exps next = cols;
        choose(r, cols, next, 0, rows[r], total);
        memo.emplace(key, total);
        return total;
    }

    void choose(std::size_t r, const Exps& cols, Exps& next, std::size_t from, int left, mpz_class& total) {
        if (left == 0) {
            Exps sorted = next;
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            total += count(r + 1, sorted);
            return;
        }
        for (std::size_t j = from; j < cols.size(); ++j) {
            if (next[j] == 0) continue;
            --next[j];
            choose(r, cols, next, j + 1, left - 1, total);
            ++next[j];
        }
    }
};

// coefficient of m_lambda in e_mu
mpz_class e_to_m(const Partition& mu, const Partition& lambda) {
    ZeroOneCounter z;
    z.rows = mu.parts();
    const Exps cols = lambda.parts();
    return z.count(0, cols);
}

// m_alpha in e_1..e_n by elimination from the lex-largest monomial down;
// e_{lambda'} has leading monomial m_lambda
EPoly compute_q(const Partition& alpha, int n) {
    const int w = alpha.weight();
    std::map<Partition, mpz_class> rest{{alpha, 1}};
    EPoly out;
    while (!rest.empty()) {
        const auto [lead, c] = *rest.rbegin();
        const Partition conj = lead.conjugate();
        for (const Partition& lam : partitions_of(w)) {
            if (static_cast<int>(lam.size()) > n) continue;
            const mpz_class v = e_to_m(conj, lam);
            if (v == 0) continue;
            mpz_class& slot = rest[lam];
            slot -= c * v;
            if (slot == 0) rest.erase(lam);
        }
        out[conj] += c;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

std::mutex q_mutex;
std::map<std::pair<Partition, int>, EPoly> q_cache;

std::mutex lambda_mutex;
std::map<Partition, std::map<Partition, mpz_class>> lambda_cache;

}  // namespace

EPoly epoly_mul(const EPoly& a, const EPoly& b) {
    EPoly r;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            const Partition m = ma.merged(mb);
            mpz_class& slot = r[m];
            slot += ca * cb;
            if (slot == 0) r.erase(m);
        }
    }
    return r;
}

EPoly q_alpha(const Partition& alpha, int n_vars) {
    if (n_vars < static_cast<int>(alpha.size())) throw std::invalid_argument("q_alpha: too few variables");
    const int n = std::max(n_vars, alpha.weight());
    const auto key = std::make_pair(alpha, n);
    {
        std::lock_guard<std::mutex> lock(q_mutex);
        auto it = q_cache.find(key);
        if (it != q_cache.end()) return it->second;
    }
    EPoly q = alpha.empty() ? EPoly{{Partition{}, 1}} : compute_q(alpha, n);
    std::lock_guard<std::mutex> lock(q_mutex);
    q_cache.emplace(key, q);
    return q;
}

EPoly q_alpha(const Partition& alpha) {
    const int w = alpha.weight();
    EPoly a = q_alpha(alpha, std::max(w, static_cast<int>(alpha.size())));
    EPoly b = q_alpha(alpha, w + 1);
    if (a != b) throw std::logic_error("Q_alpha depends on the number of variables for " + alpha.to_string());
    return a;
}

QExpansion q_expand(const EPoly& p) {
    EPoly rest = p;
    QExpansion out;
    while (!rest.empty()) {
        // the e-monomial whose conjugate is lex-largest leads; Q_{nu'} = e_nu + (smaller)
        auto lead = rest.begin();
        Partition best = lead->first.conjugate();
        for (auto it = rest.begin(); it != rest.end(); ++it) {
            Partition c = it->first.conjugate();
            if (c > best) {
                best = c;
                lead = it;
            }
        }
        const mpz_class c = lead->second;
        const EPoly q = q_alpha(best);
        for (const auto& [m, v] : q) {
            mpz_class& slot = rest[m];
            slot -= c * v;
            if (slot == 0) rest.erase(m);
        }
        out[best] += c;
    }
    return out;
}

const std::map<Partition, mpz_class>& lambda_coeffs(const Partition& alpha) {
    {
        std::lock_guard<std::mutex> lock(lambda_mutex);
        auto it = lambda_cache.find(alpha);
        if (it != lambda_cache.end()) return it->second;
    }
    std::map<Partition, mpz_class> out;
    if (alpha.empty()) {
        out[Partition{}] = 1;
    } else {
        // b_alpha-coefficient of P(E) P(-E) = 1:
        // c_alpha(E) = -sum_{gamma + delta = alpha, delta nonempty} c_gamma(E) c_delta(-E)
        for (const Partition& gamma : sub_partitions(alpha)) {
            if (gamma == alpha) continue;
            const Partition delta = difference(alpha, gamma);
            const EPoly q_delta = q_alpha(delta);
            for (const auto& [eps, lam] : lambda_coeffs(gamma)) {
                const QExpansion prod = q_expand(epoly_mul(q_alpha(eps), q_delta));
                for (const auto& [beta, c] : prod) out[beta] -= lam * c;
            }
        }
        for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    std::lock_guard<std::mutex> lock(lambda_mutex);
    return lambda_cache.emplace(alpha, std::move(out)).first->second;
}

}  // namespace cobordism
