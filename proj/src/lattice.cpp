#include "cobordism/lattice.hpp"

#include <stdexcept>

namespace cobordism {

IntegerLattice::IntegerLattice(std::size_t dim, const std::vector<IntVector>& generators) : dim_(dim) {
    for (const auto& g : generators) add(g);
}

std::size_t IntegerLattice::pivot(const IntVector& row) {
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (row[j] != 0) return j;
    }
    return row.size();
}

void IntegerLattice::reduce_above(std::size_t r) {
    const std::size_t p = pivot(rows_[r]);
    const mpz_class& piv = rows_[r][p];
    for (std::size_t i = 0; i < r; ++i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows_[i][p].get_mpz_t(), piv.get_mpz_t());
        if (q == 0) continue;
        for (std::size_t j = p; j < dim_; ++j) rows_[i][j] -= q * rows_[r][j];
    }
}

void IntegerLattice::add(IntVector v) {
    if (v.size() != dim_) throw std::invalid_argument("lattice vector has wrong length");
    std::size_t r = 0;
    while (true) {
        const std::size_t p = pivot(v);
        if (p == dim_) break;  // reduced to zero
        while (r < rows_.size() && pivot(rows_[r]) < p) ++r;
        if (r == rows_.size() || pivot(rows_[r]) > p) {
            if (v[p] < 0) {
                for (auto& x : v) x = -x;
            }
            rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(r), std::move(v));
            break;
        }
        // same pivot column: replace the pair (row, v) by (gcd row, remainder) via extended gcd
        IntVector& row = rows_[r];
        mpz_class g;
        mpz_class s;
        mpz_class t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), row[p].get_mpz_t(), v[p].get_mpz_t());
        const mpz_class a = row[p] / g;
        const mpz_class b = v[p] / g;
        IntVector combined(dim_);
        IntVector remainder(dim_);
        for (std::size_t j = p; j < dim_; ++j) {
            combined[j] = s * row[j] + t * v[j];
            remainder[j] = a * v[j] - b * row[j];
        }
        if (combined[p] < 0) {
            for (auto& x : combined) x = -x;
        }
        row = std::move(combined);
        v = std::move(remainder);
        ++r;
    }
    // one left-to-right pass restores the reduced form above every pivot
    for (std::size_t k = 0; k < rows_.size(); ++k) reduce_above(k);
}

bool IntegerLattice::member(const IntVector& v) const {
    if (v.size() != dim_) throw std::invalid_argument("lattice vector has wrong length");
    IntVector w = v;
    for (const auto& row : rows_) {
        const std::size_t p = pivot(row);
        for (std::size_t j = 0; j < p; ++j) {
            if (w[j] != 0) return false;
        }
        if (!mpz_divisible_p(w[p].get_mpz_t(), row[p].get_mpz_t())) return false;
        const mpz_class q = w[p] / row[p];
        for (std::size_t j = p; j < dim_; ++j) w[j] -= q * row[j];
    }
    for (const auto& x : w) {
        if (x != 0) return false;
    }
    return true;
}

bool IntegerLattice::member_mod(const IntVector& v, const mpz_class& m) const {
    if (m == 0) return member(v);
    IntegerLattice extended = *this;
    for (std::size_t j = 0; j < dim_; ++j) {
        IntVector e(dim_);
        e[j] = m;
        extended.add(std::move(e));
    }
    return extended.member(v);
}

IntegerLattice IntegerLattice::scaled(const mpz_class& m) const {
    IntegerLattice out(dim_);
    for (const auto& row : rows_) {
        IntVector r = row;
        for (auto& x : r) x *= m;
        out.add(std::move(r));
    }
    return out;
}

}  // namespace cobordism
