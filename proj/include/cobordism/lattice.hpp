#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cobordism {

using IntVector = std::vector<mpz_class>;

/// A sublattice of Z^n kept in row-style Hermite normal form: rows have
/// strictly increasing pivot columns, positive pivots, and entries above each
/// pivot reduced into [0, pivot).
class IntegerLattice {
public:
    explicit IntegerLattice(std::size_t dim = 0) : dim_(dim) {}
    /// Lattice spanned by the given vectors (all of length dim).
    IntegerLattice(std::size_t dim, const std::vector<IntVector>& generators);

    void add(IntVector v);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t rank() const { return rows_.size(); }
    [[nodiscard]] const std::vector<IntVector>& basis() const { return rows_; }

    /// v in span_Z(generators).
    [[nodiscard]] bool member(const IntVector& v) const;
    /// v in span + m Z^n.
    [[nodiscard]] bool member_mod(const IntVector& v, const mpz_class& m) const;
    /// The lattice m L.
    [[nodiscard]] IntegerLattice scaled(const mpz_class& m) const;

    friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
        return a.dim_ == b.dim_ && a.rows_ == b.rows_;
    }

private:
    [[nodiscard]] static std::size_t pivot(const IntVector& row);
    void reduce_above(std::size_t r);

    std::size_t dim_;
    std::vector<IntVector> rows_;
};

}  // namespace cobordism
