#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace cobordism {

/// A weakly decreasing sequence of positive integers. Indexes the monomials
/// b_alpha = b_{alpha_1} ... b_{alpha_m} of Z[b] and the Conner-Floyd classes.
///
/// Parts are packed into bytes (each part must be < 256), so partitions of
/// moderate weight never allocate.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    /// Partition with a single part n (the empty partition when n == 0).
    static Partition single(int n);
    /// (1, ..., 1) with n parts.
    static Partition ones(int n);

    [[nodiscard]] std::size_t size() const { return parts_.size(); }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] int operator[](std::size_t i) const { return static_cast<unsigned char>(parts_[i]); }
    [[nodiscard]] int weight() const;
    [[nodiscard]] std::vector<int> parts() const;

    /// Multiset union; corresponds to b_alpha * b_beta.
    [[nodiscard]] Partition merged(const Partition& other) const;
    /// Conjugate (transposed Young diagram).
    [[nodiscard]] Partition conjugate() const;
    /// Number of parts equal to k.
    [[nodiscard]] int multiplicity(int k) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic on parts.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::string parts_;
};

/// All partitions of n, in decreasing lexicographic order ((n) first, (1,...,1) last).
std::vector<Partition> partitions_of(int n);

/// All partitions of n whose parts are at most max_part.
std::vector<Partition> partitions_of(int n, int max_part);

/// Number of partitions of n.
std::size_t partition_count(int n);

/// Distinct sub-multisets of alpha (including the empty one and alpha itself).
std::vector<Partition> sub_partitions(const Partition& alpha);

/// Multiset difference alpha \ gamma; gamma must be a sub-multiset of alpha.
Partition difference(const Partition& alpha, const Partition& gamma);

}  // namespace cobordism
