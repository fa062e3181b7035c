#include "cobordism/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace cobordism {

namespace {

std::string pack(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    std::string packed;
    packed.reserve(parts.size());
    for (int p : parts) {
        if (p <= 0 || p > 255) {
            throw std::invalid_argument("partition parts must lie in [1, 255], got " + std::to_string(p));
        }
        packed.push_back(static_cast<char>(p));
    }
    return packed;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(pack(std::vector<int>(parts))) {}

Partition::Partition(std::vector<int> parts) : parts_(pack(std::move(parts))) {}

Partition Partition::single(int n) {
    if (n == 0) return {};
    return Partition(std::vector<int>{n});
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

int Partition::weight() const {
    int w = 0;
    for (char c : parts_) w += static_cast<unsigned char>(c);
    return w;
}

std::vector<int> Partition::parts() const {
    std::vector<int> out;
    out.reserve(parts_.size());
    for (char c : parts_) out.push_back(static_cast<unsigned char>(c));
    return out;
}

Partition Partition::merged(const Partition& other) const {
    Partition out;
    out.parts_.resize(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), out.parts_.begin(),
               [](char a, char b) { return static_cast<unsigned char>(a) > static_cast<unsigned char>(b); });
    return out;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (parts_.empty()) return {};
    const int largest = (*this)[0];
    for (int k = 1; k <= largest; ++k) {
        int count = 0;
        for (char c : parts_) count += static_cast<unsigned char>(c) >= k ? 1 : 0;
        conj.push_back(count);
    }
    return Partition(std::move(conj));
}

int Partition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), static_cast<char>(k)));
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string((*this)[i]);
    }
    return s + ")";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return a.size() <=> b.size();
}

std::vector<Partition> partitions_of(int n, int max_part) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, max_part);
    return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

std::size_t partition_count(int n) {
    if (n < 0) return 0;
    std::vector<std::size_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k) {
        for (int m = k; m <= n; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - k)];
    }
    return p[static_cast<std::size_t>(n)];
}

std::vector<Partition> sub_partitions(const Partition& alpha) {
    // distinct parts with multiplicities
    std::vector<std::pair<int, int>> groups;
    for (int part : alpha.parts()) {
        if (!groups.empty() && groups.back().first == part) {
            ++groups.back().second;
        } else {
            groups.emplace_back(part, 1);
        }
    }
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(std::size_t)> rec = [&](std::size_t g) {
        if (g == groups.size()) {
            out.emplace_back(current);
            return;
        }
        for (int take = 0; take <= groups[g].second; ++take) {
            for (int i = 0; i < take; ++i) current.push_back(groups[g].first);
            rec(g + 1);
            for (int i = 0; i < take; ++i) current.pop_back();
        }
    };
    rec(0);
    return out;
}

Partition difference(const Partition& alpha, const Partition& gamma) {
    std::vector<int> rest = alpha.parts();
    for (int part : gamma.parts()) {
        auto it = std::find(rest.begin(), rest.end(), part);
        if (it == rest.end()) throw std::invalid_argument("partition difference: not a sub-multiset");
        rest.erase(it);
    }
    return Partition(std::move(rest));
}

}  // namespace cobordism
