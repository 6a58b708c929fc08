#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "integer.hpp"

namespace charnum {

/// A weakly decreasing tuple of positive integers. The empty partition
/// (weight 0) is a valid value.
///
/// Ordering is lexicographic on the part tuples, so among partitions of equal
/// weight `(2) > (1,1)` and `(3,1) > (2,2)`. This is the canonical order used
/// for every vector and matrix index in the library, listed from largest to
/// smallest.
class Partition {
public:
    Partition() = default;

    /// Parts must already be weakly decreasing and positive.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] < 1)
                throw error("partition parts must be positive");
            if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
                throw error("partition parts must be weakly decreasing");
        }
        weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts arbitrary positive parts into canonical form.
    static Partition from_parts(std::vector<int> parts)
    {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t k) const { return parts_[k]; }

    /// Transposed Young diagram.
    Partition conjugate() const
    {
        std::vector<int> out;
        if (!parts_.empty()) {
            out.resize(static_cast<std::size_t>(parts_.front()), 0);
            for (int p : parts_)
                for (int k = 0; k < p; ++k)
                    ++out[static_cast<std::size_t>(k)];
        }
        return Partition(std::move(out));
    }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (k)
                s += ',';
            s += std::to_string(parts_[k]);
        }
        return s + ")";
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// All partitions of n in strictly descending canonical order.
inline std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0)
        throw error("cannot enumerate partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Position lookup for the canonical order of partitions of a fixed weight.
class PartitionIndex {
public:
    explicit PartitionIndex(int n) : n_(n), parts_(enumerate_partitions(n))
    {
        for (std::size_t k = 0; k < parts_.size(); ++k)
            pos_.emplace(parts_[k], k);
    }

    int weight() const noexcept { return n_; }
    std::size_t size() const noexcept { return parts_.size(); }
    const Partition& operator[](std::size_t k) const { return parts_[k]; }
    const std::vector<Partition>& partitions() const noexcept { return parts_; }

    std::size_t position(const Partition& p) const
    {
        auto it = pos_.find(p);
        if (it == pos_.end())
            throw error("partition " + p.to_string() + " is not a partition of " + std::to_string(n_));
        return it->second;
    }

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

private:
    int n_;
    std::vector<Partition> parts_;
    std::map<Partition, std::size_t> pos_;
};

inline void require_same_weight(const Partition& a, const Partition& b, const char* what)
{
    if (a.weight() != b.weight())
        throw error(std::string(what) + ": partitions " + a.to_string() + " and " + b.to_string()
                    + " have different weights");
}

/// Canonical comparison; only defined between partitions of equal weight.
inline std::strong_ordering lex_compare(const Partition& a, const Partition& b)
{
    require_same_weight(a, b, "lex_compare");
    return a <=> b;
}

/// Multiset union of parts.
inline Partition partition_union(const Partition& a, const Partition& b)
{
    std::vector<int> parts;
    parts.reserve(a.length() + b.length());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(parts), std::greater<>());
    return Partition(std::move(parts));
}

/// True iff the parts of `fine` can be grouped into blocks whose sums are the
/// parts of `coarse`. Exhaustive backtracking over block assignments.
inline bool is_refinement(const Partition& fine, const Partition& coarse)
{
    require_same_weight(fine, coarse, "is_refinement");
    std::vector<int> capacity = coarse.parts();
    const auto& parts = fine.parts();

    std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
        if (k == parts.size())
            return true;
        for (std::size_t b = 0; b < capacity.size(); ++b) {
            if (capacity[b] < parts[k])
                continue;
            // Blocks with equal remaining capacity are interchangeable.
            bool seen = false;
            for (std::size_t e = 0; e < b; ++e)
                if (capacity[e] == capacity[b]) {
                    seen = true;
                    break;
                }
            if (seen)
                continue;
            capacity[b] -= parts[k];
            bool ok = place(k + 1);
            capacity[b] += parts[k];
            if (ok)
                return true;
        }
        return false;
    };
    return place(0);
}

/// All distinct ordered tuples (I_1..I_q) with weight(I_l) = shape[l] whose
/// multiset union is I.
inline std::vector<std::vector<Partition>> splittings(const Partition& whole, const std::vector<int>& shape)
{
    int total = 0;
    for (int j : shape) {
        if (j < 0)
            throw error("splittings: shape entries must be nonnegative");
        total += j;
    }
    if (total != whole.weight())
        throw error("splittings: shape weight " + std::to_string(total) + " differs from partition weight "
                    + std::to_string(whole.weight()));

    // Distinct part values, descending, with multiplicities.
    std::vector<int> values;
    std::vector<int> available;
    for (int p : whole.parts()) {
        if (values.empty() || values.back() != p) {
            values.push_back(p);
            available.push_back(0);
        }
        ++available.back();
    }

    std::vector<std::vector<Partition>> out;
    std::vector<Partition> current;
    std::vector<int> chosen;

    // Chooses a sub-multiset of the available parts summing to `target`, one
    // distinct value at a time, then recurses into the next component.
    std::function<void(std::size_t)> component;
    std::function<void(std::size_t, std::size_t, int)> choose = [&](std::size_t l, std::size_t v, int target) {
        if (target == 0) {
            current.push_back(Partition(chosen));
            component(l + 1);
            current.pop_back();
            return;
        }
        if (v == values.size())
            return;
        int max_take = std::min(available[v], target / values[v]);
        for (int take = max_take; take >= 0; --take) {
            available[v] -= take;
            chosen.insert(chosen.end(), static_cast<std::size_t>(take), values[v]);
            choose(l, v + 1, target - take * values[v]);
            chosen.resize(chosen.size() - static_cast<std::size_t>(take));
            available[v] += take;
        }
    };
    component = [&](std::size_t l) {
        if (l == shape.size()) {
            out.push_back(current);
            return;
        }
        auto saved = std::move(chosen);
        chosen.clear();
        choose(l, 0, shape[l]);
        chosen = std::move(saved);
    };
    component(0);
    return out;
}

} // namespace charnum
