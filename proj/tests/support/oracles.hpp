#pragma once

// Test-only brute-force oracles. They share no code paths with the library
// routines they check.

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz::testing {

/// Canonical text key of a multiset of groups: groups sorted descending,
/// then ordered by (size, lexicographic).
inline std::string decomposition_key(std::vector<std::vector<Int>> groups) {
    for (auto& g : groups) std::sort(g.begin(), g.end(), std::greater<>());
    std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    std::string key;
    for (const auto& g : groups) {
        key += "[";
        for (Int p : g) key += std::to_string(p) + ",";
        key += "]";
    }
    return key;
}

/// Every assignment of the parts to m labeled groups, kept when each group
/// sums to u, with labels forgotten. Assignments that overfill a group are
/// cut early; nothing else is pruned, so symmetric labelings are all visited.
inline std::set<std::string> labeled_group_oracle(const std::vector<Int>& parts, Int m, Int u) {
    std::set<std::string> out;
    std::vector<std::vector<Int>> groups(static_cast<std::size_t>(m));
    std::vector<Int> sums(groups.size(), 0);
    std::function<void(std::size_t)> place = [&](std::size_t i) {
        if (i == parts.size()) {
            if (std::all_of(sums.begin(), sums.end(), [&](Int s) { return s == u; })) {
                out.insert(decomposition_key(groups));
            }
            return;
        }
        for (std::size_t g = 0; g < groups.size(); ++g) {
            if (sums[g] + parts[i] > u) continue;
            sums[g] += parts[i];
            groups[g].push_back(parts[i]);
            place(i + 1);
            groups[g].pop_back();
            sums[g] -= parts[i];
        }
    };
    place(0);
    return out;
}

/// All partitions of n (including [1^n]), parts non-increasing.
inline void all_partitions(Int n, Int max_part, std::vector<Int>& cur, std::vector<std::vector<Int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (Int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        all_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<Int>> all_partitions(Int n) {
    std::vector<Int> cur;
    std::vector<std::vector<Int>> out;
    all_partitions(n, n, cur, out);
    return out;
}

} // namespace hurwitz::testing
