#include "hurwitz/families.hpp"

#include <algorithm>

namespace hurwitz {

namespace {

Partition twos_with(Int k, Int z) {
    std::vector<Int> parts(static_cast<std::size_t>(k - z), 2);
    parts.push_back(2 * z);
    return Partition(std::move(parts));
}

/// Reads z from a partition of the form [2^(k-z), 2z] with total 2k.
std::optional<Int> twos_parameter(const Partition& p, Int k) {
    if (p.total() != 2 * k) return std::nullopt;
    std::vector<Int> others;
    for (Int part : p.parts()) {
        if (part % 2 != 0) return std::nullopt;
        if (part != 2) others.push_back(part);
    }
    if (others.empty()) return static_cast<Int>(p.length()) == k ? std::optional<Int>(1) : std::nullopt;
    if (others.size() != 1) return std::nullopt;
    return others.front() / 2;
}

} // namespace

CandidateDatum songxu_datum(const SongXuShape& shape) {
    const auto& [k, x, y, first] = shape;
    if (k < 3 || x < 1 || y < 1 || k < std::max(x, y)) {
        throw DomainError("songxu: need k >= 3, x, y >= 1 and k >= max(x, y)");
    }
    if (static_cast<Int>(first.length()) != x + y || first.total() != 2 * k) {
        throw DomainError("songxu: first partition " + first.render() + " must have " + std::to_string(x + y) +
                          " parts summing to " + std::to_string(2 * k));
    }
    return CandidateDatum(2 * k, {first, twos_with(k, y), twos_with(k, x)});
}

Verdict songxu_decide(const SongXuShape& shape) {
    songxu_datum(shape); // validates
    const auto& [k, x, y, first] = shape;
    Verdict v;
    v.method = "songxu";
    if (decompose(first, 2, k).empty()) {
        v.status = Status::exceptional;
        v.reasons.push_back({"songxu.split", first.render() + " does not split into two partitions of " +
                                                 std::to_string(k),
                             0, first.largest(), k, 2, 1, k});
        return v;
    }
    const Int g = first.gcd();
    const Int bound = std::max(x, y);
    // k / g >= max(x, y) without rounding
    if (k < bound * g) {
        v.status = Status::exceptional;
        v.reasons.push_back({"songxu.gcd",
                             "k/gcd = " + std::to_string(k) + "/" + std::to_string(g) + " < max(x,y) = " +
                                 std::to_string(bound),
                             0, k, bound * g, 2, g, k});
        return v;
    }
    v.status = Status::realizable;
    return v;
}

std::optional<SongXuShape> match_songxu(const CandidateDatum& datum) {
    if (datum.size() != 3 || datum.degree() % 2 != 0) return std::nullopt;
    const Int k = datum.degree() / 2;
    if (k < 3) return std::nullopt;
    for (std::size_t f = 0; f < 3; ++f) {
        const auto& a = datum[(f + 1) % 3];
        const auto& b = datum[(f + 2) % 3];
        auto y = twos_parameter(a, k);
        auto x = twos_parameter(b, k);
        if (!x || !y) continue;
        if (static_cast<Int>(datum[f].length()) != *x + *y) continue;
        SongXuShape shape{k, *x, *y, datum[f]};
        if (songxu_datum(shape) == datum) return shape;
    }
    return std::nullopt;
}

FamilyInstance family_generate(int example_id, Int s, Int k, const std::vector<Partition>& free) {
    if (s < 2 || k < 2) throw DomainError("family: need s >= 2 and k >= 2");
    if (example_id < 0 || example_id > 5) throw DomainError("family: example id must be 1..5 or 0 (general)");
    const auto t = static_cast<Int>(free.size());
    if (example_id > 0 && t != example_id + 1) {
        throw DomainError("family: example " + std::to_string(example_id) + " takes " +
                          std::to_string(example_id + 1) + " free partitions");
    }
    if (t < 1) throw DomainError("family: at least one free partition required");
    const Int d = s * k;
    Int lengths = 0;
    bool big_part = false;
    for (const auto& p : free) {
        if (p.total() != d || p.trivial()) {
            throw DomainError("family: " + p.render() + " is not a nontrivial partition of " + std::to_string(d));
        }
        lengths += static_cast<Int>(p.length());
        big_part = big_part || p.largest() >= k + 1;
    }
    const Int budget = (t * s - 2) * k + 2;
    if (lengths != budget) {
        throw DomainError("family: length budget (ts-2)k+2 = " + std::to_string(budget) + " not met (got " +
                          std::to_string(lengths) + ")");
    }
    std::vector<Partition> parts = free;
    Partition block(std::vector<Int>(static_cast<std::size_t>(k), s));
    parts.push_back(block);
    parts.push_back(block);
    FamilyInstance out{CandidateDatum(d, std::move(parts)), big_part, big_part ? "cor1.parts" : ""};
    if (rh_defect(out.datum) != 0) throw std::logic_error("family instance with nonzero RH defect");
    return out;
}

std::vector<FamilyInstance> family_enumerate(Int s, Int k, Int t) {
    if (s < 2 || k < 2 || t < 1) throw DomainError("family: need s >= 2, k >= 2, t >= 1");
    std::vector<FamilyInstance> out;
    const Int budget = (t * s - 2) * k + 2;
    for_each_length_exact(s * k, static_cast<std::size_t>(t), budget, [&](const std::vector<Partition>& free) {
        bool big = std::any_of(free.begin(), free.end(), [&](const Partition& p) { return p.largest() >= k + 1; });
        if (big) out.push_back(family_generate(0, s, k, free));
        return true;
    });
    return out;
}

} // namespace hurwitz
