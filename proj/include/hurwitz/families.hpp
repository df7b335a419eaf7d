#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/verdict.hpp"

namespace hurwitz {

/// Parameters of the three-point family
///   { first, [2^(k-y), 2y], [2^(k-x), 2x] }  of degree 2k,
/// which is realizable iff `first` splits into two partitions of k and
/// k / gcd(first) >= max(x, y).
struct SongXuShape {
    Int k = 0;
    Int x = 0;
    Int y = 0;
    Partition first;
};

/// The family datum for (k, x, y, first). Throws DomainError unless
/// k >= 3, x, y >= 1, k >= max(x, y), first has x + y parts summing to 2k.
CandidateDatum songxu_datum(const SongXuShape& shape);

/// Closed-form decision; method "songxu", no certificate.
Verdict songxu_decide(const SongXuShape& shape);

/// Recognizes a normalized three-partition datum of the family's shape.
std::optional<SongXuShape> match_songxu(const CandidateDatum& datum);

/// One generated instance of the exceptional families
///   { free_1, ..., free_t, [s^k], [s^k] }  of degree sk.
struct FamilyInstance {
    CandidateDatum datum;
    bool expect_exceptional = false; ///< true iff some free part is >= k + 1
    std::string rule;                ///< "cor1.parts" when expected exceptional
};

/// example_id 1..5 fixes t = example_id + 1 free partitions; 0 means the
/// general family with t = free.size(). Throws DomainError when the free
/// partitions' lengths miss the budget (ts - 2)k + 2 or a free partition is
/// not a nontrivial partition of sk.
FamilyInstance family_generate(int example_id, Int s, Int k, const std::vector<Partition>& free);

/// All instances for (s, k, t) whose free partitions carry a part >= k + 1.
/// Empty when the length budget cannot be met.
std::vector<FamilyInstance> family_enumerate(Int s, Int k, Int t);

} // namespace hurwitz
