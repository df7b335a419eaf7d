#pragma once

#include <string>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

/// Two partitions of a datum whose parts are all divisible by s, with s | d.
struct StructureMatch {
    std::size_t first = 0;  ///< index into the datum, first < second
    std::size_t second = 0;
    Int s = 2;
    Int d_prime = 1;
    /// (index, gcd of parts) for every partition outside the pair, ascending index.
    std::vector<std::pair<std::size_t, Int>> others;

    friend bool operator==(const StructureMatch&, const StructureMatch&) = default;
};

/// Every pair (i, j) and every divisor s >= 2 of gcd(A_i u A_j) that also divides d.
/// Ordered by pair, then by decreasing s.
std::vector<StructureMatch> detect_structures(const CandidateDatum& datum);

/// A violated necessary condition. Filters only ever report exceptional hints;
/// an empty report list means the datum passed.
struct FilterReport {
    std::string rule;   ///< prop1.case1 .. cor3.length
    std::string detail; ///< human-readable violated inequality
    std::size_t index = 0; ///< offending partition
    Int value = 0;      ///< offending part or length
    Int bound = 0;      ///< the bound it violates
    Int s = 0;
    Int t = 1;
    Int d_prime = 0;
};

/// Divisibility constraints on a third partition's gcd given an s-pair.
std::vector<FilterReport> prop1_filter(const CandidateDatum& datum);

/// Part-size and length bounds implied by the three reduction equivalences.
/// strict = false uses length >= bound (provable); strict = true uses length > bound.
std::vector<FilterReport> corollary_filter(const CandidateDatum& datum, bool strict = false);

/// prop1 followed by weak corollaries; the first hit decides.
std::vector<FilterReport> run_filters(const CandidateDatum& datum, bool strict_corollaries = false);

/// 2 + s/t - s, scaled by t to stay in integers: t*tau(s,t) = 2t + s - st.
Int tau_numerator(Int s, Int t);

/// Divisors of n that are >= 2, descending.
std::vector<Int> divisors_desc(Int n);

} // namespace hurwitz
