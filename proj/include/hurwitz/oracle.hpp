#pragma once

#include <cstdint>

#include "hurwitz/partition.hpp"
#include "hurwitz/verdict.hpp"

namespace hurwitz {

/// Largest degree the search kernels can represent.
inline constexpr int kMaxSearchDegree = 32;

struct SearchBudget {
    Int max_degree = 12;
    std::uint64_t max_nodes = 100'000'000;
    /// Single-threaded, chunks in order: the first witness found is reproducible.
    bool deterministic = true;
    /// Worker threads for the parallel search; 0 lets OpenMP decide.
    int jobs = 0;
};

/// Exhaustive monodromy search: realizable with a witness, exceptional after
/// a complete search, or unknown when a limit is hit.
///
/// One factor (largest conjugacy class) is fixed to its canonical
/// representative, the factor with the next largest class is forced as the
/// inverse of the running product, and the rest are backtracked one cycle at
/// a time. The witness is returned in the datum's partition order.
/// Throws DomainError if rh_defect(datum) != 0.
Verdict oracle_decide(const CandidateDatum& datum, const SearchBudget& budget = {});

/// Zero-optimization reference: enumerates every permutation of every class
/// by filtering S_d, tries all tuples in datum order with the last factor
/// forced. Only practical for d <= 7. Kept for cross-checking the kernel.
Verdict reference_decide(const CandidateDatum& datum, std::uint64_t max_tuples = 2'000'000'000ULL);

/// log of d! / prod(part) / prod(multiplicity!).
double log_class_size(const Partition& type);

} // namespace hurwitz
