#pragma once

#include <atomic>
#include <functional>
#include <map>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hurwitz/oracle.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/verdict.hpp"

namespace hurwitz {

struct EngineOptions {
    SearchBudget budget;
    bool strict_corollaries = false;
    bool memoize = true;
};

/// validation -> base cases -> filters -> Song-Xu family -> reductions -> oracle.
///
/// decide() is re-entrant; the memo table takes a shared lock for lookups and
/// an exclusive lock for inserts.
class Engine {
public:
    explicit Engine(EngineOptions options = {});

    Verdict decide(const CandidateDatum& datum);
    const EngineOptions& options() const noexcept { return options_; }
    std::size_t cache_size() const;

private:
    struct Context {
        std::uint64_t nodes = 0;
        std::uint64_t cache_hits = 0;
    };

    Verdict decide_cached(const CandidateDatum& datum, Context& ctx);
    Verdict decide_uncached(const CandidateDatum& datum, Context& ctx);
    /// Reductions then oracle; the fallback shared by the general path and
    /// the Song-Xu certificate lookup.
    Verdict decide_structural(const CandidateDatum& datum, Context& ctx);

    EngineOptions options_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, Verdict> memo_;
};

/// Re-checks a verdict from scratch: witnesses and chains are replayed,
/// filter and closed-form verdicts re-derived, oracle and reduction
/// exceptional verdicts re-decided by a fresh engine.
bool verify(const Verdict& verdict, const CandidateDatum& datum, const EngineOptions& options = {});

/// The witness and chain checks on their own.
bool verify_certificate(const Certificate& certificate, const CandidateDatum& datum);

enum class ScanMode { both, oracle_only, pipeline_only };

struct ScanRow {
    CandidateDatum datum;
    std::optional<Verdict> pipeline;
    std::optional<Verdict> oracle;
    bool weak_flagged = false;
    bool strict_flagged = false;

    /// realizable on one side, exceptional on the other
    bool disagrees() const;
};

struct ScanCell {
    std::size_t realizable = 0;
    std::size_t exceptional = 0;
    std::size_t unknown = 0;
};

struct ScanReport {
    std::vector<ScanRow> rows; ///< canonical order: degree, then n, then candidate order
    std::vector<std::size_t> disagreements;
    std::map<std::pair<Int, std::size_t>, ScanCell> counts;
    /// Realizable by the oracle, flagged by strict corollaries, passed by weak ones.
    std::vector<CandidateDatum> strict_audit;
};

/// Every candidate with 2 <= d <= d_max and 1 <= n <= n_max, decided by the
/// pipeline and/or the oracle. Parallel across candidates unless the budget
/// is deterministic; rows come back in canonical order either way.
ScanReport scan(Int d_max, std::size_t n_max, const EngineOptions& options, ScanMode mode = ScanMode::both);

} // namespace hurwitz
