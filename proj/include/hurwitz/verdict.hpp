#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hurwitz/permutation.hpp"
#include "hurwitz/reduction.hpp"
#include "hurwitz/structure.hpp"

namespace hurwitz {

enum class Status { realizable, exceptional, unknown };

std::string to_string(Status status);
Status status_from_string(const std::string& text);

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t cache_hits = 0;
    double millis = 0.0;
};

using Certificate = std::variant<ConstellationWitness, ReductionChain>;

/// Outcome of a decision. `method` is one of: rh, base-case, filter:<rule>,
/// reduction:<thm>, oracle, songxu. `limit` is set for unknown verdicts
/// (degree-limit or budget).
struct Verdict {
    Status status = Status::unknown;
    std::string method;
    std::optional<Certificate> certificate;
    std::vector<FilterReport> reasons;
    std::string limit;
    SearchStats stats;

    bool realizable() const noexcept { return status == Status::realizable; }
    bool exceptional() const noexcept { return status == Status::exceptional; }
    bool unknown() const noexcept { return status == Status::unknown; }
};

} // namespace hurwitz
