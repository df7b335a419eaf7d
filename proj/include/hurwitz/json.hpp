#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hurwitz/engine.hpp"
#include "hurwitz/verdict.hpp"

namespace hurwitz {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& partition);
Json to_json(const CandidateDatum& datum); ///< {degree, partitions}
Json to_json(const ConstellationWitness& witness);
Json to_json(const ReductionChain& chain);
Json to_json(const Certificate& certificate);

/// The verdict object: {input, degree, partitions, status, method, reasons,
/// certificate?, stats}. An unknown verdict's limit is reported as a reason.
/// `input` defaults to the canonical rendering.
Json verdict_json(const Verdict& verdict, const CandidateDatum& datum, std::string_view input = {},
                  bool zero_millis = false);

/// One scan line: the pipeline verdict (or the oracle's in oracle-only mode)
/// plus "oracle_status".
Json scan_row_json(const ScanRow& row, bool zero_millis = false);

/// Multi-line human-readable form used by `check --format text`.
std::string verdict_text(const Verdict& verdict, const CandidateDatum& datum);

} // namespace hurwitz
