#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/engine.hpp"

namespace hurwitz {

struct CorpusEntry {
    std::string datum_text;
    Status expected = Status::unknown; ///< realizable or exceptional
    std::string source;
    /// Decided by a filter alone; the oracle is not expected to reach it.
    bool filter_only = false;
    CandidateDatum datum;
};

/// The JSONL corpus compiled into the library.
std::string_view embedded_corpus();

/// Parses and validates JSONL: every datum parses, has zero RH defect, and
/// expects realizable or exceptional. Throws DomainError naming the line.
std::vector<CorpusEntry> load_corpus(std::string_view jsonl);

struct CorpusOutcome {
    const CorpusEntry* entry = nullptr;
    Verdict verdict;
    bool verified = false;

    /// Status as expected, verifiable, and decided by a filter when filter_only.
    bool ok() const;
};

std::vector<CorpusOutcome> run_corpus(const std::vector<CorpusEntry>& entries, const EngineOptions& options);

} // namespace hurwitz
