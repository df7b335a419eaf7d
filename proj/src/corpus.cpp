#include "hurwitz/corpus.hpp"

#include <sstream>

#include <json.hpp>

namespace hurwitz {

std::vector<CorpusEntry> load_corpus(std::string_view jsonl) {
    std::vector<CorpusEntry> out;
    std::istringstream in{std::string(jsonl)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::string where = "corpus line " + std::to_string(number) + ": ";
        CorpusEntry e;
        try {
            auto j = nlohmann::json::parse(line);
            e.datum_text = j.at("datum_text").get<std::string>();
            e.expected = status_from_string(j.at("expected").get<std::string>());
            e.source = j.at("source").get<std::string>();
            e.filter_only = j.value("filter_only", false);
            e.datum = parse_datum(e.datum_text);
        } catch (const std::exception& ex) {
            throw DomainError(where + ex.what());
        }
        if (e.expected == Status::unknown) throw DomainError(where + "expected must be realizable or exceptional");
        if (rh_defect(e.datum) != 0) throw DomainError(where + e.datum_text + " has nonzero RH defect");
        out.push_back(std::move(e));
    }
    return out;
}

bool CorpusOutcome::ok() const {
    if (verdict.status != entry->expected || !verified) return false;
    return !entry->filter_only || verdict.method.rfind("filter:", 0) == 0;
}

std::vector<CorpusOutcome> run_corpus(const std::vector<CorpusEntry>& entries, const EngineOptions& options) {
    Engine engine(options);
    std::vector<CorpusOutcome> out;
    for (const auto& e : entries) {
        CorpusOutcome o;
        o.entry = &e;
        o.verdict = engine.decide(e.datum);
        o.verified = verify(o.verdict, e.datum, options);
        out.push_back(std::move(o));
    }
    return out;
}

} // namespace hurwitz
