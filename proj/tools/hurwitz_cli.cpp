// hurwitz: decide, scan and generate branching data for covers S^2 -> S^2.
//
// Exit codes: 0 decision completed, 1 usage or parse error, 2 internal error,
// 3 an --expect (or family/corpus expectation) was not met, 4 scan disagreement.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hurwitz/corpus.hpp"
#include "hurwitz/engine.hpp"
#include "hurwitz/families.hpp"
#include "hurwitz/json.hpp"

using namespace hurwitz;

namespace {

constexpr int kUsage = 1;
constexpr int kInternal = 2;
constexpr int kExpectMismatch = 3;
constexpr int kDisagreement = 4;

struct BudgetFlags {
    Int max_degree = 12;
    std::uint64_t max_nodes = 100'000'000;
    int jobs = 0;
    bool deterministic = false;
    bool strict = false;

    void attach(CLI::App* app) {
        app->add_option("--max-degree", max_degree, "Largest degree the exhaustive search will attempt")
            ->check(CLI::Range(Int{1}, Int{kMaxSearchDegree}));
        app->add_option("--max-nodes", max_nodes, "Search node budget per datum");
        app->add_option("--jobs", jobs, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
        app->add_flag("--deterministic", deterministic, "Serial search and reproducible output");
        app->add_flag("--strict-corollaries", strict, "Use strict length bounds in the corollary filters");
    }

    EngineOptions options() const {
        EngineOptions o;
        o.budget.max_degree = max_degree;
        o.budget.max_nodes = max_nodes;
        o.budget.jobs = jobs;
        o.budget.deterministic = deterministic;
        o.strict_corollaries = strict;
        return o;
    }
};

int run_check(const std::string& text, const std::string& format, const std::string& expect,
              const BudgetFlags& flags) {
    const CandidateDatum datum = parse_datum(text);
    Engine engine(flags.options());
    const Verdict v = engine.decide(datum);
    if (format == "json") {
        std::cout << verdict_json(v, datum, text, flags.deterministic).dump(2) << "\n";
    } else {
        std::cout << verdict_text(v, datum);
    }
    if (!expect.empty() && to_string(v.status) != expect) {
        std::cerr << "expected " << expect << ", got " << to_string(v.status) << "\n";
        return kExpectMismatch;
    }
    return 0;
}

int run_scan(Int d_max, std::size_t n_max, ScanMode mode, const std::string& out_path, const BudgetFlags& flags) {
    const ScanReport report = scan(d_max, n_max, flags.options(), mode);

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot open " + out_path);
    }
    std::ostream& jsonl = out_path.empty() ? std::cout : file;
    std::ostream& summary = out_path.empty() ? std::cerr : std::cout;
    for (const auto& row : report.rows) jsonl << scan_row_json(row, flags.deterministic).dump() << "\n";

    summary << "  d  n  realizable  exceptional  unknown\n";
    for (const auto& [key, cell] : report.counts) {
        summary << std::setw(3) << key.first << std::setw(3) << key.second << std::setw(12) << cell.realizable
                << std::setw(13) << cell.exceptional << std::setw(9) << cell.unknown << "\n";
    }
    summary << report.rows.size() << " candidates, " << report.disagreements.size() << " disagreements\n";
    for (auto i : report.disagreements) {
        const auto& row = report.rows[i];
        summary << "DISAGREE " << row.datum.render() << ": pipeline " << to_string(row.pipeline->status) << " ("
                << row.pipeline->method << "), oracle " << to_string(row.oracle->status) << "\n";
    }
    for (const auto& d : report.strict_audit) summary << "strict-audit " << d.render() << "\n";
    return report.disagreements.empty() ? 0 : kDisagreement;
}

int run_family(Int s, Int k, Int t, bool emit_verdicts, const BudgetFlags& flags) {
    const auto rows = family_enumerate(s, k, t);
    if (rows.empty()) {
        std::cerr << "warning: no data for s=" << s << ", k=" << k << ", t=" << t
                  << " (length budget (ts-2)k+2 = " << (t * s - 2) * k + 2
                  << " cannot be met with a part >= k+1)\n";
        return 0;
    }
    Engine engine(flags.options());
    int rc = 0;
    for (const auto& inst : rows) {
        std::cout << inst.datum.render();
        if (emit_verdicts) {
            const Verdict v = engine.decide(inst.datum);
            std::cout << "  " << to_string(v.status) << " (" << v.method << ")";
            if (inst.expect_exceptional && !v.exceptional()) rc = kExpectMismatch;
        }
        std::cout << "\n";
    }
    return rc;
}

int run_corpus_cmd(const BudgetFlags& flags) {
    const auto entries = load_corpus(embedded_corpus());
    const auto outcomes = run_corpus(entries, flags.options());
    std::size_t failed = 0;
    for (const auto& o : outcomes) {
        const bool ok = o.ok();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "ok    " : "FAIL  ") << o.entry->datum_text << "  " << to_string(o.verdict.status) << " ("
                  << o.verdict.method << ")";
        if (!ok) {
            std::cout << "  expected " << to_string(o.entry->expected) << (o.entry->filter_only ? " by filter" : "")
                      << (o.verified ? "" : ", certificate did not verify");
        }
        std::cout << "  # " << o.entry->source << "\n";
    }
    std::cout << outcomes.size() - failed << "/" << outcomes.size() << " corpus entries match\n";
    return failed == 0 ? 0 : kExpectMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decision engine for the Hurwitz existence problem on S^2 -> S^2"};
    app.require_subcommand(1);

    BudgetFlags flags;

    auto* check = app.add_subcommand("check", "Decide one datum, e.g. \"4: [3,1] [2,2] [2,2]\"");
    std::string datum_text;
    std::string format = "text";
    std::string expect;
    check->add_option("datum", datum_text, "Branching datum")->required();
    check->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    check->add_option("--expect", expect, "Exit 3 unless the status matches")
        ->check(CLI::IsMember({"realizable", "exceptional", "unknown"}));
    flags.attach(check);

    auto* scan_cmd = app.add_subcommand("scan", "Decide every candidate up to a degree and branch-point count");
    Int d_max = 0;
    std::size_t n_max = 0;
    std::string out_path;
    bool oracle_only = false;
    bool pipeline_only = false;
    scan_cmd->add_option("--degree-max", d_max, "Largest degree")->required()->check(CLI::Range(Int{2}, Int{64}));
    scan_cmd->add_option("--branch-points-max", n_max, "Largest number of branch points")
        ->required()
        ->check(CLI::Range(std::size_t{1}, std::size_t{16}));
    auto* oracle_flag = scan_cmd->add_flag("--oracle-only", oracle_only, "Skip the pipeline");
    scan_cmd->add_flag("--pipeline-only", pipeline_only, "Skip the oracle")->excludes(oracle_flag);
    scan_cmd->add_option("--out", out_path, "JSONL output file (default: stdout)");
    flags.attach(scan_cmd);

    auto* family = app.add_subcommand("family", "Generate {free_1..free_t, [s^k], [s^k]} data with a part >= k+1");
    Int s = 0;
    Int k = 0;
    Int t = 0;
    bool emit_verdicts = false;
    family->add_option("--s", s, "Part size of the paired partitions")->required()->check(CLI::Range(Int{2}, Int{64}));
    family->add_option("--k", k, "Length of the paired partitions")->required()->check(CLI::Range(Int{2}, Int{64}));
    family->add_option("--t", t, "Number of free partitions")->required()->check(CLI::Range(Int{1}, Int{16}));
    family->add_flag("--emit-verdicts", emit_verdicts, "Decide each generated datum");
    flags.attach(family);

    auto* corpus = app.add_subcommand("corpus", "Regression corpus of known results");
    corpus->require_subcommand(1);
    auto* corpus_run = corpus->add_subcommand("run", "Decide every corpus entry and compare");
    auto* corpus_list = corpus->add_subcommand("list", "Print the embedded corpus");
    flags.attach(corpus_run);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        if (*check) return run_check(datum_text, format, expect, flags);
        if (*scan_cmd) {
            const ScanMode mode = oracle_only ? ScanMode::oracle_only
                                  : pipeline_only ? ScanMode::pipeline_only
                                                  : ScanMode::both;
            return run_scan(d_max, n_max, mode, out_path, flags);
        }
        if (*family) return run_family(s, k, t, emit_verdicts, flags);
        if (*corpus_list) {
            std::cout << embedded_corpus();
            return 0;
        }
        if (*corpus_run) return run_corpus_cmd(flags);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
