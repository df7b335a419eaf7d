#include "hurwitz/engine.hpp"

#include <chrono>
#include <exception>
#include <mutex>

#include <omp.h>
#include <stdexcept>

#include "hurwitz/families.hpp"
#include "hurwitz/reduction.hpp"
#include "hurwitz/structure.hpp"

namespace hurwitz {

std::string to_string(Status status) {
    switch (status) {
    case Status::realizable: return "realizable";
    case Status::exceptional: return "exceptional";
    case Status::unknown: return "unknown";
    }
    return "unknown";
}

Status status_from_string(const std::string& text) {
    if (text == "realizable") return Status::realizable;
    if (text == "exceptional") return Status::exceptional;
    if (text == "unknown") return Status::unknown;
    throw DomainError("unknown status '" + text + "'");
}

namespace {

Verdict make(Status status, std::string method) {
    Verdict v;
    v.status = status;
    v.method = std::move(method);
    return v;
}

FilterReport note(std::string rule, std::string detail) {
    FilterReport r;
    r.rule = std::move(rule);
    r.detail = std::move(detail);
    return r;
}

bool is_full_cycle_pair(const CandidateDatum& datum) {
    const Partition full{datum.degree()};
    return datum.size() == 2 && datum[0] == full && datum[1] == full;
}

ConstellationWitness full_cycle_witness(Int degree) {
    auto c = canonical_of_type(Partition{degree});
    return ConstellationWitness{static_cast<int>(degree), {c, inverse(c)}};
}

bool is_identity_certificate(const ConstellationWitness& w) { return w.degree == 1 && w.perms.empty(); }

} // namespace

Engine::Engine(EngineOptions options) : options_(std::move(options)) {}

std::size_t Engine::cache_size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

Verdict Engine::decide(const CandidateDatum& datum) {
    const auto start = std::chrono::steady_clock::now();
    Context ctx;
    Verdict v = decide_cached(datum, ctx);
    v.stats.nodes = ctx.nodes;
    v.stats.cache_hits = ctx.cache_hits;
    v.stats.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return v;
}

Verdict Engine::decide_cached(const CandidateDatum& datum, Context& ctx) {
    if (!options_.memoize) return decide_uncached(datum, ctx);
    const std::string key = datum.render();
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) {
            ++ctx.cache_hits;
            return it->second;
        }
    }
    Verdict v = decide_uncached(datum, ctx);
    std::unique_lock lock(mutex_);
    memo_.emplace(key, v);
    return v;
}

Verdict Engine::decide_uncached(const CandidateDatum& datum, Context& ctx) {
    if (Int defect = rh_defect(datum); defect != 0) {
        Verdict v = make(Status::exceptional, "rh");
        v.reasons.push_back(note("rh", "Riemann-Hurwitz defect " + std::to_string(defect) + " != 0"));
        return v;
    }
    switch (datum.size()) {
    case 0: {
        Verdict v = make(Status::realizable, "base-case");
        v.certificate = ConstellationWitness{1, {}};
        return v;
    }
    case 1: {
        Verdict v = make(Status::exceptional, "base-case");
        v.reasons.push_back(note("base-case", "a single branch point cannot close up"));
        return v;
    }
    case 2: {
        if (is_full_cycle_pair(datum)) {
            Verdict v = make(Status::realizable, "base-case");
            v.certificate = full_cycle_witness(datum.degree());
            return v;
        }
        Verdict v = make(Status::exceptional, "base-case");
        v.reasons.push_back(note("base-case", "two branch points force {[d],[d]}"));
        return v;
    }
    default: break;
    }

    if (auto reports = run_filters(datum, options_.strict_corollaries); !reports.empty()) {
        Verdict v = make(Status::exceptional, "filter:" + reports.front().rule);
        v.reasons = std::move(reports);
        return v;
    }

    if (auto shape = match_songxu(datum)) {
        Verdict v = songxu_decide(*shape);
        if (!v.realizable()) return v;
        Verdict rest = decide_structural(datum, ctx);
        if (rest.exceptional()) {
            throw std::logic_error("closed-form family verdict contradicts " + rest.method + " on " + datum.render());
        }
        v.certificate = std::move(rest.certificate);
        return v;
    }
    return decide_structural(datum, ctx);
}

Verdict Engine::decide_structural(const CandidateDatum& datum, Context& ctx) {
    for (const auto& plan : reduction_plans(datum)) {
        bool all_exceptional = true;
        std::size_t children = 0;
        std::optional<Verdict> found;
        const bool complete = visit_children(datum, plan, [&](const ReductionStep& step) {
            ++children;
            Verdict child = decide_cached(step.child, ctx);
            if (child.realizable() && child.certificate) {
                ReductionChain chain;
                chain.steps.push_back(step);
                if (auto* sub = std::get_if<ReductionChain>(&*child.certificate)) {
                    chain.steps.insert(chain.steps.end(), sub->steps.begin(), sub->steps.end());
                    chain.base = sub->base;
                } else {
                    const auto& w = std::get<ConstellationWitness>(*child.certificate);
                    if (!is_identity_certificate(w)) chain.base = w;
                }
                Verdict v = make(Status::realizable, "reduction:" + to_string(plan.theorem));
                v.certificate = std::move(chain);
                found = std::move(v);
                return false;
            }
            if (!child.exceptional()) all_exceptional = false;
            return true;
        });
        if (found) return *found;
        if (complete && all_exceptional) {
            Verdict v = make(Status::exceptional, "reduction:" + to_string(plan.theorem));
            v.reasons.push_back(note("reduction." + to_string(plan.theorem),
                                     std::to_string(children) + " child data, all exceptional (s=" +
                                         std::to_string(plan.match.s) + ", t=" + std::to_string(plan.t) +
                                         ", child degree " + std::to_string(plan.child_degree) + ")"));
            return v;
        }
    }

    Verdict v = oracle_decide(datum, options_.budget);
    ctx.nodes += v.stats.nodes;
    return v;
}

bool verify_certificate(const Certificate& certificate, const CandidateDatum& datum) {
    if (const auto* w = std::get_if<ConstellationWitness>(&certificate)) return check_witness(*w, datum);
    const auto& chain = std::get<ReductionChain>(certificate);
    if (chain.steps.empty() || !(chain.steps.front().parent == datum)) return false;
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const auto& step = chain.steps[i];
        try {
            if (!(replay(step) == step.parent)) return false;
        } catch (const std::exception&) {
            return false;
        }
        if (rh_defect(step.child) != 0 || step.child.degree() >= step.parent.degree()) return false;
        if (i + 1 < chain.steps.size() && !(chain.steps[i + 1].parent == step.child)) return false;
    }
    const auto& last = chain.steps.back().child;
    if (chain.base) return check_witness(*chain.base, last);
    return last.size() == 0 && last.degree() == 1;
}

bool verify(const Verdict& verdict, const CandidateDatum& datum, const EngineOptions& options) {
    const std::string& method = verdict.method;
    switch (verdict.status) {
    case Status::unknown: return !verdict.limit.empty();
    case Status::realizable:
        if (verdict.certificate) return verify_certificate(*verdict.certificate, datum);
        if (method == "songxu") {
            auto shape = match_songxu(datum);
            return shape && songxu_decide(*shape).realizable();
        }
        return false;
    case Status::exceptional: break;
    }
    if (method == "rh") return rh_defect(datum) != 0;
    if (rh_defect(datum) != 0) return false;
    if (method == "base-case") return datum.size() == 1 || (datum.size() == 2 && !is_full_cycle_pair(datum));
    if (method.rfind("filter:", 0) == 0) {
        const std::string rule = method.substr(7);
        for (const auto& r : run_filters(datum, options.strict_corollaries)) {
            if (r.rule == rule) return true;
        }
        return false;
    }
    if (method == "songxu") {
        auto shape = match_songxu(datum);
        return shape && songxu_decide(*shape).exceptional();
    }
    if (method == "oracle") return oracle_decide(datum, options.budget).exceptional();
    if (method.rfind("reduction:", 0) == 0) {
        EngineOptions fresh = options;
        fresh.memoize = false;
        return Engine(fresh).decide(datum).exceptional();
    }
    return false;
}

bool ScanRow::disagrees() const {
    if (!pipeline || !oracle) return false;
    return (pipeline->realizable() && oracle->exceptional()) || (pipeline->exceptional() && oracle->realizable());
}

ScanReport scan(Int d_max, std::size_t n_max, const EngineOptions& options, ScanMode mode) {
    ScanReport report;
    for (Int d = 2; d <= d_max; ++d) {
        for (std::size_t n = 1; n <= n_max; ++n) {
            for (auto& c : enumerate_candidates(d, n)) report.rows.push_back(ScanRow{std::move(c), {}, {}, false, false});
        }
    }

    Engine engine(options);
    SearchBudget oracle_budget = options.budget;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto count = static_cast<std::ptrdiff_t>(report.rows.size());
    const int threads = options.budget.jobs > 0 ? options.budget.jobs : 0;

    auto work = [&](ScanRow& row) {
        if (mode != ScanMode::oracle_only) row.pipeline = engine.decide(row.datum);
        if (mode != ScanMode::pipeline_only) row.oracle = oracle_decide(row.datum, oracle_budget);
        row.weak_flagged = !run_filters(row.datum, false).empty();
        row.strict_flagged = !run_filters(row.datum, true).empty();
    };

    if (options.budget.deterministic) {
        for (auto& row : report.rows) work(row);
    } else {
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads > 0 ? threads : omp_get_max_threads())
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            try {
                work(report.rows[static_cast<std::size_t>(i)]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    }

    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        if (row.disagrees()) report.disagreements.push_back(i);
        const Verdict& resolved = row.pipeline && !row.pipeline->unknown() ? *row.pipeline
                                  : row.oracle                             ? *row.oracle
                                                                           : *row.pipeline;
        auto& cell = report.counts[{row.datum.degree(), row.datum.size()}];
        switch (resolved.status) {
        case Status::realizable: ++cell.realizable; break;
        case Status::exceptional: ++cell.exceptional; break;
        case Status::unknown: ++cell.unknown; break;
        }
        const Verdict& truth = row.oracle ? *row.oracle : *row.pipeline;
        if (truth.realizable() && row.strict_flagged && !row.weak_flagged) report.strict_audit.push_back(row.datum);
    }
    return report;
}

} // namespace hurwitz
