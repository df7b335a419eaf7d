#include "hurwitz/json.hpp"

#include <sstream>

namespace hurwitz {

namespace {

Json reason_json(const FilterReport& r) {
    return Json{{"rule", r.rule}, {"detail", r.detail}, {"index", r.index}, {"value", r.value},
                {"bound", r.bound},  {"s", r.s},           {"t", r.t},         {"d_prime", r.d_prime}};
}

Json limit_reason(const Verdict& v, const CandidateDatum& datum) {
    std::string detail = v.limit == "degree-limit"
                             ? "degree " + std::to_string(datum.degree()) + " is beyond the search limit"
                             : "node budget exhausted after " + std::to_string(v.stats.nodes) + " nodes";
    return Json{{"rule", v.limit}, {"detail", detail}};
}

} // namespace

Json to_json(const Partition& partition) { return Json(partition.parts()); }

Json to_json(const CandidateDatum& datum) {
    Json parts = Json::array();
    for (const auto& p : datum.partitions()) parts.push_back(to_json(p));
    return Json{{"degree", datum.degree()}, {"partitions", parts}};
}

Json to_json(const ConstellationWitness& witness) {
    Json perms = Json::array();
    for (const auto& p : witness.perms) perms.push_back(Json{{"images", p.images()}, {"cycles", p.render_cycles()}});
    return Json{{"kind", "witness"}, {"degree", witness.degree}, {"permutations", perms}};
}

Json to_json(const ReductionChain& chain) {
    Json steps = Json::array();
    for (const auto& step : chain.steps) {
        Json splits = Json::array();
        for (std::size_t i = 0; i < step.splits.size(); ++i) {
            Json groups = Json::array();
            for (const auto& g : step.splits[i].decomposition.groups) groups.push_back(to_json(g));
            splits.push_back(Json{{"index", i}, {"scale", step.splits[i].scale}, {"groups", groups}});
        }
        Json s{{"theorem", to_string(step.theorem)},
               {"s", step.structure.s},
               {"t", step.t},
               {"pair_indices", {step.structure.first, step.structure.second}}};
        s["third"] = step.third ? Json(*step.third) : Json(nullptr);
        s["decompositions"] = splits;
        s["child"] = to_json(step.child);
        steps.push_back(s);
    }
    Json out{{"kind", "chain"}, {"steps", steps}};
    out["base"] = chain.base ? to_json(*chain.base) : Json(nullptr);
    return out;
}

Json to_json(const Certificate& certificate) {
    return std::visit([](const auto& c) { return to_json(c); }, certificate);
}

Json verdict_json(const Verdict& verdict, const CandidateDatum& datum, std::string_view input, bool zero_millis) {
    Json out;
    out["input"] = input.empty() ? datum.render() : std::string(input);
    out["degree"] = datum.degree();
    out["partitions"] = to_json(datum)["partitions"];
    out["status"] = to_string(verdict.status);
    out["method"] = verdict.method;
    Json reasons = Json::array();
    for (const auto& r : verdict.reasons) reasons.push_back(reason_json(r));
    if (verdict.unknown() && !verdict.limit.empty()) reasons.push_back(limit_reason(verdict, datum));
    out["reasons"] = reasons;
    if (verdict.certificate) out["certificate"] = to_json(*verdict.certificate);
    out["stats"] = Json{{"nodes", verdict.stats.nodes},
                        {"cache_hits", verdict.stats.cache_hits},
                        {"millis", zero_millis ? 0.0 : verdict.stats.millis}};
    return out;
}

Json scan_row_json(const ScanRow& row, bool zero_millis) {
    const Verdict& main = row.pipeline ? *row.pipeline : *row.oracle;
    Json out = verdict_json(main, row.datum, {}, zero_millis);
    out["oracle_status"] = row.oracle ? Json(to_string(row.oracle->status)) : Json(nullptr);
    return out;
}

std::string verdict_text(const Verdict& verdict, const CandidateDatum& datum) {
    std::ostringstream os;
    os << datum.render() << "\n";
    os << "status: " << to_string(verdict.status) << "\n";
    os << "method: " << verdict.method << "\n";
    for (const auto& r : verdict.reasons) os << "  " << r.rule << ": " << r.detail << "\n";
    if (verdict.unknown() && !verdict.limit.empty()) os << "  " << limit_reason(verdict, datum)["detail"].get<std::string>() << "\n";
    if (verdict.certificate) {
        if (const auto* w = std::get_if<ConstellationWitness>(&*verdict.certificate)) {
            os << "witness:\n";
            for (const auto& p : w->perms) os << "  " << p.render_cycles() << "\n";
        } else {
            const auto& chain = std::get<ReductionChain>(*verdict.certificate);
            os << "chain:\n";
            for (const auto& step : chain.steps) {
                os << "  " << to_string(step.theorem) << " (s=" << step.structure.s << ", t=" << step.t << ") -> "
                   << step.child.render() << "\n";
            }
            if (chain.base) {
                os << "  base witness:";
                for (const auto& p : chain.base->perms) os << " " << p.render_cycles();
                os << "\n";
            }
        }
    }
    os << "nodes: " << verdict.stats.nodes << ", cache hits: " << verdict.stats.cache_hits << ", "
       << verdict.stats.millis << " ms\n";
    return os.str();
}

} // namespace hurwitz
