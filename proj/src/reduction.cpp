#include "hurwitz/reduction.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace hurwitz {

std::string to_string(Theorem theorem) {
    switch (theorem) {
    case Theorem::thm1: return "thm1";
    case Theorem::thm2: return "thm2";
    case Theorem::thm3: return "thm3";
    }
    return "?";
}

namespace {

struct SplitSpec {
    Partition source; // already divided by scale
    Int groups;
    Int scale;
};

struct GroupShape {
    Int pair_groups, pair_scale, third_groups, third_scale, other_groups;
};

GroupShape shape_of(Theorem theorem, Int s, Int t) {
    switch (theorem) {
    case Theorem::thm1: return {1, s, s, 1, s};
    case Theorem::thm2: return {t, 2, 2, t, 2 * t};
    case Theorem::thm3: return {4, 3, 6, 2, 12};
    }
    return {};
}

Int child_degree_of(Theorem theorem, Int d_prime, Int t) {
    switch (theorem) {
    case Theorem::thm1: return d_prime;
    case Theorem::thm2: return d_prime / t;
    case Theorem::thm3: return d_prime / 4;
    }
    return 0;
}

bool stream_children(const CandidateDatum& datum, Theorem theorem, const StructureMatch& match,
                     std::optional<std::size_t> third, Int t, const StepVisitor& visit) {
    const Int u = child_degree_of(theorem, match.d_prime, t);
    const GroupShape shape = shape_of(theorem, match.s, t);
    std::vector<SplitSpec> specs;
    for (std::size_t k = 0; k < datum.size(); ++k) {
        if (k == match.first || k == match.second) {
            specs.push_back({divide(datum[k], shape.pair_scale), shape.pair_groups, shape.pair_scale});
        } else if (third && k == *third) {
            specs.push_back({divide(datum[k], shape.third_scale), shape.third_groups, shape.third_scale});
        } else {
            specs.push_back({datum[k], shape.other_groups, 1});
        }
    }

    std::vector<std::vector<Decomposition>> options;
    for (std::size_t k = 0; k < specs.size(); ++k) {
        auto decs = decompose(specs[k].source, specs[k].groups, u);
        if (decs.empty()) return true;
        for (auto& d : decs) d.source = k;
        options.push_back(std::move(decs));
    }

    std::unordered_set<std::string> seen;
    std::vector<std::size_t> choice(options.size(), 0);
    while (true) {
        std::vector<Partition> groups;
        for (std::size_t k = 0; k < options.size(); ++k) {
            const auto& g = options[k][choice[k]].groups;
            groups.insert(groups.end(), g.begin(), g.end());
        }
        CandidateDatum child(u, std::move(groups));
        if (rh_defect(child) != 0) {
            throw std::logic_error("reduction produced child " + child.render() + " with nonzero RH defect");
        }
        if (seen.insert(child.render()).second) {
            ReductionStep step{theorem, match, t, third, datum, {}, std::move(child)};
            for (std::size_t k = 0; k < options.size(); ++k) {
                step.splits.push_back({options[k][choice[k]], specs[k].scale});
            }
            if (!visit(step)) return false;
        }
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == options[k].size()) {
            choice[k] = 0;
            ++k;
        }
        if (k == choice.size()) break;
    }
    return true;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

void check_third(const CandidateDatum& datum, const StructureMatch& match, std::size_t third) {
    require(third < datum.size() && third != match.first && third != match.second,
            "third partition must be outside the pair");
}

template <typename F>
std::vector<ReductionStep> collect(F&& run) {
    std::vector<ReductionStep> out;
    run([&](const ReductionStep& step) {
        out.push_back(step);
        return true;
    });
    return out;
}

} // namespace

bool visit_children_thm1(const CandidateDatum& datum, const StructureMatch& match, const StepVisitor& visit) {
    require(match.s >= 2 && match.s * match.d_prime == datum.degree(), "thm1: invalid structure");
    return stream_children(datum, Theorem::thm1, match, std::nullopt, 1, visit);
}

bool visit_children_thm2(const CandidateDatum& datum, const StructureMatch& match, std::size_t third, Int t,
                         const StepVisitor& visit) {
    require(match.s == 2 && 2 * match.d_prime == datum.degree(), "thm2: pair must be divisible by 2");
    check_third(datum, match, third);
    require(t >= 2, "thm2: t must be at least 2");
    require(datum[third].gcd() % t == 0,
            "thm2: t=" + std::to_string(t) + " does not divide every part of " + datum[third].render());
    require(match.d_prime % t == 0, "thm2: t must divide d'");
    return stream_children(datum, Theorem::thm2, match, third, t, visit);
}

bool visit_children_thm3(const CandidateDatum& datum, const StructureMatch& match, std::size_t third,
                         const StepVisitor& visit) {
    require(match.s == 3 && 3 * match.d_prime == datum.degree(), "thm3: pair must be divisible by 3");
    check_third(datum, match, third);
    require(datum[third].gcd() % 2 == 0, "thm3: third partition must have even parts");
    require(match.d_prime % 4 == 0, "thm3: 4 must divide d'");
    return stream_children(datum, Theorem::thm3, match, third, 2, visit);
}

std::vector<ReductionStep> children_thm1(const CandidateDatum& datum, const StructureMatch& match) {
    return collect([&](const StepVisitor& v) { visit_children_thm1(datum, match, v); });
}

std::vector<ReductionStep> children_thm2(const CandidateDatum& datum, const StructureMatch& match,
                                         std::size_t third, Int t) {
    return collect([&](const StepVisitor& v) { visit_children_thm2(datum, match, third, t, v); });
}

std::vector<ReductionStep> children_thm3(const CandidateDatum& datum, const StructureMatch& match,
                                         std::size_t third) {
    return collect([&](const StepVisitor& v) { visit_children_thm3(datum, match, third, v); });
}

CandidateDatum replay(const ReductionStep& step) {
    const auto& parent = step.parent;
    require(step.splits.size() == parent.size(), "replay: one split per parent partition expected");
    const Int u = step.child.degree();
    const GroupShape shape = shape_of(step.theorem, step.structure.s, step.t);
    require(u == child_degree_of(step.theorem, step.structure.d_prime, step.t), "replay: child degree mismatch");

    std::vector<Partition> all_groups;
    std::vector<Partition> sources;
    for (std::size_t k = 0; k < step.splits.size(); ++k) {
        const auto& split = step.splits[k];
        const auto& groups = split.decomposition.groups;
        Int want_groups = shape.other_groups, want_scale = 1;
        if (k == step.structure.first || k == step.structure.second) {
            want_groups = shape.pair_groups;
            want_scale = shape.pair_scale;
        } else if (step.third && k == *step.third) {
            want_groups = shape.third_groups;
            want_scale = shape.third_scale;
        }
        require(static_cast<Int>(groups.size()) == want_groups && split.scale == want_scale,
                "replay: split " + std::to_string(k) + " does not match the theorem's shape");
        std::vector<Int> merged;
        for (const auto& g : groups) {
            require(g.total() == u, "replay: group " + g.render() + " does not sum to " + std::to_string(u));
            merged.insert(merged.end(), g.parts().begin(), g.parts().end());
            all_groups.push_back(g);
        }
        sources.push_back(Partition(std::move(merged)).scaled(split.scale));
    }
    CandidateDatum rebuilt_child(u, std::move(all_groups));
    require(rebuilt_child == step.child, "replay: recorded child " + step.child.render() +
                                             " differs from the groups' union " + rebuilt_child.render());
    CandidateDatum rebuilt(parent.degree(), std::move(sources));
    require(rebuilt == parent, "replay: reconstructed " + rebuilt.render() + " differs from parent");
    return rebuilt;
}

std::vector<ReductionPlan> reduction_plans(const CandidateDatum& datum) {
    std::vector<ReductionPlan> plans;
    for (const auto& match : detect_structures(datum)) {
        plans.push_back({Theorem::thm1, match, std::nullopt, 1, match.d_prime});
        if (match.s == 2) {
            for (const auto& [k, g] : match.others) {
                for (Int t : divisors_desc(g)) {
                    if (match.d_prime % t == 0) plans.push_back({Theorem::thm2, match, k, t, match.d_prime / t});
                }
            }
        }
        if (match.s == 3 && match.d_prime % 4 == 0) {
            for (const auto& [k, g] : match.others) {
                if (g % 2 == 0) plans.push_back({Theorem::thm3, match, k, 2, match.d_prime / 4});
            }
        }
    }
    std::stable_sort(plans.begin(), plans.end(),
                     [](const ReductionPlan& a, const ReductionPlan& b) { return a.child_degree < b.child_degree; });
    return plans;
}

bool visit_children(const CandidateDatum& datum, const ReductionPlan& plan, const StepVisitor& visit) {
    switch (plan.theorem) {
    case Theorem::thm1: return visit_children_thm1(datum, plan.match, visit);
    case Theorem::thm2: return visit_children_thm2(datum, plan.match, *plan.third, plan.t, visit);
    case Theorem::thm3: return visit_children_thm3(datum, plan.match, *plan.third, visit);
    }
    return true;
}

} // namespace hurwitz
