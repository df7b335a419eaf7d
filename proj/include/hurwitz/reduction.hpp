#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/permutation.hpp"
#include "hurwitz/structure.hpp"

namespace hurwitz {

enum class Theorem { thm1, thm2, thm3 };

std::string to_string(Theorem theorem);

/// One split partition of a reduction: source = scale * (union of groups).
struct SplitChoice {
    Decomposition decomposition;
    Int scale = 1;
};

/// One degree-reducing application of a reduction equivalence.
///
/// thm1: pair A_i, A_j divisible by s; child degree d' = d/s.
/// thm2: s = 2 pair plus a partition A_m divisible by t, t | d'; child degree d'/t.
/// thm3: s = 3 pair plus an even partition A_m, 4 | d'; child degree d'/4.
struct ReductionStep {
    Theorem theorem = Theorem::thm1;
    StructureMatch structure;
    Int t = 1;
    std::optional<std::size_t> third; ///< index of the t-partition (thm2/thm3)
    CandidateDatum parent;
    std::vector<SplitChoice> splits; ///< one per parent partition, parent order
    CandidateDatum child;
};

/// Steps from the input datum down to a base certificate. A missing witness
/// means the last child is the empty degree-1 datum (identity cover).
struct ReductionChain {
    std::vector<ReductionStep> steps;
    std::optional<ConstellationWitness> base;
};

using StepVisitor = std::function<bool(const ReductionStep&)>;

/// Each visit_* call streams children deduplicated on the normalized child
/// datum. Returning false from the visitor stops the stream. The return value
/// is true iff the enumeration ran to completion.
bool visit_children_thm1(const CandidateDatum& datum, const StructureMatch& match, const StepVisitor& visit);
bool visit_children_thm2(const CandidateDatum& datum, const StructureMatch& match, std::size_t third, Int t,
                         const StepVisitor& visit);
bool visit_children_thm3(const CandidateDatum& datum, const StructureMatch& match, std::size_t third,
                         const StepVisitor& visit);

std::vector<ReductionStep> children_thm1(const CandidateDatum& datum, const StructureMatch& match);
std::vector<ReductionStep> children_thm2(const CandidateDatum& datum, const StructureMatch& match,
                                         std::size_t third, Int t);
std::vector<ReductionStep> children_thm3(const CandidateDatum& datum, const StructureMatch& match,
                                         std::size_t third);

/// Reconstructs the parent datum from the child and the recorded splits.
/// Throws DomainError if the step is internally inconsistent.
CandidateDatum replay(const ReductionStep& step);

/// Any admissible reduction of the datum, as (theorem, match, third, t) tuples
/// in the order the decision engine tries them: smaller child degree first.
struct ReductionPlan {
    Theorem theorem;
    StructureMatch match;
    std::optional<std::size_t> third;
    Int t = 1;
    Int child_degree = 1;
};
std::vector<ReductionPlan> reduction_plans(const CandidateDatum& datum);

bool visit_children(const CandidateDatum& datum, const ReductionPlan& plan, const StepVisitor& visit);

} // namespace hurwitz
