#include <doctest.h>

#include "hurwitz/oracle.hpp"
#include "hurwitz/reduction.hpp"

using namespace hurwitz;

namespace {

StructureMatch pair_of(const CandidateDatum& datum, std::size_t i, std::size_t j, Int s) {
    for (const auto& m : detect_structures(datum)) {
        if (m.first == i && m.second == j && m.s == s) return m;
    }
    FAIL("no structure (" << i << "," << j << ") s=" << s << " in " << datum.render());
    return {};
}

std::size_t index_of(const CandidateDatum& datum, const Partition& p, std::size_t skip = SIZE_MAX) {
    for (std::size_t i = 0; i < datum.size(); ++i) {
        if (i != skip && datum[i] == p) return i;
    }
    return SIZE_MAX;
}

} // namespace

TEST_CASE("thm1 children") {
    auto datum = parse_datum("6: [2,2,2] [2,2,2] [3,3]");
    auto a = index_of(datum, Partition{2, 2, 2});
    auto b = index_of(datum, Partition{2, 2, 2}, a);
    auto kids = children_thm1(datum, pair_of(datum, std::min(a, b), std::max(a, b), 2));
    REQUIRE(kids.size() == 1);
    CHECK(kids[0].child == parse_datum("3: [3] [3]"));
    CHECK(replay(kids[0]) == datum);

    auto eks = parse_datum("4: [2,2] [2,2] [3,1]");
    CHECK(children_thm1(eks, detect_structures(eks).at(0)).empty());

    auto klein = parse_datum("4: [2,2] [2,2] [2,2]");
    auto one = children_thm1(klein, pair_of(klein, 0, 1, 2));
    REQUIRE(one.size() == 1);
    CHECK(one[0].child == parse_datum("2: [2] [2]"));
}

TEST_CASE("thm2 children") {
    auto klein = parse_datum("4: [2,2] [2,2] [2,2]");
    auto kids = children_thm2(klein, pair_of(klein, 0, 1, 2), 2, 2);
    REQUIRE(kids.size() == 1);
    CHECK(kids[0].child.degree() == 1);
    CHECK(kids[0].child.size() == 0);
    CHECK(replay(kids[0]) == klein);

    auto eight = parse_datum("8: [4,4] [2,2,2,2] [2,2,2,2]");
    auto four = index_of(eight, Partition{4, 4});
    auto two = index_of(eight, Partition{2, 2, 2, 2});
    auto other = index_of(eight, Partition{2, 2, 2, 2}, two);
    auto match = pair_of(eight, std::min(four, two), std::max(four, two), 2);
    // d'/t = 2, so [4,4]/2 = [2,2] splits as {[2],[2]}: one child, not an empty stream
    auto eight_kids = children_thm2(eight, match, other, 2);
    REQUIRE(eight_kids.size() == 1);
    CHECK(eight_kids[0].child == parse_datum("2: [2] [2]"));
    CHECK_THROWS_AS(children_thm2(eight, match, other, 3), DomainError);
}

TEST_CASE("thm3 children") {
    auto tetra = parse_datum("12: [3,3,3,3] [3,3,3,3] [2,2,2,2,2,2]");
    auto a = index_of(tetra, Partition{3, 3, 3, 3});
    auto b = index_of(tetra, Partition{3, 3, 3, 3}, a);
    auto third = index_of(tetra, Partition{2, 2, 2, 2, 2, 2});
    auto kids = children_thm3(tetra, pair_of(tetra, std::min(a, b), std::max(a, b), 3), third);
    REQUIRE(kids.size() == 1);
    CHECK(kids[0].child.degree() == 1);
    CHECK(kids[0].child.size() == 0);
    CHECK(replay(kids[0]) == tetra);

    auto bad = parse_datum("18: [3,3,3,3,3,3] [3,3,3,3,3,3] [4,2,2,2,2,2,2,2]");
    auto m = detect_structures(bad);
    REQUIRE_FALSE(m.empty());
    CHECK_THROWS_AS(children_thm3(bad, m[0], 2), DomainError);
}

TEST_CASE("replay rejects a tampered step") {
    auto datum = parse_datum("6: [2,2,2] [2,2,2] [3,3]");
    auto kids = children_thm1(datum, pair_of(datum, 1, 2, 2));
    REQUIRE(kids.size() == 1);

    auto bad = kids[0];
    for (auto& split : bad.splits) {
        if (split.decomposition.groups.size() == 2) {
            split.decomposition.groups[0] = Partition{2, 1};
            split.decomposition.groups[1] = Partition{2, 1};
            break;
        }
    }
    CHECK_THROWS_AS(replay(bad), DomainError);

    auto scaled = kids[0];
    scaled.splits[0].scale = 3;
    CHECK_THROWS_AS(replay(scaled), DomainError);

    auto moved = kids[0];
    moved.parent = parse_datum("6: [2,2,2] [2,2,2] [4,2]");
    CHECK_THROWS(replay(moved));
}

TEST_CASE("children keep RH defect zero and replay to the parent") {
    for (Int d = 2; d <= 12; ++d) {
        for (std::size_t n = 3; n <= 4; ++n) {
            if (d > 9 && n > 3) continue;
            for (const auto& datum : enumerate_candidates(d, n)) {
                for (const auto& plan : reduction_plans(datum)) {
                    visit_children(datum, plan, [&](const ReductionStep& step) {
                        CHECK(rh_defect(step.child) == 0);
                        CHECK(step.child.degree() == plan.child_degree);
                        CHECK(replay(step) == datum);
                        return true;
                    });
                }
            }
        }
    }
}

TEST_CASE("every reduction plan agrees with the oracle") {
    SearchBudget budget;
    std::size_t plans_checked = 0;
    for (Int d = 4; d <= 9; ++d) {
        for (std::size_t n = 3; n <= 4; ++n) {
            for (const auto& datum : enumerate_candidates(d, n)) {
                auto plans = reduction_plans(datum);
                if (plans.empty()) continue;
                const bool truth = oracle_decide(datum, budget).realizable();
                for (const auto& plan : plans) {
                    bool child_realizable = false;
                    visit_children(datum, plan, [&](const ReductionStep& step) {
                        if (step.child.size() == 0 || oracle_decide(step.child, budget).realizable()) {
                            child_realizable = true;
                            return false;
                        }
                        return true;
                    });
                    ++plans_checked;
                    CHECK_MESSAGE(child_realizable == truth, datum.render() << " via " << to_string(plan.theorem)
                                                                            << " t=" << plan.t);
                }
            }
        }
    }
    CHECK(plans_checked > 100);
}

TEST_CASE("plans are tried smallest child first") {
    auto klein = parse_datum("4: [2,2] [2,2] [2,2]");
    auto plans = reduction_plans(klein);
    REQUIRE_FALSE(plans.empty());
    CHECK(plans.front().theorem == Theorem::thm2);
    CHECK(plans.front().child_degree == 1);

    auto tetra = parse_datum("12: [3,3,3,3] [3,3,3,3] [2,2,2,2,2,2]");
    CHECK(reduction_plans(tetra).front().theorem == Theorem::thm3);
}
