#include <doctest.h>

#include <numeric>

#include "hurwitz/families.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/structure.hpp"

using namespace hurwitz;

namespace {

bool has_rule(const std::vector<FilterReport>& reports, const std::string& rule) {
    for (const auto& r : reports) {
        if (r.rule == rule) return true;
    }
    return false;
}

Int plain_gcd(const Partition& p) {
    Int g = 0;
    for (Int x : p.parts()) g = std::gcd(g, x);
    return g;
}

} // namespace

TEST_CASE("detect_structures on small data") {
    auto eks = parse_datum("4: [2,2] [2,2] [3,1]");
    auto found = detect_structures(eks);
    REQUIRE(found.size() == 1);
    CHECK(eks[found[0].first] == Partition{2, 2});
    CHECK(eks[found[0].second] == Partition{2, 2});
    CHECK(found[0].s == 2);
    CHECK(found[0].d_prime == 2);
    REQUIRE(found[0].others.size() == 1);
    CHECK(found[0].others[0].second == 1);

    auto klein = parse_datum("4: [2,2] [2,2] [2,2]");
    auto three = detect_structures(klein);
    REQUIRE(three.size() == 3);
    for (const auto& m : three) {
        CHECK(m.s == 2);
        CHECK(m.d_prime == 2);
        REQUIRE(m.others.size() == 1);
        CHECK(m.others[0].second == 2);
    }

    auto six = parse_datum("6: [3,2,1] [2,2,2] [4,2]");
    auto pairs = detect_structures(six);
    REQUIRE(pairs.size() == 1);
    CHECK(six[pairs[0].first] == Partition{4, 2});
    CHECK(six[pairs[0].second] == Partition{2, 2, 2});
    CHECK(pairs[0].d_prime == 3);
    CHECK(pairs[0].others[0].second == 1);
}

TEST_CASE("detect_structures matches a direct pair scan") {
    for (Int d = 2; d <= 9; ++d) {
        for (std::size_t n = 3; n <= 4; ++n) {
            for (const auto& datum : enumerate_candidates(d, n)) {
                std::size_t expected = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = i + 1; j < n; ++j) {
                        Int g = std::gcd(std::gcd(plain_gcd(datum[i]), plain_gcd(datum[j])), d);
                        for (Int s = 2; s <= g; ++s) expected += g % s == 0 ? 1 : 0;
                    }
                }
                CHECK_MESSAGE(detect_structures(datum).size() == expected, datum.render());
            }
        }
    }
}

TEST_CASE("prop1 examples") {
    auto case3 = prop1_filter(parse_datum("12: [2,2,2,2,2,2] [2,2,2,2,2,2] [8,4]"));
    CHECK(has_rule(case3, "prop1.case3"));
    auto case2 = prop1_filter(parse_datum("18: [3,3,3,3,3,3] [3,3,3,3,3,3] [4,2,2,2,2,2,2,2]"));
    CHECK(has_rule(case2, "prop1.case2"));
    CHECK(prop1_filter(parse_datum("4: [2,2] [2,2] [2,2]")).empty());
}

TEST_CASE("corollary examples") {
    auto eks = corollary_filter(parse_datum("4: [2,2] [2,2] [3,1]"));
    REQUIRE(has_rule(eks, "cor1.parts"));
    auto family = corollary_filter(parse_datum("6: [4,1,1] [2,1,1,1,1] [2,2,2] [2,2,2]"));
    CHECK(has_rule(family, "cor1.parts"));

    auto klein = parse_datum("4: [2,2] [2,2] [2,2]");
    CHECK(corollary_filter(klein, false).empty());
    CHECK(has_rule(corollary_filter(klein, true), "cor1.length"));
}

TEST_CASE("weak filters never reject a realizable datum") {
    SearchBudget budget;
    for (Int d = 2; d <= 7; ++d) {
        for (std::size_t n = 3; n <= 4; ++n) {
            for (const auto& datum : enumerate_candidates(d, n)) {
                if (run_filters(datum).empty()) continue;
                CHECK_MESSAGE(oracle_decide(datum, budget).exceptional(), datum.render());
            }
        }
    }
}

TEST_CASE("tau") {
    CHECK(tau_numerator(2, 1) == 2);
    CHECK(tau_numerator(3, 2) == 1);
    CHECK(tau_numerator(2, 2) == 2);
    CHECK(divisors_desc(12) == std::vector<Int>{12, 6, 4, 3, 2});
    CHECK(divisors_desc(1).empty());
}

TEST_CASE("songxu examples") {
    auto ok = songxu_decide({3, 1, 1, Partition{3, 3}});
    CHECK(ok.realizable());
    CHECK(songxu_datum({3, 1, 1, Partition{3, 3}}) == parse_datum("6: [3,3] [2,2,2] [2,2,2]"));

    auto split = songxu_decide({3, 1, 1, Partition{5, 1}});
    CHECK(split.exceptional());
    CHECK(split.reasons.at(0).rule == "songxu.split");

    auto gcd = songxu_decide({4, 3, 1, Partition{2, 2, 2, 2}});
    CHECK(gcd.exceptional());
    CHECK(gcd.reasons.at(0).rule == "songxu.gcd");
    CHECK(songxu_datum({4, 3, 1, Partition{2, 2, 2, 2}}) == parse_datum("8: [2,2,2,2] [2,2,2,2] [6,2]"));

    CHECK_THROWS_AS(songxu_datum({2, 1, 1, Partition{2, 2}}), DomainError);
    CHECK_THROWS_AS(songxu_datum({3, 1, 1, Partition{4, 1, 1}}), DomainError);
}

TEST_CASE("match_songxu recovers the shape") {
    auto datum = parse_datum("8: [2,2,2,2] [2,2,2,2] [6,2]");
    auto shape = match_songxu(datum);
    REQUIRE(shape);
    CHECK(songxu_datum(*shape) == datum);
    CHECK(songxu_decide(*shape).exceptional());
    CHECK_FALSE(match_songxu(parse_datum("4: [2,2] [2,2] [2,2]")));
    CHECK_FALSE(match_songxu(parse_datum("8: [5,3] [2,2,2,2] [3,3,1,1]")));
}

TEST_CASE("songxu agrees with the oracle for k <= 4") {
    SearchBudget budget;
    for (Int k = 3; k <= 4; ++k) {
        for (Int x = 1; x <= k; ++x) {
            for (Int y = 1; y <= k; ++y) {
                for (const auto& p : nontrivial_partitions(2 * k)) {
                    if (static_cast<Int>(p.length()) != x + y) continue;
                    SongXuShape shape{k, x, y, p};
                    auto datum = songxu_datum(shape);
                    CHECK_MESSAGE(songxu_decide(shape).status == oracle_decide(datum, budget).status,
                                  datum.render());
                }
            }
        }
    }
}

TEST_CASE("family generation") {
    auto inst = family_generate(0, 2, 3, {Partition{4, 1, 1}, Partition{2, 1, 1, 1, 1}});
    CHECK(inst.datum == parse_datum("6: [4,1,1] [2,1,1,1,1] [2,2,2] [2,2,2]"));
    CHECK(inst.expect_exceptional);
    CHECK(inst.rule == "cor1.parts");
    CHECK(family_generate(1, 2, 3, {Partition{4, 1, 1}, Partition{2, 1, 1, 1, 1}}).datum == inst.datum);
    CHECK_THROWS_AS(family_generate(2, 2, 3, {Partition{4, 1, 1}, Partition{2, 1, 1, 1, 1}}), DomainError);

    CHECK_THROWS_AS(family_generate(0, 2, 2, {Partition{3, 1}, Partition{2, 2}}), DomainError);
    CHECK_THROWS_AS(family_generate(0, 3, 2, {Partition{3, 3}, Partition{2, 2, 1, 1}}), DomainError);
    CHECK(family_generate(0, 3, 2, {Partition{2, 1, 1, 1, 1}, Partition{2, 1, 1, 1, 1}}).datum.degree() == 6);
}

TEST_CASE("family enumeration") {
    CHECK(family_enumerate(2, 2, 2).empty());
    CHECK(family_enumerate(3, 2, 2).empty());

    SearchBudget budget;
    for (Int k = 3; k <= 4; ++k) {
        auto rows = family_enumerate(2, k, 2);
        CHECK_FALSE(rows.empty());
        for (const auto& inst : rows) {
            CHECK(inst.expect_exceptional);
            CHECK(has_rule(run_filters(inst.datum), "cor1.parts"));
            CHECK_MESSAGE(oracle_decide(inst.datum, budget).exceptional(), inst.datum.render());
        }
    }
}
