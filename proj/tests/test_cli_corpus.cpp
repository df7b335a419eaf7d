#include <doctest.h>

#include <set>

#include "hurwitz/corpus.hpp"
#include "hurwitz/json.hpp"

using namespace hurwitz;

TEST_CASE("embedded corpus loads and every entry matches") {
    auto entries = load_corpus(embedded_corpus());
    REQUIRE(entries.size() >= 10);
    std::set<std::string> rendered;
    for (const auto& e : entries) {
        CHECK(rh_defect(e.datum) == 0);
        CHECK_FALSE(e.source.empty());
        rendered.insert(e.datum.render());
    }
    CHECK(rendered.count(parse_datum("4: [3,1] [2,2] [2,2]").render()) == 1);
    CHECK(rendered.count(parse_datum("8: [5,3] [2,2,2,2] [3,2,2,1]").render()) == 1);
    CHECK(rendered.count(parse_datum("8: [5,3] [2,2,2,2] [3,3,1,1]").render()) == 1);
    CHECK(rendered.count(parse_datum("12: [2,2,2,2,2,2] [2,2,2,2,2,2] [8,4]").render()) == 1);
    CHECK(rendered.count(parse_datum("12: [3,3,3,3] [3,3,3,3] [2,2,2,2,2,2]").render()) == 1);

    for (const auto& o : run_corpus(entries, EngineOptions{})) {
        CHECK_MESSAGE(o.ok(), o.entry->datum_text << " -> " << to_string(o.verdict.status) << " " << o.verdict.method);
    }
}

TEST_CASE("corpus rows appear in the scan of their cell") {
    auto entries = load_corpus(embedded_corpus());
    for (const auto& e : entries) {
        if (e.datum.degree() > 8) continue;
        bool found = false;
        for (const auto& c : enumerate_candidates(e.datum.degree(), e.datum.size())) found = found || c == e.datum;
        CHECK_MESSAGE(found, e.datum_text);
    }
}

TEST_CASE("corpus validation") {
    CHECK_THROWS_AS(load_corpus(R"({"datum_text": "3: [3] [3] [3]", "expected": "exceptional", "source": "x"})"),
                    DomainError);
    CHECK_THROWS_AS(load_corpus(R"({"datum_text": "4: [3,2]", "expected": "exceptional", "source": "x"})"),
                    DomainError);
    CHECK_THROWS_AS(load_corpus(R"({"datum_text": "4: [2,2] [2,2] [2,2]", "expected": "unknown", "source": "x"})"),
                    DomainError);
    CHECK_THROWS_AS(load_corpus("{not json"), DomainError);
    CHECK(load_corpus("\n\n").empty());
}

TEST_CASE("verdict json schema") {
    Engine engine;
    auto datum = parse_datum("8: [5,3] [2,2,2,2] [3,2,2,1]");
    auto v = engine.decide(datum);
    auto j = verdict_json(v, datum, "8: [5,3] [2,2,2,2] [3,2,2,1]");
    std::vector<std::string> keys;
    for (const auto& [key, _] : j.items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"input", "degree", "partitions", "status", "method", "reasons",
                                           "certificate", "stats"});
    CHECK(j["status"] == "realizable");
    CHECK(j["partitions"] == Json::parse("[[5,3],[2,2,2,2],[3,2,2,1]]"));
    const auto& perms = j["certificate"]["permutations"];
    REQUIRE(perms.size() == 3);

    // the images rebuild a witness that checks out
    ConstellationWitness w{8, {}};
    for (const auto& p : perms) w.perms.emplace_back(p["images"].get<std::vector<int>>());
    CHECK(check_witness(w, datum));

    for (const char* key : {"nodes", "cache_hits", "millis"}) CHECK(j["stats"].contains(key));
    CHECK(verdict_json(v, datum, {}, true)["stats"]["millis"] == 0.0);
}

TEST_CASE("unknown limits are reported as reasons") {
    std::vector<Int> transposition(39, 1);
    transposition[0] = 2;
    CandidateDatum datum(40, {Partition{40}, Partition{21, 19}, Partition(transposition)});
    Engine engine;
    auto j = verdict_json(engine.decide(datum), datum);
    CHECK(j["status"] == "unknown");
    CHECK(j["reasons"].back()["rule"] == "degree-limit");
    CHECK_FALSE(j.contains("certificate"));
}

TEST_CASE("chain json") {
    Engine engine;
    auto datum = parse_datum("6: [2,2,2] [2,2,2] [3,3]");
    auto j = verdict_json(engine.decide(datum), datum);
    REQUIRE(j["certificate"]["kind"] == "chain");
    const auto& step = j["certificate"]["steps"][0];
    for (const char* key : {"theorem", "s", "t", "pair_indices", "decompositions", "child"}) {
        CHECK(step.contains(key));
    }
    CHECK(j["certificate"].contains("base"));
}

TEST_CASE("scan rows carry the oracle status") {
    auto report = scan(4, 3, EngineOptions{});
    REQUIRE_FALSE(report.rows.empty());
    for (const auto& row : report.rows) {
        auto j = scan_row_json(row, true);
        CHECK(j["oracle_status"] == to_string(row.oracle->status));
        CHECK(j["stats"]["millis"] == 0.0);
    }
    auto oracle_only = scan(4, 3, EngineOptions{}, ScanMode::oracle_only);
    CHECK(scan_row_json(oracle_only.rows.front())["method"] == "oracle");
}
