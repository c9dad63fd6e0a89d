#include "test_support.hpp"

#include "gallai/classify.hpp"
#include "gallai/generators.hpp"
#include "gallai/suites.hpp"

using namespace gallai;
using gallai_test::from_edges;

TEST_CASE("classify worked examples") {
    SECTION("K5 minus an edge") {
        SimpleGraph g = complete_graph(5).without_edges({make_edge(0, 1)});
        ClassificationRecord r = classify(g);
        CHECK(r.pn == 3);
        CHECK(r.pn_exact_known);
        CHECK(r.status == GallaiStatus::CeilingOnly);
        CHECK(r.odd_semi_clique);
        CHECK(r.is_set);
        CHECK(r.eset_kind == EsetClassification::Kind::TypeSet);
        CHECK(r.theorem31_applicable);
        REQUIRE(r.theorem_holds.has_value());
        CHECK(*r.theorem_holds);
    }
    SECTION("C4") {
        ClassificationRecord r = classify(cycle_graph(4));
        CHECK(r.pn == 2);
        CHECK(r.status == GallaiStatus::Gallai);
        CHECK(r.ev_max_degree == 2);
        CHECK(r.theorem31_applicable);
        CHECK(r.ev_in_family_g == WitnessVerdict::Yes);
        REQUIRE(r.theorem_holds.has_value());
        CHECK(*r.theorem_holds);
    }
    SECTION("bowtie host: neither gate applies, record still complete") {
        SimpleGraph bowtie = from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
        SimpleGraph host = embed_as_even_subgraph(bowtie);
        ClassificationRecord r = classify(host);
        CHECK(r.ev_max_degree == 4);
        CHECK_FALSE(r.theorem31_applicable);
        CHECK_FALSE(r.theorem41_applicable);
        CHECK(r.ev_in_family_g == WitnessVerdict::Unknown);
        CHECK(r.pn_exact_known);
        CHECK(r.pn <= (host.n + 1) / 2);
    }
}

TEST_CASE("record json") {
    ClassificationRecord r = classify(cycle_graph(4), {.with_timing = false});
    json j = record_to_json(r, false);
    CHECK(j["v"] == 1);
    CHECK(j["n"] == 4);
    CHECK(j["pn"] == 2);
    CHECK(j["gallai_status"] == "gallai");
    CHECK_FALSE(j.contains("time_ms"));
    // byte stability without timing
    ClassificationRecord r2 = classify(cycle_graph(4), {.with_timing = false});
    CHECK(record_to_json(r2, false).dump() == j.dump());
}

TEST_CASE("suite smoke runs") {
    SuiteOptions opts;
    opts.deterministic = true;
    opts.timeout_ms = 10000;
    SECTION("oracle-eq at n <= 4") {
        opts.max_n = 4;
        SuiteResult r = run_suite("oracle-eq", opts);
        CHECK(r.violations == 0);
        CHECK(r.timeouts == 0);
        CHECK(r.cases >= 10);
        CHECK(r.exit_code() == 0);
    }
    SECTION("theorem31 sweep at n <= 4") {
        opts.max_n = 4;
        SuiteResult r = run_suite("theorem31-sweep", opts);
        CHECK(r.violations == 0);
        CHECK(r.cases == 1 + 1 + 2 + 6);
        CHECK(r.exit_code() == 0);
    }
    SECTION("unknown suite") {
        CHECK_THROWS_AS(run_suite("nope", opts), std::invalid_argument);
    }
    SECTION("resume skips processed ids") {
        opts.max_n = 3;
        SuiteResult first = run_suite("theorem31-sweep", opts);
        for (const json& line : first.lines) opts.skip_ids.insert(line["id"].get<std::string>());
        SuiteResult again = run_suite("theorem31-sweep", opts);
        CHECK(again.cases == 0);
        CHECK(again.exit_code() == 0);
    }
}

TEST_CASE("classify of disconnected input stays sane") {
    SimpleGraph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
    ClassificationRecord r = classify(two_triangles);
    CHECK_FALSE(r.connected);
    CHECK_FALSE(r.theorem31_applicable);  // the theorems speak of connected graphs
    CHECK(r.pn == 4);
}
