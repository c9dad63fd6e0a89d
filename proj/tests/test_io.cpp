#include "test_support.hpp"

#include <random>

#include "gallai/generators.hpp"
#include "gallai/io.hpp"

using namespace gallai;
using gallai_test::from_edges;

TEST_CASE("graph6 basics") {
    // smallest cases by hand: 2 vertices, no edge / one edge
    CHECK(emit_graph6(SimpleGraph(2, {})) == "A?");
    CHECK(emit_graph6(from_edges(2, {{0, 1}})) == "A_");
    CHECK(parse_graph6("A_").edge_count() == 1);
    CHECK(parse_graph6("A?").edge_count() == 0);
    // known encodings
    CHECK(emit_graph6(complete_graph(5)) == "D~{");
    CHECK(emit_graph6(cycle_graph(5)) == "Dhc");
    CHECK(emit_graph6(path_graph(4)) == "Ch");
    CHECK(parse_graph6("DQc") == from_edges(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}}));
}

TEST_CASE("graph6 round trip is byte exact") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 300; ++iter) {
        int n = static_cast<int>(rng() % 13);
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) es.emplace_back(u, v);
        SimpleGraph g(n, es);
        std::string line = emit_graph6(g);
        SimpleGraph back = parse_graph6(line);
        CHECK(back == g);
        CHECK(emit_graph6(back) == line);
    }
    // a couple of larger orders near the short-form limit
    for (int n : {40, 62}) {
        std::vector<Edge> es;
        for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
        SimpleGraph g(n, es);
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
}

TEST_CASE("graph6 optional header") {
    CHECK(parse_graph6(">>graph6<<D~{") == complete_graph(5));
    CHECK_THROWS_AS(parse_graph6(">>sparse6<<D~{"), std::invalid_argument);
}

TEST_CASE("graph6 malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("D~"), std::invalid_argument);      // truncated
    CHECK_THROWS_AS(parse_graph6("D~{?"), std::invalid_argument);    // trailing byte
    CHECK_THROWS_AS(parse_graph6("~??~?????"), std::invalid_argument);  // long form
    CHECK_THROWS_AS(parse_graph6(std::string(1, char(20))), std::invalid_argument);
}

TEST_CASE("edge list format") {
    SimpleGraph g = parse_edge_list("# comment\n4 3\n0 1\n\n1 2\n# another\n2 3\n");
    CHECK(g == path_graph(4));
    CHECK(emit_edge_list(g) == "4 3\n0 1\n1 2\n2 3\n");
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("nonsense\n"), std::invalid_argument);
}
