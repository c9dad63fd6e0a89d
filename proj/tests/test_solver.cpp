#include "test_support.hpp"

#include <random>

#include "gallai/generators.hpp"
#include "gallai/json_io.hpp"
#include "gallai/solver.hpp"

using namespace gallai;
using gallai_test::from_edges;
using gallai_test::require_contract;

TEST_CASE("lower bounds") {
    CHECK(pn_lower_bound(complete_graph(5)) == 3);
    CHECK(pn_lower_bound(from_edges(4, {{0, 1}, {0, 2}, {0, 3}})) == 2);
    CHECK(pn_lower_bound(path_graph(5)) == 1);
    CHECK(pn_lower_bound(SimpleGraph(3, {})) == 0);
}

TEST_CASE("brute force oracle") {
    CHECK(brute_force_pn(from_edges(2, {{0, 1}})) == 1);
    CHECK(brute_force_pn(from_edges(4, {{0, 1}, {0, 2}, {0, 3}})) == 2);
    CHECK(brute_force_pn(cycle_graph(3)) == 2);
    CHECK(brute_force_pn(path_graph(6)) == 1);
    CHECK(brute_force_pn(cycle_graph(6)) == 2);
    CHECK(brute_force_pn(SimpleGraph(3, {})) == 0);
    CHECK_THROWS_AS(brute_force_pn(complete_graph(7)), std::invalid_argument);
}

TEST_CASE("exact solver on the worked examples") {
    SECTION("triangle needs two paths") {
        SolveResult r = pn_exact(cycle_graph(3));
        CHECK(r.pn == 2);
        CHECK_FALSE(r.timed_out);
        require_contract(cycle_graph(3), r.witness);
    }
    SECTION("path is one path") {
        SolveResult r = pn_exact(path_graph(5));
        CHECK(r.pn == 1);
        require_contract(path_graph(5), r.witness);
    }
    SECTION("K5 minus an edge sits on the ceiling") {
        SimpleGraph g = complete_graph(5).without_edges({make_edge(0, 1)});
        SolveResult r = pn_exact(g);
        CHECK(r.pn == 3);
        CHECK(brute_force_pn(g) == 3);
        require_contract(g, r.witness);
    }
    SECTION("K5") {
        SolveResult r = pn_exact(complete_graph(5));
        CHECK(r.pn == 3);
        require_contract(complete_graph(5), r.witness);
    }
}

TEST_CASE("oracle equivalence on random small graphs") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 120; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) es.emplace_back(u, v);
        SimpleGraph g(n, es);
        if (g.edge_count() > 10) continue;
        SolveResult r = pn_exact(g);
        REQUIRE_FALSE(r.timed_out);
        INFO("graph " << emit_edge_list(g));
        CHECK(r.pn == brute_force_pn(g));
        CHECK(r.pn >= pn_lower_bound(g));
        require_contract(g, r.witness);
    }
}

TEST_CASE("additivity over components") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 25; ++iter) {
        auto rand_graph = [&](int n) {
            std::vector<Edge> es;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() % 2) es.emplace_back(u, v);
            return SimpleGraph(n, es);
        };
        SimpleGraph a = rand_graph(2 + static_cast<int>(rng() % 4));
        SimpleGraph b = rand_graph(2 + static_cast<int>(rng() % 4));
        SimpleGraph both = disjoint_union(a, b);
        CHECK(pn_exact(both).pn == pn_exact(a).pn + pn_exact(b).pn);
    }
}

TEST_CASE("pn_at_most") {
    SimpleGraph c3 = cycle_graph(3);
    CHECK(pn_at_most(c3, 1).status == AtMostResult::Status::No);
    AtMostResult r = pn_at_most(c3, 2);
    REQUIRE(r.status == AtMostResult::Status::Yes);
    require_contract(c3, r.witness);
    CHECK(pn_at_most(path_graph(6), 1).status == AtMostResult::Status::Yes);
}

TEST_CASE("constrained decomposition") {
    SECTION("path with pinned ends") {
        SimpleGraph p3 = path_graph(3);
        EndpointConstraint c;
        c.total_paths = 1;
        c.target.assign(3, std::nullopt);
        c.target[0] = 1;
        c.target[1] = 0;
        c.target[2] = 1;
        ConstrainedResult r = constrained_decompose(p3, c);
        REQUIRE(r.status == ConstrainedStatus::Found);
        require_contract(p3, r.decomposition);
        CHECK(r.decomposition.size() == 1);
    }
    SECTION("triangle cannot be one path") {
        EndpointConstraint c;
        c.total_paths = 1;
        c.target.assign(3, std::nullopt);
        ConstrainedResult r = constrained_decompose(cycle_graph(3), c);
        CHECK(r.status == ConstrainedStatus::NotFound);
    }
    SECTION("triangle plus pendant, two paths ending at the pendant") {
        SimpleGraph g = from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
        EndpointConstraint c;
        c.total_paths = 2;
        c.target.assign(4, std::nullopt);
        c.target[3] = 1;
        ConstrainedResult r = constrained_decompose(g, c);
        REQUIRE(r.status == ConstrainedStatus::Found);
        CHECK(r.decomposition.endpoint_count(3) == 1);
        require_contract(g, r.decomposition);
    }
    SECTION("parity-impossible target is rejected upfront") {
        EndpointConstraint c;
        c.total_paths = 2;
        c.target.assign(3, std::nullopt);
        c.target[0] = 1;  // degree 2: parity mismatch
        CHECK(constrained_decompose(cycle_graph(3), c).status == ConstrainedStatus::NotFound);
    }
}

TEST_CASE("solver handles generated families") {
    SECTION("K7 minus a 2-matching") {
        SimpleGraph g = clique_minus_matching(3);
        SolveResult r = pn_exact(g, 30000);
        REQUIRE_FALSE(r.timed_out);
        CHECK(r.pn == 4);  // odd semi-clique on 7 vertices
        require_contract(g, r.witness);
    }
    SECTION("empty graph") {
        SolveResult r = pn_exact(SimpleGraph(4, {}));
        CHECK(r.pn == 0);
        CHECK(r.witness.size() == 0);
    }
}

TEST_CASE("deterministic witness") {
    SimpleGraph g = complete_graph(5).without_edges({make_edge(0, 1)});
    SolveResult a = pn_exact(g);
    SolveResult b = pn_exact(g);
    CHECK(decomposition_to_json(a.witness) == decomposition_to_json(b.witness));
}
