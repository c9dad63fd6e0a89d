#include "test_support.hpp"

#include "gallai/canonical.hpp"
#include "gallai/generators.hpp"
#include "gallai/set_eset.hpp"

using namespace gallai;
using gallai_test::from_edges;

TEST_CASE("clique_minus_matching") {
    CHECK(clique_minus_matching(1) == complete_graph(3));
    CHECK(clique_minus_matching(2) == complete_graph(5).without_edges({make_edge(0, 1)}));
    for (int k = 1; k <= 4; ++k) {
        SimpleGraph g = clique_minus_matching(k);
        CHECK(g.n == 2 * k + 1);
        CHECK(classify_set(g).is_set);
        CHECK(is_odd_semi_clique(g));
    }
    CHECK(clique_minus_matching(3).edge_count() == 19);
    CHECK_THROWS_AS(clique_minus_matching(0), std::invalid_argument);
}

TEST_CASE("figure1_family") {
    SECTION("chain of four") {
        Figure1Family fam = figure1_family(Figure1Kind::Chain, 4);
        CHECK(fam.pattern.n == 12 + 12);  // triangle vertices plus stubs
        CHECK(verify_family_g_witness(fam.pattern, fam.witness));
        int tri_blocks = 0;
        BlockDecomposition bd = blocks(fam.pattern);
        for (VertexMask b : bd.blocks)
            if (block_contains_triangle(fam.pattern, b)) ++tri_blocks;
        CHECK(tri_blocks == 4);
    }
    SECTION("necklace of four") {
        Figure1Family fam = figure1_family(Figure1Kind::Necklace, 4);
        CHECK(verify_family_g_witness(fam.pattern, fam.witness));
        CHECK(fam.witness.supergraph.edge_count() == fam.pattern.edge_count() + 3);
    }
    SECTION("minimal chain") {
        Figure1Family fam = figure1_family(Figure1Kind::Chain, 2);
        CHECK(in_family_g(fam.witness.supergraph));
        CHECK_FALSE(in_family_g(fam.pattern));
    }
    SECTION("parameter limits") {
        CHECK_THROWS_AS(figure1_family(Figure1Kind::Chain, 1), std::invalid_argument);
        CHECK_THROWS_AS(figure1_family(Figure1Kind::Necklace, 2), std::invalid_argument);
        CHECK_THROWS_AS(figure1_family(Figure1Kind::Necklace, 5), std::invalid_argument);
    }
}

TEST_CASE("embed_as_even_subgraph") {
    SECTION("all-even graphs embed as themselves") {
        CHECK(embed_as_even_subgraph(cycle_graph(4)) == cycle_graph(4));
    }
    SECTION("P3 grows leaves at both ends") {
        SimpleGraph g = embed_as_even_subgraph(path_graph(3));
        CHECK(g.n == 5);
        ESubgraphReport rep = even_subgraph(g);
        CHECK(rep.ev_graph == path_graph(3));
    }
    SECTION("round trip over the small enumeration") {
        for (int n = 1; n <= 5; ++n)
            for (const SimpleGraph& h : enumerate_connected(n)) {
                SimpleGraph g = embed_as_even_subgraph(h);
                ESubgraphReport rep = even_subgraph(g);
                CHECK(rep.ev_graph == h);
            }
    }
    SECTION("disconnected input rejected") {
        CHECK_THROWS_AS(embed_as_even_subgraph(SimpleGraph(2, {})), std::invalid_argument);
    }
}

TEST_CASE("random_set_graph") {
    SECTION("degenerate parameters give the triangle") {
        CHECK(random_set_graph(0, 0, 7) == complete_graph(3));
    }
    SECTION("a seed reproducing the five-vertex example") {
        SimpleGraph target =
            from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}, {4, 0}, {4, 1}, {3, 4}});
        CHECK(canonical_form(random_set_graph(2, 1, 1)) == canonical_form(target));
    }
    SECTION("every sample classifies as SET") {
        for (std::uint64_t s = 0; s < 60; ++s) {
            SimpleGraph g = random_set_graph(static_cast<int>(s % 7), static_cast<int>(s % 3), s);
            CHECK(classify_set(g).is_set);
        }
    }
    SECTION("deterministic in the seed") {
        CHECK(random_set_graph(4, 2, 99) == random_set_graph(4, 2, 99));
    }
}

TEST_CASE("enumerate_connected") {
    CHECK(enumerate_connected(1).size() == 1);
    CHECK(enumerate_connected(2).size() == 1);
    CHECK(enumerate_connected(3).size() == 2);
    CHECK(enumerate_connected(4).size() == 6);
    CHECK(enumerate_connected(5).size() == 21);
    CHECK(enumerate_connected(6).size() == 112);
    SECTION("representatives are pairwise non-isomorphic and connected") {
        auto all = enumerate_connected(5);
        std::set<std::string> forms;
        for (const SimpleGraph& g : all) {
            CHECK(is_connected(g));
            forms.insert(canonical_form(g));
        }
        CHECK(forms.size() == all.size());
    }
    SECTION("labeled count cross-check for n up to 5") {
        // sum over classes of n!/|Aut| must equal the number of connected
        // labeled graphs, counted directly
        for (int n = 2; n <= 5; ++n) {
            std::vector<Edge> order;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i) order.emplace_back(i, j);
            long long labeled = 0;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << order.size()); ++mask) {
                std::vector<Edge> es;
                for (size_t b = 0; b < order.size(); ++b)
                    if ((mask >> b) & 1) es.push_back(order[b]);
                if (is_connected(SimpleGraph(n, es))) ++labeled;
            }
            long long fact = 1;
            for (int i = 2; i <= n; ++i) fact *= i;
            long long via_classes = 0;
            for (const SimpleGraph& g : enumerate_connected(n)) {
                std::vector<int> pi(static_cast<size_t>(n));
                for (int v = 0; v < n; ++v) pi[static_cast<size_t>(v)] = v;
                long long aut = 0;
                do {
                    if (permute(g, pi) == g) ++aut;
                } while (std::next_permutation(pi.begin(), pi.end()));
                via_classes += fact / aut;
            }
            CHECK(via_classes == labeled);
        }
    }
    CHECK_THROWS_AS(enumerate_connected(8), std::invalid_argument);
}
