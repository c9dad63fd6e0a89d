#ifndef GALLAI_GENERATORS_HPP
#define GALLAI_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "gallai/canonical.hpp"
#include "gallai/family_g.hpp"
#include "gallai/graph.hpp"
#include "gallai/set_eset.hpp"

namespace gallai {

// std::shuffle's algorithm is implementation-defined; this one is pinned so
// seeds reproduce across standard libraries.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

// K_{2k+1} minus a matching of size k-1: a SET graph that is also an odd
// semi-clique for every k.
inline SimpleGraph clique_minus_matching(int k) {
    if (k < 1) throw std::invalid_argument("clique_minus_matching needs k >= 1");
    SimpleGraph g = complete_graph(2 * k + 1);
    std::vector<Edge> matching;
    for (int i = 0; i + 1 < 2 * (k - 1); i += 2) matching.emplace_back(i, i + 1);
    g = g.without_edges(matching);
    if (!classify_set(g).is_set) throw std::logic_error("clique_minus_matching: not a SET graph");
    if (!is_odd_semi_clique(g)) throw std::logic_error("clique_minus_matching: not an odd semi-clique");
    return g;
}

enum class Figure1Kind { Chain, Necklace };

struct Figure1Family {
    SimpleGraph pattern;     // triangles, solid connectors and pendant stubs
    FamilyGWitness witness;  // pattern plus the dotted edges, identity injection
};

// Triangle families that only join the family after adding their dotted
// edges. Chain: t triangles in a row, the dotted edge closing them into a
// ring. Necklace: a central triangle with t-1 outer triangles hanging off
// it, dotted edges closing the outer ring. Each triangle keeps one vertex
// carrying pendant stubs so the pattern's components exceed degree 3.
inline Figure1Family figure1_family(Figure1Kind kind, int t, int stubs = 3) {
    std::vector<Edge> solid, dotted;
    int next = 0;
    auto triangle = [&](std::vector<Edge>& into) {
        int a = next;
        into.emplace_back(a, a + 1);
        into.emplace_back(a, a + 2);
        into.emplace_back(a + 1, a + 2);
        next += 3;
        return a;
    };
    std::vector<int> stub_holders;

    if (kind == Figure1Kind::Chain) {
        if (t < 2) throw std::invalid_argument("figure1 chain needs t >= 2");
        // triangle i on vertices base..base+2: base = in, base+1 = out,
        // base+2 carries the stubs
        std::vector<int> bases;
        for (int i = 0; i < t; ++i) {
            bases.push_back(triangle(solid));
            stub_holders.push_back(bases.back() + 2);
        }
        for (int i = 0; i + 1 < t; ++i) solid.emplace_back(bases[static_cast<size_t>(i)] + 1,
                                                           bases[static_cast<size_t>(i + 1)]);
        dotted.emplace_back(bases.back() + 1, bases.front());
    } else {
        if (t < 3) throw std::invalid_argument("figure1 necklace needs t >= 3");
        if (t > 4) throw std::invalid_argument("figure1 necklace: a central triangle joins at most 3 outers");
        int center = triangle(solid);
        int outers = t - 1;
        std::vector<int> bases;
        for (int i = 0; i < outers; ++i) {
            bases.push_back(triangle(solid));
            // outer triangle: base = connector, base+1 and base+2 take the
            // dotted ring, base+2 also carries the stubs
            solid.emplace_back(center + i, bases.back());
            stub_holders.push_back(bases.back() + 2);
        }
        for (int i = 0; i < outers; ++i)
            dotted.emplace_back(bases[static_cast<size_t>(i)] + 1,
                                bases[static_cast<size_t>((i + 1) % outers)] + 2);
    }

    for (int holder : stub_holders)
        for (int s = 0; s < stubs; ++s) solid.emplace_back(holder, next++);

    Figure1Family fam;
    fam.pattern = SimpleGraph(next, solid);
    std::vector<Edge> all = solid;
    all.insert(all.end(), dotted.begin(), dotted.end());
    fam.witness.supergraph = SimpleGraph(next, all);
    fam.witness.injection.resize(static_cast<size_t>(next));
    for (int v = 0; v < next; ++v) fam.witness.injection[static_cast<size_t>(v)] = v;
    if (!verify_family_g_witness(fam.pattern, fam.witness))
        throw std::logic_error("figure1_family: witness construction failed");
    return fam;
}

// Host whose E-subgraph is exactly h: hang one pendant leaf on every
// odd-degree vertex.
inline SimpleGraph embed_as_even_subgraph(const SimpleGraph& h) {
    if (!is_connected(h)) throw std::invalid_argument("embed_as_even_subgraph needs a connected graph");
    std::vector<Edge> es = h.edges;
    int next = h.n;
    for (int v = 0; v < h.n; ++v)
        if (!h.even_vertex(v)) es.emplace_back(v, next++);
    SimpleGraph g(next, std::move(es));
    ESubgraphReport rep = even_subgraph(g);
    if (rep.ev_graph.n != h.n || !(rep.ev_graph == h))
        throw std::logic_error("embed_as_even_subgraph: round trip broke");
    return g;
}

// Seeded SET-graph sampler: a fixed triangle, odd-side vertices attached to
// two or three of its corners, extra odd-odd edges, then a bounded parity
// repair so the triangle is the exact even part. Retries with derived seeds
// when a sample resists repair.
inline SimpleGraph random_set_graph(int n_odd, int extra_odd_edges, std::uint64_t seed) {
    if (n_odd < 0) throw std::invalid_argument("random_set_graph: n_odd < 0");
    constexpr int kRetries = 64;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt));
        int n = 3 + n_odd;
        std::vector<Edge> es = {{0, 1}, {0, 2}, {1, 2}};
        for (int w = 3; w < n; ++w) {
            int picks = 2 + static_cast<int>(rng() % 2);
            std::vector<int> corners = {0, 1, 2};
            deterministic_shuffle(corners, rng);
            for (int i = 0; i < picks; ++i) es.push_back(make_edge(w, corners[static_cast<size_t>(i)]));
        }
        SimpleGraph g(n, es);
        for (int tries = 0; tries < extra_odd_edges * 8 && extra_odd_edges > 0; ++tries) {
            int cnt = 0;
            for (const Edge& e : g.edges)
                if (e.first >= 3) ++cnt;
            if (cnt >= extra_odd_edges) break;
            if (n < 5) break;
            int a = 3 + static_cast<int>(rng() % static_cast<unsigned>(n - 3));
            int b = 3 + static_cast<int>(rng() % static_cast<unsigned>(n - 3));
            if (a == b || g.has_edge(a, b)) continue;
            g = g.with_edges({make_edge(a, b)});
        }

        // parity repair: triangle corners even, everyone else odd
        bool ok = false;
        for (int round = 0; round < 10; ++round) {
            if (classify_set(g).is_set) {
                ok = true;
                break;
            }
            std::vector<int> even_side;  // wrong-parity odd-side vertices
            for (int v = 3; v < g.n; ++v)
                if (g.even_vertex(v)) even_side.push_back(v);
            bool changed = false;
            for (size_t i = 0; i + 1 < even_side.size() && !changed; ++i)
                for (size_t j = i + 1; j < even_side.size() && !changed; ++j)
                    if (!g.has_edge(even_side[i], even_side[j])) {
                        g = g.with_edges({make_edge(even_side[i], even_side[j])});
                        changed = true;
                    }
            if (changed) continue;
            if (!even_side.empty()) {
                // tie the leftover to a corner it misses, or via a fresh vertex
                int w = even_side.front();
                int corner = -1;
                for (int c = 0; c < 3; ++c)
                    if (!g.has_edge(w, c)) corner = corner < 0 ? c : corner;
                if (corner >= 0) {
                    g = g.with_edges({make_edge(w, corner)});
                } else if (g.n < kMaxVertices) {
                    int fresh = g.n;
                    SimpleGraph bigger(g.n + 1, g.edges);
                    g = bigger.with_edges({make_edge(fresh, 0), make_edge(fresh, 1), make_edge(fresh, w)});
                }
                continue;
            }
            // corners with odd degree, fixed pairwise through a fresh vertex
            std::vector<int> bad_corners;
            for (int c = 0; c < 3; ++c)
                if (!g.even_vertex(c)) bad_corners.push_back(c);
            if (bad_corners.size() >= 2 && g.n < kMaxVertices) {
                int fresh = g.n;
                SimpleGraph bigger(g.n + 1, g.edges);
                g = bigger.with_edges({make_edge(fresh, bad_corners[0]), make_edge(fresh, bad_corners[1])});
                // fresh has even degree 2 and lands in even_side next round
                continue;
            }
            break;
        }
        if (ok) return g;
    }
    throw std::runtime_error("random_set_graph: repair failed for seed " + std::to_string(seed));
}

// One representative per isomorphism class of connected graphs on n
// vertices, by walking adjacency masks in lexicographic order and keeping
// exactly the canonical labelings.
inline void enumerate_connected(int n, const std::function<void(const SimpleGraph&)>& sink) {
    if (n < 1 || n > 7) throw std::invalid_argument("enumerate_connected limited to 1 <= n <= 7");
    if (n == 1) {
        sink(SimpleGraph(1, {}));
        return;
    }
    int bits = n * (n - 1) / 2;
    std::vector<Edge> order;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) order.emplace_back(i, j);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        std::vector<Edge> es;
        for (int b = 0; b < bits; ++b)
            if ((mask >> b) & 1) es.push_back(order[static_cast<size_t>(b)]);
        if (static_cast<int>(es.size()) < n - 1) continue;
        SimpleGraph g(n, std::move(es));
        if (!is_connected(g)) continue;
        if (is_canonical_labeling(g)) sink(g);
    }
}

inline std::vector<SimpleGraph> enumerate_connected(int n) {
    std::vector<SimpleGraph> out;
    enumerate_connected(n, [&](const SimpleGraph& g) { out.push_back(g); });
    return out;
}

}  // namespace gallai

#endif
