#ifndef GALLAI_GRAPH_HPP
#define GALLAI_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gallai {

// Vertices are 0..n-1 with n <= 62 so a vertex set fits in one word and the
// graph6 short form always applies.
inline constexpr int kMaxVertices = 62;

using VertexMask = std::uint64_t;
using Edge = std::pair<int, int>;  // normalized u < v

inline Edge make_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
    return u < v ? Edge{u, v} : Edge{v, u};
}

inline int mask_popcount(VertexMask m) { return std::popcount(m); }

inline std::vector<int> mask_vertices(VertexMask m) {
    std::vector<int> out;
    while (m) {
        int v = std::countr_zero(m);
        out.push_back(v);
        m &= m - 1;
    }
    return out;
}

// Immutable finite simple graph. Adjacency is kept as one bitmask per vertex;
// the edge list is kept sorted so edge indices are stable and deterministic.
struct SimpleGraph {
    int n = 0;
    std::vector<VertexMask> adj;
    std::vector<Edge> edges;

    SimpleGraph() = default;

    SimpleGraph(int n_, std::vector<Edge> es) : n(n_) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
        adj.assign(static_cast<size_t>(n), 0);
        for (auto& e : es) e = make_edge(e.first, e.second);
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        for (auto [u, v] : es) {
            if (u < 0 || v >= n)
                throw std::invalid_argument("edge endpoint out of range");
            adj[static_cast<size_t>(u)] |= VertexMask{1} << v;
            adj[static_cast<size_t>(v)] |= VertexMask{1} << u;
        }
        edges = std::move(es);
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    bool has_edge(int u, int v) const {
        return u != v && u >= 0 && u < n && v >= 0 && v < n &&
               (adj[static_cast<size_t>(u)] >> v) & 1;
    }

    int degree(int v) const {
        check_vertex(v);
        return std::popcount(adj[static_cast<size_t>(v)]);
    }

    VertexMask neighbors(int v) const {
        check_vertex(v);
        return adj[static_cast<size_t>(v)];
    }

    VertexMask all_vertices() const {
        return n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
    }

    bool even_vertex(int v) const { return degree(v) % 2 == 0; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n)
            throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                                    std::to_string(n));
    }

    // index into `edges`, or -1
    int edge_index(int u, int v) const {
        if (!has_edge(u, v)) return -1;
        Edge e = make_edge(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        return static_cast<int>(it - edges.begin());
    }

    SimpleGraph with_edges(const std::vector<Edge>& extra) const {
        std::vector<Edge> es = edges;
        es.insert(es.end(), extra.begin(), extra.end());
        return SimpleGraph(n, std::move(es));
    }

    SimpleGraph without_edges(const std::vector<Edge>& removed) const {
        std::vector<Edge> gone;
        gone.reserve(removed.size());
        for (auto [u, v] : removed) gone.push_back(make_edge(u, v));
        std::sort(gone.begin(), gone.end());
        std::vector<Edge> es;
        es.reserve(edges.size());
        for (const Edge& e : edges)
            if (!std::binary_search(gone.begin(), gone.end(), e)) es.push_back(e);
        return SimpleGraph(n, std::move(es));
    }

    bool operator==(const SimpleGraph& o) const { return n == o.n && edges == o.edges; }
};

inline SimpleGraph permute(const SimpleGraph& g, const std::vector<int>& pi) {
    if (static_cast<int>(pi.size()) != g.n) throw std::invalid_argument("permutation size mismatch");
    std::vector<Edge> es;
    es.reserve(g.edges.size());
    for (auto [u, v] : g.edges)
        es.push_back(make_edge(pi[static_cast<size_t>(u)], pi[static_cast<size_t>(v)]));
    return SimpleGraph(g.n, std::move(es));
}

// Vertices of `other` are shifted past those of `g`.
inline SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& other) {
    std::vector<Edge> es = g.edges;
    for (auto [u, v] : other.edges) es.emplace_back(u + g.n, v + g.n);
    return SimpleGraph(g.n + other.n, std::move(es));
}

// Subgraph induced by `keep`, relabeled to 0..k-1. back_map[i] is the host id
// of new vertex i (ascending order of host id).
struct InducedSubgraph {
    SimpleGraph graph;
    std::vector<int> back_map;
};

inline InducedSubgraph induced_subgraph(const SimpleGraph& g, VertexMask keep) {
    std::vector<int> verts = mask_vertices(keep & g.all_vertices());
    std::vector<int> fwd(static_cast<size_t>(g.n), -1);
    for (size_t i = 0; i < verts.size(); ++i) fwd[static_cast<size_t>(verts[i])] = static_cast<int>(i);
    std::vector<Edge> es;
    for (auto [u, v] : g.edges)
        if (fwd[static_cast<size_t>(u)] >= 0 && fwd[static_cast<size_t>(v)] >= 0)
            es.emplace_back(fwd[static_cast<size_t>(u)], fwd[static_cast<size_t>(v)]);
    return {SimpleGraph(static_cast<int>(verts.size()), std::move(es)), std::move(verts)};
}

// Same vertex set, edges outside `keep` dropped. Handy when relabeling would
// only add bookkeeping.
inline SimpleGraph restrict_edges(const SimpleGraph& g, VertexMask keep) {
    std::vector<Edge> es;
    for (auto [u, v] : g.edges)
        if (((keep >> u) & 1) && ((keep >> v) & 1)) es.emplace_back(u, v);
    return SimpleGraph(g.n, std::move(es));
}

inline std::vector<VertexMask> components(const SimpleGraph& g) {
    std::vector<VertexMask> out;
    VertexMask seen = 0;
    for (int s = 0; s < g.n; ++s) {
        if ((seen >> s) & 1) continue;
        VertexMask comp = VertexMask{1} << s;
        VertexMask frontier = comp;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            VertexMask fresh = g.adj[static_cast<size_t>(v)] & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

inline bool is_connected(const SimpleGraph& g) {
    return g.n <= 1 || components(g).size() == 1;
}

// |E| > floor(n/2)*(n-1) forces pn >= ceil(n/2); only odd orders can reach it.
inline bool is_odd_semi_clique(const SimpleGraph& g) {
    bool dense = static_cast<long long>(g.edge_count()) >
                 static_cast<long long>(g.n / 2) * (g.n - 1);
    if (dense && g.n % 2 == 0)
        throw std::logic_error("odd semi-clique test: even order cannot exceed the bound");
    return dense;
}

inline SimpleGraph complete_graph(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return SimpleGraph(n, std::move(es));
}

inline SimpleGraph path_graph(int n) {
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
    return SimpleGraph(n, std::move(es));
}

inline SimpleGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v) es.push_back(make_edge(v, (v + 1) % n));
    return SimpleGraph(n, std::move(es));
}

}  // namespace gallai

#endif
