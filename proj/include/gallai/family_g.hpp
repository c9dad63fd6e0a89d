#ifndef GALLAI_FAMILY_G_HPP
#define GALLAI_FAMILY_G_HPP

#include <deque>
#include <string>
#include <vector>

#include "gallai/blocks.hpp"
#include "gallai/graph.hpp"

namespace gallai {

// Membership in the family where (i) every block has maximum degree at most
// 3 and (ii) every component has maximum degree at most 3 or at most one
// block containing a triangle.
inline bool in_family_g(const SimpleGraph& h) {
    BlockDecomposition bd = blocks(h);
    for (VertexMask b : bd.blocks)
        if (max_degree_in_block(h, b) > 3) return false;
    for (VertexMask comp : components(h)) {
        int maxdeg = 0;
        for (int v : mask_vertices(comp)) maxdeg = std::max(maxdeg, h.degree(v));
        if (maxdeg <= 3) continue;
        int triangle_blocks = 0;
        for (VertexMask b : bd.blocks)
            if ((b & comp) == b && block_contains_triangle(h, b)) ++triangle_blocks;
        if (triangle_blocks > 1) return false;
    }
    return true;
}

// Supergraph plus vertex injection certifying membership of a subgraph's
// host family.
struct FamilyGWitness {
    SimpleGraph supergraph;
    std::vector<int> injection;  // subject vertex -> supergraph vertex
};

struct WitnessCheck {
    bool ok = false;
    std::string reason;
};

inline WitnessCheck check_family_g_witness(const SimpleGraph& h, const FamilyGWitness& w) {
    if (static_cast<int>(w.injection.size()) != h.n) return {false, "injection arity mismatch"};
    VertexMask seen = 0;
    for (int img : w.injection) {
        if (img < 0 || img >= w.supergraph.n) return {false, "injection image out of range"};
        if ((seen >> img) & 1) return {false, "injection not injective"};
        seen |= VertexMask{1} << img;
    }
    for (auto [u, v] : h.edges)
        if (!w.supergraph.has_edge(w.injection[static_cast<size_t>(u)], w.injection[static_cast<size_t>(v)]))
            return {false, "edge " + std::to_string(u) + "-" + std::to_string(v) + " has no image"};
    if (!in_family_g(w.supergraph)) return {false, "supergraph not in the family"};
    return {true, ""};
}

inline bool verify_family_g_witness(const SimpleGraph& h, const FamilyGWitness& w) {
    return check_family_g_witness(h, w).ok;
}

struct CompletionResult {
    enum class Status { Found, DefiniteNo, BudgetExceeded } status;
    FamilyGWitness witness;  // set when Found
    long long states_tried = 0;
};

// Bounded search for a supergraph in the family: breadth-first over total
// edge additions; each addition either joins two existing vertices from
// different blocks (an intra-block edge can only raise block degrees) or
// attaches one new pendant vertex. A block already carrying an internal
// degree-4 vertex can never be fixed, since supergraph blocks only grow.
inline CompletionResult complete_to_family_g(const SimpleGraph& h, int max_new_vertices,
                                             int max_new_edges, long long state_cap = 2'000'000) {
    if (max_new_vertices < 0 || max_new_edges < 0)
        throw std::invalid_argument("complete_to_family_g: negative budget");
    {
        BlockDecomposition bd = blocks(h);
        for (VertexMask b : bd.blocks)
            if (max_degree_in_block(h, b) > 3) return {CompletionResult::Status::DefiniteNo, {}, 0};
    }
    auto identity = [](int n) {
        std::vector<int> inj(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) inj[static_cast<size_t>(i)] = i;
        return inj;
    };
    if (in_family_g(h)) return {CompletionResult::Status::Found, {h, identity(h.n)}, 1};

    // Additions are enumerated in increasing lexicographic order within a
    // state's successors, so each edge set is visited once. Intra-block edges
    // are skipped: once two vertices share a block they always will, and a
    // minimal completed supergraph stays in the family after dropping any
    // intra-block addition, so no minimal witness needs one.
    struct State {
        SimpleGraph graph;
        int new_vertices;
        int new_edges;
        Edge last;
    };
    std::deque<State> queue;
    queue.push_back({h, 0, 0, Edge{-1, -1}});
    long long tried = 1;
    bool truncated = false;
    while (!queue.empty()) {
        State st = std::move(queue.front());
        queue.pop_front();
        if (st.new_edges == max_new_edges) continue;
        std::vector<Edge> candidates;
        {
            BlockDecomposition bd = blocks(st.graph);
            std::vector<int> block_of(static_cast<size_t>(st.graph.n), -1);
            std::vector<int> block_count(static_cast<size_t>(st.graph.n), 0);
            for (size_t bi = 0; bi < bd.blocks.size(); ++bi)
                for (int v : mask_vertices(bd.blocks[bi])) {
                    block_of[static_cast<size_t>(v)] = static_cast<int>(bi);
                    ++block_count[static_cast<size_t>(v)];
                }
            for (int u = 0; u < st.graph.n; ++u)
                for (int v = u + 1; v < st.graph.n; ++v) {
                    if (st.graph.has_edge(u, v)) continue;
                    if (Edge{u, v} <= st.last) continue;
                    if (block_count[static_cast<size_t>(u)] == 1 &&
                        block_count[static_cast<size_t>(v)] == 1 &&
                        block_of[static_cast<size_t>(u)] == block_of[static_cast<size_t>(v)])
                        continue;
                    candidates.emplace_back(u, v);
                }
        }
        if (st.new_vertices < max_new_vertices && st.graph.n < kMaxVertices)
            for (int u = 0; u < st.graph.n; ++u)
                if (Edge{u, st.graph.n} > st.last) candidates.emplace_back(u, st.graph.n);

        for (const Edge& e : candidates) {
            if (tried >= state_cap) {
                truncated = true;
                break;
            }
            ++tried;
            bool fresh_vertex = e.second >= st.graph.n;
            SimpleGraph next(std::max(st.graph.n, e.second + 1), [&] {
                std::vector<Edge> es = st.graph.edges;
                es.push_back(e);
                return es;
            }());
            if (in_family_g(next))
                return {CompletionResult::Status::Found, {next, identity(h.n)}, tried};
            queue.push_back(
                {std::move(next), st.new_vertices + (fresh_vertex ? 1 : 0), st.new_edges + 1, e});
        }
        if (truncated) break;
    }
    return {CompletionResult::Status::BudgetExceeded, {}, tried};
}

}  // namespace gallai

#endif
