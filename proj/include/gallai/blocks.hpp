#ifndef GALLAI_BLOCKS_HPP
#define GALLAI_BLOCKS_HPP

#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

// Biconnected-component decomposition. A bridge is a 2-vertex block and an
// isolated vertex is a 1-vertex block, so every vertex and every edge lands
// in at least one block and every edge in exactly one.
struct BlockDecomposition {
    std::vector<VertexMask> blocks;
    VertexMask cut_vertices = 0;
    std::vector<int> leaf_block_indices;  // blocks containing <= 1 cut vertex

    bool is_leaf_block(int idx) const {
        return mask_popcount(blocks[static_cast<size_t>(idx)] & cut_vertices) <= 1;
    }
};

// Iterative Hopcroft-Tarjan lowpoint traversal with an edge stack.
inline BlockDecomposition blocks(const SimpleGraph& g) {
    BlockDecomposition out;
    const int n = g.n;
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<int> child_count(static_cast<size_t>(n), 0);
    std::vector<Edge> edge_stack;
    int timer = 0;

    struct Frame {
        int v;
        VertexMask pending;  // neighbors not yet processed
    };

    for (int root = 0; root < n; ++root) {
        if (disc[static_cast<size_t>(root)] != -1) continue;
        if (g.degree(root) == 0) {
            out.blocks.push_back(VertexMask{1} << root);
            disc[static_cast<size_t>(root)] = timer++;
            continue;
        }
        std::vector<Frame> stack;
        disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
        stack.push_back({root, g.neighbors(root)});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.pending) {
                int w = std::countr_zero(f.pending);
                f.pending &= f.pending - 1;
                if (disc[static_cast<size_t>(w)] == -1) {
                    parent[static_cast<size_t>(w)] = f.v;
                    ++child_count[static_cast<size_t>(f.v)];
                    edge_stack.push_back(make_edge(f.v, w));
                    disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
                    stack.push_back({w, g.neighbors(w)});
                } else if (w != parent[static_cast<size_t>(f.v)] &&
                           disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(f.v)]) {
                    edge_stack.push_back(make_edge(f.v, w));
                    low[static_cast<size_t>(f.v)] =
                        std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(w)]);
                }
                continue;
            }
            int v = f.v;
            stack.pop_back();
            if (stack.empty()) break;
            int u = stack.back().v;
            low[static_cast<size_t>(u)] = std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(v)]);
            if (low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(u)]) {
                // u closes a block; pop its edges
                VertexMask block = 0;
                Edge top = make_edge(u, v);
                while (true) {
                    Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block |= VertexMask{1} << e.first;
                    block |= VertexMask{1} << e.second;
                    if (e == top) break;
                }
                out.blocks.push_back(block);
                // non-root head of a closed block is an articulation vertex
                if (parent[static_cast<size_t>(u)] != -1)
                    out.cut_vertices |= VertexMask{1} << u;
            }
        }
        // a root separates iff it has two or more DFS children
        if (child_count[static_cast<size_t>(root)] >= 2)
            out.cut_vertices |= VertexMask{1} << root;
    }

    for (size_t i = 0; i < out.blocks.size(); ++i)
        if (out.is_leaf_block(static_cast<int>(i)))
            out.leaf_block_indices.push_back(static_cast<int>(i));
    return out;
}

// Degree of v inside one block: both endpoints in the block means the edge
// belongs to that block (two blocks share at most one vertex).
inline int degree_in_block(const SimpleGraph& g, VertexMask block, int v) {
    if (!((block >> v) & 1)) return 0;
    return mask_popcount(g.neighbors(v) & block);
}

inline int max_degree_in_block(const SimpleGraph& g, VertexMask block) {
    int best = 0;
    for (int v : mask_vertices(block)) best = std::max(best, degree_in_block(g, block, v));
    return best;
}

inline bool block_contains_triangle(const SimpleGraph& g, VertexMask block) {
    std::vector<int> vs = mask_vertices(block);
    for (size_t a = 0; a < vs.size(); ++a)
        for (size_t b = a + 1; b < vs.size(); ++b) {
            if (!g.has_edge(vs[a], vs[b])) continue;
            VertexMask common = g.neighbors(vs[a]) & g.neighbors(vs[b]) & block;
            if (common) return true;
        }
    return false;
}

}  // namespace gallai

#endif
