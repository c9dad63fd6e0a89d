#ifndef GALLAI_EVEN_SUBGRAPH_HPP
#define GALLAI_EVEN_SUBGRAPH_HPP

#include <vector>

#include "gallai/blocks.hpp"
#include "gallai/graph.hpp"

namespace gallai {

// The E-subgraph: the subgraph induced by the even-degree vertices of the
// host. ev_graph is relabeled 0..k-1 with back_map into host ids.
struct ESubgraphReport {
    VertexMask even_vertices = 0;
    SimpleGraph ev_graph;
    std::vector<int> back_map;
    int max_e_degree = 0;

    struct ComponentSummary {
        int vertex_count = 0;
        int block_count = 0;
        int triangle_block_count = 0;
        int max_degree = 0;
    };
    std::vector<ComponentSummary> component_summaries;
};

inline ESubgraphReport even_subgraph(const SimpleGraph& g) {
    ESubgraphReport rep;
    for (int v = 0; v < g.n; ++v)
        if (g.even_vertex(v)) rep.even_vertices |= VertexMask{1} << v;
    auto sub = induced_subgraph(g, rep.even_vertices);
    rep.ev_graph = std::move(sub.graph);
    rep.back_map = std::move(sub.back_map);
    for (int v = 0; v < rep.ev_graph.n; ++v)
        rep.max_e_degree = std::max(rep.max_e_degree, rep.ev_graph.degree(v));
    for (VertexMask comp : components(rep.ev_graph)) {
        auto part = induced_subgraph(rep.ev_graph, comp);
        BlockDecomposition bd = blocks(part.graph);
        ESubgraphReport::ComponentSummary s;
        s.vertex_count = part.graph.n;
        s.block_count = static_cast<int>(bd.blocks.size());
        for (VertexMask b : bd.blocks)
            if (block_contains_triangle(part.graph, b)) ++s.triangle_block_count;
        for (int v = 0; v < part.graph.n; ++v) s.max_degree = std::max(s.max_degree, part.graph.degree(v));
        rep.component_summaries.push_back(s);
    }
    return rep;
}

// True iff the E-subgraph is a single triangle component set: used by the SET
// test. Exactly three even vertices, pairwise adjacent.
inline bool ev_is_triangle(const ESubgraphReport& rep) {
    return rep.ev_graph.n == 3 && rep.ev_graph.edge_count() == 3;
}

}  // namespace gallai

#endif
