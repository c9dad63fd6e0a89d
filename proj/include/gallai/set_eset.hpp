#ifndef GALLAI_SET_ESET_HPP
#define GALLAI_SET_ESET_HPP

#include <array>
#include <optional>
#include <vector>

#include "gallai/decomposition.hpp"
#include "gallai/even_subgraph.hpp"
#include "gallai/graph.hpp"
#include "gallai/solver.hpp"
#include "gallai/transforms.hpp"

namespace gallai {

// SET graph: the E-subgraph is one triangle and every odd vertex sees at
// least two of its corners.
struct SetClassification {
    bool is_set = false;
    std::optional<std::array<int, 3>> triangle_vertices;  // host labels
    VertexMask odd_vertices = 0;
    std::vector<int> even_neighbor_count;  // indexed by vertex, -1 for even vertices
};

inline SetClassification classify_set(const SimpleGraph& g) {
    SetClassification out;
    ESubgraphReport rep = even_subgraph(g);
    out.even_neighbor_count.assign(static_cast<size_t>(g.n), -1);
    bool triangle = ev_is_triangle(rep);
    if (triangle)
        out.triangle_vertices = {rep.back_map[0], rep.back_map[1], rep.back_map[2]};
    bool odd_ok = true;
    for (int v = 0; v < g.n; ++v) {
        if (g.even_vertex(v)) continue;
        out.odd_vertices |= VertexMask{1} << v;
        int cnt = mask_popcount(g.neighbors(v) & rep.even_vertices);
        out.even_neighbor_count[static_cast<size_t>(v)] = cnt;
        if (cnt < 2) odd_ok = false;
    }
    out.is_set = triangle && odd_ok;
    if (out.is_set && g.n % 2 == 0)
        throw std::logic_error("SET graph of even order: parity argument broken");
    return out;
}

struct EsetClassification {
    enum class Kind { TypeSet, TypeAugmented, NotEset } kind = Kind::NotEset;
    VertexMask connection_vertices = 0;
    int augment_vertex = -1;                       // smallest qualifying z
    std::optional<InducedSubgraph> base_set_graph;  // g minus that z
};

// A SET graph (every vertex connects), or a SET graph with one extra degree-2
// vertex z adjacent to an odd and an even vertex of it (z connects).
inline EsetClassification classify_eset(const SimpleGraph& g) {
    EsetClassification out;
    if (classify_set(g).is_set) {
        out.kind = EsetClassification::Kind::TypeSet;
        out.connection_vertices = g.all_vertices();
        return out;
    }
    for (int z = 0; z < g.n; ++z) {
        if (g.degree(z) != 2) continue;
        InducedSubgraph rest = induced_subgraph(g, g.all_vertices() & ~(VertexMask{1} << z));
        if (!classify_set(rest.graph).is_set) continue;
        auto nb = mask_vertices(g.neighbors(z));
        int odd_nb = 0, even_nb = 0;
        for (int w : nb) {
            int w_local = static_cast<int>(std::lower_bound(rest.back_map.begin(), rest.back_map.end(), w) -
                                           rest.back_map.begin());
            (rest.graph.even_vertex(w_local) ? even_nb : odd_nb)++;
        }
        if (odd_nb == 1 && even_nb == 1) {
            out.connection_vertices |= VertexMask{1} << z;
            if (out.augment_vertex < 0) {
                out.augment_vertex = z;
                out.base_set_graph = std::move(rest);
            }
        }
    }
    if (out.augment_vertex >= 0) out.kind = EsetClassification::Kind::TypeAugmented;
    return out;
}

namespace detail_eset {
inline int local_id(const std::vector<int>& back_map, int host) {
    return static_cast<int>(std::lower_bound(back_map.begin(), back_map.end(), host) - back_map.begin());
}
}  // namespace detail_eset

inline PathDecomposition eset_decompose_augmented(const SimpleGraph& k, int z,
                                                  const InducedSubgraph& rest, long long timeout_ms);

// Decomposition of an ESET graph with at least two paths ending at the given
// connection vertex and at most ceil(n/2) paths in total. Follows the
// constructive proof: strip the pivot's even edges, solve the remainder
// (one even vertex left, so it stays under floor(n/2)), re-add the bulk in
// one addible set and at most one leftover edge as a bare path; the
// augmented type extends two paths of the inner graph through z.
inline PathDecomposition eset_decompose(const SimpleGraph& k, int u, long long timeout_ms = 10000) {
    k.check_vertex(u);
    EsetClassification cls = classify_eset(k);
    if (cls.kind == EsetClassification::Kind::NotEset)
        throw std::invalid_argument("eset_decompose: not an ESET graph");
    if (!((cls.connection_vertices >> u) & 1))
        throw std::invalid_argument("eset_decompose: u is not a connection vertex");

    PathDecomposition result;
    if (cls.kind == EsetClassification::Kind::TypeSet) {
        ESubgraphReport rep = even_subgraph(k);
        std::vector<Edge> s;
        for (int w : mask_vertices(k.neighbors(u) & rep.even_vertices)) s.push_back(make_edge(u, w));
        SimpleGraph inner = k.without_edges(s);
        // the stripped graph keeps a single even vertex, so floor(n/2) paths
        // always suffice; any decomposition that size feeds the lift
        AtMostResult base = pn_at_most(inner, k.n / 2, timeout_ms);
        if (base.status == AtMostResult::Status::Timeout)
            throw SolverTimeout("eset_decompose: inner solve timed out");
        if (base.status == AtMostResult::Status::No)
            throw std::logic_error("eset_decompose: inner graph exceeded floor(n/2) paths");
        Fan4Result lift = addible_half_fan4(k, u, s, s.front(), base.witness, timeout_ms);
        result = lift.certificate.after;
        std::vector<Edge> leftover;
        for (const Edge& e : s)
            if (std::find(lift.addible_set.begin(), lift.addible_set.end(), e) == lift.addible_set.end())
                leftover.push_back(e);
        if (leftover.size() > 1)
            throw std::logic_error("eset_decompose: more than one leftover edge after fan4");
        for (const Edge& e : leftover) result.paths.emplace_back(std::vector<int>{e.first, e.second});
        result.recount(k.n);
    } else {
        const InducedSubgraph& base = *cls.base_set_graph;
        if (u != cls.augment_vertex) {
            // u qualifies on its own; rebuild the classification around it
            InducedSubgraph rest = induced_subgraph(k, k.all_vertices() & ~(VertexMask{1} << u));
            return eset_decompose_augmented(k, u, rest, timeout_ms);
        }
        return eset_decompose_augmented(k, u, base, timeout_ms);
    }

    if (result.endpoint_count(u) < 2)
        throw std::logic_error("eset_decompose: fewer than two paths end at the connection vertex");
    if (result.size() > (k.n + 1) / 2)
        throw std::logic_error("eset_decompose: exceeded ceil(n/2) paths");
    return result;
}

inline PathDecomposition eset_decompose_augmented(const SimpleGraph& k, int z,
                                                  const InducedSubgraph& rest, long long timeout_ms) {
    auto nb = mask_vertices(k.neighbors(z));
    int odd_host = -1, even_host = -1;
    for (int w : nb) {
        int wl = detail_eset::local_id(rest.back_map, w);
        if (rest.graph.even_vertex(wl))
            even_host = w;
        else
            odd_host = w;
    }
    PathDecomposition inner = eset_decompose(rest.graph, detail_eset::local_id(rest.back_map, even_host),
                                             timeout_ms);
    // back to host labels
    PathDecomposition d;
    for (const PathSeq& p : inner.paths) {
        std::vector<int> mapped;
        for (int v : p.vertices) mapped.push_back(rest.back_map[static_cast<size_t>(v)]);
        d.paths.emplace_back(std::move(mapped));
    }
    d.recount(k.n);

    int px = -1, py = -1;
    for (size_t i = 0; i < d.paths.size(); ++i)
        if (d.paths[i].ends_at(odd_host)) {
            px = static_cast<int>(i);
            break;
        }
    for (size_t i = 0; i < d.paths.size(); ++i)
        if (static_cast<int>(i) != px && d.paths[i].ends_at(even_host)) {
            py = static_cast<int>(i);
            break;
        }
    if (px < 0 || py < 0)
        throw std::logic_error("eset_decompose: inner decomposition misses the promised path ends");
    auto extend = [&](PathSeq& p, int at) {
        if (p.vertices.back() == at)
            p.vertices.push_back(z);
        else
            p.vertices.insert(p.vertices.begin(), z);
    };
    extend(d.paths[static_cast<size_t>(px)], odd_host);
    extend(d.paths[static_cast<size_t>(py)], even_host);
    d.recount(k.n);
    if (d.endpoint_count(z) < 2) throw std::logic_error("eset_decompose: z did not get two path ends");
    if (d.size() > (k.n + 1) / 2) throw std::logic_error("eset_decompose: exceeded ceil(n/2) paths");
    return d;
}

namespace detail_eset {

// Splice two halves of an outside path (each ending at u, possibly one
// empty) onto two u-ended paths of a decomposition without changing the
// count.
inline PathDecomposition glue_at(const PathDecomposition& dk, int u, std::vector<int> half1,
                                 std::vector<int> half2, int host_n) {
    int q1 = -1, q2 = -1;
    for (size_t i = 0; i < dk.paths.size(); ++i) {
        if (!dk.paths[i].ends_at(u)) continue;
        if (q1 < 0)
            q1 = static_cast<int>(i);
        else if (q2 < 0) {
            q2 = static_cast<int>(i);
            break;
        }
    }
    if (q1 < 0 || (q2 < 0 && !half2.empty()))
        throw std::logic_error("glue_at: not enough u-ended paths to absorb both halves");
    auto splice = [&](const PathSeq& q, const std::vector<int>& half) {
        // half runs ...->u; q runs u->... after orientation
        std::vector<int> qs = q.vertices;
        if (qs.front() != u) std::reverse(qs.begin(), qs.end());
        std::vector<int> out = half;  // ends at u
        out.insert(out.end(), qs.begin() + 1, qs.end());
        return PathSeq(std::move(out));
    };
    PathDecomposition out;
    for (size_t i = 0; i < dk.paths.size(); ++i) {
        if (static_cast<int>(i) == q1 && !half1.empty())
            out.paths.push_back(splice(dk.paths[i], half1));
        else if (static_cast<int>(i) == q2 && !half2.empty())
            out.paths.push_back(splice(dk.paths[i], half2));
        else
            out.paths.push_back(dk.paths[i]);
    }
    out.recount(host_n);
    return out;
}

}  // namespace detail_eset

// Absorbs a path meeting the ESET graph k exactly at connection vertex u.
// Path vertices outside k must use ids k.n .. k.n+t-1; the result decomposes
// the union graph in at most ceil(|V(k)|/2) paths.
inline PathDecomposition absorb_path(const SimpleGraph& k, int u, const PathSeq& p,
                                     long long timeout_ms = 10000) {
    if (p.vertices.size() < 2) throw std::invalid_argument("absorb_path: path carries no edge");
    bool met_u = false;
    VertexMask outside = 0;
    for (int v : p.vertices) {
        if (v == u)
            met_u = true;
        else if (v < k.n)
            throw std::invalid_argument("absorb_path: path touches k at " + std::to_string(v));
        else
            outside |= VertexMask{1} << v;
    }
    if (!met_u) throw std::invalid_argument("absorb_path: path misses u");
    int host_n = k.n + mask_popcount(outside);
    for (int v : mask_vertices(outside))
        if (v >= host_n) throw std::invalid_argument("absorb_path: path vertex ids must be contiguous");

    SimpleGraph host = SimpleGraph(host_n, [&] {
        std::vector<Edge> es = k.edges;
        for (const Edge& e : p.edge_set()) es.push_back(e);
        return es;
    }());

    PathDecomposition dk = eset_decompose(k, u, timeout_ms);
    auto pos = std::find(p.vertices.begin(), p.vertices.end(), u);
    std::vector<int> half1(p.vertices.begin(), pos + 1);               // ...-> u
    std::vector<int> half2(pos, p.vertices.end());                     // u -> ...
    std::reverse(half2.begin(), half2.end());                          // now ...-> u
    if (half1.size() < 2) half1.clear();
    if (half2.size() < 2) half2.clear();
    PathDecomposition out = detail_eset::glue_at(dk, u, half1, half2, host_n);
    if (out.size() > (k.n + 1) / 2)
        throw std::logic_error("absorb_path: exceeded ceil(|V(k)|/2) paths");
    if (!is_valid(host, out)) throw std::logic_error("absorb_path: produced an invalid decomposition");
    return out;
}

struct HangingEset {
    VertexMask k_vertices = 0;
    int attach_vertex = -1;
    EsetClassification classification;
};

// All induced ESET subgraphs meeting the rest of g in exactly one vertex
// that is one of their connection vertices. Candidates are unions of
// components hanging off a single vertex, so the block-cut structure does
// the delimiting.
inline std::vector<HangingEset> find_hanging_eset(const SimpleGraph& g) {
    std::vector<HangingEset> out;
    for (int u = 0; u < g.n; ++u) {
        SimpleGraph cut = restrict_edges(g, g.all_vertices() & ~(VertexMask{1} << u));
        std::vector<VertexMask> adj_comps;
        for (VertexMask c : components(cut))
            if (c & g.neighbors(u)) adj_comps.push_back(c);
        int t = static_cast<int>(adj_comps.size());
        if (t < 2 || t > 16) continue;
        for (unsigned pick = 1; pick + 1 < (1u << t); ++pick) {
            VertexMask kmask = VertexMask{1} << u;
            for (int i = 0; i < t; ++i)
                if ((pick >> i) & 1) kmask |= adj_comps[static_cast<size_t>(i)];
            InducedSubgraph ind = induced_subgraph(g, kmask);
            EsetClassification cls = classify_eset(ind.graph);
            if (cls.kind == EsetClassification::Kind::NotEset) continue;
            int u_local = detail_eset::local_id(ind.back_map, u);
            if (!((cls.connection_vertices >> u_local) & 1)) continue;
            out.push_back({kmask, u, std::move(cls)});
        }
    }
    return out;
}

// Absorbs a hanging ESET subgraph: decompose it with two path ends at
// u, split the rest's path through u, and splice. Comes in at most
// ceil(|K|/2) + |rest| - 1 paths. With u in no rest path the pieces are just
// concatenated (one path more than that bound, which needs a path through
// u to splice into).
inline PathDecomposition absorb_hanging(const SimpleGraph& g, VertexMask k_vertices, int u,
                                        const PathDecomposition& rest, long long timeout_ms = 10000) {
    VertexMask private_part = k_vertices & ~(VertexMask{1} << u);
    SimpleGraph gprime = restrict_edges(g, g.all_vertices() & ~private_part);
    if (!is_valid(gprime, rest))
        throw std::invalid_argument("absorb_hanging: rest decomposition invalid on g minus K");

    InducedSubgraph kind = induced_subgraph(g, k_vertices);
    int u_local = detail_eset::local_id(kind.back_map, u);
    PathDecomposition dk_local = eset_decompose(kind.graph, u_local, timeout_ms);
    PathDecomposition dk;
    for (const PathSeq& p : dk_local.paths) {
        std::vector<int> mapped;
        for (int v : p.vertices) mapped.push_back(kind.back_map[static_cast<size_t>(v)]);
        dk.paths.emplace_back(std::move(mapped));
    }
    dk.recount(g.n);

    int through = -1;
    for (size_t i = 0; i < rest.paths.size(); ++i)
        if (rest.paths[i].contains(u)) {
            through = static_cast<int>(i);
            break;
        }

    PathDecomposition out;
    if (through < 0) {
        out = dk;
        for (const PathSeq& p : rest.paths) out.paths.push_back(p);
        out.recount(g.n);
    } else {
        const PathSeq& p = rest.paths[static_cast<size_t>(through)];
        auto pos = std::find(p.vertices.begin(), p.vertices.end(), u);
        std::vector<int> half1(p.vertices.begin(), pos + 1);
        std::vector<int> half2(pos, p.vertices.end());
        std::reverse(half2.begin(), half2.end());
        if (half1.size() < 2) half1.clear();
        if (half2.size() < 2) half2.clear();
        out = detail_eset::glue_at(dk, u, half1, half2, g.n);
        for (size_t i = 0; i < rest.paths.size(); ++i)
            if (static_cast<int>(i) != through) out.paths.push_back(rest.paths[i]);
        out.recount(g.n);
        int kn = mask_popcount(k_vertices);
        if (out.size() > (kn + 1) / 2 + rest.size() - 1)
            throw std::logic_error("absorb_hanging: exceeded the absorption bound");
    }
    if (!is_valid(g, out)) throw std::logic_error("absorb_hanging: produced an invalid decomposition");
    return out;
}

}  // namespace gallai

#endif
