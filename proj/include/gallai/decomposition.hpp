#ifndef GALLAI_DECOMPOSITION_HPP
#define GALLAI_DECOMPOSITION_HPP

#include <algorithm>
#include <atomic>
#include <map>
#include <string>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

// A path is a sequence of at least two distinct vertices; paths are
// undirected, so the canonical orientation puts the smaller endpoint first.
struct PathSeq {
    std::vector<int> vertices;

    PathSeq() = default;
    explicit PathSeq(std::vector<int> vs) : vertices(std::move(vs)) {}

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    int front() const { return vertices.front(); }
    int back() const { return vertices.back(); }

    bool ends_at(int v) const { return front() == v || back() == v; }
    bool contains(int v) const {
        return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
    }

    PathSeq oriented() const {
        PathSeq p = *this;
        if (!p.vertices.empty() && p.vertices.front() > p.vertices.back())
            std::reverse(p.vertices.begin(), p.vertices.end());
        return p;
    }

    std::vector<Edge> edge_set() const {
        std::vector<Edge> es;
        for (size_t i = 0; i + 1 < vertices.size(); ++i)
            es.push_back(make_edge(vertices[i], vertices[i + 1]));
        return es;
    }

    bool operator==(const PathSeq& o) const { return vertices == o.vertices; }
};

struct Violation {
    int path_index;  // -1 for decomposition-level problems
    std::string reason;
};

// Edge-disjoint paths covering the host's edge set. endpoint_counts caches
// D(u), the number of paths ending at u.
struct PathDecomposition {
    std::vector<PathSeq> paths;
    std::vector<int> endpoint_counts;

    PathDecomposition() = default;
    PathDecomposition(const SimpleGraph& host, std::vector<PathSeq> ps) : paths(std::move(ps)) {
        recount(host.n);
    }

    int size() const { return static_cast<int>(paths.size()); }

    void recount(int n) {
        endpoint_counts.assign(static_cast<size_t>(n), 0);
        for (const PathSeq& p : paths) {
            if (p.vertices.size() < 2) continue;
            ++endpoint_counts[static_cast<size_t>(p.front())];
            ++endpoint_counts[static_cast<size_t>(p.back())];
        }
    }

    int endpoint_count(int u) const {
        if (u < 0 || u >= static_cast<int>(endpoint_counts.size()))
            throw std::out_of_range("endpoint_count: unknown vertex " + std::to_string(u));
        return endpoint_counts[static_cast<size_t>(u)];
    }

    // deterministic order: orient every path, sort lexicographically
    void canonicalize() {
        for (PathSeq& p : paths) p = p.oriented();
        std::sort(paths.begin(), paths.end(),
                  [](const PathSeq& a, const PathSeq& b) { return a.vertices < b.vertices; });
    }
};

inline std::vector<Violation> validate(const SimpleGraph& g, const PathDecomposition& d) {
    std::vector<Violation> out;
    std::map<Edge, int> owner;
    for (size_t pi = 0; pi < d.paths.size(); ++pi) {
        const PathSeq& p = d.paths[pi];
        int idx = static_cast<int>(pi);
        if (p.vertices.size() < 2) {
            out.push_back({idx, "path has no edge"});
            continue;
        }
        VertexMask seen = 0;
        bool dup = false;
        for (int v : p.vertices) {
            if (v < 0 || v >= g.n) {
                out.push_back({idx, "vertex " + std::to_string(v) + " outside host"});
                dup = true;
                break;
            }
            if ((seen >> v) & 1) {
                out.push_back({idx, "repeated vertex " + std::to_string(v)});
                dup = true;
                break;
            }
            seen |= VertexMask{1} << v;
        }
        if (dup) continue;
        for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
            int a = p.vertices[i], b = p.vertices[i + 1];
            if (!g.has_edge(a, b)) {
                out.push_back({idx, "missing host edge " + std::to_string(a) + "-" + std::to_string(b)});
                continue;
            }
            Edge e = make_edge(a, b);
            auto [it, fresh] = owner.emplace(e, idx);
            if (!fresh)
                out.push_back({idx, "edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                                        " already used by path " + std::to_string(it->second)});
        }
    }
    for (const Edge& e : g.edges)
        if (!owner.count(e))
            out.push_back({-1, "edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                                   " uncovered"});
    return out;
}

inline bool is_valid(const SimpleGraph& g, const PathDecomposition& d) {
    return validate(g, d).empty();
}

// Neighbors of u that no path ends at; the targets fan-style edge additions
// must avoid.
inline VertexMask passing_neighbors(const SimpleGraph& g, const PathDecomposition& d, int u) {
    g.check_vertex(u);
    VertexMask out = 0;
    VertexMask nb = g.neighbors(u);
    while (nb) {
        int v = std::countr_zero(nb);
        nb &= nb - 1;
        if (d.endpoint_count(v) == 0) out |= VertexMask{1} << v;
    }
    return out;
}

// Contract every emitted decomposition must meet: validity, the degree
// parity congruence D(u) = d(u) mod 2, and sum D(u) = 2 |paths|. Call sites
// that produce decompositions route them through here; the counter lets
// suites report how many went through.
inline std::atomic<long long> decomposition_contract_checks{0};

inline void assert_decomposition_contract(const SimpleGraph& g, const PathDecomposition& d) {
    auto bad = validate(g, d);
    if (!bad.empty())
        throw std::logic_error("decomposition contract: invalid (" + bad.front().reason + ")");
    // recount from the paths; the cache must agree
    std::vector<int> fresh(static_cast<size_t>(g.n), 0);
    for (const PathSeq& p : d.paths) {
        ++fresh[static_cast<size_t>(p.front())];
        ++fresh[static_cast<size_t>(p.back())];
    }
    long long sum = 0;
    for (int v = 0; v < g.n; ++v) {
        int du = fresh[static_cast<size_t>(v)];
        if (du != d.endpoint_count(v))
            throw std::logic_error("decomposition contract: stale endpoint cache at vertex " +
                                   std::to_string(v));
        sum += du;
        if ((g.degree(v) - du) % 2 != 0)
            throw std::logic_error("decomposition contract: parity broken at vertex " + std::to_string(v));
        if (g.degree(v) % 2 == 1 && du < 1)
            throw std::logic_error("decomposition contract: odd vertex " + std::to_string(v) +
                                   " ends no path");
    }
    if (sum != 2LL * d.size())
        throw std::logic_error("decomposition contract: endpoint sum mismatch");
    decomposition_contract_checks.fetch_add(1, std::memory_order_relaxed);
}

enum class GallaiStatus { Gallai, CeilingOnly, Violation };

inline GallaiStatus gallai_status(int n, int pn) {
    if (n < 1 || pn < 0) throw std::invalid_argument("gallai_status: bad arguments");
    if (pn <= n / 2) return GallaiStatus::Gallai;
    if (pn == (n + 1) / 2 && n % 2 == 1) return GallaiStatus::CeilingOnly;
    return GallaiStatus::Violation;
}

inline const char* to_string(GallaiStatus s) {
    switch (s) {
        case GallaiStatus::Gallai: return "gallai";
        case GallaiStatus::CeilingOnly: return "ceiling-only";
        case GallaiStatus::Violation: return "violation";
    }
    return "?";
}

}  // namespace gallai

#endif
