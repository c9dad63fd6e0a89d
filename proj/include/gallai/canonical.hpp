#ifndef GALLAI_CANONICAL_HPP
#define GALLAI_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/io.hpp"

namespace gallai {

// Canonical forms minimize the column-order upper-triangle bit string over
// all vertex permutations (the same bit order graph6 uses). Exhaustive, so
// keep it to n <= 9.
inline constexpr int kCanonicalMaxN = 9;

namespace detail {

// column j as a j-bit integer, bit (i,j) at weight 2^(j-1-i)
inline std::uint32_t column_bits(const SimpleGraph& g, const std::vector<int>& perm, int j) {
    std::uint32_t c = 0;
    for (int i = 0; i < j; ++i)
        c = (c << 1) | (g.has_edge(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]) ? 1u : 0u);
    return c;
}

struct CanonSearch {
    const SimpleGraph& g;
    std::vector<std::uint32_t> best;   // best column string found so far
    std::vector<int> best_perm;
    std::vector<std::uint32_t> cols;
    std::vector<int> perm;
    VertexMask used = 0;

    explicit CanonSearch(const SimpleGraph& gr)
        : g(gr),
          best(static_cast<size_t>(gr.n), ~0u),
          cols(static_cast<size_t>(gr.n), 0),
          perm(static_cast<size_t>(gr.n), -1) {}

    void run(int depth, bool tight) {
        if (depth == g.n) {
            if (best_perm.empty() || cols < best) {
                best = cols;
                best_perm = perm;
            }
            return;
        }
        for (int v = 0; v < g.n; ++v) {
            if ((used >> v) & 1) continue;
            perm[static_cast<size_t>(depth)] = v;
            std::uint32_t c = column_bits(g, perm, depth);
            if (tight && c > best[static_cast<size_t>(depth)]) continue;
            cols[static_cast<size_t>(depth)] = c;
            used |= VertexMask{1} << v;
            run(depth + 1, tight && c == best[static_cast<size_t>(depth)]);
            used &= ~(VertexMask{1} << v);
        }
    }
};

}  // namespace detail

// Relabeling of g that realizes the minimum bit string. Isomorphic graphs map
// to equal graphs here.
inline SimpleGraph canonical_graph(const SimpleGraph& g) {
    if (g.n > kCanonicalMaxN)
        throw std::invalid_argument("canonical_form limited to n <= " + std::to_string(kCanonicalMaxN));
    if (g.n <= 1) return g;
    detail::CanonSearch s(g);
    s.run(0, true);
    // best_perm[pos] = original vertex placed at pos; permute wants old -> new
    std::vector<int> relabel(static_cast<size_t>(g.n), 0);
    for (int pos = 0; pos < g.n; ++pos) relabel[static_cast<size_t>(s.best_perm[static_cast<size_t>(pos)])] = pos;
    return permute(g, relabel);
}

// Byte string that is equal across a whole isomorphism class: the graph6
// encoding of the canonical relabeling.
inline std::string canonical_form(const SimpleGraph& g) {
    return emit_graph6(canonical_graph(g));
}

// Does g already carry the minimal labeling? Cheap early-out used by the
// exhaustive enumerator: walks permutations and bails on the first one that
// lowers the string.
inline bool is_canonical_labeling(const SimpleGraph& g) {
    if (g.n > kCanonicalMaxN)
        throw std::invalid_argument("canonicity test limited to n <= " + std::to_string(kCanonicalMaxN));
    if (g.n <= 1) return true;
    std::vector<std::uint32_t> ref(static_cast<size_t>(g.n), 0);
    std::vector<int> ident(static_cast<size_t>(g.n));
    for (int v = 0; v < g.n; ++v) ident[static_cast<size_t>(v)] = v;
    for (int j = 0; j < g.n; ++j) ref[static_cast<size_t>(j)] = detail::column_bits(g, ident, j);

    std::vector<int> perm(static_cast<size_t>(g.n), -1);
    VertexMask used = 0;
    bool reducible = false;
    auto dfs = [&](auto&& self, int depth) -> void {
        if (reducible) return;
        if (depth == g.n) return;  // equal string all the way: an automorphism
        for (int v = 0; v < g.n && !reducible; ++v) {
            if ((used >> v) & 1) continue;
            perm[static_cast<size_t>(depth)] = v;
            std::uint32_t c = detail::column_bits(g, perm, depth);
            if (c > ref[static_cast<size_t>(depth)]) continue;
            if (c < ref[static_cast<size_t>(depth)]) {
                reducible = true;
                return;
            }
            used |= VertexMask{1} << v;
            self(self, depth + 1);
            used &= ~(VertexMask{1} << v);
        }
    };
    dfs(dfs, 0);
    return !reducible;
}

// Dedup key that also works past the exact range: exact canonical form when
// it fits, otherwise (n, m, degree multiset) marked as heuristic.
inline std::string isomorphism_digest(const SimpleGraph& g) {
    if (g.n <= kCanonicalMaxN) return canonical_form(g);
    std::vector<int> degs;
    degs.reserve(static_cast<size_t>(g.n));
    for (int v = 0; v < g.n; ++v) degs.push_back(g.degree(v));
    std::sort(degs.begin(), degs.end());
    std::string s = "h:" + std::to_string(g.n) + ":" + std::to_string(g.edge_count()) + ":";
    for (int d : degs) s += std::to_string(d) + ",";
    return s;
}

}  // namespace gallai

#endif
