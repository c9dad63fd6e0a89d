#ifndef GALLAI_SOLVER_HPP
#define GALLAI_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "gallai/decomposition.hpp"
#include "gallai/graph.hpp"

namespace gallai {

// ceil(odd/2), ceil(m/(n-1)) and the odd-semi-clique bound, whichever bites.
inline int pn_lower_bound(const SimpleGraph& g) {
    int odd = 0;
    for (int v = 0; v < g.n; ++v)
        if (!g.even_vertex(v)) ++odd;
    int lb = (odd + 1) / 2;
    if (g.n >= 2 && g.edge_count() > 0)
        lb = std::max(lb, (g.edge_count() + g.n - 2) / (g.n - 1));
    if (is_odd_semi_clique(g)) lb = std::max(lb, (g.n + 1) / 2);
    return lb;
}

struct SolveResult {
    int pn = 0;  // exact when !timed_out, else best path count found
    PathDecomposition witness;
    long long nodes_explored = 0;
    bool timed_out = false;
    int best_lower_bound = 0;
};

// Exact per-vertex endpoint targets plus an exact total path count; solver
// searches for any decomposition matching them.
struct EndpointConstraint {
    std::vector<std::optional<int>> target;
    int total_paths = 0;
};

namespace detail {

// Branch-and-bound over the lowest-indexed uncovered edge. Each placement
// either extends an open path end, joins two open paths, or opens a new
// path, so every decomposition is reachable exactly once (a target path's
// already-placed edges form segments; the next edge touches 0, 1 or 2 of
// them).
class EdgePathSearch {
  public:
    EdgePathSearch(const SimpleGraph& g, long long timeout_ms)
        : g_(g),
          deadline_(std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms)),
          open_ends_(static_cast<size_t>(g.n), 0),
          residual_deg_(static_cast<size_t>(g.n), 0) {
        m_ = g.edge_count();
        if (m_ > 64) throw std::invalid_argument("exact solver limited to 64 edges per search");
        full_ = m_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m_) - 1;
        for (int v = 0; v < g.n; ++v) residual_deg_[static_cast<size_t>(v)] = g.degree(v);
    }

    // minimization; stop_at_upper >= 0 allows an early exit once the
    // incumbent is at least that good (for "pn <= k" questions)
    SolveResult minimize(int root_lower_bound, int stop_at_upper = -1) {
        root_lb_ = root_lower_bound;
        stop_at_upper_ = stop_at_upper;
        seed_greedy();
        if (!done_ && best_count_ > root_lb_) dfs_min();
        SolveResult r;
        r.pn = best_count_;
        r.witness = snapshot(best_paths_);
        r.nodes_explored = nodes_;
        r.timed_out = timed_out_;
        r.best_lower_bound = timed_out_ ? root_lb_ : best_count_;
        if (done_ && stop_at_upper_ >= 0) r.best_lower_bound = root_lb_;  // not proven minimal
        return r;
    }

    enum class ConstrainedStatus { Found, NotFound, Timeout };
    struct ConstrainedResult {
        ConstrainedStatus status;
        PathDecomposition decomposition;
        long long nodes = 0;
    };

    ConstrainedResult constrained(const EndpointConstraint& c, long long max_nodes = -1) {
        max_nodes_ = max_nodes;
        constraint_ = &c;
        targets_.assign(static_cast<size_t>(g_.n), -1);
        for (int v = 0; v < g_.n; ++v) {
            if (v < static_cast<int>(c.target.size()) && c.target[static_cast<size_t>(v)]) {
                int t = *c.target[static_cast<size_t>(v)];
                if (t < 0 || t > g_.degree(v) || (g_.degree(v) - t) % 2 != 0)
                    return {ConstrainedStatus::NotFound, {}, 0};
                targets_[static_cast<size_t>(v)] = t;
            }
        }
        long long spec_sum = 0;
        bool all_specified = true;
        for (int v = 0; v < g_.n; ++v) {
            if (targets_[static_cast<size_t>(v)] >= 0)
                spec_sum += targets_[static_cast<size_t>(v)];
            else
                all_specified = false;
        }
        if (spec_sum > 2LL * c.total_paths || (all_specified && spec_sum != 2LL * c.total_paths))
            return {ConstrainedStatus::NotFound, {}, 0};
        if (c.total_paths == 0)
            return {m_ == 0 ? ConstrainedStatus::Found : ConstrainedStatus::NotFound, {}, 0};
        dfs_constrained();
        if (found_) return {ConstrainedStatus::Found, snapshot(best_paths_), nodes_};
        return {timed_out_ ? ConstrainedStatus::Timeout : ConstrainedStatus::NotFound, {}, nodes_};
    }

  private:
    struct OpenPath {
        std::vector<int> seq;
        VertexMask mask = 0;
    };

    const SimpleGraph& g_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<int> open_ends_, residual_deg_;
    std::vector<OpenPath> paths_;
    std::uint64_t covered_ = 0, full_ = 0;
    int m_ = 0;
    long long nodes_ = 0, max_nodes_ = -1;
    bool timed_out_ = false, done_ = false, found_ = false;

    int root_lb_ = 0, stop_at_upper_ = -1;
    int best_count_ = 0;
    std::vector<OpenPath> best_paths_;

    const EndpointConstraint* constraint_ = nullptr;
    std::vector<int> targets_;

    PathDecomposition snapshot(const std::vector<OpenPath>& ps) const {
        PathDecomposition d;
        for (const OpenPath& p : ps) d.paths.emplace_back(p.seq);
        d.canonicalize();
        d.recount(g_.n);
        return d;
    }

    bool out_of_time() {
        if (timed_out_) return true;
        if (max_nodes_ >= 0 && nodes_ > max_nodes_) timed_out_ = true;
        if ((nodes_ & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline_) timed_out_ = true;
        return timed_out_;
    }

    // Per-vertex floor on the final endpoint count: ends that cannot be
    // extended stay ends, and leftover residual parity forces one more.
    int endpoint_floor(int v) const {
        int o = open_ends_[static_cast<size_t>(v)];
        int k = residual_deg_[static_cast<size_t>(v)];
        int ext = std::min(o, k);
        return (o - ext) + ((k - ext) & 1);
    }

    int count_floor() const {
        int sum = 0;
        for (int v = 0; v < g_.n; ++v) sum += endpoint_floor(v);
        return (sum + 1) / 2;
    }

    // One greedy pass: start paths at a rotated first-uncovered edge, extend
    // both ends through uncovered edges. Extension picks either the smallest
    // neighbor id or the neighbor with most uncovered edges left; the latter
    // packs dense graphs far better.
    std::vector<OpenPath> greedy_once(bool by_residual, int rotation) const {
        std::vector<int> resdeg(static_cast<size_t>(g_.n));
        for (int v = 0; v < g_.n; ++v) resdeg[static_cast<size_t>(v)] = g_.degree(v);
        std::vector<char> used(static_cast<size_t>(m_), 0);
        int covered = 0;
        std::vector<OpenPath> out;
        while (covered < m_) {
            int start = -1;
            for (int i = 0; i < m_; ++i) {
                int j = (i + rotation) % m_;
                if (!used[static_cast<size_t>(j)]) {
                    start = j;
                    break;
                }
            }
            auto [u, v] = g_.edges[static_cast<size_t>(start)];
            used[static_cast<size_t>(start)] = 1;
            --resdeg[static_cast<size_t>(u)];
            --resdeg[static_cast<size_t>(v)];
            ++covered;
            OpenPath p;
            p.seq = {u, v};
            p.mask = (VertexMask{1} << u) | (VertexMask{1} << v);
            for (int side = 0; side < 2; ++side) {
                while (true) {
                    int end = side == 0 ? p.seq.back() : p.seq.front();
                    int pick = -1, best = -1;
                    VertexMask nb = g_.neighbors(end) & ~p.mask;
                    while (nb) {
                        int w = std::countr_zero(nb);
                        nb &= nb - 1;
                        if (used[static_cast<size_t>(g_.edge_index(end, w))]) continue;
                        int score = by_residual ? resdeg[static_cast<size_t>(w)] : -w;
                        if (score > best) {
                            best = score;
                            pick = w;
                        }
                    }
                    if (pick < 0) break;
                    used[static_cast<size_t>(g_.edge_index(end, pick))] = 1;
                    --resdeg[static_cast<size_t>(end)];
                    --resdeg[static_cast<size_t>(pick)];
                    ++covered;
                    if (side == 0)
                        p.seq.push_back(pick);
                    else
                        p.seq.insert(p.seq.begin(), pick);
                    p.mask |= VertexMask{1} << pick;
                }
            }
            out.push_back(std::move(p));
        }
        return out;
    }

    void seed_greedy() {
        best_count_ = m_ + 1;
        int step = std::max(1, m_ / 16);
        for (int variant = 0; variant < 2 && !done_; ++variant)
            for (int rot = 0; rot < m_ && !done_; rot += step) {
                std::vector<OpenPath> cand = greedy_once(variant == 1, rot);
                if (static_cast<int>(cand.size()) < best_count_) {
                    best_count_ = static_cast<int>(cand.size());
                    best_paths_ = std::move(cand);
                    if (stop_at_upper_ >= 0 && best_count_ <= stop_at_upper_) done_ = true;
                    if (best_count_ <= root_lb_) done_ = true;
                }
            }
    }

    void cover_edge(int ei) {
        covered_ |= std::uint64_t{1} << ei;
        auto [u, v] = g_.edges[static_cast<size_t>(ei)];
        --residual_deg_[static_cast<size_t>(u)];
        --residual_deg_[static_cast<size_t>(v)];
    }
    void uncover_edge(int ei) {
        covered_ &= ~(std::uint64_t{1} << ei);
        auto [u, v] = g_.edges[static_cast<size_t>(ei)];
        ++residual_deg_[static_cast<size_t>(u)];
        ++residual_deg_[static_cast<size_t>(v)];
    }

    bool prune_min() {
        int b = std::max(count_floor(), root_lb_);
        return b >= best_count_;
    }

    bool prune_constrained() {
        long long floor_sum = 0, ceil_sum = 0;
        for (int v = 0; v < g_.n; ++v) {
            int fl = endpoint_floor(v);
            int ce = open_ends_[static_cast<size_t>(v)] + residual_deg_[static_cast<size_t>(v)];
            int t = targets_[static_cast<size_t>(v)];
            if (t >= 0) {
                if (fl > t || ce < t) return true;
                floor_sum += t;
                ceil_sum += t;
            } else {
                floor_sum += fl;
                ceil_sum += ce;
            }
        }
        if (floor_sum > 2LL * constraint_->total_paths) return true;
        if (ceil_sum < 2LL * constraint_->total_paths) return true;
        int residual = m_ - std::popcount(covered_);
        if (static_cast<int>(paths_.size()) + residual < constraint_->total_paths) return true;
        return false;
    }

    template <typename OnLeaf, typename Prune>
    void branch(const OnLeaf& on_leaf, const Prune& prune) {
        if (done_ || out_of_time()) return;
        ++nodes_;
        if (covered_ == full_) {
            on_leaf();
            return;
        }
        if (prune()) return;
        int ei = std::countr_zero(~covered_ & full_);
        auto [u, v] = g_.edges[static_cast<size_t>(ei)];
        cover_edge(ei);

        // extends, ends at u first, then ends at v, by path index; note the
        // recursion may reallocate paths_, so index every access
        for (int endv : {u, v}) {
            int other = endv == u ? v : u;
            for (size_t pi = 0; pi < paths_.size() && !done_; ++pi) {
                if ((paths_[pi].mask >> other) & 1) continue;
                bool at_back = paths_[pi].seq.back() == endv;
                bool at_front = paths_[pi].seq.front() == endv;
                if (!at_back && !at_front) continue;
                --open_ends_[static_cast<size_t>(endv)];
                ++open_ends_[static_cast<size_t>(other)];
                paths_[pi].mask |= VertexMask{1} << other;
                if (at_back)
                    paths_[pi].seq.push_back(other);
                else
                    paths_[pi].seq.insert(paths_[pi].seq.begin(), other);
                branch(on_leaf, prune);
                if (at_back)
                    paths_[pi].seq.pop_back();
                else
                    paths_[pi].seq.erase(paths_[pi].seq.begin());
                paths_[pi].mask &= ~(VertexMask{1} << other);
                ++open_ends_[static_cast<size_t>(endv)];
                --open_ends_[static_cast<size_t>(other)];
            }
        }

        // joins: path ending at u glued to a different path ending at v
        for (size_t pi = 0; pi < paths_.size() && !done_; ++pi) {
            if (!(paths_[pi].seq.front() == u || paths_[pi].seq.back() == u)) continue;
            for (size_t qi = 0; qi < paths_.size() && !done_; ++qi) {
                if (qi == pi) continue;
                if (!(paths_[qi].seq.front() == v || paths_[qi].seq.back() == v)) continue;
                if (paths_[pi].mask & paths_[qi].mask) continue;
                OpenPath saved_p = paths_[pi], saved_q = paths_[qi];
                OpenPath merged;
                merged.seq = saved_p.seq;
                if (merged.seq.back() != u) std::reverse(merged.seq.begin(), merged.seq.end());
                std::vector<int> tail = saved_q.seq;
                if (tail.front() != v) std::reverse(tail.begin(), tail.end());
                merged.seq.insert(merged.seq.end(), tail.begin(), tail.end());
                merged.mask = saved_p.mask | saved_q.mask;
                --open_ends_[static_cast<size_t>(u)];
                --open_ends_[static_cast<size_t>(v)];
                size_t hi = std::max(pi, qi), lo = std::min(pi, qi);
                paths_.erase(paths_.begin() + static_cast<long>(hi));
                paths_[lo] = merged;
                branch(on_leaf, prune);
                paths_[lo] = pi < qi ? saved_p : saved_q;
                paths_.insert(paths_.begin() + static_cast<long>(hi), pi < qi ? saved_q : saved_p);
                ++open_ends_[static_cast<size_t>(u)];
                ++open_ends_[static_cast<size_t>(v)];
            }
        }

        // a fresh single-edge path
        if (!done_) {
            OpenPath np;
            np.seq = {u, v};
            np.mask = (VertexMask{1} << u) | (VertexMask{1} << v);
            paths_.push_back(np);
            ++open_ends_[static_cast<size_t>(u)];
            ++open_ends_[static_cast<size_t>(v)];
            branch(on_leaf, prune);
            paths_.pop_back();
            --open_ends_[static_cast<size_t>(u)];
            --open_ends_[static_cast<size_t>(v)];
        }

        uncover_edge(ei);
    }

    void dfs_min() {
        branch(
            [this] {
                int c = static_cast<int>(paths_.size());
                if (c < best_count_) {
                    best_count_ = c;
                    best_paths_ = paths_;
                    if (best_count_ <= root_lb_) done_ = true;
                    if (stop_at_upper_ >= 0 && best_count_ <= stop_at_upper_) done_ = true;
                }
            },
            [this] { return prune_min(); });
    }

    void dfs_constrained() {
        branch(
            [this] {
                if (static_cast<int>(paths_.size()) != constraint_->total_paths) return;
                for (int v = 0; v < g_.n; ++v) {
                    int t = targets_[static_cast<size_t>(v)];
                    if (t >= 0 && open_ends_[static_cast<size_t>(v)] != t) return;
                }
                best_paths_ = paths_;
                found_ = true;
                done_ = true;
            },
            [this] { return prune_constrained(); });
    }
};

}  // namespace detail

// Exact path number; disconnected inputs are solved per component and summed.
inline SolveResult pn_exact(const SimpleGraph& g, long long timeout_ms = 10000) {
    SolveResult total;
    auto t0 = std::chrono::steady_clock::now();
    for (VertexMask comp : components(g)) {
        auto sub = induced_subgraph(g, comp);
        if (sub.graph.edge_count() == 0) continue;
        long long spent =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                .count();
        detail::EdgePathSearch search(sub.graph, std::max<long long>(1, timeout_ms - spent));
        SolveResult part = search.minimize(pn_lower_bound(sub.graph));
        total.pn += part.pn;
        total.best_lower_bound += part.best_lower_bound;
        total.nodes_explored += part.nodes_explored;
        total.timed_out = total.timed_out || part.timed_out;
        for (const PathSeq& p : part.witness.paths) {
            std::vector<int> mapped;
            mapped.reserve(p.vertices.size());
            for (int v : p.vertices) mapped.push_back(sub.back_map[static_cast<size_t>(v)]);
            total.witness.paths.emplace_back(std::move(mapped));
        }
    }
    total.witness.canonicalize();
    total.witness.recount(g.n);
    return total;
}

// Decision form: is pn(g) <= k? Stops at the first witness that good.
struct AtMostResult {
    enum class Status { Yes, No, Timeout } status;
    PathDecomposition witness;  // set only for Yes
    int best_count = 0;         // best path count seen
};

inline AtMostResult pn_at_most(const SimpleGraph& g, int k, long long timeout_ms = 10000) {
    if (g.edge_count() == 0)
        return {k >= 0 ? AtMostResult::Status::Yes : AtMostResult::Status::No, {}, 0};
    detail::EdgePathSearch search(g, timeout_ms);
    SolveResult r = search.minimize(pn_lower_bound(g), k);
    if (r.pn <= k) return {AtMostResult::Status::Yes, std::move(r.witness), r.pn};
    if (!r.timed_out) return {AtMostResult::Status::No, {}, r.pn};
    return {AtMostResult::Status::Timeout, {}, r.pn};
}

// Independent oracle: assign edges (in index order) to path classes, first
// free class index acting as the only symmetry break; a class must stay a
// sub-forest of max degree 2 and end up connected. Iterative deepening on
// the class count. Shares nothing with the branch-and-bound above.
inline int brute_force_pn(const SimpleGraph& g) {
    const int m = g.edge_count();
    if (m > 15) throw std::invalid_argument("brute_force_pn limited to 15 edges");
    if (m == 0) return 0;
    const int cap = g.n - 1;  // a path carries at most n-1 edges

    struct Cls {
        std::vector<Edge> edges;
        std::vector<int> deg;
        int vertices = 0;
    };

    // u,v connected inside the class already?
    auto connected_in = [&](const Cls& c, int u, int v) {
        std::vector<int> stack = {u};
        VertexMask seen = VertexMask{1} << u;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (x == v) return true;
            for (auto [a, b] : c.edges) {
                int y = a == x ? b : (b == x ? a : -1);
                if (y >= 0 && !((seen >> y) & 1)) {
                    seen |= VertexMask{1} << y;
                    stack.push_back(y);
                }
            }
        }
        return false;
    };

    for (int k = std::max(1, (m + cap - 1) / cap); k <= m; ++k) {
        std::vector<Cls> classes(static_cast<size_t>(k));
        for (auto& c : classes) c.deg.assign(static_cast<size_t>(g.n), 0);
        int used = 0;
        bool ok = false;
        auto rec = [&](auto&& self, int ei) -> void {
            if (ok) return;
            if (ei == m) {
                for (int j = 0; j < used; ++j) {
                    const Cls& c = classes[static_cast<size_t>(j)];
                    if (c.vertices != static_cast<int>(c.edges.size()) + 1) return;  // disconnected
                }
                ok = true;
                return;
            }
            auto [u, v] = g.edges[static_cast<size_t>(ei)];
            int limit = std::min(used + 1, k);
            for (int j = 0; j < limit && !ok; ++j) {
                Cls& c = classes[static_cast<size_t>(j)];
                if (static_cast<int>(c.edges.size()) >= cap) continue;
                if (c.deg[static_cast<size_t>(u)] >= 2 || c.deg[static_cast<size_t>(v)] >= 2) continue;
                if (c.deg[static_cast<size_t>(u)] > 0 && c.deg[static_cast<size_t>(v)] > 0 &&
                    connected_in(c, u, v))
                    continue;  // would close a cycle
                bool opened = j == used;
                if (opened) ++used;
                if (c.deg[static_cast<size_t>(u)]++ == 0) ++c.vertices;
                if (c.deg[static_cast<size_t>(v)]++ == 0) ++c.vertices;
                c.edges.emplace_back(u, v);
                self(self, ei + 1);
                c.edges.pop_back();
                if (--c.deg[static_cast<size_t>(u)] == 0) --c.vertices;
                if (--c.deg[static_cast<size_t>(v)] == 0) --c.vertices;
                if (opened) --used;
            }
        };
        rec(rec, 0);
        if (ok) return k;
    }
    return m;
}

using ConstrainedStatus = detail::EdgePathSearch::ConstrainedStatus;
using ConstrainedResult = detail::EdgePathSearch::ConstrainedResult;

// Decomposition with the exact endpoint profile asked for, or a definitive
// no when the search space is exhausted in time. A nonnegative node cap
// turns long searches into Timeout instead.
inline ConstrainedResult constrained_decompose(const SimpleGraph& g, const EndpointConstraint& c,
                                               long long timeout_ms = 10000, long long max_nodes = -1) {
    detail::EdgePathSearch search(g, timeout_ms);
    return search.constrained(c, max_nodes);
}

}  // namespace gallai

#endif
