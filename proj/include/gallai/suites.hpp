#ifndef GALLAI_SUITES_HPP
#define GALLAI_SUITES_HPP

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "gallai/classify.hpp"
#include "gallai/generators.hpp"
#include "gallai/json_io.hpp"
#include "gallai/set_eset.hpp"
#include "gallai/solver.hpp"
#include "gallai/transforms.hpp"

namespace gallai {

struct SuiteOptions {
    int max_n = 6;
    int seeds = 500;                 // random SET graphs for the strong check
    long long timeout_ms = 10000;
    long long spot_timeout_ms = 60000;  // n = 11 spot checks
    int spot11 = 10;
    int threads = 0;  // 0 = hardware concurrency
    bool deterministic = false;
    std::uint64_t seed = 2024;
    int fan2_quota = 1000;
    int fan4_quota = 300;
    int matching_quota = 300;
    std::unordered_set<std::string> skip_ids;  // resume support
};

struct SuiteResult {
    std::string name;
    long long cases = 0;
    long long violations = 0;
    long long timeouts = 0;
    std::vector<json> lines;
    std::vector<std::string> notes;

    int exit_code() const { return violations > 0 ? 2 : (timeouts > 0 ? 3 : 0); }
};

namespace detail_suite {

inline int pick_threads(const SuiteOptions& o) {
    if (o.deterministic) return 1;
    if (o.threads > 0) return o.threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// index-addressed pool: results land in caller-owned slots, so output order
// follows input order no matter the interleaving
inline void parallel_for(int nitems, int threads, const std::function<void(int)>& fn) {
    if (threads <= 1 || nitems <= 1) {
        for (int i = 0; i < nitems; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min(threads, nitems); ++t)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < nitems; i = next.fetch_add(1)) {
                if (failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!first_error) first_error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

inline std::vector<SimpleGraph> connected_upto(int max_n) {
    std::vector<SimpleGraph> all;
    for (int n = 1; n <= max_n; ++n)
        for (const SimpleGraph& g : enumerate_connected(n)) all.push_back(g);
    return all;
}

// random connected graph: spanning tree plus a few extra edges
inline SimpleGraph random_connected(std::mt19937_64& rng, int n, int extra) {
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) es.push_back(make_edge(v, static_cast<int>(rng() % static_cast<unsigned>(v))));
    SimpleGraph g(n, es);
    for (int tries = 0; tries < extra * 6 && g.edge_count() < n * (n - 1) / 2; ++tries) {
        if (g.edge_count() >= n - 1 + extra) break;
        int a = static_cast<int>(rng() % static_cast<unsigned>(n));
        int b = static_cast<int>(rng() % static_cast<unsigned>(n));
        if (a == b || g.has_edge(a, b)) continue;
        g = g.with_edges({make_edge(a, b)});
    }
    return g;
}

// random valid decomposition: a minimum witness with a few random splits
inline PathDecomposition random_decomposition(std::mt19937_64& rng, const SimpleGraph& g,
                                              long long timeout_ms) {
    PathDecomposition d = pn_exact(g, timeout_ms).witness;
    int splits = static_cast<int>(rng() % 3);
    for (int s = 0; s < splits; ++s) {
        std::vector<int> splittable;
        for (size_t i = 0; i < d.paths.size(); ++i)
            if (d.paths[i].length() >= 2) splittable.push_back(static_cast<int>(i));
        if (splittable.empty()) break;
        int pi = splittable[rng() % splittable.size()];
        PathSeq p = d.paths[static_cast<size_t>(pi)];
        size_t cut = 1 + rng() % static_cast<size_t>(p.length() - 1);
        PathSeq left(std::vector<int>(p.vertices.begin(), p.vertices.begin() + static_cast<long>(cut) + 1));
        PathSeq right(std::vector<int>(p.vertices.begin() + static_cast<long>(cut), p.vertices.end()));
        d.paths[static_cast<size_t>(pi)] = left;
        d.paths.push_back(right);
    }
    d.recount(g.n);
    return d;
}

inline json graph_line(const std::string& suite, const SimpleGraph& g, bool ok) {
    return json{{"v", 1}, {"suite", suite}, {"id", isomorphism_digest(g)},
                {"graph", emit_graph6(g)}, {"n", g.n}, {"m", g.edge_count()}, {"ok", ok}};
}

}  // namespace detail_suite

// pn_exact against the independent enumeration oracle on every connected
// class up to n = 6 plus the small generated family instances.
inline SuiteResult run_oracle_eq(const SuiteOptions& opts) {
    SuiteResult res;
    res.name = "oracle-eq";
    std::vector<SimpleGraph> pool = detail_suite::connected_upto(std::min(opts.max_n, 6));
    {
        std::vector<SimpleGraph> fam;
        fam.push_back(clique_minus_matching(1));
        fam.push_back(clique_minus_matching(2));
        for (int n_odd = 0; n_odd <= 2; ++n_odd)
            for (int extra = 0; extra <= 1; ++extra)
                for (std::uint64_t s = 0; s < 10; ++s)
                    fam.push_back(random_set_graph(n_odd, extra, opts.seed + s));
        fam.push_back(figure1_family(Figure1Kind::Chain, 2, 0).pattern);
        for (const SimpleGraph& g : fam)
            if (g.edge_count() <= 10) pool.push_back(g);
    }
    int nitems = static_cast<int>(pool.size());
    std::vector<json> slots(static_cast<size_t>(nitems));
    std::vector<char> bad(static_cast<size_t>(nitems), 0), slow(static_cast<size_t>(nitems), 0);
    detail_suite::parallel_for(nitems, detail_suite::pick_threads(opts), [&](int i) {
        const SimpleGraph& g = pool[static_cast<size_t>(i)];
        if (opts.skip_ids.count(isomorphism_digest(g))) return;
        SolveResult sr = pn_exact(g, opts.timeout_ms);
        if (sr.timed_out) {
            slow[static_cast<size_t>(i)] = 1;
            slots[static_cast<size_t>(i)] = detail_suite::graph_line(res.name, g, false);
            return;
        }
        assert_decomposition_contract(g, sr.witness);
        int oracle = brute_force_pn(g);
        bool ok = oracle == sr.pn;
        json line = detail_suite::graph_line(res.name, g, ok);
        line["pn"] = sr.pn;
        line["oracle_pn"] = oracle;
        if (!ok) {
            line["witness"] = decomposition_to_json(sr.witness);
            bad[static_cast<size_t>(i)] = 1;
        }
        slots[static_cast<size_t>(i)] = std::move(line);
    });
    for (int i = 0; i < nitems; ++i) {
        if (slots[static_cast<size_t>(i)].is_null()) continue;
        ++res.cases;
        res.violations += bad[static_cast<size_t>(i)];
        res.timeouts += slow[static_cast<size_t>(i)];
        res.lines.push_back(std::move(slots[static_cast<size_t>(i)]));
    }
    return res;
}

// Every connected graph up to max_n: the ceil(n/2) bound must hold, and with
// E-degree at most 3 the graph must be Gallai or SET.
inline SuiteResult run_theorem31_sweep(const SuiteOptions& opts) {
    SuiteResult res;
    res.name = "theorem31-sweep";
    std::vector<SimpleGraph> pool = detail_suite::connected_upto(opts.max_n);
    int nitems = static_cast<int>(pool.size());
    std::vector<json> slots(static_cast<size_t>(nitems));
    std::vector<char> bad(static_cast<size_t>(nitems), 0), slow(static_cast<size_t>(nitems), 0);
    ClassifyBudget budget;
    budget.solver_timeout_ms = opts.timeout_ms;
    budget.with_timing = false;
    detail_suite::parallel_for(nitems, detail_suite::pick_threads(opts), [&](int i) {
        const SimpleGraph& g = pool[static_cast<size_t>(i)];
        if (opts.skip_ids.count(isomorphism_digest(g))) return;
        ClassificationRecord rec = classify(g, budget);
        json line = record_to_json(rec, false);
        line["suite"] = res.name;
        line["graph"] = emit_graph6(g);
        if (!rec.pn_exact_known) {
            slow[static_cast<size_t>(i)] = 1;
            line["ok"] = false;
        } else {
            bool gallai_bound = rec.pn <= (g.n + 1) / 2;  // the ceiling bound
            bool dichotomy = !rec.theorem31_applicable ||
                             (rec.status == GallaiStatus::Gallai || rec.is_set);
            bool ok = gallai_bound && dichotomy && (!rec.theorem_holds || *rec.theorem_holds);
            line["ok"] = ok;
            if (!ok) {
                line["witness"] = decomposition_to_json(pn_exact(g, budget.solver_timeout_ms).witness);
                bad[static_cast<size_t>(i)] = 1;
            }
        }
        slots[static_cast<size_t>(i)] = std::move(line);
    });
    for (int i = 0; i < nitems; ++i) {
        if (slots[static_cast<size_t>(i)].is_null()) continue;
        ++res.cases;
        res.violations += bad[static_cast<size_t>(i)];
        res.timeouts += slow[static_cast<size_t>(i)];
        res.lines.push_back(std::move(slots[static_cast<size_t>(i)]));
    }
    return res;
}

// Figure-style triangle families: witnesses verify, the hosts built by the
// E-subgraph embedding hit the witness gate, and their path number stays
// under the ceiling.
inline SuiteResult run_theorem41_families(const SuiteOptions& opts) {
    SuiteResult res;
    res.name = "theorem41-families";
    struct Item {
        Figure1Kind kind;
        int t;
    };
    std::vector<Item> items;
    for (int t = 2; t <= 4; ++t) items.push_back({Figure1Kind::Chain, t});
    for (int t = 3; t <= 4; ++t) items.push_back({Figure1Kind::Necklace, t});
    for (const Item& it : items) {
        Figure1Family fam = figure1_family(it.kind, it.t);
        json line{{"v", 1},
                  {"suite", res.name},
                  {"family", it.kind == Figure1Kind::Chain ? "chain" : "necklace"},
                  {"t", it.t}};
        bool ok = verify_family_g_witness(fam.pattern, fam.witness);

        int triangle_blocks = 0;
        BlockDecomposition bd = blocks(fam.pattern);
        for (VertexMask b : bd.blocks)
            if (block_contains_triangle(fam.pattern, b)) ++triangle_blocks;
        ok = ok && triangle_blocks >= 2;
        line["pattern_triangle_blocks"] = triangle_blocks;

        SimpleGraph host = embed_as_even_subgraph(fam.pattern);
        line["host"] = emit_graph6(host);
        line["host_n"] = host.n;
        ESubgraphReport ev = even_subgraph(host);
        ok = ok && ev.ev_graph == fam.pattern;

        CompletionResult comp = complete_to_family_g(ev.ev_graph, 2, 6);
        bool gate = comp.status == CompletionResult::Status::Found;
        line["theorem41_applicable"] = gate;
        ok = ok && gate;

        AtMostResult am = pn_at_most(host, (host.n + 1) / 2, opts.timeout_ms);
        if (am.status == AtMostResult::Status::Timeout) {
            ++res.timeouts;
            line["pn_within_ceiling"] = "timeout";
            ok = false;
        } else {
            bool under = am.status == AtMostResult::Status::Yes;
            if (under) assert_decomposition_contract(host, am.witness);
            line["pn_within_ceiling"] = under;
            ok = ok && under;
        }
        line["ok"] = ok;
        if (!ok) ++res.violations;
        ++res.cases;
        res.lines.push_back(std::move(line));
    }
    return res;
}

// Random and structured SET graphs: Gallai unless an odd semi-clique sitting
// exactly on the ceiling; the constructive ESET decomposition bound is
// exercised at every vertex, plus augmented derivatives.
inline SuiteResult run_set_strong_check(const SuiteOptions& opts) {
    SuiteResult res;
    res.name = "set-strong-check";
    struct Item {
        SimpleGraph g;
        long long timeout;
        bool spot;
    };
    std::vector<Item> items;
    for (int k = 1; k <= 4; ++k) items.push_back({clique_minus_matching(k), opts.timeout_ms, false});
    int per_bucket = (opts.seeds + 2) / 3;
    for (int n_odd : {2, 4, 6})
        for (int s = 0; s < per_bucket; ++s)
            items.push_back({random_set_graph(n_odd, static_cast<int>((opts.seed + s) % 4),
                                              opts.seed * 31 + static_cast<std::uint64_t>(s) * 7 + n_odd),
                             opts.timeout_ms, false});
    // n = 11 spot checks, best effort under the long timeout
    items.push_back({clique_minus_matching(5), opts.spot_timeout_ms, true});
    int spot_added = 1;
    for (std::uint64_t s = 0; spot_added < opts.spot11 && s < 400; ++s) {
        SimpleGraph g = random_set_graph(8, static_cast<int>(s % 3), opts.seed + 1000 + s);
        if (g.n != 11) continue;  // parity repair may have grown it
        items.push_back({g, opts.spot_timeout_ms, true});
        ++spot_added;
    }

    int nitems = static_cast<int>(items.size());
    std::vector<json> slots(static_cast<size_t>(nitems));
    std::vector<char> bad(static_cast<size_t>(nitems), 0), slow(static_cast<size_t>(nitems), 0);
    std::atomic<int> augmented_done{0};
    detail_suite::parallel_for(nitems, detail_suite::pick_threads(opts), [&](int i) {
        const SimpleGraph& g = items[static_cast<size_t>(i)].g;
        long long tmo = items[static_cast<size_t>(i)].timeout;
        json line = detail_suite::graph_line(res.name, g, true);
        line["spot"] = items[static_cast<size_t>(i)].spot;
        bool ok = classify_set(g).is_set;
        bool semi = is_odd_semi_clique(g);
        line["odd_semi_clique"] = semi;

        // strong-form check: Gallai, or semi-clique pinned to the ceiling
        AtMostResult am = pn_at_most(g, semi ? (g.n + 1) / 2 : g.n / 2, tmo);
        if (am.status == AtMostResult::Status::Timeout) {
            slow[static_cast<size_t>(i)] = 1;
            line["ok"] = false;
            line["timeout"] = true;
            slots[static_cast<size_t>(i)] = std::move(line);
            return;
        }
        bool strong_ok = am.status == AtMostResult::Status::Yes;
        if (strong_ok) assert_decomposition_contract(g, am.witness);
        line["pn_bound_met"] = strong_ok;
        ok = ok && strong_ok;

        // constructive ESET decomposition at every vertex (small orders)
        if (ok && g.n <= 9) {
            for (int u = 0; u < g.n && ok; ++u) {
                PathDecomposition d = eset_decompose(g, u, tmo);
                assert_decomposition_contract(g, d);
                ok = ok && d.endpoint_count(u) >= 2 && d.size() <= (g.n + 1) / 2;
            }
            line["eset_all_vertices"] = ok;
        }
        // augmented derivative, checked at the new connection vertex
        if (ok && g.n <= 9 && g.n + 1 <= kMaxVertices && augmented_done.load() < 120) {
            std::mt19937_64 rng(opts.seed ^ (static_cast<std::uint64_t>(i) << 20));
            std::vector<int> odds, evens;
            for (int v = 0; v < g.n; ++v) (g.even_vertex(v) ? evens : odds).push_back(v);
            if (!odds.empty()) {
                int x = odds[rng() % odds.size()];
                int y = evens[rng() % evens.size()];
                SimpleGraph aug(g.n + 1, [&] {
                    auto es = g.edges;
                    es.emplace_back(x, g.n);
                    es.emplace_back(y, g.n);
                    return es;
                }());
                EsetClassification ec = classify_eset(aug);
                bool aug_ok = ec.kind == EsetClassification::Kind::TypeAugmented;
                if (aug_ok) {
                    PathDecomposition d = eset_decompose(aug, g.n, tmo);
                    assert_decomposition_contract(aug, d);
                    aug_ok = d.endpoint_count(g.n) >= 2 && d.size() <= (aug.n + 1) / 2;
                    augmented_done.fetch_add(1);
                }
                line["augmented_ok"] = aug_ok;
                ok = ok && aug_ok;
            }
        }
        line["ok"] = ok;
        if (!ok) bad[static_cast<size_t>(i)] = 1;
        slots[static_cast<size_t>(i)] = std::move(line);
    });
    for (int i = 0; i < nitems; ++i) {
        if (slots[static_cast<size_t>(i)].is_null()) continue;
        ++res.cases;
        res.violations += bad[static_cast<size_t>(i)];
        res.timeouts += slow[static_cast<size_t>(i)];
        res.lines.push_back(std::move(slots[static_cast<size_t>(i)]));
    }
    res.notes.push_back("augmented derivatives checked: " + std::to_string(augmented_done.load()));
    return res;
}

// Randomized exercise of the transformation guarantees: the fan2 rule, the
// half-or-more addible sets, induced matchings, concatenation of
// certificates, and the extra-edges arithmetic watchdog.
inline SuiteResult run_transform_contracts(const SuiteOptions& opts) {
    SuiteResult res;
    res.name = "transform-contracts";
    std::mt19937_64 rng(opts.seed);
    long long fan2_done = 0, fan4_done = 0, matching_done = 0, chains_done = 0, watchdog_done = 0;

    auto fail = [&](const std::string& what, const SimpleGraph& g) {
        json line = detail_suite::graph_line(res.name, g, false);
        line["what"] = what;
        res.lines.push_back(line);
        ++res.violations;
    };

    // fan2: hypothesis true -> certificate exists and verifies
    for (long long attempts = 0; fan2_done < opts.fan2_quota && attempts < opts.fan2_quota * 40LL;
         ++attempts) {
        SimpleGraph g = detail_suite::random_connected(rng, 4 + static_cast<int>(rng() % 5),
                                                       static_cast<int>(rng() % 4));
        if (g.edge_count() == 0) continue;
        Edge e = g.edges[rng() % g.edges.size()];
        int u = rng() % 2 ? e.first : e.second;
        int v = u == e.first ? e.second : e.first;
        SimpleGraph gp = g.without_edges({e});
        PathDecomposition dp = detail_suite::random_decomposition(rng, gp, opts.timeout_ms);
        int passing = mask_popcount(passing_neighbors(gp, dp, u));
        if (dp.endpoint_count(v) <= passing) continue;
        Fan2Result r = addible_single_fan2(g, u, v, dp, opts.timeout_ms);
        ++res.cases;
        if (r.status != Fan2Result::Status::Applied) {
            fail("fan2 did not apply", g);
            continue;
        }
        auto bad = verify_transformation(r.certificate);
        assert_decomposition_contract(r.certificate.extended_graph(), r.certificate.after);
        if (!bad.empty())
            fail("fan2 certificate: " + bad.front(), g);
        else
            ++fan2_done;
    }
    if (fan2_done < opts.fan2_quota) {
        res.notes.push_back("fan2 quota missed: " + std::to_string(fan2_done));
        ++res.violations;
    }

    // fan4: mix of random hits and spider constructions
    for (long long attempts = 0; fan4_done < opts.fan4_quota && attempts < opts.fan4_quota * 40LL;
         ++attempts) {
        SimpleGraph g;
        int u;
        std::vector<Edge> h;
        if (attempts % 2 == 0) {
            // spider: center joined to legs carrying pendants
            int legs = 2 + static_cast<int>(rng() % 3);
            std::vector<Edge> es;
            u = 0;
            int next = 1;
            for (int i = 0; i < legs; ++i) {
                int x = next++;
                es.emplace_back(u, x);
                int len = 1 + static_cast<int>(rng() % 2);
                int prev = x;
                for (int j = 0; j < len; ++j) {
                    es.emplace_back(prev, next);
                    prev = next++;
                }
                h.push_back(make_edge(u, x));
            }
            g = SimpleGraph(next, es);
        } else {
            g = detail_suite::random_connected(rng, 5 + static_cast<int>(rng() % 4),
                                               static_cast<int>(rng() % 4));
            u = static_cast<int>(rng() % static_cast<unsigned>(g.n));
            auto nb = mask_vertices(g.neighbors(u));
            if (nb.empty()) continue;
            int take = 1 + static_cast<int>(rng() % std::min<size_t>(3, nb.size()));
            deterministic_shuffle(nb, rng);
            for (int i = 0; i < take; ++i) h.push_back(make_edge(u, nb[static_cast<size_t>(i)]));
        }
        SimpleGraph gp = g.without_edges(h);
        PathDecomposition dp = detail_suite::random_decomposition(rng, gp, opts.timeout_ms);
        bool hypothesis = true;
        for (int w : mask_vertices(g.neighbors(u)))
            if (dp.endpoint_count(w) < 1) hypothesis = false;
        if (!hypothesis) continue;
        Edge x = h[rng() % h.size()];
        ++res.cases;
        Fan4Result r = addible_half_fan4(g, u, h, x, dp, opts.timeout_ms);
        bool has_x = std::find(r.addible_set.begin(), r.addible_set.end(), make_edge(x.first, x.second)) !=
                     r.addible_set.end();
        bool big_enough = static_cast<int>(r.addible_set.size()) >= (static_cast<int>(h.size()) + 1) / 2;
        auto bad = verify_transformation(r.certificate);
        assert_decomposition_contract(r.certificate.extended_graph(), r.certificate.after);
        if (!has_x || !big_enough || !bad.empty())
            fail("fan4 contract", g);
        else
            ++fan4_done;
    }
    if (fan4_done < opts.fan4_quota) {
        res.notes.push_back("fan4 quota missed: " + std::to_string(fan4_done));
        ++res.violations;
    }

    // induced matchings across composed components
    for (long long attempts = 0;
         matching_done < opts.matching_quota && attempts < opts.matching_quota * 40LL; ++attempts) {
        int k = 1 + static_cast<int>(rng() % 3);
        SimpleGraph g(0, {});
        std::vector<std::pair<int, int>> matching;
        bool built = true;
        for (int c = 0; c < k; ++c) {
            bool placed = false;
            for (int tries = 0; tries < 12 && !placed; ++tries) {
                SimpleGraph comp = detail_suite::random_connected(rng, 3 + static_cast<int>(rng() % 4),
                                                                  static_cast<int>(rng() % 3));
                if (comp.edge_count() == 0) continue;
                Edge e = comp.edges[rng() % comp.edges.size()];
                int ui = rng() % 2 ? e.first : e.second;
                int vi = ui == e.first ? e.second : e.first;
                SimpleGraph cp = comp.without_edges({e});
                PathDecomposition dp = pn_exact(cp, opts.timeout_ms).witness;
                if (mask_popcount(passing_neighbors(cp, dp, ui)) != 0) continue;
                if (dp.endpoint_count(vi) < 1) continue;
                int base = g.n;
                g = disjoint_union(g, comp);
                matching.emplace_back(base + ui, base + vi);
                placed = true;
            }
            if (!placed) built = false;
        }
        if (!built || matching.empty()) continue;
        std::vector<Edge> medges;
        for (auto [a, b] : matching) medges.push_back(make_edge(a, b));
        SimpleGraph gp = g.without_edges(medges);
        PathDecomposition dp = pn_exact(gp, opts.timeout_ms).witness;
        bool pre_ok = true;
        for (auto [ui, vi] : matching) {
            if (mask_popcount(passing_neighbors(gp, dp, ui)) != 0) pre_ok = false;
            if (dp.endpoint_count(vi) < 1) pre_ok = false;
        }
        if (!pre_ok) continue;
        ++res.cases;
        PathDecomposition lifted = lift_induced_matching(g, matching, dp, opts.timeout_ms);
        assert_decomposition_contract(g, lifted);
        bool ok = lifted.size() == dp.size();
        VertexMask touched = 0;
        for (auto [ui, vi] : matching) {
            ok = ok && lifted.endpoint_count(ui) == dp.endpoint_count(ui) + 1;
            ok = ok && lifted.endpoint_count(vi) == dp.endpoint_count(vi) - 1;
            touched |= (VertexMask{1} << ui) | (VertexMask{1} << vi);
        }
        for (int v = 0; v < g.n; ++v)
            if (!((touched >> v) & 1)) ok = ok && lifted.endpoint_count(v) == dp.endpoint_count(v);
        if (!ok)
            fail("induced matching deltas", g);
        else
            ++matching_done;
    }
    if (matching_done < opts.matching_quota) {
        res.notes.push_back("matching quota missed: " + std::to_string(matching_done));
        ++res.violations;
    }

    // concatenation: two successive addible sets glue into one certificate
    for (long long attempts = 0; chains_done < 100 && attempts < 4000; ++attempts) {
        SimpleGraph g = detail_suite::random_connected(rng, 5 + static_cast<int>(rng() % 3),
                                                       static_cast<int>(rng() % 4));
        int u = static_cast<int>(rng() % static_cast<unsigned>(g.n));
        auto nb = mask_vertices(g.neighbors(u));
        if (nb.size() < 2) continue;
        deterministic_shuffle(nb, rng);
        std::vector<Edge> b;
        for (size_t i = 0; i < std::min<size_t>(nb.size(), 3); ++i)
            b.push_back(make_edge(u, nb[i]));
        SimpleGraph gp = g.without_edges(b);
        PathDecomposition dp = detail_suite::random_decomposition(rng, gp, opts.timeout_ms);
        std::vector<Edge> a1 = {b[0]}, a2 = {b[1]};
        ApplyResult r1 = apply_addible(gp, dp, a1, u, Direction::Towards, opts.timeout_ms);
        if (r1.status != ApplyResult::Status::Found) continue;
        SimpleGraph g1 = r1.certificate.extended_graph();
        ApplyResult r2 = apply_addible(g1, r1.certificate.after, a2, u, Direction::Towards,
                                       opts.timeout_ms);
        if (r2.status != ApplyResult::Status::Found) continue;
        ++res.cases;
        TransformationCertificate glued;
        glued.base_graph = gp;
        glued.added_edges = {a1[0], a2[0]};
        glued.pivot = u;
        glued.direction = Direction::Towards;
        glued.before = dp;
        glued.after = r2.certificate.after;
        auto bad = verify_transformation(glued);
        if (!bad.empty())
            fail("concatenated certificate: " + bad.front(), g);
        else
            ++chains_done;
    }
    if (chains_done < 100) {
        res.notes.push_back("chain quota missed: " + std::to_string(chains_done));
        ++res.violations;
    }

    // extra-edges watchdog on towards/outwards chains at an odd vertex
    for (long long attempts = 0; watchdog_done < 50 && attempts < 4000; ++attempts) {
        SimpleGraph g = detail_suite::random_connected(rng, 5 + static_cast<int>(rng() % 3),
                                                       static_cast<int>(rng() % 4));
        int u = static_cast<int>(rng() % static_cast<unsigned>(g.n));
        if (g.even_vertex(u)) continue;
        auto nb = mask_vertices(g.neighbors(u));
        if (nb.size() < 2) continue;
        deterministic_shuffle(nb, rng);
        std::vector<Edge> b;
        for (size_t i = 0; i < std::min<size_t>(nb.size(), 4); ++i)
            b.push_back(make_edge(u, nb[i]));
        SimpleGraph g0 = g.without_edges(b);
        PathDecomposition d0 = detail_suite::random_decomposition(rng, g0, opts.timeout_ms);
        int need = (static_cast<int>(b.size()) + 1) / 2;
        bool hyp = true;
        for (int w : mask_vertices(g.neighbors(u)))
            if (d0.endpoint_count(w) < 1) hyp = false;
        if (!hyp) continue;
        Fan4Result lifted = addible_half_fan4(g, u, b, b[0], d0, opts.timeout_ms);
        if (static_cast<int>(lifted.addible_set.size()) < need) continue;
        // try an outwards follow-up from what remains
        std::vector<Edge> remaining;
        for (const Edge& e : b)
            if (std::find(lifted.addible_set.begin(), lifted.addible_set.end(), e) ==
                lifted.addible_set.end())
                remaining.push_back(e);
        std::vector<Edge> a2;
        PathDecomposition d2 = lifted.certificate.after;
        SimpleGraph g2 = lifted.certificate.extended_graph();
        if (!remaining.empty()) {
            ApplyResult r = apply_addible(g2, d2, {remaining[0]}, u, Direction::Outwards,
                                          opts.timeout_ms);
            if (r.status == ApplyResult::Status::Found) {
                a2 = {remaining[0]};
                d2 = r.certificate.after;
            }
        }
        ++res.cases;
        bool holds = extra_edges_bound(static_cast<int>(b.size()),
                                       static_cast<int>(lifted.addible_set.size()),
                                       static_cast<int>(a2.size()), d2.endpoint_count(u));
        if (!holds)
            fail("extra-edges inequality", g);
        else
            ++watchdog_done;
    }
    if (watchdog_done < 50) {
        res.notes.push_back("watchdog quota missed: " + std::to_string(watchdog_done));
        ++res.violations;
    }

    res.notes.push_back("fan2=" + std::to_string(fan2_done) + " fan4=" + std::to_string(fan4_done) +
                        " matching=" + std::to_string(matching_done) + " chains=" +
                        std::to_string(chains_done) + " watchdog=" + std::to_string(watchdog_done));
    return res;
}

inline SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
    if (name == "oracle-eq") return run_oracle_eq(opts);
    if (name == "theorem31-sweep") return run_theorem31_sweep(opts);
    if (name == "theorem41-families") return run_theorem41_families(opts);
    if (name == "set-strong-check") return run_set_strong_check(opts);
    if (name == "transform-contracts") return run_transform_contracts(opts);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace gallai

#endif
