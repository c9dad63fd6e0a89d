#ifndef GALLAI_CLASSIFY_HPP
#define GALLAI_CLASSIFY_HPP

#include <chrono>
#include <optional>
#include <string>

#include "gallai/canonical.hpp"
#include "gallai/even_subgraph.hpp"
#include "gallai/family_g.hpp"
#include "gallai/graph.hpp"
#include "gallai/json_io.hpp"
#include "gallai/set_eset.hpp"
#include "gallai/solver.hpp"

namespace gallai {

struct ClassifyBudget {
    long long solver_timeout_ms = 10000;
    int witness_new_vertices = 2;
    int witness_new_edges = 6;
    bool with_timing = true;  // drop the timing field for byte-stable reports
};

enum class WitnessVerdict { Yes, WitnessFound, No, Unknown };

inline const char* to_string(WitnessVerdict v) {
    switch (v) {
        case WitnessVerdict::Yes: return "yes";
        case WitnessVerdict::WitnessFound: return "witness-found";
        case WitnessVerdict::No: return "no";
        case WitnessVerdict::Unknown: return "unknown";
    }
    return "?";
}

// Everything the verification suites want to know about one graph.
struct ClassificationRecord {
    std::string graph_id;
    int n = 0, m = 0;
    bool connected = false;
    int pn = 0;  // exact iff pn_exact_known
    bool pn_exact_known = false;
    int lower_bound = 0;
    GallaiStatus status = GallaiStatus::Gallai;
    bool odd_semi_clique = false;
    bool is_set = false;
    EsetClassification::Kind eset_kind = EsetClassification::Kind::NotEset;
    int ev_max_degree = 0;
    WitnessVerdict ev_in_family_g = WitnessVerdict::Unknown;
    bool theorem31_applicable = false;
    bool theorem41_applicable = false;
    std::optional<bool> theorem_holds;  // unset when pn not exact or no gate applies
    long long time_ms = 0;
};

inline const char* to_string(EsetClassification::Kind k) {
    switch (k) {
        case EsetClassification::Kind::TypeSet: return "set";
        case EsetClassification::Kind::TypeAugmented: return "augmented";
        case EsetClassification::Kind::NotEset: return "none";
    }
    return "?";
}

inline ClassificationRecord classify(const SimpleGraph& g, const ClassifyBudget& budget = {}) {
    auto t0 = std::chrono::steady_clock::now();
    ClassificationRecord rec;
    rec.graph_id = isomorphism_digest(g);
    rec.n = g.n;
    rec.m = g.edge_count();
    rec.connected = is_connected(g);
    rec.lower_bound = pn_lower_bound(g);
    rec.odd_semi_clique = is_odd_semi_clique(g);

    ESubgraphReport ev = even_subgraph(g);
    rec.ev_max_degree = ev.max_e_degree;
    SetClassification sc = classify_set(g);
    rec.is_set = sc.is_set;
    rec.eset_kind = classify_eset(g).kind;

    CompletionResult comp =
        complete_to_family_g(ev.ev_graph, budget.witness_new_vertices, budget.witness_new_edges);
    switch (comp.status) {
        case CompletionResult::Status::Found:
            rec.ev_in_family_g = comp.witness.supergraph.edge_count() == ev.ev_graph.edge_count() &&
                                         comp.witness.supergraph.n == ev.ev_graph.n
                                     ? WitnessVerdict::Yes
                                     : WitnessVerdict::WitnessFound;
            break;
        case CompletionResult::Status::DefiniteNo: rec.ev_in_family_g = WitnessVerdict::No; break;
        case CompletionResult::Status::BudgetExceeded: rec.ev_in_family_g = WitnessVerdict::Unknown; break;
    }

    SolveResult sr = pn_exact(g, budget.solver_timeout_ms);
    rec.pn = sr.pn;
    rec.pn_exact_known = !sr.timed_out;
    rec.lower_bound = std::max(rec.lower_bound, sr.best_lower_bound);
    rec.status = g.n >= 1 ? gallai_status(g.n, sr.pn) : GallaiStatus::Gallai;

    // the theorems speak about connected graphs
    rec.theorem31_applicable = rec.connected && rec.ev_max_degree <= 3;
    rec.theorem41_applicable = rec.connected && (rec.ev_in_family_g == WitnessVerdict::Yes ||
                                                 rec.ev_in_family_g == WitnessVerdict::WitnessFound);
    if ((rec.theorem31_applicable || rec.theorem41_applicable) && rec.pn_exact_known) {
        bool dichotomy = rec.status == GallaiStatus::Gallai || rec.is_set;
        bool corollary = rec.pn <= (g.n + 1) / 2;
        rec.theorem_holds = dichotomy && corollary;
    }
    rec.time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                      .count();
    if (!budget.with_timing) rec.time_ms = 0;
    return rec;
}

inline json record_to_json(const ClassificationRecord& r, bool with_timing = true) {
    json j{{"v", 1},
           {"id", r.graph_id},
           {"n", r.n},
           {"m", r.m},
           {"connected", r.connected},
           {"pn", r.pn},
           {"pn_exact", r.pn_exact_known},
           {"lower_bound", r.lower_bound},
           {"gallai_status", to_string(r.status)},
           {"odd_semi_clique", r.odd_semi_clique},
           {"is_set", r.is_set},
           {"eset_kind", to_string(r.eset_kind)},
           {"ev_max_degree", r.ev_max_degree},
           {"ev_in_family_g", to_string(r.ev_in_family_g)},
           {"theorem31_applicable", r.theorem31_applicable},
           {"theorem41_applicable", r.theorem41_applicable}};
    j["theorem_holds"] = r.theorem_holds ? json(*r.theorem_holds) : json(nullptr);
    if (with_timing) j["time_ms"] = r.time_ms;
    return j;
}

}  // namespace gallai

#endif
