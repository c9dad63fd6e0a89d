// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Criterion 3's n = 7 sweep is opt-in via --n7 (or GALLAI_ACCEPT_N7=1).

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <random>
#include <string>

#include "gallai/classify.hpp"
#include "gallai/generators.hpp"
#include "gallai/io.hpp"
#include "gallai/suites.hpp"

using namespace gallai;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                     t0)
            .count();
    }
};

void report(int idx, const std::string& name, bool pass, const std::string& detail, long long ms) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << idx << ": " << name << " (" << detail
              << ", " << ms << " ms)\n";
    std::cout.flush();
    if (!pass) ++failures;
}

}  // namespace

int main(int argc, char** argv) {
    bool n7 = std::getenv("GALLAI_ACCEPT_N7") != nullptr;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--n7") == 0) n7 = true;

    SuiteOptions opts;
    opts.deterministic = false;
    opts.seed = 2024;

    // 1. oracle equivalence on all connected classes n <= 6 plus small
    //    family instances
    {
        Timer t;
        SuiteResult r = run_oracle_eq(opts);
        report(1, "pn_exact matches the enumeration oracle", r.violations == 0 && r.timeouts == 0,
               std::to_string(r.cases) + " graphs", t.ms());
    }

    // 2 + 3. one sweep serves the ceiling bound and the E-degree dichotomy
    {
        Timer t;
        opts.max_n = 6;
        SuiteResult r = run_theorem31_sweep(opts);
        long long ceiling_bad = 0, dichotomy_bad = 0, applicable = 0;
        for (const json& line : r.lines) {
            int n = line.at("n").get<int>();
            if (line.at("pn").get<int>() > (n + 1) / 2) ++ceiling_bad;
            if (line.at("theorem31_applicable").get<bool>()) {
                ++applicable;
                bool ok = line.at("gallai_status").get<std::string>() == "gallai" ||
                          line.at("is_set").get<bool>();
                if (!ok) ++dichotomy_bad;
            }
        }
        long long ms = t.ms();
        report(2, "Gallai ceiling over all connected graphs up to n=6",
               ceiling_bad == 0 && r.timeouts == 0, std::to_string(r.cases) + " graphs", ms);
        report(3, "Gallai-or-SET dichotomy when the E-degree stays under 4",
               dichotomy_bad == 0 && r.violations == 0, std::to_string(applicable) + " applicable", ms);
        if (n7) {
            Timer t7;
            opts.max_n = 7;
            SuiteResult r7 = run_theorem31_sweep(opts);
            report(3, "dichotomy sweep, n = 7 opt-in", r7.violations == 0 && r7.timeouts == 0,
                   std::to_string(r7.cases) + " graphs", t7.ms());
        }
    }

    // 4 + 5. SET graphs: strong Gallai form, plus the constructive ESET
    //        decomposition at every vertex and on augmented derivatives
    {
        Timer t;
        opts.max_n = 6;
        opts.seeds = 500;
        opts.spot11 = 10;
        SuiteResult r = run_set_strong_check(opts);
        long long spot_timeouts = 0, spots = 0, eset_checked = 0;
        for (const json& line : r.lines) {
            if (line.value("spot", false)) {
                ++spots;
                if (line.value("timeout", false)) ++spot_timeouts;
            }
            if (line.contains("eset_all_vertices")) ++eset_checked;
        }
        // n = 11 spot timeouts are reported, not failed
        bool pass4 = r.violations == 0 && (r.timeouts == spot_timeouts);
        report(4, "SET graphs are Gallai or ceiling-exact odd semi-cliques", pass4,
               std::to_string(r.cases) + " graphs, " + std::to_string(spots) + " spot checks, " +
                   std::to_string(spot_timeouts) + " spot timeouts",
               t.ms());
        long long augmented = 0;
        for (const std::string& note : r.notes) {
            auto pos = note.find(": ");
            if (note.rfind("augmented", 0) == 0 && pos != std::string::npos)
                augmented = std::stoll(note.substr(pos + 2));
        }
        report(5, "ESET decompositions: two ends at the connection vertex within the ceiling",
               r.violations == 0 && eset_checked >= 400 && augmented >= 100,
               std::to_string(eset_checked) + " graphs x all vertices, " + std::to_string(augmented) +
                   " augmented",
               0);
    }

    // 6. transformation contracts
    {
        Timer t;
        SuiteResult r = run_transform_contracts(opts);
        report(6, "fan2/fan4/matching transformation contracts", r.violations == 0,
               std::to_string(r.cases) + " instances", t.ms());
    }

    // 7. the global decomposition contract hook fired throughout
    {
        long long checks = decomposition_contract_checks.load();
        report(7, "every emitted decomposition validated with matching parity", checks > 3000,
               std::to_string(checks) + " decompositions checked", 0);
    }

    // 8. byte-exact graph6 round trips and the E-subgraph embedding identity
    {
        Timer t;
        std::mt19937_64 rng(99);
        long long lines = 0, bad = 0;
        for (int iter = 0; iter < 1000; ++iter) {
            int n = static_cast<int>(rng() % 20);
            std::vector<Edge> es;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() % 2) es.emplace_back(u, v);
            SimpleGraph g(n, es);
            std::string line = emit_graph6(g);
            ++lines;
            if (emit_graph6(parse_graph6(line)) != line) ++bad;
        }
        long long embed_bad = 0, embed_count = 0;
        for (int n = 1; n <= 7; ++n)
            enumerate_connected(n, [&](const SimpleGraph& h) {
                ++embed_count;
                ESubgraphReport rep = even_subgraph(embed_as_even_subgraph(h));
                if (!(rep.ev_graph == h)) ++embed_bad;
            });
        report(8, "graph6 round trips and E-subgraph embedding identity", bad == 0 && embed_bad == 0,
               std::to_string(lines) + " lines, " + std::to_string(embed_count) + " embeddings",
               t.ms());
    }

    // 9. figure families: witnesses verify, hosts pass the witness gate and
    //    stay under the ceiling
    {
        Timer t;
        SuiteResult r = run_theorem41_families(opts);
        report(9, "triangle families complete into the target class and stay bounded",
               r.violations == 0 && r.timeouts == 0, std::to_string(r.cases) + " families", t.ms());
    }

    std::cout << (failures == 0 ? "acceptance: all criteria passed\n"
                                : "acceptance: " + std::to_string(failures) + " criteria FAILED\n");
    return failures == 0 ? 0 : 1;
}
