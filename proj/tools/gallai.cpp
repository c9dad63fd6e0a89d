// command line front end: path numbers, decompositions, E-subgraph reports,
// classification records, family generators, transformation certificates and
// the verification suites, over graph6 or edge-list input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gallai/classify.hpp"
#include "gallai/generators.hpp"
#include "gallai/io.hpp"
#include "gallai/json_io.hpp"
#include "gallai/suites.hpp"

using namespace gallai;

namespace {

std::vector<SimpleGraph> read_graphs(const std::string& path, const std::string& format) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (path != "-") {
        file.open(path);
        if (!file) throw std::runtime_error("cannot open " + path);
        in = &file;
    }
    std::vector<SimpleGraph> out;
    if (format == "edgelist") {
        out.push_back(parse_edge_list(*in));
    } else {
        std::string line;
        while (std::getline(*in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
            if (line.empty()) continue;
            out.push_back(parse_graph6(line));
        }
    }
    return out;
}

Edge parse_edge_arg(const std::string& s) {
    auto dash = s.find_first_of("-,");
    if (dash == std::string::npos) throw CLI::ValidationError("edge must look like u-v");
    return make_edge(std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1)));
}

std::vector<Edge> parse_edge_list_arg(const std::string& s) {
    std::vector<Edge> out;
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';'))
        if (!tok.empty()) out.push_back(parse_edge_arg(tok));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact path decompositions, SET/ESET machinery and theorem sweeps on small graphs"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "graph6";
    long long timeout_ms = 10000;
    bool deterministic = false;
    std::uint64_t seed = 2024;
    int max_n = 6;

    auto add_common = [&](CLI::App* cmd, bool with_input = true) {
        if (with_input) cmd->add_option("input", input, "input file, - for stdin");
        cmd->add_option("--format", format, "graph6 or edgelist")
            ->check(CLI::IsMember({"graph6", "edgelist"}));
        cmd->add_option("--timeout-ms", timeout_ms, "per-graph solver budget");
        cmd->add_flag("--deterministic", deterministic, "single-threaded, timing-free output");
        cmd->add_option("--seed", seed, "generator seed");
        cmd->add_option("--max-n", max_n, "size cap for sweeps/enumeration");
    };

    auto* cmd_pn = app.add_subcommand("pn", "exact path number per graph");
    add_common(cmd_pn);
    auto* cmd_dec = app.add_subcommand("decompose", "minimum path decomposition per graph");
    add_common(cmd_dec);
    auto* cmd_ev = app.add_subcommand("ev", "E-subgraph report per graph");
    add_common(cmd_ev);
    auto* cmd_cls = app.add_subcommand("classify", "full classification record per graph");
    add_common(cmd_cls);

    auto* cmd_gen = app.add_subcommand("generate", "emit family graphs as graph6");
    std::string family = "clique-minus-matching";
    int gen_k = 2, gen_t = 3, gen_n_odd = 2, gen_extra = 0, gen_count = 1, gen_stubs = 3;
    bool gen_completed = false;
    cmd_gen->add_option("--family", family, "family name")
        ->check(CLI::IsMember({"clique-minus-matching", "figure1-chain", "figure1-necklace",
                               "random-set", "enumerate"}));
    cmd_gen->add_option("--k", gen_k, "clique parameter");
    cmd_gen->add_option("--t", gen_t, "triangle count");
    cmd_gen->add_option("--stubs", gen_stubs, "pendant edges per designated vertex");
    cmd_gen->add_option("--n-odd", gen_n_odd, "odd-side vertex count");
    cmd_gen->add_option("--extra", gen_extra, "extra odd-odd edges");
    cmd_gen->add_option("--count", gen_count, "how many samples");
    cmd_gen->add_flag("--completed", gen_completed, "emit the dotted-edge completion instead");
    add_common(cmd_gen, false);

    auto* cmd_tr = app.add_subcommand("transform", "build and verify a transformation certificate");
    std::string op = "fan2", edges_arg, x_arg, pairs_arg;
    int pivot = 0, other = 1;
    cmd_tr->add_option("--op", op, "fan2, fan4 or matching")
        ->check(CLI::IsMember({"fan2", "fan4", "matching"}));
    cmd_tr->add_option("--pivot", pivot, "pivot vertex u");
    cmd_tr->add_option("--other", other, "far endpoint v (fan2)");
    cmd_tr->add_option("--edges", edges_arg, "semicolon-separated u-x edges (fan4)");
    cmd_tr->add_option("--x", x_arg, "required member edge (fan4)");
    cmd_tr->add_option("--pairs", pairs_arg, "semicolon-separated pivot-far pairs (matching)");
    add_common(cmd_tr);

    auto* cmd_chk = app.add_subcommand("check", "run a verification suite");
    std::string suite = "oracle-eq", out_path, resume_path;
    int seeds_n = 500, spot11 = 10;
    cmd_chk->add_option("--suite", suite, "suite name")
        ->check(CLI::IsMember({"oracle-eq", "theorem31-sweep", "theorem41-families",
                               "set-strong-check", "transform-contracts"}));
    cmd_chk->add_option("--seeds", seeds_n, "random instances for set-strong-check");
    cmd_chk->add_option("--spot11", spot11, "n=11 spot check count");
    cmd_chk->add_option("--out", out_path, "write the JSON-lines report here");
    cmd_chk->add_option("--resume", resume_path, "skip ids already present in this report");
    add_common(cmd_chk, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_pn || *cmd_dec) {
            for (const SimpleGraph& g : read_graphs(input, format)) {
                SolveResult r = pn_exact(g, timeout_ms);
                json j{{"v", 1},      {"graph", emit_graph6(g)},
                       {"n", g.n},    {"m", g.edge_count()},
                       {"pn", r.pn},  {"exact", !r.timed_out},
                       {"lower_bound", r.best_lower_bound}};
                if (!deterministic) j["nodes"] = r.nodes_explored;
                if (*cmd_dec) j["decomposition"] = decomposition_to_json(r.witness);
                std::cout << j.dump() << "\n";
            }
        } else if (*cmd_ev) {
            for (const SimpleGraph& g : read_graphs(input, format)) {
                ESubgraphReport rep = even_subgraph(g);
                json comps = json::array();
                for (const auto& c : rep.component_summaries)
                    comps.push_back(json{{"vertices", c.vertex_count},
                                         {"blocks", c.block_count},
                                         {"triangle_blocks", c.triangle_block_count},
                                         {"max_degree", c.max_degree}});
                std::cout << json{{"v", 1},
                                  {"graph", emit_graph6(g)},
                                  {"even_vertices", mask_vertices(rep.even_vertices)},
                                  {"ev_graph", emit_graph6(rep.ev_graph)},
                                  {"ev_max_degree", rep.max_e_degree},
                                  {"components", comps}}
                                 .dump()
                          << "\n";
            }
        } else if (*cmd_cls) {
            ClassifyBudget budget;
            budget.solver_timeout_ms = timeout_ms;
            budget.with_timing = !deterministic;
            for (const SimpleGraph& g : read_graphs(input, format)) {
                ClassificationRecord rec = classify(g, budget);
                json j = record_to_json(rec, !deterministic);
                j["graph"] = emit_graph6(g);
                std::cout << j.dump() << "\n";
            }
        } else if (*cmd_gen) {
            std::vector<SimpleGraph> out;
            if (family == "clique-minus-matching") {
                out.push_back(clique_minus_matching(gen_k));
            } else if (family == "figure1-chain" || family == "figure1-necklace") {
                Figure1Family fam = figure1_family(
                    family == "figure1-chain" ? Figure1Kind::Chain : Figure1Kind::Necklace, gen_t,
                    gen_stubs);
                out.push_back(gen_completed ? fam.witness.supergraph : fam.pattern);
            } else if (family == "random-set") {
                for (int i = 0; i < gen_count; ++i)
                    out.push_back(random_set_graph(gen_n_odd, gen_extra, seed + static_cast<std::uint64_t>(i)));
            } else {
                enumerate_connected(max_n, [&](const SimpleGraph& g) { out.push_back(g); });
            }
            for (const SimpleGraph& g : out) std::cout << emit_graph6(g) << "\n";
        } else if (*cmd_tr) {
            std::vector<SimpleGraph> gs = read_graphs(input, format);
            if (gs.size() != 1) throw std::runtime_error("transform expects exactly one input graph");
            const SimpleGraph& g = gs.front();
            if (op == "fan2") {
                SimpleGraph gp = g.without_edges({make_edge(pivot, other)});
                PathDecomposition dp = pn_exact(gp, timeout_ms).witness;
                Fan2Result r = addible_single_fan2(g, pivot, other, dp, timeout_ms);
                if (r.status != Fan2Result::Status::Applied) {
                    std::cout << json{{"v", 1}, {"status", "not-applicable"}}.dump() << "\n";
                    return 1;
                }
                std::cout << certificate_to_json(r.certificate).dump() << "\n";
            } else if (op == "fan4") {
                std::vector<Edge> h = parse_edge_list_arg(edges_arg);
                Edge x = x_arg.empty() ? h.at(0) : parse_edge_arg(x_arg);
                SimpleGraph gp = g.without_edges(h);
                PathDecomposition dp = pn_exact(gp, timeout_ms).witness;
                Fan4Result r = addible_half_fan4(g, pivot, h, x, dp, timeout_ms);
                json j = certificate_to_json(r.certificate);
                json a = json::array();
                for (const Edge& e : r.addible_set) a.push_back({e.first, e.second});
                j["addible_set"] = a;
                std::cout << j.dump() << "\n";
            } else {
                // pairs are pivot-first; keep their orientation
                std::vector<std::pair<int, int>> pairs;
                std::istringstream ss(pairs_arg);
                std::string tok;
                while (std::getline(ss, tok, ';')) {
                    if (tok.empty()) continue;
                    auto dash = tok.find_first_of("-,");
                    if (dash == std::string::npos)
                        throw std::runtime_error("pair must look like pivot-far");
                    pairs.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
                }
                std::vector<Edge> medges;
                for (auto [a, b] : pairs) medges.push_back(make_edge(a, b));
                SimpleGraph gp = g.without_edges(medges);
                PathDecomposition dp = pn_exact(gp, timeout_ms).witness;
                PathDecomposition lifted = lift_induced_matching(g, pairs, dp, timeout_ms);
                std::cout << json{{"v", 1},
                                  {"before", decomposition_to_json(dp)},
                                  {"after", decomposition_to_json(lifted)}}
                                 .dump()
                          << "\n";
            }
        } else if (*cmd_chk) {
            SuiteOptions opts;
            opts.max_n = max_n;
            opts.seeds = seeds_n;
            opts.timeout_ms = timeout_ms;
            opts.spot11 = spot11;
            opts.deterministic = deterministic;
            opts.seed = seed;
            if (!resume_path.empty()) {
                std::ifstream prev(resume_path);
                std::string line;
                while (std::getline(prev, line)) {
                    if (line.empty()) continue;
                    json j = json::parse(line, nullptr, false);
                    if (!j.is_discarded() && j.contains("id"))
                        opts.skip_ids.insert(j["id"].get<std::string>());
                }
            }
            SuiteResult r = run_suite(suite, opts);
            std::ostream* rep = &std::cout;
            std::ofstream out_file;
            if (!out_path.empty()) {
                out_file.open(out_path, std::ios::app);
                rep = &out_file;
            }
            for (const json& line : r.lines) *rep << line.dump() << "\n";
            std::cerr << r.name << ": " << r.cases << " cases, " << r.violations << " violations, "
                      << r.timeouts << " timeouts\n";
            for (const std::string& note : r.notes) std::cerr << "  " << note << "\n";
            return r.exit_code();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
