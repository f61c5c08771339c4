#ifndef CLIQUECOVER_CLI_HPP
#define CLIQUECOVER_CLI_HPP

#include "bench.hpp"
#include "io.hpp"
#include "oracles.hpp"
#include "reduction.hpp"
#include "solvers_f1.hpp"
#include "solvers_f2.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace cliquecover::cli {

using nlohmann::json;

namespace detail {

inline json cover_json(const Cover& cover)
{
    json out = json::array();
    for (const Clique& c : cover) out.push_back(c);
    return out;
}

inline json stats_json(const SearchStats& s)
{
    return json{{"nodes", s.nodes},
                {"depth", s.max_depth},
                {"max_branching", s.max_branching},
                {"time_ms", s.time_ms}};
}

inline json reductions_json(const ReducedInstance& red)
{
    json rules = json::array();
    for (const auto& step : red.trace.steps) rules.push_back(step.rule);
    return json{{"rules_applied", rules}, {"kernel_n", red.kernel_n()}, {"kernel_m", red.kernel_m()}};
}

struct Emit {
    bool as_json = false;
    bool with_stats = false;
    std::ostream* out;

    void result(const std::string& answer, const std::optional<Solution>& sol,
                const SearchStats* stats, const json& extra = json::object())
    {
        if (as_json) {
            json doc;
            doc["answer"] = answer;
            if (sol) {
                doc["cover"] = cover_json(sol->cliques);
                if (!sol->gamma.empty()) {
                    json g = json::array();
                    for (const Rational& r : sol->gamma) g.push_back(format_rational(r));
                    doc["gamma"] = g;
                }
            }
            if (with_stats && stats) doc["stats"] = stats_json(*stats);
            for (auto& [k, v] : extra.items()) doc[k] = v;
            *out << doc.dump(2) << '\n';
            return;
        }
        *out << answer << '\n';
        if (sol) {
            for (size_t i = 0; i < sol->cliques.size(); ++i) {
                *out << "clique";
                if (i < sol->gamma.size()) *out << " (weight " << format_rational(sol->gamma[i]) << ")";
                *out << ':';
                for (Vertex v : sol->cliques[i]) *out << ' ' << v;
                *out << '\n';
            }
        }
        if (with_stats && stats)
            *out << "stats: nodes=" << stats->nodes << " depth=" << stats->max_depth
                 << " max_branching=" << stats->max_branching << " time_ms=" << stats->time_ms << '\n';
        for (auto& [k, v] : extra.items()) *out << k << ": " << v.dump() << '\n';
    }
};

inline Cover parse_cover_json(const json& doc)
{
    Cover cover;
    for (const auto& arr : doc) {
        Clique c;
        for (const auto& v : arr) c.push_back(v.get<Vertex>());
        std::sort(c.begin(), c.end());
        cover.push_back(std::move(c));
    }
    return cover;
}

} // namespace detail

/// Runs the command line given as argv-style arguments; exit code 0 means
/// the instance was answered (YES or NO), nonzero means usage or IO failure.
inline int cli_dispatch(std::vector<std::string> args, std::ostream& out = std::cout,
                        std::ostream& err = std::cerr)
{
    CLI::App app{"exact solvers for parameterized clique cover problems"};
    app.require_subcommand(1);

    std::string graph_path, weight_path, estar_path, pairs_path, solution_path, config_path;
    std::string format_name = "auto", engine = "f2", kind;
    int k = 0;
    long long t = 0;
    bool stats = false, as_json = false, no_reduce = false, integer_gamma = false;
    long long wmax = 1;
    uint64_t seed_override = 0;
    bool seed_given = false;

    auto add_common = [&](CLI::App* cmd, bool with_engine, bool eccg_allowed) {
        cmd->add_option("graph", graph_path, "graph file")->required();
        cmd->add_option("--format", format_name, "graph format: dimacs|edgelist|auto");
        cmd->add_flag("--stats", stats, "report search statistics");
        cmd->add_flag("--json", as_json, "machine readable output");
        if (with_engine)
            cmd->add_option("--engine", engine,
                            eccg_allowed ? "engine: f1|f2|eccg" : "engine: f1|f2");
    };

    auto* ecc = app.add_subcommand("ecc", "edge clique cover with at most k cliques");
    ecc->add_option("--k", k, "clique budget")->required();
    ecc->add_flag("--no-reduce", no_reduce, "skip data reduction");
    add_common(ecc, true, true);

    auto* acc = app.add_subcommand("acc", "edge clique cover with at most t vertex assignments");
    acc->add_option("--t", t, "assignment budget")->required();
    acc->add_flag("--no-reduce", no_reduce, "skip data reduction");
    add_common(acc, true, false);

    auto* wecp = app.add_subcommand("wecp", "exact edge multiplicities (integer weights)");
    wecp->add_option("--k", k, "clique budget")->required();
    wecp->add_option("weights", weight_path, "weight file")->required();
    add_common(wecp, false, false);

    auto* ewcd = app.add_subcommand("ewcd", "exact weighted clique decomposition");
    ewcd->add_option("--k", k, "clique budget")->required();
    ewcd->add_option("weights", weight_path, "weight file")->required();
    ewcd->add_flag("--integer", integer_gamma, "restrict clique weights to integers");
    ewcd->add_option("--wmax", wmax, "largest integer clique weight (with --integer)");
    add_common(ewcd, false, false);

    auto* lrcc = app.add_subcommand("lrcc", "vertex cover by cliques respecting required edges");
    lrcc->add_option("--k", k, "clique budget")->required();
    lrcc->add_option("--estar", estar_path, "required edge file")->required();
    add_common(lrcc, false, false);

    auto* pmc = app.add_subcommand("pmc", "multi-coloring with mutual pairs");
    pmc->add_option("--k", k, "color budget")->required();
    pmc->add_option("--pairs", pairs_path, "mutual pair file")->required();
    add_common(pmc, false, false);

    auto* minecc = app.add_subcommand("min-ecc", "smallest edge clique cover");
    add_common(minecc, true, true);

    auto* minassign = app.add_subcommand("min-assign", "assignment-minimum clique cover");
    add_common(minassign, false, false);

    auto* verify = app.add_subcommand("verify", "check a solution file against an instance");
    verify->add_option("--solution", solution_path, "solution JSON file")->required();
    verify->add_option("--kind", kind, "ecc|acc|wecp|ewcd|lrcc|pmc")->required();
    verify->add_option("--k", k, "clique/color budget");
    verify->add_option("--t", t, "assignment budget");
    verify->add_option("--weights", weight_path, "weight file");
    verify->add_option("--estar", estar_path, "required edge file");
    verify->add_option("--pairs", pairs_path, "mutual pair file");
    verify->add_option("graph", graph_path, "graph file")->required();
    verify->add_option("--format", format_name, "graph format: dimacs|edgelist|auto");
    verify->add_flag("--json", as_json, "machine readable output");

    auto* bench_cmd = app.add_subcommand("bench", "engine comparison harness");
    bench_cmd->add_option("--config", config_path, "bench config file")->required();
    auto* seed_opt = bench_cmd->add_option("--seed", seed_override, "override config seed");
    bench_cmd->add_flag("--json", as_json, "machine readable output (always on)");

    std::vector<const char*> argv;
    argv.push_back("cliquecover");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    seed_given = seed_opt->count() > 0;

    detail::Emit emit{as_json, stats, &out};
    try {
        io::GraphFormat fmt = format_name == "dimacs"    ? io::GraphFormat::Dimacs
                              : format_name == "edgelist" ? io::GraphFormat::EdgeList
                                                          : io::GraphFormat::Auto;
        SolveOptions opts;

        if (*ecc) {
            Graph g = io::load_graph(graph_path, fmt);
            auto run_engine = [&](const Graph& h, int budget) {
                if (engine == "f1") return eccs(h, budget, opts);
                if (engine == "eccg") return eccg_baseline(h, budget, opts);
                if (engine != "f2") throw std::runtime_error("unknown engine: " + engine);
                return eccs2(h, budget, opts);
            };
            if (no_reduce) {
                SolveResult r = run_engine(g, k);
                emit.result(r.yes() ? "YES" : "NO",
                            r.solution ? std::optional<Solution>(*r.solution) : std::nullopt,
                            &r.stats);
                return 0;
            }
            ReducedInstance red = reduce_ecc(g, k);
            json extra{{"reductions", detail::reductions_json(red)}};
            if (red.verdict == ReducedInstance::Verdict::No) {
                emit.result("NO", std::nullopt, nullptr, extra);
                return 0;
            }
            SolveResult r = run_engine(red.graph, static_cast<int>(red.parameter));
            if (!r.solution) {
                emit.result("NO", std::nullopt, &r.stats, extra);
                return 0;
            }
            Solution lifted{red.lift(r.solution->cliques), {}};
            emit.result("YES", lifted, &r.stats, extra);
            return 0;
        }
        if (*acc) {
            Graph g = io::load_graph(graph_path, fmt);
            auto run_engine = [&](const Graph& h, long long budget, std::vector<char> pre) {
                if (engine == "f1") return accs(h, budget, opts, std::move(pre));
                if (engine != "f2") throw std::runtime_error("unknown engine: " + engine);
                return accs2(h, budget, opts, std::move(pre));
            };
            if (no_reduce) {
                SolveResult r = run_engine(g, t, {});
                emit.result(r.yes() ? "YES" : "NO",
                            r.solution ? std::optional<Solution>(*r.solution) : std::nullopt,
                            &r.stats);
                return 0;
            }
            ReducedInstance red = reduce_acc(g, t);
            json extra{{"reductions", detail::reductions_json(red)}};
            if (red.verdict == ReducedInstance::Verdict::No) {
                emit.result("NO", std::nullopt, nullptr, extra);
                return 0;
            }
            SolveResult r = run_engine(red.graph, red.parameter, red.pre_covered);
            if (!r.solution) {
                emit.result("NO", std::nullopt, &r.stats, extra);
                return 0;
            }
            Solution lifted{red.lift(r.solution->cliques), {}};
            emit.result("YES", lifted, &r.stats, extra);
            return 0;
        }
        if (*wecp) {
            Graph g = io::load_graph(graph_path, fmt);
            auto w = io::load_weighted(weight_path, g);
            AwecpInstance inst{g, k, {}, w.annotated, {}};
            for (const Edge& e : g.edges()) {
                auto it = w.edge_weight.find(e);
                if (it == w.edge_weight.end())
                    throw std::runtime_error("missing weight for an edge");
                if (denominator(it->second) != 1)
                    throw std::runtime_error("edge multiplicities must be integers");
                inst.edge_weight[e] = static_cast<long long>(numerator(it->second));
            }
            for (Vertex x : w.annotated) {
                const Rational& r = w.vertex_weight.at(x);
                if (denominator(r) != 1)
                    throw std::runtime_error("vertex multiplicities must be integers");
                inst.vertex_weight[x] = static_cast<long long>(numerator(r));
            }
            if (awecp_sanity(inst) == SanityVerdict::No) {
                emit.result("NO", std::nullopt, nullptr, json{{"sanity", "rejected"}});
                return 0;
            }
            SolveResult r = awecps(inst, opts);
            emit.result(r.yes() ? "YES" : "NO",
                        r.solution ? std::optional<Solution>(*r.solution) : std::nullopt, &r.stats);
            return 0;
        }
        if (*ewcd) {
            Graph g = io::load_graph(graph_path, fmt);
            auto w = io::load_weighted(weight_path, g);
            AewcdInstance inst{g, k, w.edge_weight, w.annotated, w.vertex_weight};
            for (const Edge& e : g.edges())
                if (!inst.edge_weight.count(e)) throw std::runtime_error("missing weight for an edge");
            AewcdOptions aopts;
            aopts.solve = opts;
            aopts.integer_gamma = integer_gamma;
            aopts.wmax = wmax;
            SolveResult r = aewcds(inst, aopts);
            emit.result(r.yes() ? "YES" : "NO",
                        r.solution ? std::optional<Solution>(*r.solution) : std::nullopt, &r.stats);
            return 0;
        }
        if (*lrcc) {
            Graph g = io::load_graph(graph_path, fmt);
            auto estar = io::load_pairs(estar_path, g);
            for (const Edge& e : estar)
                if (g.edge_id(e.u, e.v) < 0) throw std::runtime_error("required pair is not an edge");
            SolveResult r = lrccs(g, k, estar, opts);
            emit.result(r.yes() ? "YES" : "NO",
                        r.solution ? std::optional<Solution>(*r.solution) : std::nullopt, &r.stats);
            return 0;
        }
        if (*pmc) {
            Graph g = io::load_graph(graph_path, fmt);
            auto pairs = io::load_pairs(pairs_path, g);
            PmcInstance inst{g, k, pairs};
            SolveResult r = solve_pmc(inst, opts);
            emit.result(r.yes() ? "YES" : "NO",
                        r.solution ? std::optional<Solution>(*r.solution) : std::nullopt, &r.stats);
            return 0;
        }
        if (*minecc) {
            Graph g = io::load_graph(graph_path, fmt);
            EccEngine eng = engine == "f1"     ? EccEngine::F1
                            : engine == "eccg" ? EccEngine::Baseline
                                               : EccEngine::F2;
            auto [kstar, cover] = min_ecc(g, eng, opts);
            emit.result("YES", Solution{cover, {}}, nullptr, json{{"k_star", kstar}});
            return 0;
        }
        if (*minassign) {
            Graph g = io::load_graph(graph_path, fmt);
            auto [tstar, cover] = min_assignment_cover(g, opts);
            emit.result("YES", Solution{cover, {}}, nullptr, json{{"t_star", tstar}});
            return 0;
        }
        if (*verify) {
            Graph g = io::load_graph(graph_path, fmt);
            std::ifstream sf(solution_path);
            if (!sf) throw std::runtime_error("cannot open solution file: " + solution_path);
            json doc = json::parse(sf);
            Solution sol;
            sol.cliques = detail::parse_cover_json(doc.at("cover"));
            if (doc.contains("gamma"))
                for (const auto& s : doc["gamma"]) sol.gamma.push_back(parse_rational(s.get<std::string>()));
            ProblemInstance inst;
            if (kind == "ecc") {
                inst = EccInstance{g, k};
            } else if (kind == "acc") {
                inst = AccInstance{g, t};
            } else if (kind == "wecp" || kind == "ewcd") {
                auto w = io::load_weighted(weight_path, g);
                if (kind == "ewcd") {
                    inst = AewcdInstance{g, k, w.edge_weight, w.annotated, w.vertex_weight};
                } else {
                    AwecpInstance wi{g, k, {}, w.annotated, {}};
                    for (const auto& [e, r] : w.edge_weight)
                        wi.edge_weight[e] = static_cast<long long>(numerator(r));
                    for (const auto& [x, r] : w.vertex_weight)
                        wi.vertex_weight[x] = static_cast<long long>(numerator(r));
                    inst = wi;
                }
            } else if (kind == "lrcc") {
                inst = LrccInstance{g, k, io::load_pairs(estar_path, g)};
            } else if (kind == "pmc") {
                inst = PmcInstance{g, k, io::load_pairs(pairs_path, g)};
            } else {
                throw std::runtime_error("unknown problem kind: " + kind);
            }
            auto vr = oracle::verify_solution(inst, sol);
            if (as_json)
                out << json{{"valid", vr.ok}, {"reason", vr.reason}}.dump(2) << '\n';
            else
                out << (vr.ok ? "valid" : "invalid: " + vr.reason) << '\n';
            return 0;
        }
        if (*bench_cmd) {
            std::ifstream cf(config_path);
            if (!cf) throw std::runtime_error("cannot open bench config: " + config_path);
            bench::BenchConfig cfg = bench::parse_bench_config(cf);
            if (seed_given) cfg.seed = seed_override;
            bench::BenchReport report = bench::bench_run(cfg);
            json rows = json::array();
            for (const auto& row : report.rows)
                rows.push_back(json{{"instance", row.instance},
                                    {"engine", row.engine},
                                    {"answer", row.answer},
                                    {"n", row.n},
                                    {"m", row.m},
                                    {"k", row.k},
                                    {"nodes", row.nodes},
                                    {"depth", row.depth},
                                    {"max_branching", row.max_branching},
                                    {"time_ms", row.time_ms}});
            json doc{{"rows", rows}, {"answers_identical", report.answers_identical}};
            if (report.median_ratio_eccg_f1) doc["median_node_ratio_eccg_f1"] = *report.median_ratio_eccg_f1;
            if (report.median_ratio_eccg_f2) doc["median_node_ratio_eccg_f2"] = *report.median_ratio_eccg_f2;
            out << doc.dump(2) << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace cliquecover::cli

#endif
