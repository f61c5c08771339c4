#ifndef CLIQUECOVER_BENCH_HPP
#define CLIQUECOVER_BENCH_HPP

// Search-tree comparison harness: runs the edge-cover engines over seeded
// random instances at the smallest feasible k and reports per-run node
// counts plus aggregate node-count ratios against the baseline engine.

#include "generators.hpp"
#include "solvers_f1.hpp"
#include "solvers_f2.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace cliquecover::bench {

struct GnpFamily {
    int n = 0;
    double p = 0.0;
    int count = 0;
};

struct BenchConfig {
    uint64_t seed = 1;
    std::vector<std::string> engines; // subset of {"eccg", "f1", "f2"}
    double timeout_ms = 60000;
    int threads = 1;
    std::vector<GnpFamily> families;
};

/// Flat key-value config: `seed = 7`, `engines = eccg,f1,f2`,
/// `timeout_ms = 60000`, `threads = 4`, and one `gnp = n,p,count` line per
/// instance family.
inline BenchConfig parse_bench_config(std::istream& in)
{
    BenchConfig cfg;
    cfg.engines.clear();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped;
        for (char c : line)
            if (c != ' ' && c != '\t' && c != '\r') stripped += c;
        if (stripped.empty() || stripped[0] == '#') continue;
        auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("bench config: expected key = value at line " + std::to_string(lineno));
        std::string key = stripped.substr(0, eq), value = stripped.substr(eq + 1);
        if (key == "seed") {
            cfg.seed = std::stoull(value);
        } else if (key == "timeout_ms") {
            cfg.timeout_ms = std::stod(value);
        } else if (key == "threads") {
            cfg.threads = std::stoi(value);
        } else if (key == "engines") {
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) cfg.engines.push_back(item);
        } else if (key == "gnp") {
            std::stringstream ss(value);
            std::string a, b, c;
            if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c, ','))
                throw std::runtime_error("bench config: gnp wants n,p,count at line " + std::to_string(lineno));
            cfg.families.push_back({std::stoi(a), std::stod(b), std::stoi(c)});
        } else {
            throw std::runtime_error("bench config: unknown key '" + key + "' at line " + std::to_string(lineno));
        }
    }
    if (cfg.engines.empty()) throw std::runtime_error("bench config: no engines listed");
    for (const auto& e : cfg.engines)
        if (e != "eccg" && e != "f1" && e != "f2")
            throw std::runtime_error("bench config: unknown engine '" + e + "'");
    return cfg;
}

struct BenchRow {
    std::string instance;
    std::string engine;
    std::string answer; // YES / NO / TIMEOUT
    int n = 0;
    int m = 0;
    int k = 0;
    long long nodes = 0;
    int depth = 0;
    int max_branching = 0;
    double time_ms = 0.0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    bool answers_identical = true;
    // medians over instances where both runs answered
    std::optional<double> median_ratio_eccg_f1;
    std::optional<double> median_ratio_eccg_f2;
};

namespace detail {

inline std::optional<double> median(std::vector<double> xs)
{
    if (xs.empty()) return std::nullopt;
    std::sort(xs.begin(), xs.end());
    size_t mid = xs.size() / 2;
    if (xs.size() % 2) return xs[mid];
    return (xs[mid - 1] + xs[mid]) / 2;
}

} // namespace detail

inline BenchReport bench_run(const BenchConfig& cfg)
{
    // Instances are generated up front from one seeded stream, so the corpus
    // is identical regardless of thread count.
    struct Job {
        std::string name;
        Graph graph;
        int k = 0;
    };
    std::vector<Job> jobs;
    std::mt19937_64 rng(cfg.seed);
    for (const auto& fam : cfg.families)
        for (int i = 0; i < fam.count; ++i) {
            Job job;
            job.graph = gnp_random(fam.n, fam.p, rng);
            std::ostringstream name;
            name << "gnp-" << fam.n << '-' << fam.p << '-' << i;
            job.name = name.str();
            jobs.push_back(std::move(job));
        }

    BenchReport report;
    report.rows.resize(jobs.size() * cfg.engines.size());

    auto run_instance = [&](size_t idx) {
        Job& job = jobs[idx];
        job.k = min_ecc(job.graph, EccEngine::F2).first;
        for (size_t ei = 0; ei < cfg.engines.size(); ++ei) {
            const std::string& engine = cfg.engines[ei];
            SolveOptions opts;
            opts.deadline = std::chrono::steady_clock::now() +
                            std::chrono::microseconds(static_cast<long long>(cfg.timeout_ms * 1000));
            SolveResult r;
            if (engine == "eccg")
                r = eccg_baseline(job.graph, job.k, opts);
            else if (engine == "f1")
                r = eccs(job.graph, job.k, opts);
            else
                r = eccs2(job.graph, job.k, opts);
            BenchRow& row = report.rows[idx * cfg.engines.size() + ei];
            row.instance = job.name;
            row.engine = engine;
            row.n = job.graph.vertex_count();
            row.m = job.graph.edge_count();
            row.k = job.k;
            row.answer = r.stats.timed_out ? "TIMEOUT" : (r.yes() ? "YES" : "NO");
            row.nodes = r.stats.nodes;
            row.depth = r.stats.max_depth;
            row.max_branching = r.stats.max_branching;
            row.time_ms = r.stats.time_ms;
        }
    };

    int threads = std::max(1, cfg.threads);
    if (threads == 1) {
        for (size_t i = 0; i < jobs.size(); ++i) run_instance(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1))
                    run_instance(i);
            });
        for (auto& th : pool) th.join();
    }

    // aggregates
    auto engine_row = [&](size_t idx, const std::string& engine) -> const BenchRow* {
        for (size_t ei = 0; ei < cfg.engines.size(); ++ei)
            if (cfg.engines[ei] == engine) return &report.rows[idx * cfg.engines.size() + ei];
        return nullptr;
    };
    std::vector<double> ratio_f1, ratio_f2;
    for (size_t i = 0; i < jobs.size(); ++i) {
        const BenchRow* base = engine_row(i, "eccg");
        std::string answer;
        for (size_t ei = 0; ei < cfg.engines.size(); ++ei) {
            const BenchRow& row = report.rows[i * cfg.engines.size() + ei];
            if (row.answer == "TIMEOUT") continue;
            if (answer.empty())
                answer = row.answer;
            else if (answer != row.answer)
                report.answers_identical = false;
        }
        if (!base || base->answer == "TIMEOUT") continue;
        if (const BenchRow* f1 = engine_row(i, "f1"); f1 && f1->answer != "TIMEOUT" && f1->nodes > 0)
            ratio_f1.push_back(static_cast<double>(base->nodes) / static_cast<double>(f1->nodes));
        if (const BenchRow* f2 = engine_row(i, "f2"); f2 && f2->answer != "TIMEOUT" && f2->nodes > 0)
            ratio_f2.push_back(static_cast<double>(base->nodes) / static_cast<double>(f2->nodes));
    }
    report.median_ratio_eccg_f1 = detail::median(std::move(ratio_f1));
    report.median_ratio_eccg_f2 = detail::median(std::move(ratio_f2));
    return report;
}

} // namespace cliquecover::bench

#endif
