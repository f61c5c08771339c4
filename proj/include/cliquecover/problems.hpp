#ifndef CLIQUECOVER_PROBLEMS_HPP
#define CLIQUECOVER_PROBLEMS_HPP

#include "graph.hpp"
#include "rational.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

namespace cliquecover {

struct SearchStats {
    long long nodes = 0;     // invocations of the recursive body
    int max_depth = 0;       // root = 0
    int max_branching = 0;   // most branches explored at one node
    double time_ms = 0.0;
    bool timed_out = false;

    void enter(int depth)
    {
        ++nodes;
        if (depth > max_depth) max_depth = depth;
    }
    void record_branching(int b)
    {
        if (b > max_branching) max_branching = b;
    }
};

struct Solution {
    Cover cliques;
    std::vector<Rational> gamma; // per-clique weights when the problem carries them

    /// Total vertex-to-clique assignments.
    long long assignment_total() const
    {
        long long t = 0;
        for (const auto& c : cliques) t += static_cast<long long>(c.size());
        return t;
    }
};

struct SolveResult {
    std::optional<Solution> solution; // nullopt = NO (or timeout, see stats)
    SearchStats stats;

    bool yes() const { return solution.has_value(); }
};

struct SolveOptions {
    bool check_invariants = false;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct DeadlineGuard {
    const SolveOptions* opts;
    bool expired = false;

    bool check()
    {
        if (expired) return true;
        if (opts->deadline && std::chrono::steady_clock::now() > *opts->deadline) expired = true;
        return expired;
    }
};

using EdgeWeights = std::map<Edge, Rational>;
using VertexWeights = std::map<Vertex, Rational>;

struct EccInstance {
    Graph graph;
    int k = 0;
};

struct AccInstance {
    Graph graph;
    long long t = 0;
};

/// Edge multiplicities are exact; vertices in `annotated` additionally carry
/// exact membership counts. Weights are positive integers.
struct AwecpInstance {
    Graph graph;
    int k = 0;
    std::map<Edge, long long> edge_weight;
    std::set<Vertex> annotated;
    std::map<Vertex, long long> vertex_weight;
};

/// Per-edge weight sums over clique weights gamma must match exactly;
/// weights are positive rationals.
struct AewcdInstance {
    Graph graph;
    int k = 0;
    EdgeWeights edge_weight;
    std::set<Vertex> annotated;
    VertexWeights vertex_weight;
};

struct LrccInstance {
    Graph graph;
    int k = 0;
    std::set<Edge> required_edges;
};

/// Colors ≤ k; adjacent vertices share no color; every pair in `mutual`
/// shares one; every vertex gets at least one. A solution's cliques are the
/// color classes (independent sets of the graph).
struct PmcInstance {
    Graph graph;
    int k = 0;
    std::set<Edge> mutual; // non-adjacent pairs
};

using ProblemInstance =
    std::variant<EccInstance, AccInstance, AwecpInstance, AewcdInstance, LrccInstance, PmcInstance>;

} // namespace cliquecover

#endif
