#ifndef CLIQUECOVER_REDUCTION_HPP
#define CLIQUECOVER_REDUCTION_HPP

#include "degeneracy.hpp"
#include "graph.hpp"
#include "oracles.hpp"
#include "problems.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliquecover {

/// One applied data-reduction step, recorded in original vertex ids.
struct ReductionStep {
    enum class Kind {
        RemovedCoveredVertex, // isolated / no uncovered incident edges
        MergedTwin,           // adjacent pair with equal closed neighborhoods
        MergedNonAdjTwin,     // non-adjacent pair with equal open neighborhoods
        ForcedClique,         // clique committed to the solution
    };
    Kind kind;
    std::string rule;
    Vertex removed = -1;
    Vertex kept = -1;
    Clique clique;             // ForcedClique only
    long long param_delta = 0; // decrement charged to the parameter
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;

    void dump_json(std::ostream& os) const
    {
        os << '[';
        for (size_t i = 0; i < steps.size(); ++i) {
            const auto& s = steps[i];
            os << (i ? "," : "") << "{\"rule\":\"" << s.rule << '"';
            if (s.removed >= 0) os << ",\"removed\":" << s.removed;
            if (s.kept >= 0) os << ",\"kept\":" << s.kept;
            if (!s.clique.empty()) {
                os << ",\"clique\":[";
                for (size_t j = 0; j < s.clique.size(); ++j) os << (j ? "," : "") << s.clique[j];
                os << ']';
            }
            if (s.param_delta) os << ",\"param_delta\":" << s.param_delta;
            os << '}';
        }
        os << ']';
    }
};

/// Replays a trace backwards over a cover expressed in original vertex ids.
inline Cover replay_lift(const ReductionTrace& trace, Cover cover)
{
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        switch (it->kind) {
        case ReductionStep::Kind::RemovedCoveredVertex:
            break;
        case ReductionStep::Kind::ForcedClique:
            cover.push_back(it->clique);
            break;
        case ReductionStep::Kind::MergedTwin:
            for (Clique& c : cover)
                if (sorted_contains(c, it->kept)) sorted_insert(c, it->removed);
            break;
        case ReductionStep::Kind::MergedNonAdjTwin: {
            Cover extra;
            for (const Clique& c : cover)
                if (sorted_contains(c, it->kept)) {
                    Clique swapped = c;
                    sorted_erase(swapped, it->kept);
                    sorted_insert(swapped, it->removed);
                    extra.push_back(std::move(swapped));
                }
            for (Clique& c : extra) cover.push_back(std::move(c));
            break;
        }
        }
    }
    return cover;
}

struct ReducedInstance {
    enum class Verdict { Open, No };

    Graph graph;                     // kernel, reindexed
    std::vector<Vertex> to_original; // kernel id -> original id
    long long parameter = 0;         // k or t after reduction
    std::vector<char> pre_covered;   // kernel edge ids already covered (ACC)
    Cover forced;                    // cliques committed by rules, original ids
    ReductionTrace trace;
    Verdict verdict = Verdict::Open;
    const Graph* original = nullptr;

    int kernel_n() const { return graph.vertex_count(); }
    int kernel_m() const { return graph.edge_count(); }

    /// Lifts a solver cover on the kernel back to the original instance.
    /// Rejects covers that do not solve the kernel.
    Cover lift(const Cover& kernel_cover) const
    {
        for (const Clique& c : kernel_cover) {
            if (c.empty() || !graph.is_clique(c))
                throw std::invalid_argument("lift: reduced solution contains an invalid clique");
        }
        for (EdgeId e = 0; e < graph.edge_count(); ++e) {
            if (pre_covered.size() > static_cast<size_t>(e) && pre_covered[e]) continue;
            Edge edge = graph.edge(e);
            bool covered = false;
            for (const Clique& c : kernel_cover)
                if (sorted_contains(c, edge.u) && sorted_contains(c, edge.v)) { covered = true; break; }
            if (!covered) throw std::invalid_argument("lift: reduced solution misses a kernel edge");
        }
        Cover translated;
        translated.reserve(kernel_cover.size());
        for (const Clique& c : kernel_cover) {
            Clique t;
            t.reserve(c.size());
            for (Vertex v : c) t.push_back(to_original[v]);
            std::sort(t.begin(), t.end());
            translated.push_back(std::move(t));
        }
        return replay_lift(trace, translated);
    }
};

namespace detail_reduce {

struct DynamicGraph {
    const Graph* g;
    std::vector<char> alive;
    std::vector<std::set<Vertex>> adj;

    explicit DynamicGraph(const Graph& graph) : g(&graph), alive(graph.vertex_count(), 1), adj(graph.vertex_count())
    {
        for (Vertex v = 0; v < graph.vertex_count(); ++v)
            adj[v].insert(graph.neighbors(v).begin(), graph.neighbors(v).end());
    }

    void remove(Vertex v)
    {
        alive[v] = 0;
        for (Vertex w : adj[v]) adj[w].erase(v);
        adj[v].clear();
    }

    std::vector<Vertex> alive_vertices() const
    {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < g->vertex_count(); ++v)
            if (alive[v]) out.push_back(v);
        return out;
    }
};

inline ReducedInstance finish_kernel(const Graph& original, const DynamicGraph& dyn,
                                     long long parameter, Cover forced, ReductionTrace trace,
                                     const std::vector<char>* covered_original)
{
    ReducedInstance out;
    out.original = &original;
    out.parameter = parameter;
    out.forced = std::move(forced);
    out.trace = std::move(trace);
    auto sub = induced_subgraph(original, dyn.alive_vertices());
    // drop edges to removed vertices: induced subgraph over alive set keeps
    // exactly the surviving adjacency
    out.graph = std::move(sub.graph);
    out.to_original = std::move(sub.to_original);
    out.pre_covered.assign(out.graph.edge_count(), 0);
    if (covered_original) {
        for (EdgeId e = 0; e < out.graph.edge_count(); ++e) {
            Edge ke = out.graph.edge(e);
            EdgeId oid = original.edge_id(out.to_original[ke.u], out.to_original[ke.v]);
            out.pre_covered[e] = (*covered_original)[oid];
        }
    }
    return out;
}

} // namespace detail_reduce

/// Kernelization for the k-clique edge cover problem: strip vertices without
/// edges, merge adjacent twins (equal closed neighborhoods) that have a third
/// neighbor, and commit isolated-edge components as forced cliques at cost 1.
/// After the fixpoint the instance is declared NO if the kernel exceeds the
/// (d+1)k vertex bound or reaches the twin-free 2^k vertex bound.
inline ReducedInstance reduce_ecc(const Graph& g, int k)
{
    if (k < 0) throw std::invalid_argument("reduce_ecc: k must be nonnegative");
    detail_reduce::DynamicGraph dyn(g);
    ReductionTrace trace;
    Cover forced;
    long long budget = k;
    bool budget_exhausted = false;

    bool changed = true;
    while (changed && !budget_exhausted) {
        changed = false;

        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (dyn.alive[v] && dyn.adj[v].empty()) {
                dyn.remove(v);
                trace.steps.push_back({ReductionStep::Kind::RemovedCoveredVertex, "ecc-isolated", v});
                changed = true;
            }
        if (changed) continue;

        // adjacent twins sharing a third neighbor: keep the smallest id
        {
            std::map<std::vector<Vertex>, Vertex> classes;
            std::vector<std::pair<Vertex, Vertex>> merges; // (removed, kept)
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                if (!dyn.alive[v] || dyn.adj[v].size() < 2) continue;
                std::vector<Vertex> key(dyn.adj[v].begin(), dyn.adj[v].end());
                key.insert(std::lower_bound(key.begin(), key.end(), v), v);
                auto [it, inserted] = classes.try_emplace(std::move(key), v);
                if (!inserted) merges.emplace_back(v, it->second);
            }
            for (auto [rem, kept] : merges) {
                // earlier removals in the batch may have shrunk this pair to a
                // bare edge, which the isolated-edge rule must handle instead
                if (dyn.adj[rem].size() < 2) continue;
                dyn.remove(rem);
                trace.steps.push_back({ReductionStep::Kind::MergedTwin, "ecc-twin", rem, kept});
                changed = true;
            }
        }
        if (changed) continue;

        // isolated-edge components become forced cliques
        for (Vertex v = 0; v < g.vertex_count() && !budget_exhausted; ++v) {
            if (!dyn.alive[v] || dyn.adj[v].size() != 1) continue;
            Vertex w = *dyn.adj[v].begin();
            if (dyn.adj[w].size() != 1) continue;
            if (budget == 0) {
                budget_exhausted = true;
                break;
            }
            Clique c = v < w ? Clique{v, w} : Clique{w, v};
            dyn.remove(v);
            dyn.remove(w);
            --budget;
            forced.push_back(c);
            trace.steps.push_back({ReductionStep::Kind::ForcedClique, "ecc-isolated-edge", -1, -1, c, 1});
            changed = true;
        }
    }

    ReducedInstance out = detail_reduce::finish_kernel(g, dyn, budget, std::move(forced),
                                                       std::move(trace), nullptr);
    long long n = out.kernel_n();
    if (budget_exhausted) {
        out.verdict = ReducedInstance::Verdict::No;
        return out;
    }
    int d = degeneracy_context(out.graph).d;
    if (n > (static_cast<long long>(d) + 1) * budget) out.verdict = ReducedInstance::Verdict::No;
    if (budget < 62 && n >= (1LL << budget)) out.verdict = ReducedInstance::Verdict::No;
    return out;
}

/// Kernelization for the assignment-bounded cover: remove vertices with no
/// uncovered incident edge, commit the closed neighborhood of a vertex whose
/// uncovered edges form a clique (cost |N[x]|), and commit edges without
/// common neighbors (cost 2). Covered edges stay in the graph as a bitmap.
inline ReducedInstance reduce_acc(const Graph& g, long long t)
{
    if (t < 0) throw std::invalid_argument("reduce_acc: t must be nonnegative");
    detail_reduce::DynamicGraph dyn(g);
    std::vector<char> covered(g.edge_count(), 0);
    ReductionTrace trace;
    Cover forced;
    long long budget = t;

    auto uncovered_degree = [&](Vertex v) {
        int c = 0;
        for (Vertex w : dyn.adj[v])
            if (!covered[g.edge_id(v, w)]) ++c;
        return c;
    };

    bool changed = true;
    while (changed) {
        changed = false;

        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (dyn.alive[v] && uncovered_degree(v) == 0) {
                dyn.remove(v);
                trace.steps.push_back({ReductionStep::Kind::RemovedCoveredVertex, "acc-covered", v});
                changed = true;
            }
        if (changed) continue;

        // simplicial vertex with all incident edges uncovered
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (!dyn.alive[v] || dyn.adj[v].empty()) continue;
            if (uncovered_degree(v) != static_cast<int>(dyn.adj[v].size())) continue;
            Clique c(dyn.adj[v].begin(), dyn.adj[v].end());
            sorted_insert(c, v);
            if (!g.is_clique(c)) continue;
            if (budget < static_cast<long long>(c.size())) continue;
            for (size_t i = 0; i < c.size(); ++i)
                for (size_t j = i + 1; j < c.size(); ++j) covered[g.edge_id(c[i], c[j])] = 1;
            budget -= static_cast<long long>(c.size());
            dyn.remove(v);
            forced.push_back(c);
            trace.steps.push_back({ReductionStep::Kind::ForcedClique, "acc-simplicial", -1, -1, c,
                                   static_cast<long long>(c.size())});
            changed = true;
            break;
        }
        if (changed) continue;

        // uncovered edge whose endpoints have no common neighbor
        for (Vertex v = 0; v < g.vertex_count() && !changed; ++v) {
            if (!dyn.alive[v]) continue;
            for (Vertex w : dyn.adj[v]) {
                if (w < v || covered[g.edge_id(v, w)]) continue;
                bool common = false;
                for (Vertex z : dyn.adj[v])
                    if (z != w && dyn.adj[w].count(z)) { common = true; break; }
                if (common) continue;
                if (budget < 2) continue;
                covered[g.edge_id(v, w)] = 1;
                budget -= 2;
                Clique c{v, w};
                forced.push_back(c);
                trace.steps.push_back({ReductionStep::Kind::ForcedClique, "acc-private-edge", -1, -1, c, 2});
                changed = true;
                break;
            }
        }
    }

    ReducedInstance out = detail_reduce::finish_kernel(g, dyn, budget, std::move(forced),
                                                       std::move(trace), &covered);
    if (out.kernel_n() > budget) out.verdict = ReducedInstance::Verdict::No;
    return out;
}

/// Twin removals valid when minimizing total assignments globally (no fixed
/// parameter): adjacent twins with a third neighbor, and non-adjacent twins
/// with equal open neighborhoods.
inline std::pair<ReducedInstance, Graph> reduce_assignment_min(const Graph& g)
{
    detail_reduce::DynamicGraph dyn(g);
    ReductionTrace trace;
    // One merge per pass: a vertex may simultaneously be the keeper of one
    // twin class and a removable member of the other kind, so batching could
    // record a merge against an already-removed keeper.
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<std::vector<Vertex>, Vertex> closed_classes, open_classes;
        for (Vertex v = 0; v < g.vertex_count() && !changed; ++v) {
            if (!dyn.alive[v]) continue;
            std::vector<Vertex> open(dyn.adj[v].begin(), dyn.adj[v].end());
            if (open.size() >= 2) {
                std::vector<Vertex> closed = open;
                closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
                auto [it, inserted] = closed_classes.try_emplace(std::move(closed), v);
                if (!inserted) {
                    dyn.remove(v);
                    trace.steps.push_back({ReductionStep::Kind::MergedTwin, "amcc-twin", v, it->second});
                    changed = true;
                    break;
                }
            }
            auto [it2, inserted2] = open_classes.try_emplace(std::move(open), v);
            if (!inserted2) {
                dyn.remove(v);
                trace.steps.push_back(
                    {ReductionStep::Kind::MergedNonAdjTwin, "amcc-open-twin", v, it2->second});
                changed = true;
            }
        }
    }
    ReducedInstance out = detail_reduce::finish_kernel(g, dyn, 0, {}, std::move(trace), nullptr);
    Graph kernel = out.graph;
    return {std::move(out), std::move(kernel)};
}

enum class SanityVerdict { Open, No };

/// Immediate NO checks for annotated multiplicity instances: an annotated
/// vertex whose weight undercuts every incident edge weight, or exceeds their
/// sum, cannot be matched (cliques have at least two vertices).
inline SanityVerdict awecp_sanity(const AwecpInstance& inst)
{
    for (Vertex x : inst.annotated) {
        long long want = inst.vertex_weight.at(x);
        if (want <= 0) throw std::invalid_argument("awecp_sanity: weights must be positive");
        long long sum = 0;
        long long smallest = -1;
        for (Vertex w : inst.graph.neighbors(x)) {
            long long we = inst.edge_weight.at(make_edge(x, w));
            sum += we;
            smallest = smallest < 0 ? we : std::min(smallest, we);
        }
        if (smallest < 0) return SanityVerdict::No; // no incident edges at all
        if (want < smallest) return SanityVerdict::No;
        if (want > sum) return SanityVerdict::No;
    }
    return SanityVerdict::Open;
}

/// Vertex-cover-to-assignment-cover construction: add q = 2m+1 vertices
/// adjacent to everything, budget t = (n+k)q + 2m. The input is a YES
/// instance of the k-clique vertex cover problem iff the output is a YES
/// instance of the assignment cover problem.
inline AccInstance reduce_vcc_to_acc(const Graph& g, int k)
{
    if (k < 0) throw std::invalid_argument("reduce_vcc_to_acc: k must be nonnegative");
    const int n = g.vertex_count();
    const long long m = g.edge_count();
    const long long q = 2 * m + 1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
    for (long long i = 0; i < q; ++i)
        for (Vertex v = 0; v < n; ++v) edges.emplace_back(static_cast<Vertex>(n + i), v);
    AccInstance out;
    out.graph = Graph::build(n + static_cast<int>(q), edges);
    out.t = (static_cast<long long>(n) + k) * q + 2 * m;
    return out;
}

} // namespace cliquecover

#endif
