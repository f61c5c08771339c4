#ifndef CLIQUECOVER_SOLVERS_F1_HPP
#define CLIQUECOVER_SOLVERS_F1_HPP

// Bounded search trees that branch on cliques enumerated from a restricted
// subgraph around the selected uncovered edge. State is a covered-edge
// counter array with per-node journaled flips.

#include "clique_enum.hpp"
#include "degeneracy.hpp"
#include "problems.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>
#include <vector>

namespace cliquecover {

namespace detail_f1 {

struct EdgeCoverage {
    const Graph* g;
    std::vector<int> count;
    int uncovered;

    EdgeCoverage(const Graph& graph, const std::vector<char>& pre_covered)
        : g(&graph), count(graph.edge_count(), 0)
    {
        uncovered = 0;
        base = pre_covered;
        if (base.empty()) base.assign(graph.edge_count(), 0);
        for (EdgeId e = 0; e < graph.edge_count(); ++e)
            if (!base[e]) ++uncovered;
    }

    bool covered(EdgeId e) const { return base[e] || count[e] > 0; }

    void apply(const Clique& z, std::vector<EdgeId>& bumped)
    {
        for (size_t i = 0; i < z.size(); ++i)
            for (size_t j = i + 1; j < z.size(); ++j) {
                EdgeId e = g->edge_id(z[i], z[j]);
                if (count[e]++ == 0 && !base[e]) --uncovered;
                bumped.push_back(e);
            }
    }

    void revert(const std::vector<EdgeId>& bumped)
    {
        for (EdgeId e : bumped)
            if (--count[e] == 0 && !base[e]) ++uncovered;
    }

    std::vector<char> base;
};

/// Shared recursion for the three engines; `Select` yields the next uncovered
/// edge, `restrict_set` the vertex set whose cliques are branched on, and
/// `mode` picks maximal-only or all cliques.
template <typename Select, typename Restrict>
class EdgeBranchSolver {
public:
    EdgeBranchSolver(const Graph& g, const SolveOptions& opts, EnumMode mode, Select select,
                     Restrict restrict_set, std::vector<char> pre_covered)
        : g_(g), opts_(opts), mode_(mode), select_(std::move(select)),
          restrict_(std::move(restrict_set)), coverage_(g, pre_covered), deadline_{&opts}
    {
    }

    /// Budget semantics: for the clique-count variant `cost` of a clique is 1
    /// and a branch may recurse while budget stays >= 1; for the assignment
    /// variant cost is |Z| and recursion needs budget >= 2.
    SolveResult run(long long budget, bool assignment_costs)
    {
        auto start = std::chrono::steady_clock::now();
        SolveResult result;
        stats_ = &result.stats;
        assignment_ = assignment_costs;
        stats_->enter(0);
        if (coverage_.uncovered == 0) {
            result.solution = Solution{};
        } else if (budget >= (assignment_costs ? 2 : 1)) {
            stats_->nodes = 0; // the recursion counts its own root
            if (recurse(budget, 0, 0)) {
                result.solution = Solution{current_, {}};
            }
        }
        result.stats.timed_out = deadline_.expired;
        result.stats.time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return result;
    }

private:
    bool recurse(long long budget, int depth, int scan_hint)
    {
        stats_->enter(depth);
        if (deadline_.check()) return false;

        auto [x, y, hint] = select_(coverage_, scan_hint);
        if (opts_.check_invariants) check_selection(x, y);

        int branches = 0;
        bool found = false;
        enumerate_cliques_with_edge(g_, x, y, restrict_(x, y), mode_, [&](const Clique& z) {
            long long cost = assignment_ ? static_cast<long long>(z.size()) : 1;
            if (budget - cost < 0) return true; // next clique
            ++branches;
            std::vector<EdgeId> bumped;
            coverage_.apply(z, bumped);
            current_.push_back(z);
            long long left = budget - cost;
            if (coverage_.uncovered == 0) {
                found = true;
            } else if (left >= (assignment_ ? 2 : 1)) {
                found = recurse(left, depth + 1, hint);
            }
            if (!found) {
                current_.pop_back();
                coverage_.revert(bumped);
            }
            return !found && !deadline_.expired;
        });
        stats_->record_branching(branches);
        return found;
    }

    // Every edge at a vertex placed before the selected edge's earlier
    // endpoint must already be covered when that edge is picked.
    void check_selection(Vertex x, Vertex y) const
    {
        if (selection_guard_) selection_guard_(coverage_, x, y);
    }

public:
    std::function<void(const EdgeCoverage&, Vertex, Vertex)> selection_guard_;

private:
    const Graph& g_;
    const SolveOptions& opts_;
    EnumMode mode_;
    Select select_;
    Restrict restrict_;
    EdgeCoverage coverage_;
    DeadlineGuard deadline_;
    SearchStats* stats_ = nullptr;
    Cover current_;
    bool assignment_ = false;
};

struct DepSelection {
    const Graph* g;
    const DegeneracyContext* ctx;

    // First uncovered edge of the degeneracy edge order; x is the earlier
    // endpoint. The scan resumes from the parent's position: coverage only
    // grows along a branch.
    std::tuple<Vertex, Vertex, int> operator()(const EdgeCoverage& cov, int from) const
    {
        for (int i = from; i < static_cast<int>(ctx->edge_order.size()); ++i) {
            EdgeId id = ctx->edge_order[i];
            if (cov.covered(id)) continue;
            Edge e = g->edge(id);
            Vertex x = earlier_endpoint(*ctx, e);
            return {x, x == e.u ? e.v : e.u, i};
        }
        throw std::logic_error("no uncovered edge to select");
    }
};

struct InputOrderSelection {
    const Graph* g;

    std::tuple<Vertex, Vertex, int> operator()(const EdgeCoverage& cov, int from) const
    {
        for (EdgeId id = from; id < g->edge_count(); ++id) {
            if (cov.covered(id)) continue;
            Edge e = g->edge(id);
            return {e.u, e.v, id};
        }
        throw std::logic_error("no uncovered edge to select");
    }
};

struct LaterRestriction {
    const Graph* g;
    const DegeneracyContext* ctx;

    // N_d[x] ∩ N[y]: later closed neighborhood of the earlier endpoint meets
    // the closed neighborhood of the later one.
    std::vector<Vertex> operator()(Vertex x, Vertex y) const
    {
        std::vector<Vertex> ndx = ctx->later[x];
        sorted_insert(ndx, x);
        auto ny = g->closed_neighborhood(y);
        return sorted_intersection<Vertex>(ndx, ny);
    }
};

struct FullRestriction {
    const Graph* g;

    std::vector<Vertex> operator()(Vertex x, Vertex y) const
    {
        auto nx = g->closed_neighborhood(x);
        auto ny = g->closed_neighborhood(y);
        return sorted_intersection<Vertex>(nx, ny);
    }
};

inline void guard_prefix_covered(const Graph& g, const DegeneracyContext& ctx,
                                 const EdgeCoverage& cov, Vertex x)
{
    int pos = ctx.position[x];
    for (int i = 0; i < pos; ++i) {
        Vertex u = ctx.ordering[i];
        for (Vertex w : g.neighbors(u))
            if (!cov.covered(g.edge_id(u, w)))
                throw std::logic_error("selection invariant violated: earlier vertex has uncovered edge");
    }
}

} // namespace detail_f1

/// Edge clique cover search: first uncovered edge of the degeneracy edge
/// order, branching on the maximal cliques of the restricted subgraph.
inline SolveResult eccs(const Graph& g, int k, const SolveOptions& opts = {},
                        const DegeneracyContext* ctx_in = nullptr)
{
    DegeneracyContext local;
    if (!ctx_in) {
        local = degeneracy_context(g);
        ctx_in = &local;
    }
    detail_f1::EdgeBranchSolver solver(g, opts, EnumMode::Maximal,
                                       detail_f1::DepSelection{&g, ctx_in},
                                       detail_f1::LaterRestriction{&g, ctx_in}, {});
    if (opts.check_invariants) {
        const DegeneracyContext* ctx = ctx_in;
        const Graph* gp = &g;
        solver.selection_guard_ = [gp, ctx](const detail_f1::EdgeCoverage& cov, Vertex x, Vertex) {
            detail_f1::guard_prefix_covered(*gp, *ctx, cov, x);
        };
    }
    return solver.run(k, false);
}

/// Assignment-bounded cover search: branches on every clique of the
/// restricted subgraph, clique cost = its size.
inline SolveResult accs(const Graph& g, long long t, const SolveOptions& opts = {},
                        std::vector<char> pre_covered = {},
                        const DegeneracyContext* ctx_in = nullptr)
{
    DegeneracyContext local;
    if (!ctx_in) {
        local = degeneracy_context(g);
        ctx_in = &local;
    }
    detail_f1::EdgeBranchSolver solver(g, opts, EnumMode::All,
                                       detail_f1::DepSelection{&g, ctx_in},
                                       detail_f1::LaterRestriction{&g, ctx_in},
                                       std::move(pre_covered));
    return solver.run(t, true);
}

/// Baseline: input-order edge selection and maximal cliques of the full
/// common neighborhood (no degeneracy restriction).
inline SolveResult eccg_baseline(const Graph& g, int k, const SolveOptions& opts = {})
{
    detail_f1::EdgeBranchSolver solver(g, opts, EnumMode::Maximal,
                                       detail_f1::InputOrderSelection{&g},
                                       detail_f1::FullRestriction{&g}, {});
    return solver.run(k, false);
}

} // namespace cliquecover

#endif
