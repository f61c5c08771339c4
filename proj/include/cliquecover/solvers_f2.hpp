#ifndef CLIQUECOVER_SOLVERS_F2_HPP
#define CLIQUECOVER_SOLVERS_F2_HPP

// Bounded search trees over a shared CoverState: at every node the algorithm
// branches on the cliques already built (via the representative sets) plus
// one fresh clique, selecting the last open edge of the degeneracy edge
// order. A single state is mutated and rolled back through the journal.

#include "cover_state.hpp"
#include "degeneracy.hpp"
#include "lp.hpp"
#include "problems.hpp"
#include "reduction.hpp"
#include "solvers_f1.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cliquecover {

namespace detail_f2 {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double elapsed_ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

inline void check_suffix_invariant(const CoverState& state, const DegeneracyContext& ctx, Vertex x)
{
    // Every clique must live inside the ordering suffix starting at x.
    int pos = ctx.position[x];
    for (int l = 0; l < state.clique_count(); ++l)
        for (Vertex v : state.clique(l))
            if (ctx.position[v] < pos)
                throw std::logic_error("clique escapes the ordering suffix of the selected edge");
}

inline void check_space_invariant(const CoverState& state, int k_top)
{
    const Graph& g = state.graph();
    long long rep_total = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        rep_total += static_cast<long long>(state.reps(v).size());
        int memberships = 0;
        for (int l = 0; l < state.clique_count(); ++l)
            if (sorted_contains(state.clique(l), v)) ++memberships;
        if (memberships > g.degree(v))
            throw std::logic_error("vertex joined more cliques than its degree");
    }
    long long bound = 2LL * g.edge_count() + static_cast<long long>(k_top) * g.max_degree();
    if (state.clique_count() > 0 && rep_total > bound)
        throw std::logic_error("representative sets exceed the linear space bound");
}

// Last entry of the degeneracy edge order (scanning downward from `hint`)
// that fails the predicate's notion of done; returns (x, y, index) with x the
// earlier endpoint.
template <typename Open>
std::optional<std::tuple<Vertex, Vertex, int>> select_last(const Graph& g,
                                                           const DegeneracyContext& ctx, int hint,
                                                           const Open& open)
{
    for (int i = std::min<int>(hint, static_cast<int>(ctx.edge_order.size()) - 1); i >= 0; --i) {
        EdgeId id = ctx.edge_order[i];
        if (!open(id)) continue;
        Edge e = g.edge(id);
        Vertex x = earlier_endpoint(ctx, e);
        return std::make_tuple(x, x == e.u ? e.v : e.u, i);
    }
    return std::nullopt;
}

} // namespace detail_f2

/// Edge clique cover, framework-2 engine.
inline SolveResult eccs2(const Graph& g, int k, const SolveOptions& opts = {},
                         std::vector<char> pre_covered = {},
                         const DegeneracyContext* ctx_in = nullptr)
{
    DegeneracyContext local;
    if (!ctx_in) {
        local = degeneracy_context(g);
        ctx_in = &local;
    }
    const DegeneracyContext& ctx = *ctx_in;
    detail_f2::Timer timer;
    SolveResult result;
    CoverState state(g, std::move(pre_covered));
    DeadlineGuard deadline{&opts};

    auto rec = [&](auto&& self, int k_rem, int depth, int hint) -> bool {
        result.stats.enter(depth);
        if (deadline.check()) return false;
        auto sel = detail_f2::select_last(g, ctx, hint,
                                          [&](EdgeId id) { return !state.edge_covered(id); });
        if (!sel) throw std::logic_error("no open edge despite incomplete cover");
        auto [x, y, idx] = *sel;
        if (opts.check_invariants) {
            detail_f2::check_suffix_invariant(state, ctx, x);
            detail_f2::check_space_invariant(state, k);
            state.validate();
        }
        int branches = 0;
        for (int l : state.absorb_candidates(x, y)) {
            ++branches;
            auto tok = state.cover_edge_in_clique(x, y, l);
            if (state.uncovered_edges() == 0) {
                result.solution = Solution{state.cliques(), {}};
                return true;
            }
            if (self(self, k_rem, depth + 1, idx)) return true;
            state.undo_cover_edge(tok);
            if (deadline.expired) break;
        }
        if (k_rem > 0 && !deadline.expired) {
            ++branches;
            state.add_new_clique(x, y);
            if (state.uncovered_edges() == 0) {
                result.solution = Solution{state.cliques(), {}};
                return true;
            }
            if (self(self, k_rem - 1, depth + 1, idx)) return true;
            state.remove_last_clique();
        }
        result.stats.record_branching(branches);
        return false;
    };

    if (state.uncovered_edges() == 0) {
        result.stats.enter(0);
        result.solution = Solution{};
    } else {
        rec(rec, k, 0, g.edge_count() - 1);
    }
    result.stats.timed_out = deadline.expired;
    result.stats.time_ms = timer.elapsed_ms();
    return result;
}

/// Assignment-bounded cover, framework-2 engine. Absorbing an edge costs the
/// number of endpoints newly added to the clique; a fresh clique costs 2.
inline SolveResult accs2(const Graph& g, long long t, const SolveOptions& opts = {},
                         std::vector<char> pre_covered = {},
                         const DegeneracyContext* ctx_in = nullptr)
{
    DegeneracyContext local;
    if (!ctx_in) {
        local = degeneracy_context(g);
        ctx_in = &local;
    }
    const DegeneracyContext& ctx = *ctx_in;
    detail_f2::Timer timer;
    SolveResult result;
    CoverState state(g, std::move(pre_covered));
    DeadlineGuard deadline{&opts};

    auto rec = [&](auto&& self, long long t_rem, int depth, int hint) -> bool {
        result.stats.enter(depth);
        if (deadline.check()) return false;
        auto sel = detail_f2::select_last(g, ctx, hint,
                                          [&](EdgeId id) { return !state.edge_covered(id); });
        if (!sel) throw std::logic_error("no open edge despite incomplete cover");
        auto [x, y, idx] = *sel;
        if (opts.check_invariants) state.validate();
        int branches = 0;
        for (int l : state.absorb_candidates(x, y)) {
            long long cost = 2;
            if (sorted_contains(state.clique(l), x)) --cost;
            if (sorted_contains(state.clique(l), y)) --cost;
            if (t_rem < cost) continue;
            ++branches;
            auto tok = state.cover_edge_in_clique(x, y, l);
            if (state.uncovered_edges() == 0) {
                result.solution = Solution{state.cliques(), {}};
                return true;
            }
            if (self(self, t_rem - cost, depth + 1, idx)) return true;
            state.undo_cover_edge(tok);
            if (deadline.expired) break;
        }
        if (t_rem >= 2 && !deadline.expired) {
            ++branches;
            state.add_new_clique(x, y);
            if (state.uncovered_edges() == 0) {
                result.solution = Solution{state.cliques(), {}};
                return true;
            }
            if (self(self, t_rem - 2, depth + 1, idx)) return true;
            state.remove_last_clique();
        }
        result.stats.record_branching(branches);
        return false;
    };

    if (state.uncovered_edges() == 0) {
        result.stats.enter(0);
        result.solution = Solution{};
    } else if (t >= 2) {
        rec(rec, t, 0, g.edge_count() - 1);
    } else {
        result.stats.enter(0);
    }
    result.stats.timed_out = deadline.expired;
    result.stats.time_ms = timer.elapsed_ms();
    return result;
}

/// Exact-multiplicity cover search. Edge and annotated-vertex weights are
/// treated as budgets, spent on every inclusion (including the side
/// inclusions caused by expanding a clique past other edges).
inline SolveResult awecps(const AwecpInstance& inst, const SolveOptions& opts = {})
{
    const Graph& g = inst.graph;
    DegeneracyContext ctx = degeneracy_context(g);
    detail_f2::Timer timer;
    SolveResult result;
    CoverState state(g);
    DeadlineGuard deadline{&opts};

    const int m = g.edge_count();
    std::vector<long long> ew(m);
    int nonzero_edges = 0;
    for (EdgeId e = 0; e < m; ++e) {
        ew[e] = inst.edge_weight.at(g.edge(e));
        if (ew[e] < 1) throw std::invalid_argument("edge weights must be positive");
        ++nonzero_edges;
    }
    std::vector<long long> vw(g.vertex_count(), -1); // -1: not annotated
    int nonzero_vertices = 0;
    for (Vertex x : inst.annotated) {
        vw[x] = inst.vertex_weight.at(x);
        if (vw[x] < 1) throw std::invalid_argument("vertex weights must be positive");
        ++nonzero_vertices;
    }
    auto dec_edge = [&](EdgeId e) {
        if (--ew[e] == 0) --nonzero_edges;
    };
    auto inc_edge = [&](EdgeId e) {
        if (ew[e]++ == 0) ++nonzero_edges;
    };
    auto dec_vertex = [&](Vertex v) {
        if (vw[v] >= 0 && --vw[v] == 0) --nonzero_vertices;
    };
    auto inc_vertex = [&](Vertex v) {
        if (vw[v] >= 0 && vw[v]++ == 0) ++nonzero_vertices;
    };
    auto budgets_exhausted = [&]() { return nonzero_edges == 0 && nonzero_vertices == 0; };

    auto rec = [&](auto&& self, int k_rem, int depth, int hint) -> bool {
        result.stats.enter(depth);
        if (deadline.check()) return false;
        auto sel = detail_f2::select_last(g, ctx, hint, [&](EdgeId id) { return ew[id] > 0; });
        if (!sel) return false; // edge budgets spent but vertex budgets remain
        auto [x, y, idx] = *sel;
        EdgeId exy = g.edge_id(x, y);
        if (opts.check_invariants) state.validate();

        int branches = 0;
        for (int l : state.absorb_candidates(x, y)) {
            const Clique& c = state.clique(l);
            bool x_in = sorted_contains(c, x), y_in = sorted_contains(c, y);
            if (x_in && y_in) continue;
            // budget gate: every fresh inclusion triggered by this expansion
            // must still be affordable
            if ((!x_in && vw[x] == 0) || (!y_in && vw[y] == 0)) continue;
            bool affordable = true;
            std::vector<Vertex> others;
            for (Vertex z : c)
                if (z != x && z != y) others.push_back(z);
            for (Vertex z : others) {
                if (!x_in && ew[g.edge_id(x, z)] == 0) affordable = false;
                if (!y_in && ew[g.edge_id(y, z)] == 0) affordable = false;
            }
            if (!affordable) continue;
            ++branches;
            auto tok = state.cover_edge_in_clique(x, y, l);
            for (Vertex z : others) {
                if (!x_in) dec_edge(g.edge_id(x, z));
                if (!y_in) dec_edge(g.edge_id(y, z));
            }
            dec_edge(exy);
            if (!x_in) dec_vertex(x);
            if (!y_in) dec_vertex(y);
            bool done = budgets_exhausted();
            if (done) result.solution = Solution{state.cliques(), {}};
            if (done || self(self, k_rem, depth + 1, idx)) return true;
            inc_edge(exy);
            if (!x_in) inc_vertex(x);
            if (!y_in) inc_vertex(y);
            for (Vertex z : others) {
                if (!x_in) inc_edge(g.edge_id(x, z));
                if (!y_in) inc_edge(g.edge_id(y, z));
            }
            state.undo_cover_edge(tok);
            if (deadline.expired) break;
        }
        if (k_rem > 0 && !deadline.expired) {
            if ((vw[x] == 0) || (vw[y] == 0)) {
                result.stats.record_branching(branches);
                return false; // the edge still needs cliques its endpoint cannot join
            }
            ++branches;
            state.add_new_clique(x, y);
            dec_edge(exy);
            dec_vertex(x);
            dec_vertex(y);
            bool done = budgets_exhausted();
            if (done) result.solution = Solution{state.cliques(), {}};
            if (done || self(self, k_rem - 1, depth + 1, idx)) return true;
            inc_vertex(y);
            inc_vertex(x);
            inc_edge(exy);
            state.remove_last_clique();
        }
        result.stats.record_branching(branches);
        return false;
    };

    if (budgets_exhausted()) {
        result.stats.enter(0);
        result.solution = Solution{};
    } else {
        rec(rec, inst.k, 0, m - 1);
    }
    result.stats.timed_out = deadline.expired;
    result.stats.time_ms = timer.elapsed_ms();
    return result;
}

struct AewcdOptions {
    SolveOptions solve;
    bool merged_subroutine = false; // fold the covered/uncovered split around one branch block
    bool integer_gamma = false;     // replace the LP by integer enumeration in [1, wmax]
    long long wmax = 1;
};

/// Exact weighted decomposition search. Edges carry covered/uncovered marks
/// separate from clique containment; once every edge is marked, the clique
/// weights are decided exactly (LP or bounded integer search).
inline SolveResult aewcds(const AewcdInstance& inst, const AewcdOptions& aopts = {})
{
    const Graph& g = inst.graph;
    const SolveOptions& opts = aopts.solve;
    DegeneracyContext ctx = degeneracy_context(g);
    detail_f2::Timer timer;
    SolveResult result;
    CoverState state(g);
    DeadlineGuard deadline{&opts};

    const int m = g.edge_count();
    std::vector<char> marked(m, 0);
    int unmarked = m;
    auto mark = [&](EdgeId e) {
        marked[e] = 1;
        --unmarked;
    };
    auto unmark = [&](EdgeId e) {
        marked[e] = 0;
        ++unmarked;
    };

    // Leaf: decide weights for the current cover; prunes zero-weight cliques
    // from the reported solution.
    auto leaf = [&]() -> bool {
        LpSystem sys = build_lp(g, state.cliques(), inst.edge_weight, inst.annotated,
                                inst.vertex_weight);
        std::vector<Rational> gamma;
        if (aopts.integer_gamma) {
            auto got = integer_gamma_search(sys, aopts.wmax);
            if (!got) return false;
            gamma.assign(got->begin(), got->end());
        } else {
            auto got = lp_feasible(sys);
            if (!got) return false;
            gamma = std::move(*got);
        }
        Solution sol;
        for (size_t i = 0; i < gamma.size(); ++i) {
            if (gamma[i] == 0) continue;
            sol.cliques.push_back(state.clique(static_cast<int>(i)));
            sol.gamma.push_back(gamma[i]);
        }
        result.solution = std::move(sol);
        return true;
    };

    auto rec = [&](auto&& self, int k_rem, int depth, int hint) -> bool {
        result.stats.enter(depth);
        if (deadline.check()) return false;
        auto sel = detail_f2::select_last(g, ctx, hint, [&](EdgeId id) { return !marked[id]; });
        if (!sel) throw std::logic_error("no unmarked edge despite incomplete cover");
        auto [x, y, idx] = *sel;
        EdgeId exy = g.edge_id(x, y);
        if (opts.check_invariants) state.validate();

        int branches = 0;
        auto attempt_marked = [&](int k_next) -> bool {
            ++branches;
            mark(exy);
            bool got = unmarked == 0 ? leaf() : self(self, k_next, depth + 1, idx);
            if (!got) unmark(exy);
            return got;
        };
        auto attempt_unmarked = [&](int k_next) -> bool {
            ++branches;
            return self(self, k_next, depth + 1, idx);
        };

        // The selected edge may already sit inside a clique; marking it then
        // needs no further inclusion.
        bool contained = state.edge_covered(exy);

        if (!aopts.merged_subroutine) {
            if (contained && attempt_marked(k_rem)) return true;
            for (int l : state.absorb_candidates(x, y)) {
                const Clique& c = state.clique(l);
                if (sorted_contains(c, x) && sorted_contains(c, y)) continue;
                auto tok = state.cover_edge_in_clique(x, y, l);
                if (attempt_marked(k_rem)) return true;
                if (attempt_unmarked(k_rem)) return true;
                state.undo_cover_edge(tok);
                if (deadline.expired) break;
            }
            if (k_rem > 0 && !deadline.expired) {
                state.add_new_clique(x, y);
                if (attempt_marked(k_rem - 1)) return true;
                if (attempt_unmarked(k_rem - 1)) return true;
                state.remove_last_clique();
            }
        } else {
            // One branch block tried twice: first with the edge marked
            // covered, then with it left uncovered.
            auto branch_block = [&](bool marked_mode) -> bool {
                if (marked_mode && contained && attempt_marked(k_rem)) return true;
                for (int l : state.absorb_candidates(x, y)) {
                    const Clique& c = state.clique(l);
                    if (sorted_contains(c, x) && sorted_contains(c, y)) continue;
                    auto tok = state.cover_edge_in_clique(x, y, l);
                    bool got = marked_mode ? attempt_marked(k_rem) : attempt_unmarked(k_rem);
                    if (got) return true;
                    state.undo_cover_edge(tok);
                    if (deadline.expired) return false;
                }
                if (k_rem > 0 && !deadline.expired) {
                    state.add_new_clique(x, y);
                    bool got = marked_mode ? attempt_marked(k_rem - 1) : attempt_unmarked(k_rem - 1);
                    if (got) return true;
                    state.remove_last_clique();
                }
                return false;
            };
            if (branch_block(true)) return true;
            if (!deadline.expired && branch_block(false)) return true;
        }
        result.stats.record_branching(branches);
        return false;
    };

    if (m == 0) {
        result.stats.enter(0);
        if (inst.annotated.empty()) result.solution = Solution{};
    } else {
        rec(rec, inst.k, 0, m - 1);
    }
    result.stats.timed_out = deadline.expired;
    result.stats.time_ms = timer.elapsed_ms();
    return result;
}

/// Cover all vertices and a designated set of required edges with at most k
/// cliques. Works down the degeneracy ordering, interleaving required-edge
/// coverage with vertex coverage; singleton cliques are allowed.
inline SolveResult lrccs(const Graph& g, int k, const std::set<Edge>& required_edges,
                         const SolveOptions& opts = {})
{
    DegeneracyContext ctx = degeneracy_context(g);
    detail_f2::Timer timer;
    SolveResult result;
    CoverState state(g);
    DeadlineGuard deadline{&opts};

    const int m = g.edge_count();
    std::vector<char> required(m, 0);
    int required_open = 0;
    for (const Edge& e : required_edges) {
        EdgeId id = g.edge_id(e.u, e.v);
        if (id < 0) throw std::invalid_argument("lrccs: required pair is not an edge");
        if (!required[id]) {
            required[id] = 1;
            ++required_open;
        }
    }

    auto adjust_required = [&](CoverState::FrameToken tok, int direction) {
        for (EdgeId e : state.frame(tok).included_edges)
            if (required[e] && state.edge_multiplicity(e) == 1) required_open -= direction;
    };
    auto done = [&]() { return state.uncovered_vertices() == 0 && required_open == 0; };

    auto rec = [&](auto&& self, int k_rem, int depth, int hint) -> bool {
        result.stats.enter(depth);
        if (deadline.check()) return false;
        auto edge_sel = detail_f2::select_last(
            g, ctx, hint, [&](EdgeId id) { return required[id] && !state.edge_covered(id); });
        Vertex open_vertex = -1;
        for (int i = g.vertex_count() - 1; i >= 0; --i)
            if (!state.vertex_covered(ctx.ordering[i])) { open_vertex = ctx.ordering[i]; break; }

        bool vertex_mode;
        Vertex x, y = -1;
        int idx = hint;
        if (edge_sel && open_vertex >= 0) {
            auto [ex, ey, ei] = *edge_sel;
            // work at the latest ordering position first
            vertex_mode = ctx.position[ex] < ctx.position[open_vertex];
            if (vertex_mode) {
                x = open_vertex;
            } else {
                x = ex;
                y = ey;
                idx = ei;
            }
        } else if (edge_sel) {
            auto [ex, ey, ei] = *edge_sel;
            vertex_mode = false;
            x = ex;
            y = ey;
            idx = ei;
        } else {
            vertex_mode = true;
            x = open_vertex;
        }
        if (opts.check_invariants) state.validate();

        std::vector<int> candidates =
            vertex_mode ? std::vector<int>(state.reps(x).begin(), state.reps(x).end())
                        : state.absorb_candidates(x, y);
        int branches = 0;
        for (int l : candidates) {
            Vertex partner = vertex_mode ? state.clique(l).front() : y;
            ++branches;
            auto tok = state.cover_edge_in_clique(x, partner, l);
            adjust_required(tok, +1);
            if (done()) {
                result.solution = Solution{state.cliques(), {}};
                return true;
            }
            if (self(self, k_rem, depth + 1, idx)) return true;
            adjust_required(tok, -1);
            state.undo_cover_edge(tok);
            if (deadline.expired) break;
        }
        if (k_rem > 0 && !deadline.expired) {
            Vertex partner = vertex_mode ? x : y;
            ++branches;
            state.add_new_clique(x, partner);
            auto tok = state.journal_depth() - 1;
            adjust_required(tok, +1);
            if (done()) {
                result.solution = Solution{state.cliques(), {}};
                return true;
            }
            if (self(self, k_rem - 1, depth + 1, idx)) return true;
            adjust_required(tok, -1);
            state.remove_last_clique();
        }
        result.stats.record_branching(branches);
        return false;
    };

    if (done()) {
        result.stats.enter(0);
        result.solution = Solution{};
    } else {
        rec(rec, k, 0, m - 1);
    }
    result.stats.timed_out = deadline.expired;
    result.stats.time_ms = timer.elapsed_ms();
    return result;
}

/// Multi-coloring through the complement: color classes are cliques of the
/// complement graph covering all vertices and the designated pairs.
inline SolveResult solve_pmc(const PmcInstance& inst, const SolveOptions& opts = {})
{
    for (const Edge& p : inst.mutual)
        if (inst.graph.has_edge(p.u, p.v))
            throw std::invalid_argument("solve_pmc: designated pair is adjacent");
    Graph comp = complement(inst.graph);
    return lrccs(comp, inst.k, inst.mutual, opts);
}

enum class EccEngine { F1, F2, Baseline };

/// Smallest k admitting an edge clique cover, with a witness. Runs the
/// reductions at every candidate k, solves the kernel, and lifts back.
inline std::pair<int, Cover> min_ecc(const Graph& g, EccEngine engine = EccEngine::F2,
                                     const SolveOptions& opts = {})
{
    if (g.edge_count() == 0) return {0, {}};
    long long limit = static_cast<long long>(g.vertex_count()) * g.vertex_count() / 4;
    for (int k = 1;; ++k) {
        if (k > limit) throw std::logic_error("min_ecc: no cover within the guaranteed bound");
        ReducedInstance red = reduce_ecc(g, k);
        if (red.verdict == ReducedInstance::Verdict::No) continue;
        SolveResult r;
        switch (engine) {
        case EccEngine::F1: r = eccs(red.graph, static_cast<int>(red.parameter), opts); break;
        case EccEngine::F2: r = eccs2(red.graph, static_cast<int>(red.parameter), opts); break;
        case EccEngine::Baseline:
            r = eccg_baseline(red.graph, static_cast<int>(red.parameter), opts);
            break;
        }
        if (r.solution) return {k, red.lift(r.solution->cliques)};
    }
}

/// Smallest total assignment count, with a witness. Applies the twin rules
/// valid for global minimization, then scans t upward.
inline std::pair<long long, Cover> min_assignment_cover(const Graph& g, const SolveOptions& opts = {})
{
    auto [amcc, kernel] = reduce_assignment_min(g);
    for (long long t = 0; t <= 2LL * kernel.edge_count(); ++t) {
        ReducedInstance red = reduce_acc(kernel, t);
        if (red.verdict == ReducedInstance::Verdict::No) continue;
        SolveResult r = accs2(red.graph, red.parameter, opts, red.pre_covered);
        if (!r.solution) continue;
        Cover kernel_cover = red.lift(r.solution->cliques);
        Cover full = amcc.lift(kernel_cover);
        long long total = 0;
        for (const Clique& c : full) total += static_cast<long long>(c.size());
        return {total, full};
    }
    throw std::logic_error("min_assignment_cover: no cover within the guaranteed bound");
}

} // namespace cliquecover

#endif
