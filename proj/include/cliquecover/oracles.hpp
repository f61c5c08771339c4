#ifndef CLIQUECOVER_ORACLES_HPP
#define CLIQUECOVER_ORACLES_HPP

// Brute-force ground-truth solvers and the solution verifier. These are kept
// independent of the search-tree solvers on purpose: they share only Graph
// and lp_feasible, so differential tests actually compare two routes.

#include "graph.hpp"
#include "lp.hpp"
#include "problems.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliquecover::oracle {

constexpr int kMaxOracleVertices = 8;

namespace detail {

inline void size_guard(const Graph& g)
{
    if (g.vertex_count() > kMaxOracleVertices)
        throw std::invalid_argument("oracle size guard: n > 8");
}

struct MaskGraph {
    int n = 0;
    uint32_t all = 0;
    std::vector<uint32_t> adj;

    explicit MaskGraph(const Graph& g)
        : n(g.vertex_count()), all(n == 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1), adj(n, 0)
    {
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w : g.neighbors(v)) adj[v] |= uint32_t(1) << w;
    }

    bool is_clique(uint32_t mask) const
    {
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1)
                if ((adj[v] & mask) != (mask & ~(uint32_t(1) << v))) return false;
        return true;
    }

    uint32_t common_neighbors(uint32_t mask) const
    {
        uint32_t inter = all;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) inter &= adj[v];
        return inter & ~mask;
    }
};

inline Clique mask_to_clique(uint32_t mask)
{
    Clique c;
    for (int v = 0; v < 32; ++v)
        if (mask >> v & 1) c.push_back(v);
    return c;
}

inline std::vector<uint32_t> all_clique_masks(const MaskGraph& mg, int min_size)
{
    std::vector<uint32_t> out;
    for (uint32_t mask = 1; mask <= mg.all; ++mask)
        if (std::popcount(mask) >= min_size && mg.is_clique(mask)) out.push_back(mask);
    return out;
}

inline std::vector<uint32_t> maximal_clique_masks(const MaskGraph& mg)
{
    std::vector<uint32_t> out;
    for (uint32_t mask = 1; mask <= mg.all; ++mask)
        if (mg.is_clique(mask) && mg.common_neighbors(mask) == 0) out.push_back(mask);
    return out;
}

inline uint64_t clique_edge_mask(const Graph& g, uint32_t mask)
{
    uint64_t em = 0;
    Clique c = mask_to_clique(mask);
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j) em |= uint64_t(1) << g.edge_id(c[i], c[j]);
    return em;
}

} // namespace detail

/// Smallest number of cliques covering every edge; a minimum cover drawn from
/// maximal cliques always exists, so only those are combined.
inline std::pair<int, Cover> oracle_min_ecc(const Graph& g)
{
    detail::size_guard(g);
    detail::MaskGraph mg(g);
    const int m = g.edge_count();
    if (m == 0) return {0, {}};
    const uint64_t full = m == 64 ? ~uint64_t(0) : (uint64_t(1) << m) - 1;
    std::vector<uint32_t> maximal = detail::maximal_clique_masks(mg);
    std::vector<uint64_t> emask(maximal.size());
    for (size_t i = 0; i < maximal.size(); ++i) emask[i] = detail::clique_edge_mask(g, maximal[i]);

    std::vector<int> chosen;
    auto choose = [&](auto&& self, size_t from, int left, uint64_t covered) -> bool {
        if (covered == full) return true;
        if (left == 0) return false;
        for (size_t i = from; i < maximal.size(); ++i) {
            if ((emask[i] | covered) == covered) continue;
            chosen.push_back(static_cast<int>(i));
            if (self(self, i + 1, left - 1, covered | emask[i])) return true;
            chosen.pop_back();
        }
        return false;
    };
    for (int k = 1;; ++k) {
        chosen.clear();
        if (choose(choose, 0, k, 0)) {
            Cover cover;
            for (int i : chosen) cover.push_back(detail::mask_to_clique(maximal[i]));
            return {k, cover};
        }
    }
}

/// Smallest total of vertex-to-clique assignments over all edge clique
/// covers; covers may use arbitrary (not only maximal) cliques.
inline std::pair<long long, Cover> oracle_min_assignment(const Graph& g)
{
    detail::size_guard(g);
    detail::MaskGraph mg(g);
    const int m = g.edge_count();
    if (m == 0) return {0, {}};
    const uint64_t full = m == 64 ? ~uint64_t(0) : (uint64_t(1) << m) - 1;
    std::vector<uint32_t> cliques = detail::all_clique_masks(mg, 2);
    std::vector<uint64_t> emask(cliques.size());
    for (size_t i = 0; i < cliques.size(); ++i) emask[i] = detail::clique_edge_mask(g, cliques[i]);
    std::vector<std::vector<int>> by_edge(m);
    for (size_t i = 0; i < cliques.size(); ++i)
        for (int e = 0; e < m; ++e)
            if (emask[i] >> e & 1) by_edge[e].push_back(static_cast<int>(i));
    for (auto& lst : by_edge)
        std::sort(lst.begin(), lst.end(),
                  [&](int a, int b) { return std::popcount(cliques[a]) > std::popcount(cliques[b]); });

    long long best = std::numeric_limits<long long>::max();
    std::vector<int> chosen, best_chosen;
    auto dfs = [&](auto&& self, uint64_t covered, long long cost) -> void {
        if (cost >= best) return;
        if (covered == full) {
            best = cost;
            best_chosen = chosen;
            return;
        }
        int e = std::countr_one(covered); // first uncovered edge id
        for (int i : by_edge[e]) {
            chosen.push_back(i);
            self(self, covered | emask[i], cost + std::popcount(cliques[i]));
            chosen.pop_back();
        }
    };
    dfs(dfs, 0, 0);
    Cover cover;
    for (int i : best_chosen) cover.push_back(detail::mask_to_clique(cliques[i]));
    return {best, cover};
}

/// Exhaustive multiset search: at most k cliques (repetition allowed), every
/// edge in exactly its weight many of them, every annotated vertex likewise.
inline std::optional<Cover> oracle_wecp(const AwecpInstance& inst)
{
    const Graph& g = inst.graph;
    detail::size_guard(g);
    detail::MaskGraph mg(g);
    const int m = g.edge_count();
    std::vector<long long> want(m);
    for (int e = 0; e < m; ++e) want[e] = inst.edge_weight.at(g.edge(e));
    std::vector<uint32_t> cliques = detail::all_clique_masks(mg, 2);
    std::vector<long long> have(m, 0);
    std::vector<long long> vhave(g.vertex_count(), 0);
    std::vector<long long> vwant(g.vertex_count(), -1);
    for (Vertex x : inst.annotated) vwant[x] = inst.vertex_weight.at(x);

    auto exact = [&]() {
        for (int e = 0; e < m; ++e)
            if (have[e] != want[e]) return false;
        for (Vertex x = 0; x < g.vertex_count(); ++x)
            if (vwant[x] >= 0 && vhave[x] != vwant[x]) return false;
        return true;
    };
    std::vector<int> chosen;
    auto dfs = [&](auto&& self, size_t from, int used) -> bool {
        if (exact()) return true;
        if (used == inst.k) return false;
        for (size_t i = from; i < cliques.size(); ++i) {
            bool fits = true;
            Clique c = detail::mask_to_clique(cliques[i]);
            for (size_t a = 0; a < c.size() && fits; ++a) {
                if (vwant[c[a]] >= 0 && vhave[c[a]] + 1 > vwant[c[a]]) fits = false;
                for (size_t b = a + 1; b < c.size() && fits; ++b)
                    if (have[g.edge_id(c[a], c[b])] + 1 > want[g.edge_id(c[a], c[b])]) fits = false;
            }
            if (!fits) continue;
            for (size_t a = 0; a < c.size(); ++a) {
                ++vhave[c[a]];
                for (size_t b = a + 1; b < c.size(); ++b) ++have[g.edge_id(c[a], c[b])];
            }
            chosen.push_back(static_cast<int>(i));
            if (self(self, i, used + 1)) return true;
            chosen.pop_back();
            for (size_t a = 0; a < c.size(); ++a) {
                --vhave[c[a]];
                for (size_t b = a + 1; b < c.size(); ++b) --have[g.edge_id(c[a], c[b])];
            }
        }
        return false;
    };
    if (!dfs(dfs, 0, 0)) return std::nullopt;
    Cover cover;
    for (int i : chosen) cover.push_back(detail::mask_to_clique(cliques[i]));
    return cover;
}

/// Exhaustive search over clique subsets of size ≤ k that cover all edges;
/// weight feasibility of each candidate cover is delegated to lp_feasible.
inline std::optional<std::pair<Cover, std::vector<Rational>>> oracle_ewcd(const AewcdInstance& inst)
{
    const Graph& g = inst.graph;
    detail::size_guard(g);
    detail::MaskGraph mg(g);
    const int m = g.edge_count();
    const uint64_t full = m == 0 ? 0 : (uint64_t(1) << m) - 1;
    std::vector<uint32_t> cliques = detail::all_clique_masks(mg, 2);
    std::vector<uint64_t> emask(cliques.size());
    for (size_t i = 0; i < cliques.size(); ++i) emask[i] = detail::clique_edge_mask(g, cliques[i]);

    Cover chosen;
    std::optional<std::pair<Cover, std::vector<Rational>>> found;
    auto try_lp = [&]() -> bool {
        LpSystem sys = build_lp(g, chosen, inst.edge_weight, inst.annotated, inst.vertex_weight);
        auto gamma = lp_feasible(sys);
        if (!gamma) return false;
        found = std::make_pair(chosen, *gamma);
        return true;
    };
    if (full == 0 && inst.annotated.empty()) return std::make_pair(Cover{}, std::vector<Rational>{});
    auto dfs = [&](auto&& self, size_t from, uint64_t covered, int used) -> bool {
        if (used == inst.k) return false;
        for (size_t i = from; i < cliques.size(); ++i) {
            chosen.push_back(detail::mask_to_clique(cliques[i]));
            uint64_t cov = covered | emask[i];
            if (cov == full && try_lp()) return true;
            if (self(self, i + 1, cov, used + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!dfs(dfs, 0, 0, 0)) return std::nullopt;
    return found;
}

/// Exhaustive cover search: ≤ k cliques covering every vertex and every
/// required edge. Replacing any clique of a cover by a maximal superset
/// keeps it a cover, so only maximal cliques are combined; failed
/// (coverage, budget) states are memoized.
inline std::optional<Cover> oracle_lrcc(const Graph& g, int k, const std::set<Edge>& required)
{
    detail::size_guard(g);
    detail::MaskGraph mg(g);
    const int n = g.vertex_count();
    // maximal cliques include the singletons of isolated vertices
    std::vector<uint32_t> cliques = detail::maximal_clique_masks(mg);
    std::vector<uint64_t> emask(cliques.size());
    for (size_t i = 0; i < cliques.size(); ++i) emask[i] = detail::clique_edge_mask(g, cliques[i]);
    std::vector<EdgeId> req;
    for (const Edge& e : required) {
        EdgeId id = g.edge_id(e.u, e.v);
        if (id < 0) throw std::invalid_argument("oracle_lrcc: required pair is not an edge");
        req.push_back(id);
    }

    std::vector<int> chosen;
    std::set<std::tuple<uint32_t, uint64_t, int>> failed;
    auto dfs = [&](auto&& self, uint32_t vcov, uint64_t ecov) -> bool {
        Vertex miss_v = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!(vcov >> v & 1)) { miss_v = v; break; }
        EdgeId miss_e = -1;
        for (EdgeId e : req)
            if (!(ecov >> e & 1)) { miss_e = e; break; }
        if (miss_v < 0 && miss_e < 0) return true;
        int left = k - static_cast<int>(chosen.size());
        if (left == 0) return false;
        auto key = std::make_tuple(vcov, ecov, left);
        if (failed.count(key)) return false;
        for (size_t i = 0; i < cliques.size(); ++i) {
            bool hits = miss_v >= 0 ? (cliques[i] >> miss_v & 1) != 0 : (emask[i] >> miss_e & 1) != 0;
            if (!hits) continue;
            chosen.push_back(static_cast<int>(i));
            if (self(self, vcov | cliques[i], ecov | emask[i])) return true;
            chosen.pop_back();
        }
        failed.insert(key);
        return false;
    };
    if (!dfs(dfs, 0, 0)) return std::nullopt;
    Cover cover;
    for (int i : chosen) cover.push_back(detail::mask_to_clique(cliques[i]));
    return cover;
}

/// Vertex clique cover viewed as coloring of the complement: backtracking
/// k-coloring with fixed vertex order.
inline bool oracle_vcc(const Graph& g, int k)
{
    detail::size_guard(g);
    const Graph comp = complement(g);
    const int n = g.vertex_count();
    if (n == 0) return true;
    if (k <= 0) return false;
    std::vector<int> color(n, -1);
    auto rec = [&](auto&& self, Vertex v, int used) -> bool {
        if (v == n) return true;
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (Vertex w : comp.neighbors(v))
                if (w < v && color[w] == c) { ok = false; break; }
            if (!ok) continue;
            color[v] = c;
            if (self(self, v + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

/// Exhaustive multi-coloring: every vertex gets a nonempty subset of k color
/// slots, adjacent vertices share none, each listed pair shares at least one.
/// Only usable when (2^k-1)^n is small.
inline bool oracle_pmc_assignments(const Graph& g, int k, const std::set<Edge>& mutual)
{
    const int n = g.vertex_count();
    if (k <= 0) return n == 0;
    if (k > 20) throw std::invalid_argument("oracle_pmc_assignments: k too large");
    const uint32_t choices = (uint32_t(1) << k) - 1;
    double space = 1;
    for (int i = 0; i < n; ++i) space *= static_cast<double>(choices);
    if (space > 2e7) throw std::invalid_argument("oracle_pmc_assignments: search space too large");

    std::vector<uint32_t> assign(n, 0);
    auto rec = [&](auto&& self, Vertex v) -> bool {
        if (v == n) {
            for (const Edge& p : mutual)
                if ((assign[p.u] & assign[p.v]) == 0) return false;
            return true;
        }
        for (uint32_t s = 1; s <= choices; ++s) {
            bool ok = true;
            for (Vertex w : g.neighbors(v))
                if (w < v && (assign[w] & s)) { ok = false; break; }
            if (!ok) continue;
            assign[v] = s;
            if (self(self, v + 1)) return true;
            assign[v] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

/// Exact maximum clique size; branch and bound over 64-bit candidate masks.
inline int clique_number(const Graph& g)
{
    const int n = g.vertex_count();
    if (n == 0) return 0;
    if (n > 64) throw std::invalid_argument("clique_number: n > 64");
    std::vector<uint64_t> adj(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) adj[v] |= uint64_t(1) << w;
    int best = 0;
    auto expand = [&](auto&& self, uint64_t cand, int size) -> void {
        if (size + std::popcount(cand) <= best) return;
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        while (cand) {
            if (size + std::popcount(cand) <= best) return;
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            self(self, adj[v] & cand, size + 1);
        }
    };
    expand(expand, n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1, 0);
    return best;
}

inline int independence_number(const Graph& g) { return clique_number(complement(g)); }

/// Brute-force degeneracy: max over vertex subsets of the minimum degree
/// inside the induced subgraph. Exponential; test-only cross-check.
inline int oracle_degeneracy(const Graph& g)
{
    const int n = g.vertex_count();
    if (n > 16) throw std::invalid_argument("oracle_degeneracy: n > 16");
    std::vector<uint32_t> adj(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) adj[v] |= uint32_t(1) << w;
    int best = 0;
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        int mindeg = std::numeric_limits<int>::max();
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) mindeg = std::min(mindeg, std::popcount(adj[v] & mask));
        best = std::max(best, mindeg);
    }
    return best;
}

struct VerifyResult {
    bool ok = true;
    std::string reason;

    static VerifyResult fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const { return ok; }
};

namespace detail {

inline std::string edge_name(const Edge& e)
{
    std::ostringstream os;
    os << '{' << e.u << ',' << e.v << '}';
    return os.str();
}

inline VerifyResult check_cliques(const Graph& g, const Cover& cover, size_t min_size)
{
    for (const Clique& c : cover) {
        if (c.empty()) return VerifyResult::fail("empty clique");
        if (c.size() < min_size) return VerifyResult::fail("clique below minimum size");
        if (!std::is_sorted(c.begin(), c.end()) || std::adjacent_find(c.begin(), c.end()) != c.end())
            return VerifyResult::fail("clique vertex list not a sorted set");
        for (Vertex v : c)
            if (v < 0 || v >= g.vertex_count()) return VerifyResult::fail("clique vertex out of range");
        if (!g.is_clique(c)) return VerifyResult::fail("vertex set is not a clique");
    }
    return {};
}

} // namespace detail

inline VerifyResult verify_solution(const ProblemInstance& problem, const Solution& sol)
{
    struct Visitor {
        const Solution& sol;

        VerifyResult operator()(const EccInstance& inst) const
        {
            if (auto r = detail::check_cliques(inst.graph, sol.cliques, 1); !r) return r;
            if (static_cast<int>(sol.cliques.size()) > inst.k)
                return VerifyResult::fail("more than k cliques");
            for (const Edge& e : inst.graph.edges()) {
                bool covered = false;
                for (const Clique& c : sol.cliques)
                    if (sorted_contains(c, e.u) && sorted_contains(c, e.v)) { covered = true; break; }
                if (!covered) return VerifyResult::fail("uncovered edge " + detail::edge_name(e));
            }
            return {};
        }

        VerifyResult operator()(const AccInstance& inst) const
        {
            EccInstance as_ecc{inst.graph, static_cast<int>(sol.cliques.size())};
            if (auto r = (*this)(as_ecc); !r) return r;
            if (sol.assignment_total() > inst.t)
                return VerifyResult::fail("assignment total exceeds t");
            return {};
        }

        VerifyResult operator()(const AwecpInstance& inst) const
        {
            if (auto r = detail::check_cliques(inst.graph, sol.cliques, 2); !r) return r;
            if (static_cast<int>(sol.cliques.size()) > inst.k)
                return VerifyResult::fail("more than k cliques");
            for (const Edge& e : inst.graph.edges()) {
                long long count = 0;
                for (const Clique& c : sol.cliques)
                    if (sorted_contains(c, e.u) && sorted_contains(c, e.v)) ++count;
                if (count != inst.edge_weight.at(e))
                    return VerifyResult::fail("multiplicity mismatch on " + detail::edge_name(e));
            }
            for (Vertex x : inst.annotated) {
                long long count = 0;
                for (const Clique& c : sol.cliques)
                    if (sorted_contains(c, x)) ++count;
                if (count != inst.vertex_weight.at(x))
                    return VerifyResult::fail("membership mismatch on vertex " + std::to_string(x));
            }
            return {};
        }

        VerifyResult operator()(const AewcdInstance& inst) const
        {
            if (auto r = detail::check_cliques(inst.graph, sol.cliques, 2); !r) return r;
            if (static_cast<int>(sol.cliques.size()) > inst.k)
                return VerifyResult::fail("more than k cliques");
            if (sol.gamma.size() != sol.cliques.size())
                return VerifyResult::fail("gamma size does not match cover");
            for (const Rational& w : sol.gamma)
                if (w <= 0) return VerifyResult::fail("nonpositive clique weight");
            for (const Edge& e : inst.graph.edges()) {
                Rational total = 0;
                for (size_t i = 0; i < sol.cliques.size(); ++i)
                    if (sorted_contains(sol.cliques[i], e.u) && sorted_contains(sol.cliques[i], e.v))
                        total += sol.gamma[i];
                if (total != inst.edge_weight.at(e))
                    return VerifyResult::fail("sum mismatch on " + detail::edge_name(e));
            }
            for (Vertex x : inst.annotated) {
                Rational total = 0;
                for (size_t i = 0; i < sol.cliques.size(); ++i)
                    if (sorted_contains(sol.cliques[i], x)) total += sol.gamma[i];
                if (total != inst.vertex_weight.at(x))
                    return VerifyResult::fail("sum mismatch on vertex " + std::to_string(x));
            }
            return {};
        }

        VerifyResult operator()(const LrccInstance& inst) const
        {
            if (auto r = detail::check_cliques(inst.graph, sol.cliques, 1); !r) return r;
            if (static_cast<int>(sol.cliques.size()) > inst.k)
                return VerifyResult::fail("more than k cliques");
            for (Vertex v = 0; v < inst.graph.vertex_count(); ++v) {
                bool covered = false;
                for (const Clique& c : sol.cliques)
                    if (sorted_contains(c, v)) { covered = true; break; }
                if (!covered) return VerifyResult::fail("uncovered vertex " + std::to_string(v));
            }
            for (const Edge& e : inst.required_edges) {
                bool covered = false;
                for (const Clique& c : sol.cliques)
                    if (sorted_contains(c, e.u) && sorted_contains(c, e.v)) { covered = true; break; }
                if (!covered) return VerifyResult::fail("uncovered required edge " + detail::edge_name(e));
            }
            return {};
        }

        VerifyResult operator()(const PmcInstance& inst) const
        {
            // Color classes: independent sets of the graph.
            if (static_cast<int>(sol.cliques.size()) > inst.k)
                return VerifyResult::fail("more than k colors");
            for (const Clique& cls : sol.cliques) {
                if (cls.empty()) return VerifyResult::fail("empty color class");
                for (size_t i = 0; i < cls.size(); ++i)
                    for (size_t j = i + 1; j < cls.size(); ++j)
                        if (inst.graph.has_edge(cls[i], cls[j]))
                            return VerifyResult::fail("adjacent vertices share a color");
            }
            for (Vertex v = 0; v < inst.graph.vertex_count(); ++v) {
                bool colored = false;
                for (const Clique& cls : sol.cliques)
                    if (sorted_contains(cls, v)) { colored = true; break; }
                if (!colored) return VerifyResult::fail("vertex without a color: " + std::to_string(v));
            }
            for (const Edge& p : inst.mutual) {
                if (inst.graph.has_edge(p.u, p.v))
                    return VerifyResult::fail("mutual pair is adjacent: " + detail::edge_name(p));
                bool shared = false;
                for (const Clique& cls : sol.cliques)
                    if (sorted_contains(cls, p.u) && sorted_contains(cls, p.v)) { shared = true; break; }
                if (!shared) return VerifyResult::fail("pair without a shared color: " + detail::edge_name(p));
            }
            return {};
        }
    };
    return std::visit(Visitor{sol}, problem);
}

} // namespace cliquecover::oracle

#endif
