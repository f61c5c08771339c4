#ifndef CLIQUECOVER_LP_HPP
#define CLIQUECOVER_LP_HPP

#include "problems.hpp"
#include "rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cliquecover {

/// Equality-constrained nonnegative feasibility system: for each row r,
/// sum of gamma_i over i in r.incidence equals r.rhs, gamma >= 0.
struct LpSystem {
    int num_vars = 0;
    struct Row {
        std::vector<int> incidence; // sorted variable indices
        Rational rhs;               // > 0
    };
    std::vector<Row> rows;
};

/// One row per edge of the graph (incidence = cliques containing the edge)
/// and one per annotated vertex. A cover that misses an edge has no valid
/// system, since the row would read 0 = positive.
inline LpSystem build_lp(const Graph& g, const Cover& cover, const EdgeWeights& edge_weight,
                         const std::set<Vertex>& annotated, const VertexWeights& vertex_weight)
{
    LpSystem sys;
    sys.num_vars = static_cast<int>(cover.size());
    for (const Edge& e : g.edges()) {
        LpSystem::Row row;
        for (int i = 0; i < sys.num_vars; ++i)
            if (sorted_contains(cover[i], e.u) && sorted_contains(cover[i], e.v))
                row.incidence.push_back(i);
        if (row.incidence.empty())
            throw std::invalid_argument("build_lp: cover leaves an edge uncovered");
        auto it = edge_weight.find(e);
        if (it == edge_weight.end()) throw std::invalid_argument("build_lp: missing edge weight");
        row.rhs = it->second;
        sys.rows.push_back(std::move(row));
    }
    for (Vertex x : annotated) {
        LpSystem::Row row;
        for (int i = 0; i < sys.num_vars; ++i)
            if (sorted_contains(cover[i], x)) row.incidence.push_back(i);
        auto it = vertex_weight.find(x);
        if (it == vertex_weight.end()) throw std::invalid_argument("build_lp: missing vertex weight");
        row.rhs = it->second;
        sys.rows.push_back(std::move(row)); // may be empty: trivially infeasible
    }
    return sys;
}

/// Exact phase-1 simplex with Bland's pivoting rule. Returns gamma >= 0
/// satisfying every row exactly, or nullopt iff the system is infeasible.
inline std::optional<std::vector<Rational>> lp_feasible(const LpSystem& sys)
{
    const int n = sys.num_vars;
    const int m = static_cast<int>(sys.rows.size());
    for (const auto& row : sys.rows)
        if (row.incidence.empty() && row.rhs != 0) return std::nullopt;
    if (m == 0) return std::vector<Rational>(n, Rational(0));

    // Tableau over variables [0,n) = gamma, [n, n+m) = artificials.
    // Row i: a[i] * vars = b[i], artificial i basic initially.
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n + m, Rational(0)));
    std::vector<Rational> b(m);
    for (int i = 0; i < m; ++i) {
        for (int j : sys.rows[i].incidence) a[i][j] = 1;
        a[i][n + i] = 1;
        b[i] = sys.rows[i].rhs;
        if (b[i] < 0) { // cannot happen for positive weights, kept for safety
            for (auto& c : a[i]) c = -c;
            b[i] = -b[i];
            a[i][n + i] = 1;
        }
    }
    // Phase-1 objective: minimize sum of artificials. Reduced costs start as
    // z[j] = -(sum of a[i][j] over rows), objective value = -(sum of b).
    std::vector<Rational> z(n + m, Rational(0));
    Rational obj = 0;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) z[j] -= a[i][j];
        obj -= b[i];
    }
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (z[j] < 0) { enter = j; break; } // Bland: smallest index
        if (enter < 0) break;
        int leave = -1;
        Rational best_ratio;
        for (int i = 0; i < m; ++i) {
            if (a[i][enter] <= 0) continue;
            Rational ratio = b[i] / a[i][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) return std::nullopt; // unbounded: impossible for phase 1
        // Pivot on (leave, enter).
        Rational piv = a[leave][enter];
        for (auto& c : a[leave]) c /= piv;
        b[leave] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || a[i][enter] == 0) continue;
            Rational f = a[i][enter];
            for (int j = 0; j < n + m; ++j) a[i][j] -= f * a[leave][j];
            b[i] -= f * b[leave];
        }
        if (z[enter] != 0) {
            Rational f = z[enter];
            for (int j = 0; j < n + m; ++j) z[j] -= f * a[leave][j];
            obj -= f * b[leave];
        }
        basis[leave] = enter;
    }
    if (obj != 0) return std::nullopt; // some artificial stuck positive

    std::vector<Rational> gamma(n, Rational(0));
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) gamma[basis[i]] = b[i];
    return gamma;
}

/// Exhaustive search for integer gamma in [1, wmax]^k; prunes on partial row
/// sums. Strictly weaker than lp_feasible by construction.
inline std::optional<std::vector<long long>> integer_gamma_search(const LpSystem& sys, long long wmax)
{
    const int n = sys.num_vars;
    for (const auto& row : sys.rows) {
        if (denominator(row.rhs) != 1) return std::nullopt;
        if (row.incidence.empty() && row.rhs != 0) return std::nullopt;
    }
    std::vector<long long> rhs(sys.rows.size());
    for (size_t r = 0; r < sys.rows.size(); ++r)
        rhs[r] = static_cast<long long>(numerator(sys.rows[r].rhs));

    // rows_of[v] = rows touching variable v; remaining[r] = unassigned vars in row r.
    std::vector<std::vector<int>> rows_of(n);
    std::vector<int> remaining(sys.rows.size());
    std::vector<long long> sum(sys.rows.size(), 0);
    for (size_t r = 0; r < sys.rows.size(); ++r) {
        remaining[r] = static_cast<int>(sys.rows[r].incidence.size());
        for (int v : sys.rows[r].incidence) rows_of[v].push_back(static_cast<int>(r));
        if (remaining[r] == 0 && rhs[r] != 0) return std::nullopt;
    }
    std::vector<long long> gamma(n, 0);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (long long val = 1; val <= wmax; ++val) {
            bool ok = true;
            for (int r : rows_of[v]) {
                sum[r] += val;
                --remaining[r];
                if (sum[r] > rhs[r] || (remaining[r] == 0 && sum[r] != rhs[r])) ok = false;
            }
            if (ok) {
                gamma[v] = val;
                if (self(self, v + 1)) return true;
            }
            for (int r : rows_of[v]) {
                sum[r] -= val;
                ++remaining[r];
            }
        }
        return false;
    };
    if (n == 0) {
        for (long long r : rhs)
            if (r != 0) return std::nullopt;
        return std::vector<long long>{};
    }
    if (!rec(rec, 0)) return std::nullopt;
    return gamma;
}

} // namespace cliquecover

#endif
