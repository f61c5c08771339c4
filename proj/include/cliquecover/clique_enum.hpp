#ifndef CLIQUECOVER_CLIQUE_ENUM_HPP
#define CLIQUECOVER_CLIQUE_ENUM_HPP

#include "graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace cliquecover {

enum class EnumMode { Maximal, All };

namespace detail {

/// Dense adjacency over a small candidate set (the restricted subgraphs the
/// solvers branch on have at most d+1 vertices).
struct BitAdjacency {
    int n = 0;
    int words = 0;
    std::vector<uint64_t> rows; // n * words

    void init(const Graph& g, const std::vector<Vertex>& verts)
    {
        n = static_cast<int>(verts.size());
        words = (n + 63) / 64;
        rows.assign(static_cast<size_t>(n) * words, 0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (g.has_edge(verts[i], verts[j])) {
                    set(i, j);
                    set(j, i);
                }
    }

    void set(int i, int j) { rows[static_cast<size_t>(i) * words + j / 64] |= uint64_t(1) << (j % 64); }
    bool get(int i, int j) const { return rows[static_cast<size_t>(i) * words + j / 64] >> (j % 64) & 1; }

    bool adjacent_to_all(int v, const std::vector<int>& set) const
    {
        for (int s : set)
            if (!get(v, s)) return false;
        return true;
    }
};

// Bron-Kerbosch with pivoting over the bit-adjacency; pivot is the candidate
// (from P ∪ X) with most neighbors in P, ties by smallest local id.
template <typename Callback>
bool bk_maximal(const BitAdjacency& adj, std::vector<int>& r, std::vector<int> p,
                std::vector<int> x, const Callback& emit)
{
    if (p.empty() && x.empty()) return emit(r);
    int pivot = -1, best = -1;
    for (const auto* side : {&p, &x})
        for (int u : *side) {
            int cnt = 0;
            for (int w : p)
                if (adj.get(u, w)) ++cnt;
            if (cnt > best || (cnt == best && (pivot < 0 || u < pivot))) {
                best = cnt;
                pivot = u;
            }
        }
    std::vector<int> ext;
    for (int u : p)
        if (pivot < 0 || !adj.get(pivot, u)) ext.push_back(u);
    for (int u : ext) {
        std::vector<int> p2, x2;
        for (int w : p)
            if (adj.get(u, w)) p2.push_back(w);
        for (int w : x)
            if (adj.get(u, w)) x2.push_back(w);
        r.push_back(u);
        if (!bk_maximal(adj, r, std::move(p2), std::move(x2), emit)) return false;
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), u));
        x.insert(std::lower_bound(x.begin(), x.end(), u), u);
    }
    return true;
}

template <typename Callback>
bool grow_all(const BitAdjacency& adj, std::vector<int>& r, int from, int n, const Callback& emit)
{
    if (!emit(r)) return false;
    for (int v = from; v < n; ++v) {
        if (!adj.adjacent_to_all(v, r)) continue;
        r.push_back(v);
        if (!grow_all(adj, r, v + 1, n, emit)) return false;
        r.pop_back();
    }
    return true;
}

} // namespace detail

/// Enumerates cliques Z of g[restrict] with {x,y} ⊆ Z. Maximal mode yields
/// exactly the cliques maximal within g[restrict]; All mode yields every such
/// clique. The callback receives a sorted clique and may return false to stop.
/// Order is deterministic.
template <typename Callback>
void enumerate_cliques_with_edge(const Graph& g, Vertex x, Vertex y,
                                 std::span<const Vertex> restrict_set, EnumMode mode,
                                 const Callback& on_clique)
{
    if (!g.has_edge(x, y)) throw std::invalid_argument("enumerate_cliques_with_edge: {x,y} is not an edge");

    // Candidates that can extend {x,y}: common neighbors inside the restriction.
    std::vector<Vertex> cand;
    for (Vertex v : restrict_set)
        if (v != x && v != y && g.has_edge(x, v) && g.has_edge(y, v)) cand.push_back(v);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    detail::BitAdjacency adj;
    adj.init(g, cand);

    auto emit_local = [&](const std::vector<int>& local) -> bool {
        Clique z;
        z.reserve(local.size() + 2);
        for (int i : local) z.push_back(cand[i]);
        z.push_back(x);
        z.push_back(y);
        std::sort(z.begin(), z.end());
        return on_clique(z);
    };

    std::vector<int> r;
    if (mode == EnumMode::Maximal) {
        std::vector<int> p(cand.size());
        std::iota(p.begin(), p.end(), 0);
        detail::bk_maximal(adj, r, std::move(p), {}, emit_local);
    } else {
        detail::grow_all(adj, r, 0, adj.n, emit_local);
    }
}

inline std::vector<Clique> collect_cliques_with_edge(const Graph& g, Vertex x, Vertex y,
                                                     std::span<const Vertex> restrict_set,
                                                     EnumMode mode)
{
    std::vector<Clique> out;
    enumerate_cliques_with_edge(g, x, y, restrict_set, mode, [&](const Clique& z) {
        out.push_back(z);
        return true;
    });
    return out;
}

} // namespace cliquecover

#endif
