#ifndef CLIQUECOVER_GRAPH_HPP
#define CLIQUECOVER_GRAPH_HPP

#include "types.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliquecover {

/// Immutable simple undirected graph. Vertex ids are 0..n-1, adjacency lists
/// are sorted, and every edge has a stable id (its rank in the sorted edge
/// list), which backtracking solvers use to index covered-edge state.
class Graph {
public:
    Graph() = default;

    static Graph build(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
    {
        if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
        std::set<Edge> unique;
        for (auto [a, b] : edges) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(a) + ", " + std::to_string(b) + ")");
            if (a == b)
                throw std::invalid_argument("self-loop rejected: (" + std::to_string(a) + ", " + std::to_string(b) + ")");
            unique.insert(make_edge(a, b));
        }
        Graph g;
        g.n_ = n;
        g.edges_.assign(unique.begin(), unique.end());
        g.adj_.resize(n);
        for (const Edge& e : g.edges_) {
            g.adj_[e.u].push_back(e.v);
            g.adj_[e.v].push_back(e.u);
        }
        for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    int max_degree() const
    {
        int md = 0;
        for (Vertex v = 0; v < n_; ++v) md = std::max(md, degree(v));
        return md;
    }

    bool has_edge(Vertex a, Vertex b) const
    {
        if (a == b) return false;
        const auto& nb = adj_[a];
        return std::binary_search(nb.begin(), nb.end(), b);
    }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_[id]; }

    /// Id of an existing edge; -1 if absent.
    EdgeId edge_id(Vertex a, Vertex b) const
    {
        if (a == b) return -1;
        Edge e = make_edge(a, b);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || !(*it == e)) return -1;
        return static_cast<EdgeId>(it - edges_.begin());
    }

    bool is_clique(std::span<const Vertex> vs) const
    {
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                if (!has_edge(vs[i], vs[j])) return false;
        return true;
    }

    std::vector<Vertex> closed_neighborhood(Vertex v) const
    {
        std::vector<Vertex> r(adj_[v].begin(), adj_[v].end());
        r.insert(std::lower_bound(r.begin(), r.end(), v), v);
        return r;
    }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
};

inline Graph complement(const Graph& g)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    int n = g.vertex_count();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (!g.has_edge(a, b)) edges.emplace_back(a, b);
    return Graph::build(n, edges);
}

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_original;   // local id -> original id
    std::vector<Vertex> to_local;      // original id -> local id, -1 if absent
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vs)
{
    InducedSubgraph out;
    out.to_original.assign(vs.begin(), vs.end());
    std::sort(out.to_original.begin(), out.to_original.end());
    out.to_original.erase(std::unique(out.to_original.begin(), out.to_original.end()), out.to_original.end());
    out.to_local.assign(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(out.to_original.size()); ++i)
        out.to_local[out.to_original[i]] = i;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < static_cast<int>(out.to_original.size()); ++i) {
        Vertex orig = out.to_original[i];
        for (Vertex w : g.neighbors(orig))
            if (w > orig && out.to_local[w] >= 0)
                edges.emplace_back(i, out.to_local[w]);
    }
    out.graph = Graph::build(static_cast<int>(out.to_original.size()), edges);
    return out;
}

/// Intersection of two sorted ranges.
template <typename T>
std::vector<T> sorted_intersection(std::span<const T> a, std::span<const T> b)
{
    std::vector<T> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool sorted_contains(std::span<const Vertex> s, Vertex v)
{
    return std::binary_search(s.begin(), s.end(), v);
}

inline void sorted_insert(std::vector<Vertex>& s, Vertex v)
{
    s.insert(std::lower_bound(s.begin(), s.end(), v), v);
}

inline void sorted_erase(std::vector<Vertex>& s, Vertex v)
{
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it != s.end() && *it == v) s.erase(it);
}

} // namespace cliquecover

#endif
