#ifndef CLIQUECOVER_GENERATORS_HPP
#define CLIQUECOVER_GENERATORS_HPP

#include "graph.hpp"
#include "rational.hpp"

#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace cliquecover {

inline Graph complete_graph(int n)
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) e.emplace_back(a, b);
    return Graph::build(n, e);
}

inline Graph path_graph(int n)
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex a = 0; a + 1 < n; ++a) e.emplace_back(a, a + 1);
    return Graph::build(n, e);
}

inline Graph cycle_graph(int n)
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex a = 0; a + 1 < n; ++a) e.emplace_back(a, a + 1);
    if (n >= 3) e.emplace_back(n - 1, 0);
    return Graph::build(n, e);
}

/// Star K_{1,n-1} with center 0.
inline Graph star_graph(int n)
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex a = 1; a < n; ++a) e.emplace_back(0, a);
    return Graph::build(n, e);
}

inline Graph complete_bipartite(int p, int q)
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex a = 0; a < p; ++a)
        for (Vertex b = 0; b < q; ++b) e.emplace_back(a, p + b);
    return Graph::build(p + q, e);
}

/// G(n, p) with edges drawn in canonical pair order, so a fixed seed gives
/// the same graph on every platform.
inline Graph gnp_random(int n, double p, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (coin(rng) < p) e.emplace_back(a, b);
    return Graph::build(n, e);
}

/// Graph from a list of labeled undirected edges; the returned map records
/// the label numbering.
inline Graph labeled_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> e)
{
    return Graph::build(n, std::vector<std::pair<Vertex, Vertex>>(e));
}

namespace fixtures {

// 8-vertex fixture; ids: x=0 y=1 w=2 z=3 a=4 b=5 c=6 d=7.
// Minimum edge clique cover size 5, minimum assignment total 14.
inline Graph g_isr()
{
    constexpr Vertex x = 0, y = 1, w = 2, z = 3, a = 4, b = 5, c = 6, d = 7;
    return labeled_graph(8, {{x, w}, {x, z}, {w, z}, {w, y}, {z, y},
                             {a, x}, {a, z}, {b, x}, {b, w},
                             {c, y}, {c, w}, {d, y}, {d, z}});
}

struct WeightedGraph {
    Graph graph;
    std::map<Edge, Rational> edge_weights;
};

// K4 with edge weights; ids: a=0 b=1 c=2 d=3. Decomposable at k=3 with
// cliques {a,b,c,d},{a,b,c},{a,b} and weights 1,1,99.
inline WeightedGraph k4w()
{
    WeightedGraph out;
    out.graph = complete_graph(4);
    constexpr Vertex a = 0, b = 1, c = 2, d = 3;
    out.edge_weights[make_edge(a, b)] = 101;
    out.edge_weights[make_edge(a, c)] = 2;
    out.edge_weights[make_edge(a, d)] = 1;
    out.edge_weights[make_edge(b, c)] = 2;
    out.edge_weights[make_edge(b, d)] = 1;
    out.edge_weights[make_edge(c, d)] = 1;
    return out;
}

// 7-vertex fixture; ids: a=0 .. g=6. Admits both the vertex cover
// {a,b,c},{d,e,f},{g} and the link-respecting cover {a},{b,c,d},{e,f,g}.
inline Graph g_lrcc()
{
    constexpr Vertex a = 0, b = 1, c = 2, d = 3, e = 4, f = 5, g = 6;
    return labeled_graph(7, {{a, b}, {a, c}, {b, c}, {b, d}, {c, d},
                             {d, e}, {d, f}, {e, f}, {e, g}, {f, g}});
}

} // namespace fixtures

} // namespace cliquecover

#endif
