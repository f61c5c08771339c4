#ifndef CLIQUECOVER_DEGENERACY_HPP
#define CLIQUECOVER_DEGENERACY_HPP

#include "graph.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

namespace cliquecover {

/// Degeneracy ordering plus the edge permutation derived from it.
///
/// `ordering` peels a minimum-degree vertex repeatedly (ties broken by
/// smallest id), so every vertex has at most `d` neighbors later in the
/// ordering. `later[x]` holds those later neighbors, sorted by id.
/// `edge_order` concatenates, per vertex in ordering position, its edges to
/// later neighbors (inner order: by ordering position of the later endpoint).
struct DegeneracyContext {
    std::vector<Vertex> ordering;  // position -> vertex
    std::vector<int> position;     // vertex -> position
    int d = 0;
    std::vector<std::vector<Vertex>> later; // vertex -> later neighbors, sorted by id
    std::vector<EdgeId> edge_order;
    std::vector<int> edge_rank;    // edge id -> position in edge_order
};

inline DegeneracyContext degeneracy_context(const Graph& g)
{
    const int n = g.vertex_count();
    DegeneracyContext ctx;
    ctx.ordering.reserve(n);
    ctx.position.assign(n, -1);

    // Min-degree peeling, smallest id first among ties.
    std::vector<int> deg(n);
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    std::vector<char> removed(n, 0);
    for (int step = 0; step < n; ++step) {
        auto [dv, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = 1;
        ctx.position[v] = step;
        ctx.ordering.push_back(v);
        ctx.d = std::max(ctx.d, dv);
        for (Vertex w : g.neighbors(v)) {
            if (removed[w]) continue;
            queue.erase({deg[w], w});
            --deg[w];
            queue.emplace(deg[w], w);
        }
    }

    ctx.later.resize(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v))
            if (ctx.position[w] > ctx.position[v]) ctx.later[v].push_back(w);

    ctx.edge_order.reserve(g.edge_count());
    for (Vertex v : ctx.ordering) {
        std::vector<Vertex> block = ctx.later[v];
        std::sort(block.begin(), block.end(),
                  [&](Vertex a, Vertex b) { return ctx.position[a] < ctx.position[b]; });
        for (Vertex w : block) ctx.edge_order.push_back(g.edge_id(v, w));
    }
    ctx.edge_rank.assign(g.edge_count(), -1);
    for (int i = 0; i < static_cast<int>(ctx.edge_order.size()); ++i)
        ctx.edge_rank[ctx.edge_order[i]] = i;
    return ctx;
}

/// Earlier endpoint of an edge under the ordering: the vertex whose block the
/// edge belongs to in `edge_order`.
inline Vertex earlier_endpoint(const DegeneracyContext& ctx, const Edge& e)
{
    return ctx.position[e.u] < ctx.position[e.v] ? e.u : e.v;
}

} // namespace cliquecover

#endif
