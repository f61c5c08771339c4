#include <catch2/catch_amalgamated.hpp>

#include <cliquecover/clique_enum.hpp>
#include <cliquecover/degeneracy.hpp>
#include <cliquecover/generators.hpp>
#include <cliquecover/graph.hpp>
#include <cliquecover/oracles.hpp>

#include <cmath>
#include <random>
#include <set>

using namespace cliquecover;

namespace {

// Reference enumeration of every clique Z with {x,y} ⊆ Z ⊆ restrict, by
// testing all subsets of the restriction.
std::set<Clique> brute_force_cliques(const Graph& g, Vertex x, Vertex y,
                                     const std::vector<Vertex>& restrict_set, bool maximal_only)
{
    std::vector<Vertex> others;
    for (Vertex v : restrict_set)
        if (v != x && v != y) others.push_back(v);
    REQUIRE(others.size() <= 20);
    std::set<Clique> all;
    for (uint32_t mask = 0; mask < (uint32_t(1) << others.size()); ++mask) {
        Clique c = {x, y};
        for (size_t i = 0; i < others.size(); ++i)
            if (mask >> i & 1) c.push_back(others[i]);
        std::sort(c.begin(), c.end());
        if (g.is_clique(c)) all.insert(c);
    }
    if (!maximal_only) return all;
    std::set<Clique> maximal;
    for (const Clique& c : all) {
        bool extendable = false;
        for (Vertex v : restrict_set) {
            if (sorted_contains(c, v)) continue;
            bool adj_all = true;
            for (Vertex w : c)
                if (!g.has_edge(v, w)) { adj_all = false; break; }
            if (adj_all) { extendable = true; break; }
        }
        if (!extendable) maximal.insert(c);
    }
    return maximal;
}

std::vector<Vertex> all_vertices(const Graph& g)
{
    std::vector<Vertex> vs(g.vertex_count());
    std::iota(vs.begin(), vs.end(), 0);
    return vs;
}

} // namespace

TEST_CASE("build_graph basics")
{
    Graph k3 = complete_graph(3);
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);

    Graph empty4 = Graph::build(4, {});
    CHECK(empty4.edge_count() == 0);

    Graph g = fixtures::g_isr();
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 13);
    // ids: x=0 y=1 w=2 z=3 a=4 b=5 c=6 d=7
    CHECK(g.degree(2) == 5);
    CHECK(g.degree(3) == 5);
    CHECK(g.degree(0) == 4);
    CHECK(g.degree(1) == 4);
    for (Vertex v = 4; v < 8; ++v) CHECK(g.degree(v) == 2);

    // duplicates collapse, either orientation
    Graph dup = Graph::build(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("edge ids are stable and symmetric")
{
    Graph g = fixtures::g_isr();
    long long degsum = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) degsum += g.degree(v);
    CHECK(degsum == 2 * g.edge_count());
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        Edge e = g.edge(id);
        CHECK(g.edge_id(e.u, e.v) == id);
        CHECK(g.edge_id(e.v, e.u) == id);
        CHECK(g.has_edge(e.u, e.v));
    }
    CHECK(g.edge_id(4, 5) == -1); // a,b not adjacent
}

TEST_CASE("degeneracy of standard families")
{
    for (int n : {2, 5, 9}) {
        auto ctx = degeneracy_context(star_graph(n));
        CHECK(ctx.d == 1);
    }
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {3, 4}, {2, 5}}) {
        auto ctx = degeneracy_context(complete_bipartite(p, q));
        CHECK(ctx.d == std::min(p, q));
    }
    CHECK(degeneracy_context(fixtures::g_isr()).d == 2);
    CHECK(degeneracy_context(Graph::build(4, {})).d == 0);
}

TEST_CASE("degeneracy context invariants")
{
    std::mt19937_64 rng(7);
    std::vector<Graph> graphs = {fixtures::g_isr(), fixtures::g_lrcc(), complete_graph(6),
                                 path_graph(7), star_graph(6), complete_bipartite(3, 4)};
    for (int i = 0; i < 30; ++i)
        graphs.push_back(gnp_random(3 + static_cast<int>(rng() % 10), 0.1 + 0.08 * (i % 10), rng));

    for (const Graph& g : graphs) {
        auto ctx = degeneracy_context(g);
        const int n = g.vertex_count();

        // position is the inverse permutation
        for (int i = 0; i < n; ++i) CHECK(ctx.position[ctx.ordering[i]] == i);

        // every vertex has at most d later neighbors
        int max_later = 0;
        for (Vertex v = 0; v < n; ++v) {
            CHECK(std::is_sorted(ctx.later[v].begin(), ctx.later[v].end()));
            max_later = std::max(max_later, static_cast<int>(ctx.later[v].size()));
            for (Vertex w : ctx.later[v]) CHECK(ctx.position[w] > ctx.position[v]);
        }
        CHECK(max_later <= ctx.d);

        // edge order is a permutation of the edges, one block per vertex
        CHECK(static_cast<int>(ctx.edge_order.size()) == g.edge_count());
        std::set<EdgeId> seen(ctx.edge_order.begin(), ctx.edge_order.end());
        CHECK(static_cast<int>(seen.size()) == g.edge_count());
        int prev_block = -1;
        for (EdgeId id : ctx.edge_order) {
            int block = ctx.position[earlier_endpoint(ctx, g.edge(id))];
            CHECK(block >= prev_block);
            prev_block = block;
        }

        // exact value vs brute force, plus m < n*d when d >= 1
        if (n <= 12) CHECK(ctx.d == oracle::oracle_degeneracy(g));
        if (ctx.d >= 1) CHECK(g.edge_count() < n * ctx.d);

        bool isolated = false;
        for (Vertex v = 0; v < n; ++v) isolated |= g.degree(v) == 0;
        if (!isolated && n > 0)
            CHECK(ctx.d + 1 <= 2.0 * std::sqrt(static_cast<double>(g.edge_count())));
    }
}

TEST_CASE("clique enumeration on K4")
{
    Graph k4 = complete_graph(4);
    auto vs = all_vertices(k4);
    auto maximal = collect_cliques_with_edge(k4, 0, 1, vs, EnumMode::Maximal);
    REQUIRE(maximal.size() == 1);
    CHECK(maximal[0] == Clique{0, 1, 2, 3});

    auto all = collect_cliques_with_edge(k4, 0, 1, vs, EnumMode::All);
    CHECK(all.size() == 4);
    std::set<Clique> got(all.begin(), all.end());
    std::set<Clique> want = {{0, 1}, {0, 1, 2}, {0, 1, 3}, {0, 1, 2, 3}};
    CHECK(got == want);

    CHECK_THROWS_AS(collect_cliques_with_edge(Graph::build(3, {{0, 1}}), 0, 2,
                                              std::vector<Vertex>{0, 1, 2}, EnumMode::All),
                    std::invalid_argument);
}

TEST_CASE("restricted enumeration matches brute force")
{
    std::mt19937_64 rng(21);
    std::vector<Graph> graphs = {fixtures::g_isr(), complete_graph(5), fixtures::g_lrcc()};
    for (int i = 0; i < 25; ++i)
        graphs.push_back(gnp_random(4 + static_cast<int>(rng() % 7), 0.2 + 0.1 * (i % 7), rng));

    for (const Graph& g : graphs) {
        auto ctx = degeneracy_context(g);
        for (const Edge& e : g.edges()) {
            Vertex x = earlier_endpoint(ctx, e);
            Vertex y = x == e.u ? e.v : e.u;
            // restriction the solvers use: later closed neighborhood of x
            // intersected with closed neighborhood of y
            std::vector<Vertex> ndx = ctx.later[x];
            sorted_insert(ndx, x);
            std::vector<Vertex> ny = g.closed_neighborhood(y);
            auto restrict_set = sorted_intersection<Vertex>(ndx, ny);

            for (bool maximal : {true, false}) {
                auto got_list = collect_cliques_with_edge(g, x, y, restrict_set,
                                                          maximal ? EnumMode::Maximal : EnumMode::All);
                std::set<Clique> got(got_list.begin(), got_list.end());
                CHECK(got.size() == got_list.size()); // no duplicates
                CHECK(got == brute_force_cliques(g, x, y, restrict_set, maximal));
            }
        }
    }
}

TEST_CASE("lazy enumeration stops on demand")
{
    Graph k5 = complete_graph(5);
    int seen = 0;
    enumerate_cliques_with_edge(k5, 0, 1, all_vertices(k5), EnumMode::All, [&](const Clique&) {
        ++seen;
        return seen < 3;
    });
    CHECK(seen == 3);
}

TEST_CASE("maximal clique count stays under the cubic-root bound")
{
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 9); // up to 12
        Graph g = gnp_random(n, 0.2 + 0.07 * (trial % 10), rng);
        auto vs = all_vertices(g);
        std::set<Clique> maximal;
        for (const Edge& e : g.edges())
            for (const Clique& z : collect_cliques_with_edge(g, e.u, e.v, vs, EnumMode::Maximal))
                maximal.insert(z);
        CHECK(static_cast<double>(maximal.size()) <= std::pow(3.0, n / 3.0) + 1e-9);
    }
}

TEST_CASE("complement and induced subgraph")
{
    CHECK(complement(complete_graph(3)).edge_count() == 0);
    CHECK(complement(Graph::build(4, {})) == complete_graph(4));
    Graph g = fixtures::g_isr();
    CHECK(complement(complement(g)) == g);

    auto sub = induced_subgraph(complete_graph(4), std::vector<Vertex>{0, 1, 2});
    CHECK(sub.graph == complete_graph(3));

    // {x,w,z} = {0,2,3} is a triangle in the 8-vertex fixture
    auto tri = induced_subgraph(g, std::vector<Vertex>{0, 2, 3});
    CHECK(tri.graph.edge_count() == 3);
    CHECK(tri.to_original == std::vector<Vertex>{0, 2, 3});

    auto none = induced_subgraph(g, std::vector<Vertex>{});
    CHECK(none.graph.vertex_count() == 0);
    CHECK(none.graph.edge_count() == 0);
}
