#include <catch2/catch_amalgamated.hpp>

#include <cliquecover/generators.hpp>
#include <cliquecover/oracles.hpp>
#include <cliquecover/reduction.hpp>
#include <cliquecover/solvers_f2.hpp>

#include <random>
#include <sstream>

using namespace cliquecover;

TEST_CASE("isolated vertices are stripped")
{
    Graph g = Graph::build(4, {{0, 1}, {0, 2}, {1, 2}}); // triangle plus vertex 3
    ReducedInstance red = reduce_ecc(g, 1);
    CHECK(red.verdict == ReducedInstance::Verdict::Open);
    CHECK(red.kernel_n() == 0); // the triangle itself collapses through twin merges
    bool saw_isolated = false;
    for (const auto& step : red.trace.steps) saw_isolated |= step.rule == "ecc-isolated";
    CHECK(saw_isolated);

    auto lifted = red.lift({});
    CHECK(oracle::verify_solution(EccInstance{g, 1}, Solution{lifted, {}}).ok);
}

TEST_CASE("complete graphs collapse to a forced clique")
{
    Graph k4 = complete_graph(4);
    ReducedInstance red = reduce_ecc(k4, 1);
    CHECK(red.verdict == ReducedInstance::Verdict::Open);
    CHECK(red.kernel_n() == 0);
    CHECK(red.parameter == 0);
    int merges = 0, forced = 0;
    for (const auto& step : red.trace.steps) {
        merges += step.kind == ReductionStep::Kind::MergedTwin;
        forced += step.kind == ReductionStep::Kind::ForcedClique;
    }
    CHECK(merges == 2);
    CHECK(forced == 1);
    Cover lifted = red.lift({});
    REQUIRE(lifted.size() == 1);
    CHECK(lifted[0] == Clique{0, 1, 2, 3});
}

TEST_CASE("the 8-vertex fixture is already reduced")
{
    Graph g = fixtures::g_isr();
    ReducedInstance red = reduce_ecc(g, 5);
    CHECK(red.verdict == ReducedInstance::Verdict::Open);
    CHECK(red.kernel_n() == 8);
    CHECK(red.kernel_m() == 13);
    CHECK(red.trace.steps.empty());
}

TEST_CASE("reduced kernels have no twins and no isolated vertices")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = gnp_random(n, 0.1 + 0.1 * (trial % 9), rng);
        int k = static_cast<int>(rng() % 5);
        ReducedInstance red = reduce_ecc(g, k);
        if (red.verdict != ReducedInstance::Verdict::Open) continue;
        const Graph& kg = red.graph;
        for (Vertex v = 0; v < kg.vertex_count(); ++v) {
            CHECK(kg.degree(v) >= 1);
            for (Vertex w = v + 1; w < kg.vertex_count(); ++w)
                CHECK(kg.closed_neighborhood(v) != kg.closed_neighborhood(w));
        }
    }
}

TEST_CASE("ecc reduction preserves the answer")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        Graph g = gnp_random(n, 0.1 + 0.1 * (trial % 9), rng);
        auto [kstar, witness] = oracle::oracle_min_ecc(g);
        for (int k = 0; k <= kstar + 1; ++k) {
            bool expect = k >= kstar;
            ReducedInstance red = reduce_ecc(g, k);
            bool got;
            if (red.verdict == ReducedInstance::Verdict::No) {
                got = false;
            } else {
                SolveResult r = eccs2(red.graph, static_cast<int>(red.parameter));
                got = r.yes();
                if (got) {
                    Cover lifted = red.lift(r.solution->cliques);
                    REQUIRE(oracle::verify_solution(EccInstance{g, k}, Solution{lifted, {}}).ok);
                }
            }
            REQUIRE(got == expect);
        }
    }
}

TEST_CASE("acc rules on the triangle and the path")
{
    Graph k3 = complete_graph(3);
    ReducedInstance red = reduce_acc(k3, 3);
    CHECK(red.verdict == ReducedInstance::Verdict::Open);
    CHECK(red.kernel_n() == 0);
    CHECK(red.parameter == 0);
    REQUIRE(red.forced.size() == 1);
    CHECK(red.forced[0] == Clique{0, 1, 2});

    Graph p3 = path_graph(3);
    ReducedInstance rp = reduce_acc(p3, 4);
    CHECK(rp.verdict == ReducedInstance::Verdict::Open);
    CHECK(rp.parameter == 0);
    REQUIRE(rp.forced.size() == 2);
    CHECK(rp.forced[0] == Clique{0, 1});
    CHECK(rp.forced[1] == Clique{1, 2});

    ReducedInstance rno = reduce_acc(p3, 3);
    CHECK(rno.verdict == ReducedInstance::Verdict::No);
}

TEST_CASE("acc reduction preserves the answer")
{
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        Graph g = gnp_random(n, 0.15 + 0.1 * (trial % 8), rng);
        auto [tstar, witness] = oracle::oracle_min_assignment(g);
        for (long long t : {tstar - 1, tstar, tstar + 2}) {
            if (t < 0) continue;
            bool expect = t >= tstar;
            ReducedInstance red = reduce_acc(g, t);
            bool got;
            if (red.verdict == ReducedInstance::Verdict::No) {
                got = false;
            } else {
                SolveResult r = accs2(red.graph, red.parameter, {}, red.pre_covered);
                got = r.yes();
                if (got) {
                    Cover lifted = red.lift(r.solution->cliques);
                    REQUIRE(oracle::verify_solution(AccInstance{g, t}, Solution{lifted, {}}).ok);
                }
            }
            REQUIRE(got == expect);
        }
    }
}

TEST_CASE("twin merge lifting reinserts the removed vertex")
{
    // two adjacent twins {0,1} sharing neighbors 2 and 3
    Graph g = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    ReducedInstance red = reduce_ecc(g, 2);
    REQUIRE(red.verdict == ReducedInstance::Verdict::Open);
    SolveResult r = eccs2(red.graph, static_cast<int>(red.parameter));
    REQUIRE(r.yes());
    Cover lifted = red.lift(r.solution->cliques);
    CHECK(oracle::verify_solution(EccInstance{g, 2}, Solution{lifted, {}}).ok);
    bool twin_in_cover = false;
    for (const Clique& c : lifted)
        twin_in_cover |= sorted_contains(c, 0) && sorted_contains(c, 1);
    CHECK(twin_in_cover); // the twins are adjacent, so some clique holds both
}

TEST_CASE("lift rejects invalid kernel covers")
{
    Graph g = fixtures::g_isr();
    ReducedInstance red = reduce_ecc(g, 5);
    CHECK_THROWS_AS(red.lift({Clique{0, 1}}), std::invalid_argument);       // not a clique
    CHECK_THROWS_AS(red.lift({Clique{0, 2, 3}}), std::invalid_argument);    // misses edges
}

TEST_CASE("assignment-minimization twin rules preserve the optimum")
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = gnp_random(n, 0.2 + 0.1 * (trial % 7), rng);
        auto [amcc, kernel] = reduce_assignment_min(g);
        auto [t_orig, w_orig] = oracle::oracle_min_assignment(g);
        auto [t_kernel, w_kernel] = oracle::oracle_min_assignment(kernel);
        Cover lifted = amcc.lift(w_kernel);
        long long total = 0;
        for (const Clique& c : lifted) total += static_cast<long long>(c.size());
        REQUIRE(oracle::verify_solution(AccInstance{g, total}, Solution{lifted, {}}).ok);
        REQUIRE(total == t_orig); // lifted kernel optimum stays optimal
    }
}

TEST_CASE("annotated-instance sanity checks")
{
    Graph k3 = complete_graph(3);
    AwecpInstance inst{k3, 2, {}, {0}, {{0, 1ll}}};
    for (const Edge& e : k3.edges()) inst.edge_weight[e] = 2;
    CHECK(awecp_sanity(inst) == SanityVerdict::No); // 1 below every incident weight

    inst.vertex_weight[0] = 5;
    CHECK(awecp_sanity(inst) == SanityVerdict::No); // 5 above the incident sum 4

    inst.vertex_weight[0] = 2;
    CHECK(awecp_sanity(inst) == SanityVerdict::Open);

    // annotated vertex with no incident edge can never be matched
    Graph lone = Graph::build(2, {});
    AwecpInstance iso{lone, 1, {}, {0}, {{0, 1ll}}};
    CHECK(awecp_sanity(iso) == SanityVerdict::No);
}

TEST_CASE("vertex-cover construction mirrors the source instance")
{
    Graph p3 = path_graph(3);
    AccInstance out = reduce_vcc_to_acc(p3, 2);
    CHECK(out.graph.vertex_count() == 8);
    CHECK(out.t == 29);
    CHECK(oracle::oracle_min_assignment(out.graph).first <= out.t);

    AccInstance out1 = reduce_vcc_to_acc(p3, 1);
    CHECK(out1.t == 24);
    CHECK(oracle::oracle_min_assignment(out1.graph).first > out1.t);

    Graph k3 = complete_graph(3);
    AccInstance outk = reduce_vcc_to_acc(k3, 1);
    CHECK(outk.graph.vertex_count() == 10);
    CHECK(outk.t == 34);
    CHECK(oracle::oracle_min_assignment(outk.graph).first <= outk.t);
}

TEST_CASE("vertex-cover equivalence on small graphs")
{
    // YES instances are certified by the forward construction: each universal
    // vertex joins every cover clique, and leftover edges become pairs.
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        Graph g = gnp_random(n, 0.3 + 0.1 * (trial % 6), rng);
        for (int k = 0; k <= n; ++k) {
            AccInstance acc = reduce_vcc_to_acc(g, k);
            bool vcc_yes = oracle::oracle_vcc(g, k);
            if (vcc_yes) {
                auto cover = oracle::oracle_lrcc(g, k, {});
                REQUIRE(cover);
                // turn the cover into a partition so assignments total n
                Cover partition;
                std::vector<char> placed(n, 0);
                for (const Clique& c : *cover) {
                    Clique cls;
                    for (Vertex v : c)
                        if (!placed[v]) {
                            placed[v] = 1;
                            cls.push_back(v);
                        }
                    if (!cls.empty()) partition.push_back(std::move(cls));
                }
                Cover witness;
                long long q = 2LL * g.edge_count() + 1;
                for (long long i = 0; i < q; ++i)
                    for (const Clique& c : partition) {
                        Clique with_hub = c;
                        sorted_insert(with_hub, static_cast<Vertex>(n + i));
                        witness.push_back(std::move(with_hub));
                    }
                for (const Edge& e : g.edges()) witness.push_back({e.u, e.v});
                REQUIRE(oracle::verify_solution(acc, Solution{witness, {}}).ok);
            } else if (acc.graph.vertex_count() <= 8) {
                // the backward direction is exhaustive, so only within the
                // oracle size guard
                REQUIRE(oracle::oracle_min_assignment(acc.graph).first > acc.t);
            }
        }
    }
}

TEST_CASE("traces serialize to JSON")
{
    Graph k4 = complete_graph(4);
    ReducedInstance red = reduce_ecc(k4, 1);
    std::ostringstream os;
    red.trace.dump_json(os);
    CHECK(os.str().find("\"rule\":\"ecc-twin\"") != std::string::npos);
    CHECK(os.str().find("\"rule\":\"ecc-isolated-edge\"") != std::string::npos);
}
