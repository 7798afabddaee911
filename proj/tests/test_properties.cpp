// Randomized invariance properties of the counting functions.

#include <doctest.h>

#include <numeric>

#include "nzflow/flow_count.hpp"
#include "nzflow/graph_io.hpp"
#include "test_util.hpp"

using namespace nzflow;

namespace {

Multigraph flip_edges(const Multigraph& g, std::uint32_t mask) {
    std::vector<Edge> edges = g.edges;
    for (int e = 0; e < g.edge_count(); ++e)
        if (mask >> e & 1u) std::swap(edges[e].tail, edges[e].head);
    return Multigraph(g.vertex_count, edges);
}

}  // namespace

TEST_CASE("counts are independent of the reference orientation") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        Multigraph g = testutil::random_multigraph(rng);
        std::uint32_t mask = rng() & ((1u << g.edge_count()) - 1);
        Multigraph h = flip_edges(g, mask);
        CapacityVector k = testutil::random_capacities(rng, g.edge_count(), 1, 4);

        CHECK(count_nowhere_zero_kvec(g, k) == count_nowhere_zero_kvec(h, k));
        CHECK(count_nowhere_zero_zk(g, 3) == count_nowhere_zero_zk(h, 3));
        CHECK(enumerate_totally_cyclic(g).size() == enumerate_totally_cyclic(h).size());
        std::vector<std::int64_t> kk(k.begin(), k.end());
        CHECK(weighted_tco_flow_count(g, kk) == weighted_tco_flow_count(h, kk));
    }
}

TEST_CASE("counts are invariant under vertex relabeling") {
    std::mt19937 rng(102);
    for (int trial = 0; trial < 40; ++trial) {
        Multigraph g = testutil::random_multigraph(rng);
        std::vector<int> perm(g.vertex_count);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> edges;
        for (const Edge& e : g.edges) edges.push_back({perm[e.tail], perm[e.head]});
        Multigraph h(g.vertex_count, edges);
        CapacityVector k = testutil::random_capacities(rng, g.edge_count(), 1, 4);
        CHECK(count_nowhere_zero_kvec(g, k) == count_nowhere_zero_kvec(h, k));
        CHECK(count_nowhere_zero_integer(g, 4) == count_nowhere_zero_integer(h, 4));
    }
}

TEST_CASE("capacity permutation along graph symmetries") {
    Multigraph t = example_graph("3k2");
    CHECK(count_nowhere_zero_kvec(t, {2, 3, 5}) == count_nowhere_zero_kvec(t, {5, 2, 3}));
    CHECK(count_nowhere_zero_kvec(t, {2, 3, 5}) == count_nowhere_zero_kvec(t, {3, 5, 2}));
    CHECK(count_nowhere_zero_kvec(t, {2, 3, 5}) == count_nowhere_zero_kvec(t, {2, 5, 3}));

    Multigraph k3 = example_graph("k3");
    CHECK(count_nowhere_zero_kvec(k3, {2, 3, 4}) == count_nowhere_zero_kvec(k3, {4, 2, 3}));
}

TEST_CASE("negation symmetry") {
    std::mt19937 rng(103);
    for (int trial = 0; trial < 40; ++trial) {
        Multigraph g = testutil::random_multigraph(rng);
        CapacityVector k = testutil::random_capacities(rng, g.edge_count(), 1, 3);
        auto q = FlowCountQuery::open_nowhere_zero(k);
        auto flows = enumerate_flows(g, q);
        if (g.edge_count() >= 1) CHECK(flows.size() % 2 == 0);
        for (auto x : flows) {
            for (auto& v : x) v = -v;
            CHECK(std::find(flows.begin(), flows.end(), x) != flows.end());
        }
    }
}

TEST_CASE("monotonicity in the capacity vector") {
    std::mt19937 rng(104);
    for (int trial = 0; trial < 40; ++trial) {
        Multigraph g = testutil::random_multigraph(rng);
        CapacityVector k = testutil::random_capacities(rng, g.edge_count(), 1, 3);
        CapacityVector k2 = k;
        std::uniform_int_distribution<int> bump(0, 2);
        for (auto& v : k2) v += bump(rng);
        CHECK(count_nowhere_zero_kvec(g, k) <= count_nowhere_zero_kvec(g, k2));
    }
}

TEST_CASE("bridge annihilation") {
    std::mt19937 rng(105);
    int seen = 0;
    for (int trial = 0; trial < 60 && seen < 20; ++trial) {
        Multigraph g = testutil::random_multigraph(rng);
        if (bridges(g).empty()) continue;
        ++seen;
        CapacityVector k = testutil::random_capacities(rng, g.edge_count(), 1, 4);
        CHECK(count_nowhere_zero_kvec(g, k) == 0);
        CHECK(count_nowhere_zero_zk(g, 4) == 0);
        CHECK(enumerate_totally_cyclic(g).size() == 0);
    }
    CHECK(seen >= 20);
}

TEST_CASE("orientation decomposition of the count") {
    std::mt19937 rng(106);
    for (int trial = 0; trial < 25; ++trial) {
        Multigraph g = testutil::random_bridgeless(rng, 5, 7);
        if (g.edge_count() > 8) continue;
        auto omega = enumerate_totally_cyclic(g);
        CapacityVector k = testutil::random_capacities(rng, g.edge_count(), 1, 4);
        CHECK(sum_per_orientation_counts(g, omega, k, BoundMode::Open) ==
              count_nowhere_zero_kvec(g, k));
    }
}

TEST_CASE("weighted count equals the orientation sum of closed counts") {
    std::mt19937 rng(107);
    for (int trial = 0; trial < 25; ++trial) {
        Multigraph g = testutil::random_multigraph(rng, 5, 7);
        auto omega = enumerate_totally_cyclic(g);
        CapacityVector k = testutil::random_capacities(rng, g.edge_count(), 1, 3);
        std::vector<std::int64_t> kk(k.begin(), k.end());
        if (omega.size() == 0) {
            // every flow then has zero compatible orientations
            CHECK(weighted_tco_flow_count(g, kk, omega) == 0);
            continue;
        }
        CHECK(weighted_tco_flow_count(g, kk, omega) ==
              sum_per_orientation_counts(g, omega, k, BoundMode::Closed));
    }
}

TEST_CASE("uniform capacities specialize the multivariate count") {
    for (const auto& name : example_names()) {
        Multigraph g = example_graph(name);
        for (std::int64_t k = 1; k <= 6; ++k) {
            CapacityVector kv(static_cast<std::size_t>(g.edge_count()), k);
            CHECK(count_nowhere_zero_kvec(g, kv) == count_nowhere_zero_integer(g, k));
        }
    }
}
