#include <doctest.h>

#include <algorithm>

#include "nzflow/flow_count.hpp"
#include "nzflow/graph_io.hpp"
#include "test_util.hpp"

using namespace nzflow;

namespace {

std::vector<FlowVector> sorted(std::vector<FlowVector> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("enumerate_flows examples") {
    Multigraph t = example_graph("3k2");
    auto flows = sorted(enumerate_flows(t, FlowCountQuery::open_nowhere_zero({2, 2, 3})));
    CHECK(flows == std::vector<FlowVector>{{-1, -1, 2}, {1, 1, -2}});

    Multigraph path(3, {{0, 1}, {1, 2}});
    CHECK(enumerate_flows(path, FlowCountQuery::open_nowhere_zero({4, 4})).empty());

    Multigraph k3 = example_graph("k3");
    auto cyc = sorted(enumerate_flows(k3, FlowCountQuery::open_nowhere_zero({2, 2, 2})));
    CHECK(cyc == std::vector<FlowVector>{{-1, -1, -1}, {1, 1, 1}});
}

TEST_CASE("count_nowhere_zero_kvec golden values") {
    CHECK(count_nowhere_zero_kvec(example_graph("k3"), {2, 3, 4}) == 2);
    CHECK(count_nowhere_zero_kvec(example_graph("3k2"), {2, 2, 5}) == 2);
    CHECK(count_nowhere_zero_kvec(example_graph("3k2"), {3, 3, 3}) == 6);
    CHECK(count_nowhere_zero_kvec(example_graph("2k2"), {3, 7}) == 4);
    CHECK_THROWS_AS(count_nowhere_zero_kvec(example_graph("k3"), {2, 0, 2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(count_nowhere_zero_kvec(example_graph("k3"), {2, 2}),
                    std::invalid_argument);
}

TEST_CASE("count_nowhere_zero_integer golden values") {
    CHECK(count_nowhere_zero_integer(example_graph("k3"), 5) == 8);
    CHECK(count_nowhere_zero_integer(example_graph("3k2"), 4) == 18);
    for (std::int64_t k = 1; k <= 6; ++k)
        CHECK(count_nowhere_zero_integer(example_graph("bridge"), k) == 0);
}

TEST_CASE("count_nowhere_zero_zk golden values") {
    CHECK(count_nowhere_zero_zk(example_graph("k3"), 5) == 4);
    CHECK(count_nowhere_zero_zk(example_graph("3k2"), 4) == 6);
    CHECK(count_nowhere_zero_zk(example_graph("k4"), 4) == 6);
    CHECK(count_nowhere_zero_zk(example_graph("k4"), 4) ==
          testutil::brute_zk_count(example_graph("k4"), 4));
    for (std::int64_t k = 2; k <= 5; ++k)
        CHECK(count_nowhere_zero_zk(example_graph("bridge"), k) == 0);
}

TEST_CASE("zk counts match brute force on random graphs") {
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 25; ++trial) {
        Multigraph g = testutil::random_multigraph(rng, 4, 5);
        for (std::int64_t k = 2; k <= 4; ++k) {
            CHECK(count_nowhere_zero_zk(g, k) == testutil::brute_zk_count(g, k));
            CHECK(count_nowhere_zero_zk_serial(g, k) == count_nowhere_zero_zk(g, k));
        }
    }
}

TEST_CASE("per-orientation counts") {
    Multigraph k3 = example_graph("k3");
    Orientation cycle = Orientation::from_string("+++");
    CHECK(per_orientation_open_count(k3, cycle, {2, 2, 2}) == 1);

    auto omega = enumerate_totally_cyclic(k3);
    mpz_class total = 0;
    for (const auto& o : omega.members) total += per_orientation_open_count(k3, o, {2, 2, 2});
    CHECK(total == count_nowhere_zero_kvec(k3, {2, 2, 2}));
    CHECK(sum_per_orientation_counts(k3, omega, {2, 2, 2}, BoundMode::Open) == total);

    Multigraph t = example_graph("3k2");
    CHECK(per_orientation_open_count(t, Orientation::from_string("++-"), {2, 2, 3}) == 1);
    CHECK_THROWS_AS(per_orientation_open_count(t, Orientation::from_string("+++"), {2, 2, 3}),
                    std::invalid_argument);

    CHECK(per_orientation_closed_count(k3, cycle, {1, 1, 1}) == 2);
    for (const auto& o : omega.members)
        CHECK(per_orientation_closed_count(k3, o, {2, 2, 2}) >= 1);

    auto omega_t = enumerate_totally_cyclic(t);
    CHECK(sum_per_orientation_counts(t, omega_t, {2, 2, 3}, BoundMode::Closed) == 40);
}

TEST_CASE("weighted totally cyclic flow count") {
    Multigraph t = example_graph("3k2");
    CHECK(weighted_tco_flow_count(t, {2, 2, 3}) == 40);
    CHECK(weighted_tco_flow_count(t, {0, 0, 0}) == 6);
    CHECK(weighted_tco_flow_count(example_graph("k3"), {1, 1, 1}) == 4);
    CHECK(weighted_tco_flow_count(example_graph("k3"), {0, 0, 0}) == 2);
}

TEST_CASE("oracle equivalence on corpus instances") {
    struct Case {
        Multigraph g;
        CapacityVector k;
    };
    std::vector<Case> cases = {
        {example_graph("3k2"), {2, 2, 3}},
        {example_graph("k4"), {2, 2, 2, 2, 2, 2}},
        {Multigraph(3, {{0, 1}, {1, 2}, {2, 0}, {0, 0}}), {3, 3, 3, 3}},
    };
    for (const auto& c : cases) {
        for (auto q : {FlowCountQuery::open_nowhere_zero(c.k),
                       FlowCountQuery::closed_zeros_allowed(c.k)}) {
            auto fast = sorted(enumerate_flows(c.g, q));
            auto naive = sorted(oracle_enumerate(c.g, q));
            CHECK(fast == naive);
            CHECK(count_flows(c.g, q) == mpz_class(static_cast<long>(fast.size())));
        }
    }
}

TEST_CASE("oracle cap") {
    Multigraph p = example_graph("prism");
    CHECK_THROWS_AS(
        oracle_enumerate(p, FlowCountQuery::open_nowhere_zero(CapacityVector(9, 5)), 1000),
        OracleCapExceeded);
}

TEST_CASE("mixed bound and zero modes") {
    Multigraph t = example_graph("3k2");
    // open box, zeros allowed: 0 is a flow, plus the nowhere-zero ones
    auto q1 = FlowCountQuery{{2, 2, 3}, BoundMode::Open, ZeroMode::ZerosAllowed};
    auto q2 = FlowCountQuery{{2, 2, 3}, BoundMode::Closed, ZeroMode::NowhereZero};
    CHECK(count_flows(t, q1) == oracle_count(t, q1));
    CHECK(count_flows(t, q2) == oracle_count(t, q2));
}

TEST_CASE("edgeless and loop conventions") {
    Multigraph empty(3, {});
    CHECK(count_nowhere_zero_kvec(empty, {}) == 1);
    CHECK(count_nowhere_zero_zk(empty, 4) == 1);
    auto flows = enumerate_flows(empty, FlowCountQuery::open_nowhere_zero({}));
    REQUIRE(flows.size() == 1);
    CHECK(flows[0].empty());

    Multigraph loop(1, {{0, 0}});
    CHECK(count_nowhere_zero_kvec(loop, {4}) == 6);  // +-1,2,3
    CHECK(count_nowhere_zero_zk(loop, 4) == 3);
}

TEST_CASE("serial and parallel kernels agree") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        Multigraph g = testutil::random_multigraph(rng);
        CapacityVector k = testutil::random_capacities(rng, g.edge_count(), 1, 5);
        for (auto q : {FlowCountQuery::open_nowhere_zero(k),
                       FlowCountQuery::closed_zeros_allowed(k)})
            CHECK(count_flows(g, q) == count_flows_serial(g, q));
    }
}

TEST_CASE("fast enumerator vs oracle on random graphs") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 30; ++trial) {
        Multigraph g = testutil::random_multigraph(rng, 5, 6);
        CapacityVector k = testutil::random_capacities(rng, g.edge_count(), 1, 3);
        for (auto q : {FlowCountQuery::open_nowhere_zero(k),
                       FlowCountQuery::closed_zeros_allowed(k),
                       FlowCountQuery{k, BoundMode::Open, ZeroMode::ZerosAllowed},
                       FlowCountQuery{k, BoundMode::Closed, ZeroMode::NowhereZero}}) {
            CHECK(sorted(enumerate_flows(g, q)) == sorted(oracle_enumerate(g, q)));
        }
    }
}
