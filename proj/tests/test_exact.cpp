#include <doctest.h>

#include "ekpp/exact.hpp"
#include "test_support.hpp"

using namespace ekpp;
using ekpp_test::graph_of;
using ekpp_test::random_graph;

TEST_CASE("exact: triangle collapses to one clique") {
    const auto k3 = graph_of(3, {{1, 2, 1.0}, {2, 3, 1.0}, {1, 3, 1.0}});
    const auto res = exact_solve(k3, 1);
    CHECK(res.optimum_weight == 3.0);
    CHECK(res.best.partition_count() == 1);
    CHECK(res.optimum_objective == doctest::Approx(4.0));
    CHECK(res.partitions_enumerated == 5);  // every partition of K3 is feasible for k=1
}

TEST_CASE("exact: path P3 for k=1 and k=2") {
    const auto p3 = graph_of(3, {{1, 2, 1.0}, {2, 3, 1.0}});
    CHECK(exact_solve(p3, 1).optimum_weight == 1.0);
    CHECK(exact_solve(p3, 2).optimum_weight == 2.0);  // the whole path is a 2-plex
}

TEST_CASE("exact: five-cycle") {
    const auto c5 = graph_of(5, {{1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}, {4, 5, 1.0}, {1, 5, 1.0}});
    CHECK(exact_solve(c5, 1).optimum_weight == 2.0);
    CHECK(exact_solve(c5, 3).optimum_weight == 5.0);  // whole cycle: degree 2 >= 5 - 3
}

TEST_CASE("exact: complete graphs become a single block for k=1") {
    Rng rng(12);
    std::vector<WeightedGraph::Edge> edges;
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v)
            edges.push_back({u, v, static_cast<double>(rng.int_in(1, 9))});
    const auto g = WeightedGraph::build(7, std::move(edges));
    const auto res = exact_solve(g, 1);
    CHECK(res.optimum_weight == g.w_total);
    CHECK(res.best.partition_count() == 1);
}

TEST_CASE("exact: k-plexes of an edgeless graph hold at most k vertices") {
    const auto g = WeightedGraph::build(6, {});
    const auto res = exact_solve(g, 1);
    CHECK(res.optimum_weight == 0.0);
    CHECK(res.best.partition_count() == 6);
    CHECK(res.partitions_enumerated == 1);  // only all-singletons survives pruning
}

TEST_CASE("exact: enumeration visits every set partition when nothing prunes") {
    std::vector<WeightedGraph::Edge> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) edges.push_back({u, v, 1.0});
    const auto g = WeightedGraph::build(6, std::move(edges));
    CHECK(exact_solve(g, 6).partitions_enumerated == 203);  // Bell(6)
}

TEST_CASE("exact: optimum weight is monotone in k") {
    Rng rng(404);
    for (int trial = 0; trial < 25; ++trial) {
        const auto g = random_graph(rng, 4 + static_cast<int>(rng.below(5)), 0.5);
        double prev = -1.0;
        for (int k = 1; k <= 3; ++k) {
            const auto res = exact_solve(g, k);
            CHECK(res.optimum_weight >= prev);
            prev = res.optimum_weight;
            const auto cert = verify_partition(g, res.best, k);
            CHECK(cert.feasible);
            CHECK(cert.weight == res.optimum_weight);
        }
    }
}

TEST_CASE("exact: deterministic tie-breaking picks the lexicographically first optimum") {
    // C4 has two optimal clique partitions of weight 2; {1,2},{3,4} is lex-first
    const auto c4 = graph_of(4, {{1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}, {1, 4, 1.0}});
    const auto res = exact_solve(c4, 1);
    CHECK(res.optimum_weight == 2.0);
    CHECK(res.best.part == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("exact: refuses instances above the limit") {
    const auto g = WeightedGraph::build(13, {});
    CHECK_THROWS_WITH_AS(exact_solve(g, 1), doctest::Contains("limit"), std::invalid_argument);
    CHECK_NOTHROW(exact_solve(g, 1, 13));
    CHECK_THROWS_AS(exact_solve(g, 0), std::invalid_argument);
}

TEST_CASE("verify_partition: certificates") {
    const auto k3 = graph_of(3, {{1, 2, 1.0}, {2, 3, 1.0}, {1, 3, 1.0}});
    const auto singles = verify_partition(k3, all_singletons(3), 1);
    CHECK(singles.feasible);
    CHECK(singles.weight == 0.0);
    CHECK_THROWS_AS(verify_partition(k3, all_singletons(3), 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_partition(k3, all_singletons(2), 1), std::invalid_argument);

    // a star with a leaf pulled into a too-large block
    const auto star = graph_of(4, {{1, 2, 1.0}, {1, 3, 1.0}, {1, 4, 1.0}});
    const auto bad = verify_partition(star, solution_from_labels({0, 0, 0, 1}), 1);
    CHECK_FALSE(bad.feasible);
    CHECK(bad.violators == std::vector<int>{1, 2});

    const auto ok = verify_partition(star, solution_from_labels({0, 0, 1, 2}), 1);
    CHECK(ok.feasible);
    CHECK(ok.weight == 1.0);
}

TEST_CASE("verify_partition agrees with the ledger path") {
    Rng rng(7777);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = random_graph(rng, 9, 0.4, trial % 2 == 0);
        const int k = 1 + static_cast<int>(rng.below(3));
        auto s = random_initial(g, rng);
        const auto cert = verify_partition(g, s, k);
        const auto led = recompute_ledger(g, s, k);
        CHECK(cert.feasible == (led.correct_total == g.n));
        CHECK(cert.weight == doctest::Approx(partition_weight(g, s)).epsilon(1e-12));
        const auto rep = is_feasible(g, s, k);
        CHECK(cert.violators == rep.violators);
    }
}
