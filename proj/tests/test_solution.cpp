#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ekpp/solution.hpp"
#include "test_support.hpp"

using namespace ekpp;
using ekpp_test::canonical_blocks;
using ekpp_test::graph_of;
using ekpp_test::random_graph;
using ekpp_test::solution_is_consistent;

namespace {

struct StateSnapshot {
    std::vector<int> part, slot, intra_deg;
    std::vector<std::vector<int>> members;
    std::vector<char> correct;
    int correct_total;
    double w_sol;
};

StateSnapshot snapshot(const Solution& s, const DegreeLedger& led) {
    return {s.part, s.slot, led.intra_deg, s.members, led.correct, led.correct_total, led.w_sol};
}

bool operator==(const StateSnapshot& a, const StateSnapshot& b) {
    return a.part == b.part && a.slot == b.slot && a.intra_deg == b.intra_deg &&
           a.members == b.members && a.correct == b.correct &&
           a.correct_total == b.correct_total && a.w_sol == b.w_sol;
}

bool ledger_matches_recompute(const WeightedGraph& g, const Solution& s, const DegreeLedger& led,
                              int k) {
    const DegreeLedger fresh = recompute_ledger(g, s, k);
    if (led.intra_deg != fresh.intra_deg || led.correct != fresh.correct ||
        led.correct_total != fresh.correct_total)
        return false;
    if (g.integral_weights) return led.w_sol == fresh.w_sol;
    return std::abs(led.w_sol - fresh.w_sol) <= 1e-9 * g.w_total;
}

// Uniform random valid target for v: an existing partition or a new one.
int random_target(const Solution& s, int v, Rng& rng) {
    const int l = s.partition_count();
    const int q = static_cast<int>(rng.below(static_cast<std::uint64_t>(l) + 1));
    (void)v;
    return q == l ? kNewPartition : q;
}

} // namespace

TEST_CASE("random_initial: bounds and reproducibility") {
    Rng rng(42);
    const auto g1 = WeightedGraph::build(1, {});
    const auto s1 = random_initial(g1, rng);
    CHECK(s1.part == std::vector<int>{0});
    CHECK(s1.partition_count() == 1);

    const auto g4 = WeightedGraph::build(4, {});
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = random_initial(g4, rng);
        CHECK(s.partition_count() <= 2);  // ceil(sqrt(4)) = 2
        CHECK(solution_is_consistent(s));
    }

    const auto g100 = WeightedGraph::build(100, {});
    Rng a(123), b(123);
    const auto sa = random_initial(g100, a);
    const auto sb = random_initial(g100, b);
    CHECK(sa.part == sb.part);
    CHECK(sa.partition_count() <= 10);  // ceil(sqrt(100)) = 10
}

TEST_CASE("ceil_sqrt") {
    CHECK(ceil_sqrt(1) == 1);
    CHECK(ceil_sqrt(4) == 2);
    CHECK(ceil_sqrt(5) == 3);
    CHECK(ceil_sqrt(99) == 10);
    CHECK(ceil_sqrt(100) == 10);
    CHECK(ceil_sqrt(101) == 11);
}

TEST_CASE("recompute_ledger: singleton partitions are always k-plexes") {
    Rng rng(5);
    const auto g = random_graph(rng, 9, 0.5);
    for (int k = 1; k <= 3; ++k) {
        const auto s = all_singletons(g.n);
        const auto led = recompute_ledger(g, s, k);
        CHECK(led.correct_total == g.n);
        CHECK(led.w_sol == 0.0);
    }
}

TEST_CASE("recompute_ledger: triangle and star") {
    const auto k3 = graph_of(3, {{1, 2, 1.0}, {2, 3, 1.0}, {1, 3, 1.0}});
    const auto one = solution_from_labels({0, 0, 0});
    const auto led = recompute_ledger(k3, one, 1);
    CHECK(led.correct_total == 3);
    CHECK(led.w_sol == k3.w_total);

    // star: center 1, leaves 2..4, all in one partition with k=1
    const auto star = graph_of(4, {{1, 2, 1.0}, {1, 3, 1.0}, {1, 4, 1.0}});
    const auto led2 = recompute_ledger(star, solution_from_labels({0, 0, 0, 0}), 1);
    CHECK(led2.correct[0] == 1);  // degree 3 >= 4 - 1
    CHECK(led2.correct[1] == 0);  // degree 1 < 3
    CHECK(led2.correct_total == 1);
    CHECK(led2.w_sol == 0.0);
}

TEST_CASE("move_vertex: triangle split off a singleton") {
    const auto k3 = graph_of(3, {{1, 2, 1.0}, {2, 3, 1.0}, {1, 3, 1.0}});
    auto s = solution_from_labels({0, 0, 0});
    auto led = recompute_ledger(k3, s, 1);
    MoveScratch ws;
    const auto rec = move_vertex(k3, s, led, 1, 0, kNewPartition, ws);
    CHECK_FALSE(rec.noop);
    CHECK(s.partition_count() == 2);
    CHECK(s.part[1] == s.part[2]);
    CHECK(s.part[0] != s.part[1]);
    CHECK(led.intra_deg == std::vector<int>{0, 1, 1});
    CHECK(led.correct_total == 3);
    CHECK(led.w_sol == 1.0);  // only edge {2,3} stays intra
}

TEST_CASE("move_vertex: no-op cases are signaled") {
    const auto g = graph_of(3, {{1, 2, 1.0}});
    auto s = solution_from_labels({0, 0, 1});
    auto led = recompute_ledger(g, s, 1);
    MoveScratch ws;
    CHECK(move_vertex(g, s, led, 1, 0, 0, ws).noop);               // same partition
    CHECK(move_vertex(g, s, led, 1, 2, kNewPartition, ws).noop);   // lone vertex to NEW
    CHECK_FALSE(move_vertex(g, s, led, 1, 2, 0, ws).noop);
}

TEST_CASE("move_vertex + undo restores every field bit-exactly") {
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const bool integral = trial % 2 == 0;
        const int n = 2 + static_cast<int>(rng.below(9));
        const auto g = random_graph(rng, n, 0.45, integral);
        const int k = 1 + static_cast<int>(rng.below(3));
        auto s = random_initial(g, rng);
        auto led = recompute_ledger(g, s, k);
        MoveScratch ws;
        for (int step = 0; step < 30; ++step) {
            const int v = static_cast<int>(rng.below(n));
            const int tgt = random_target(s, v, rng);
            const auto before = snapshot(s, led);
            const auto rec = move_vertex(g, s, led, k, v, tgt, ws);
            CHECK(solution_is_consistent(s));
            undo_move(g, s, led, k, rec);
            CHECK(solution_is_consistent(s));
            CHECK(snapshot(s, led) == before);
            // re-apply so the walk makes progress
            move_vertex(g, s, led, k, v, tgt, ws);
        }
    }
}

TEST_CASE("ledger stays equal to a from-scratch recompute across random moves") {
    Rng rng(99);
    for (int trial = 0; trial < 12; ++trial) {
        const bool integral = trial % 2 == 0;
        const auto g = random_graph(rng, 8, 0.5, integral);
        const int k = 1 + static_cast<int>(rng.below(3));
        auto s = random_initial(g, rng);
        auto led = recompute_ledger(g, s, k);
        MoveScratch ws;
        for (int step = 0; step < 50; ++step) {
            const int v = static_cast<int>(rng.below(8));
            move_vertex(g, s, led, k, v, random_target(s, v, rng), ws);
            REQUIRE(solution_is_consistent(s));
            REQUIRE(ledger_matches_recompute(g, s, led, k));
        }
    }
}

TEST_CASE("compaction keeps labels dense and the set system intact") {
    Rng rng(31337);
    const auto g = random_graph(rng, 10, 0.3);
    auto s = random_initial(g, rng);
    auto led = recompute_ledger(g, s, 2);
    MoveScratch ws;
    for (int step = 0; step < 200; ++step) {
        const int v = static_cast<int>(rng.below(10));
        const int tgt = random_target(s, v, rng);
        const auto blocks_before = canonical_blocks(s);
        const auto rec = move_vertex(g, s, led, 2, v, tgt, ws);
        CHECK(solution_is_consistent(s));
        if (rec.noop) {
            CHECK(canonical_blocks(s) == blocks_before);
        } else {
            // only v changed block; relabeling alone never alters the blocks
            undo_move(g, s, led, 2, rec);
            CHECK(canonical_blocks(s) == blocks_before);
            move_vertex(g, s, led, 2, v, tgt, ws);
        }
    }
}

TEST_CASE("is_feasible") {
    const auto k3 = graph_of(3, {{1, 2, 1.0}, {2, 3, 1.0}, {1, 3, 1.0}});
    CHECK(is_feasible(k3, all_singletons(3), 1).feasible);
    CHECK(is_feasible(k3, solution_from_labels({0, 0, 0}), 1).feasible);

    const auto p3 = graph_of(3, {{1, 2, 1.0}, {2, 3, 1.0}});
    const auto rep = is_feasible(p3, solution_from_labels({0, 0, 0}), 1);
    CHECK_FALSE(rep.feasible);
    CHECK(rep.violators == std::vector<int>{0, 2});
    CHECK(is_feasible(p3, solution_from_labels({0, 0, 0}), 2).feasible);
}

TEST_CASE("partition_weight") {
    const auto k3 = graph_of(3, {{1, 2, 3.0}, {2, 3, 4.0}, {1, 3, 5.0}});
    CHECK(partition_weight(k3, all_singletons(3)) == 0.0);
    CHECK(partition_weight(k3, solution_from_labels({0, 0, 0})) == doctest::Approx(12.0));
    CHECK(partition_weight(k3, solution_from_labels({0, 0, 1})) == doctest::Approx(3.0));
}

TEST_CASE("feasible solutions have w_sol equal to the partition weight") {
    Rng rng(555);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = random_graph(rng, 8, 0.5);
        const int k = 1 + static_cast<int>(rng.below(3));
        auto s = random_initial(g, rng);
        const auto led = recompute_ledger(g, s, k);
        if (is_feasible(g, s, k).feasible) {
            CHECK(led.correct_total == g.n);
            CHECK(led.w_sol == doctest::Approx(partition_weight(g, s)).epsilon(1e-12));
        }
    }
}

TEST_CASE("partition dump round-trips") {
    const auto g = graph_of(4, {{1, 2, 1.0}, {3, 4, 2.0}});
    const auto s = solution_from_labels({0, 0, 1, 1});
    std::ostringstream out;
    write_partition_dump(g, s, 1, 4.0 + 3.0 / 3.0, out);
    std::istringstream in(out.str());
    const auto back = parse_partition_dump(in, 4);
    CHECK(canonical_blocks(back) == canonical_blocks(s));

    std::istringstream bad1("P1: 1 2\nP2: 2 3 4\n");
    CHECK_THROWS_AS(parse_partition_dump(bad1, 4), ParseError);
    std::istringstream bad2("P1: 1 2\n");
    CHECK_THROWS_AS(parse_partition_dump(bad2, 4), ParseError);
    std::istringstream bad3("P1: 1 2 9\n");
    CHECK_THROWS_AS(parse_partition_dump(bad3, 4), ParseError);
}
