#pragma once

#include <algorithm>
#include <initializer_list>
#include <tuple>
#include <vector>

#include "ekpp/graph.hpp"
#include "ekpp/rng.hpp"
#include "ekpp/solution.hpp"

namespace ekpp_test {

// Graph from 1-based (u, v, w) triples, the way instances read in text form.
inline ekpp::WeightedGraph graph_of(int n,
                                    std::initializer_list<std::tuple<int, int, double>> triples) {
    std::vector<ekpp::WeightedGraph::Edge> edges;
    for (auto [u, v, w] : triples) edges.push_back({u - 1, v - 1, w});
    return ekpp::WeightedGraph::build(n, std::move(edges));
}

// Erdos-Renyi style instance: each pair independently with probability
// `dens`; integer weights in 1..10 or reals in (0.1, 10).
inline ekpp::WeightedGraph random_graph(ekpp::Rng& rng, int n, double dens,
                                        bool integral = true) {
    std::vector<ekpp::WeightedGraph::Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.unit() < dens) {
                const double w = integral ? static_cast<double>(rng.int_in(1, 10))
                                          : 0.1 + 9.9 * rng.unit();
                edges.push_back({u, v, w});
            }
        }
    }
    return ekpp::WeightedGraph::build(n, std::move(edges));
}

// Structural sanity of a Solution: dense labels, non-empty partitions,
// consistent member registry and slots.
inline bool solution_is_consistent(const ekpp::Solution& s) {
    const int n = s.n();
    std::vector<int> counted(s.partition_count(), 0);
    for (int v = 0; v < n; ++v) {
        const int p = s.part[v];
        if (p < 0 || p >= s.partition_count()) return false;
        if (s.slot[v] < 0 || s.slot[v] >= s.size_of(p)) return false;
        if (s.members[p][s.slot[v]] != v) return false;
        ++counted[p];
    }
    int total = 0;
    for (int j = 0; j < s.partition_count(); ++j) {
        if (s.size_of(j) == 0 || counted[j] != s.size_of(j)) return false;
        total += s.size_of(j);
    }
    return total == n;
}

// Blocks of the partition as a canonical multiset, independent of labels.
inline std::vector<std::vector<int>> canonical_blocks(const ekpp::Solution& s) {
    std::vector<std::vector<int>> blocks(s.members);
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

} // namespace ekpp_test
