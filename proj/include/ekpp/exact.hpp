#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ekpp/objective.hpp"
#include "ekpp/solution.hpp"

namespace ekpp {

struct ExactResult {
    double optimum_weight = 0.0;
    double optimum_objective = 0.0;
    Solution best;
    std::uint64_t partitions_enumerated = 0;  // complete k-plex partitions visited
};

struct Certificate {
    bool feasible = true;
    double weight = 0.0;
    std::vector<int> violators;
};

// Independent re-check of a complete assignment: feasibility and partition
// weight computed directly from the edge list, sharing nothing with the
// incremental ledger.
inline Certificate verify_partition(const WeightedGraph& g, const Solution& s, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (static_cast<int>(s.part.size()) != g.n)
        throw std::invalid_argument("partition does not cover the instance");
    std::vector<int> size(s.partition_count(), 0);
    for (int v = 0; v < g.n; ++v) ++size[s.part[v]];
    std::vector<int> deg(g.n, 0);
    Certificate cert;
    for (const auto& e : g.edges) {
        if (s.part[e.u] == s.part[e.v]) {
            ++deg[e.u];
            ++deg[e.v];
            cert.weight += e.w;
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (deg[v] < size[s.part[v]] - k) cert.violators.push_back(v);
    cert.feasible = cert.violators.empty();
    return cert;
}

namespace detail {

struct ExactSearch {
    const WeightedGraph& g;
    int k;
    std::vector<int> assign;               // restricted-growth string being built
    std::vector<std::vector<int>> blocks;  // members per block
    std::vector<int> intra;                // intra-block degree of assigned vertices
    std::vector<char> adj;                 // n*n adjacency matrix (n is tiny here)
    std::vector<double> adj_w;
    double weight = 0.0;

    std::uint64_t leaves = 0;
    bool have_best = false;
    double best_weight = 0.0;
    int best_blocks = 0;
    std::vector<int> best_assign;

    explicit ExactSearch(const WeightedGraph& graph, int kk)
        : g(graph), k(kk), assign(graph.n, -1), intra(graph.n, 0),
          adj(static_cast<std::size_t>(graph.n) * graph.n, 0),
          adj_w(static_cast<std::size_t>(graph.n) * graph.n, 0.0) {
        for (const auto& e : graph.edges) {
            adj[static_cast<std::size_t>(e.u) * graph.n + e.v] = 1;
            adj[static_cast<std::size_t>(e.v) * graph.n + e.u] = 1;
            adj_w[static_cast<std::size_t>(e.u) * graph.n + e.v] = e.w;
            adj_w[static_cast<std::size_t>(e.v) * graph.n + e.u] = e.w;
        }
    }

    bool adjacent(int a, int b) const { return adj[static_cast<std::size_t>(a) * g.n + b]; }
    double edge_w(int a, int b) const { return adj_w[static_cast<std::size_t>(a) * g.n + b]; }

    void run() {
        if (g.n == 0) {
            have_best = true;
            leaves = 1;
            return;
        }
        blocks.push_back({0});
        assign[0] = 0;
        descend(1);
    }

    void descend(int v) {
        if (v == g.n) {
            ++leaves;
            const int nblocks = static_cast<int>(blocks.size());
            if (!have_best || weight > best_weight ||
                (weight == best_weight && nblocks < best_blocks)) {
                have_best = true;
                best_weight = weight;
                best_blocks = nblocks;
                best_assign = assign;
            }
            return;
        }
        const int existing = static_cast<int>(blocks.size());
        for (int b = 0; b < existing; ++b) {
            if (!block_accepts(b, v)) continue;
            double added = 0.0;
            int dv = 0;
            for (int u : blocks[b]) {
                if (adjacent(u, v)) {
                    ++intra[u];
                    ++dv;
                    added += edge_w(u, v);
                }
            }
            intra[v] = dv;
            assign[v] = b;
            blocks[b].push_back(v);
            weight += added;
            descend(v + 1);
            weight -= added;
            blocks[b].pop_back();
            assign[v] = -1;
            for (int u : blocks[b])
                if (adjacent(u, v)) --intra[u];
        }
        // fresh singleton block: always a k-plex
        blocks.push_back({v});
        assign[v] = existing;
        intra[v] = 0;
        descend(v + 1);
        blocks.pop_back();
        assign[v] = -1;
    }

    // A block can take v only if afterwards every member's degree deficit
    // within the block stays <= k. Deficits never shrink as a block grows,
    // so rejecting here safely prunes the whole subtree.
    bool block_accepts(int b, int v) const {
        const int new_size = static_cast<int>(blocks[b].size()) + 1;
        int dv = 0;
        for (int u : blocks[b]) {
            const int a = adjacent(u, v);
            if (new_size - (intra[u] + a) > k) return false;
            dv += a;
        }
        return new_size - dv <= k;
    }
};

} // namespace detail

// Exhaustive Max-EkPP solver: enumerates every set partition of the vertex
// set exactly once via restricted-growth strings, keeping the maximum
// partition weight among those whose blocks are all k-plexes. Ties break to
// fewer blocks, then to the lexicographically smallest assignment.
inline ExactResult exact_solve(const WeightedGraph& g, int k, int limit = 12) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (g.n > limit)
        throw std::invalid_argument("exact enumeration refused: " + std::to_string(g.n) +
                                    " vertices exceeds the limit of " + std::to_string(limit));
    detail::ExactSearch search(g, k);
    search.run();
    ExactResult res;
    res.optimum_weight = search.best_weight;
    res.optimum_objective =
        g.n + (g.w_total > 0.0 ? search.best_weight / g.w_total : 0.0);
    res.partitions_enumerated = search.leaves;
    res.best = g.n == 0 ? Solution{} : solution_from_labels(search.best_assign);
    return res;
}

} // namespace ekpp
