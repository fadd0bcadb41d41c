#pragma once

#include <algorithm>
#include <cassert>
#include <ostream>
#include <string>
#include <vector>

#include "ekpp/graph.hpp"
#include "ekpp/rng.hpp"

namespace ekpp {

// Target token for vertex moves that open a fresh singleton partition.
constexpr int kNewPartition = -1;

// Vertex-to-partition assignment plus a registry of partition members.
// Labels are dense: always exactly 0 .. partition_count()-1, with every
// partition non-empty.
struct Solution {
    std::vector<int> part;                  // part[v] = label of v's partition
    std::vector<std::vector<int>> members;  // label -> member vertices
    std::vector<int> slot;                  // position of v inside members[part[v]]

    int n() const { return static_cast<int>(part.size()); }
    int partition_count() const { return static_cast<int>(members.size()); }
    int size_of(int label) const { return static_cast<int>(members[label].size()); }

    bool operator==(const Solution& o) const { return part == o.part; }
};

// Builds a Solution from arbitrary labels, compacting so that labels used
// become 0..l-1 in increasing order of the original label.
inline Solution solution_from_labels(const std::vector<int>& labels) {
    const int n = static_cast<int>(labels.size());
    std::vector<int> distinct(labels);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Solution s;
    s.part.resize(n);
    s.slot.resize(n);
    s.members.resize(distinct.size());
    for (int v = 0; v < n; ++v) {
        const int label = static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), labels[v]) - distinct.begin());
        s.part[v] = label;
        s.slot[v] = static_cast<int>(s.members[label].size());
        s.members[label].push_back(v);
    }
    return s;
}

inline Solution all_singletons(int n) {
    std::vector<int> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = v;
    return solution_from_labels(labels);
}

inline int ceil_sqrt(int n) {
    int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (r * r < n) ++r;
    while (r > 1 && (r - 1) * (r - 1) >= n) --r;
    return r;
}

// Initial assignment: each vertex gets a label drawn uniformly from
// 1..ceil(sqrt(n)); labels are then compacted.
inline Solution random_initial(const WeightedGraph& g, Rng& rng) {
    const int bound = ceil_sqrt(g.n);
    std::vector<int> labels(g.n);
    for (int v = 0; v < g.n; ++v)
        labels[v] = static_cast<int>(rng.below(static_cast<std::uint64_t>(bound)));
    return solution_from_labels(labels);
}

// Incremental bookkeeping for the objective: per-vertex intra-partition
// degree, the per-vertex k-plex correctness flag, their count, and the sum
// of weights of intra-partition edges whose both endpoints are correct.
struct DegreeLedger {
    std::vector<int> intra_deg;
    std::vector<char> correct;
    int correct_total = 0;
    double w_sol = 0.0;
};

inline DegreeLedger recompute_ledger(const WeightedGraph& g, const Solution& s, int k) {
    DegreeLedger led;
    led.intra_deg.assign(g.n, 0);
    led.correct.assign(g.n, 0);
    for (const auto& e : g.edges) {
        if (s.part[e.u] == s.part[e.v]) {
            ++led.intra_deg[e.u];
            ++led.intra_deg[e.v];
        }
    }
    for (int v = 0; v < g.n; ++v) {
        led.correct[v] = led.intra_deg[v] >= s.size_of(s.part[v]) - k;
        led.correct_total += led.correct[v];
    }
    for (const auto& e : g.edges)
        if (s.part[e.u] == s.part[e.v] && led.correct[e.u] && led.correct[e.v]) led.w_sol += e.w;
    return led;
}

// Reusable workspace for move evaluation; sized once per instance.
class MoveScratch {
public:
    void resize(int n) {
        if (static_cast<int>(nbr_.size()) < n) {
            nbr_.resize(n, 0);
            nbr_w_.resize(n, 0.0);
            in_relevant_.resize(n, 0);
            new_correct_.resize(n, 0);
        }
    }

    std::vector<int> relevant;       // members of source and target partitions
    std::vector<char> nbr_;          // marks: neighbor of the moving vertex
    std::vector<double> nbr_w_;      // weight of the edge to the moving vertex
    std::vector<char> in_relevant_;  // marks: vertex is in `relevant`
    std::vector<char> new_correct_;  // correctness flags after the move (relevant only)
};

// Effect of moving one vertex, computed over the members of its source and
// target partitions only (and edges incident to them).
struct MoveDelta {
    int new_correct_total = 0;
    double new_w_sol = 0.0;
    int new_intra_deg_v = 0;
};

namespace detail {

// Core of the partial objective calculation. `tgt` is an existing label
// != part[v], or partition_count() to stand for a new singleton partition.
// Leaves scratch marks populated; callers must clear via scratch.relevant.
inline MoveDelta compute_move_delta(const WeightedGraph& g, const Solution& s,
                                    const DegreeLedger& led, int k, int v, int tgt,
                                    MoveScratch& ws) {
    const int src = s.part[v];
    const bool new_target = tgt == s.partition_count();
    ws.resize(g.n);
    ws.relevant.clear();
    for (int u : s.members[src]) ws.relevant.push_back(u);
    if (!new_target)
        for (int u : s.members[tgt]) ws.relevant.push_back(u);
    for (int u : ws.relevant) ws.in_relevant_[u] = 1;

    for (const auto& [z, w] : g.adjacency[v]) {
        ws.nbr_[z] = 1;
        ws.nbr_w_[z] = w;
    }

    const int src_size_after = s.size_of(src) - 1;
    const int tgt_size_after = (new_target ? 0 : s.size_of(tgt)) + 1;

    MoveDelta d;
    for (const auto& [z, w] : g.adjacency[v])
        if (s.part[z] == tgt) ++d.new_intra_deg_v;

    d.new_correct_total = led.correct_total;
    for (int u : ws.relevant) {
        int deg, size_after;
        if (u == v) {
            deg = d.new_intra_deg_v;
            size_after = tgt_size_after;
        } else if (s.part[u] == src) {
            deg = led.intra_deg[u] - ws.nbr_[u];
            size_after = src_size_after;
        } else {
            deg = led.intra_deg[u] + ws.nbr_[u];
            size_after = tgt_size_after;
        }
        const char nc = deg >= size_after - k;
        ws.new_correct_[u] = nc;
        d.new_correct_total += nc - led.correct[u];
    }

    // Re-evaluate every edge incident to a relevant vertex; each such edge is
    // visited once (from its smaller endpoint when both ends are relevant).
    double delta_w = 0.0;
    for (int u : ws.relevant) {
        const int pu_old = s.part[u];
        const int pu_new = u == v ? tgt : pu_old;
        const char cu_old = led.correct[u];
        const char cu_new = ws.new_correct_[u];
        for (const auto& [z, w] : g.adjacency[u]) {
            if (ws.in_relevant_[z] && z < u) continue;
            const int pz_old = s.part[z];
            const int pz_new = z == v ? tgt : pz_old;
            const char cz_old = led.correct[z];
            const char cz_new = ws.in_relevant_[z] ? ws.new_correct_[z] : cz_old;
            const bool contrib_old = pz_old == pu_old && cu_old && cz_old;
            const bool contrib_new = pz_new == pu_new && cu_new && cz_new;
            if (contrib_old != contrib_new) delta_w += contrib_new ? w : -w;
        }
    }
    d.new_w_sol = led.w_sol + delta_w;
    return d;
}

inline void clear_move_scratch(const WeightedGraph& g, int v, MoveScratch& ws) {
    for (int u : ws.relevant) ws.in_relevant_[u] = 0;
    for (const auto& [z, w] : g.adjacency[v]) {
        ws.nbr_[z] = 0;
        ws.nbr_w_[z] = 0.0;
    }
}

} // namespace detail

// Everything needed to reverse one applied move exactly. Records must be
// undone in reverse order of application.
struct MoveRecord {
    bool noop = true;
    int v = -1;
    int src = -1;
    int tgt = -1;                 // resolved target label at application time
    bool created_target = false;  // target was a fresh singleton partition
    bool emptied_source = false;  // source partition vanished (label compacted)
    int old_slot = -1;
    int old_intra_deg_v = 0;
    int old_correct_total = 0;
    double old_w_sol = 0.0;
    std::vector<int> flips;  // vertices whose correctness flag changed
};

// Moves v to `target` (an existing label or kNewPartition), keeping the
// ledger consistent by examining only the source and target partitions.
// Moving to the current partition, or a lone vertex to kNewPartition, is a
// signaled no-op. Empty source partitions are removed: the last label is
// renamed onto the vacated one so labels stay dense.
inline MoveRecord move_vertex(const WeightedGraph& g, Solution& s, DegreeLedger& led, int k,
                              int v, int target, MoveScratch& ws) {
    MoveRecord rec;
    rec.v = v;
    rec.src = s.part[v];
    if (target == kNewPartition) {
        if (s.size_of(rec.src) == 1) return rec;  // identical set system
        rec.tgt = s.partition_count();
        rec.created_target = true;
    } else {
        if (target == rec.src) return rec;
        rec.tgt = target;
    }
    rec.noop = false;
    rec.old_intra_deg_v = led.intra_deg[v];
    rec.old_correct_total = led.correct_total;
    rec.old_w_sol = led.w_sol;

    const MoveDelta d = detail::compute_move_delta(g, s, led, k, v, rec.tgt, ws);
    for (int u : ws.relevant)
        if (ws.new_correct_[u] != led.correct[u]) rec.flips.push_back(u);
    detail::clear_move_scratch(g, v, ws);

    if (rec.created_target) s.members.emplace_back();

    // structural update
    for (const auto& [z, w] : g.adjacency[v])
        if (s.part[z] == rec.src) --led.intra_deg[z];
    rec.old_slot = s.slot[v];
    auto& src_members = s.members[rec.src];
    src_members[rec.old_slot] = src_members.back();
    s.slot[src_members.back()] = rec.old_slot;
    src_members.pop_back();
    s.part[v] = rec.tgt;
    s.slot[v] = s.size_of(rec.tgt);
    s.members[rec.tgt].push_back(v);
    led.intra_deg[v] = d.new_intra_deg_v;
    for (const auto& [z, w] : g.adjacency[v])
        if (s.part[z] == rec.tgt) ++led.intra_deg[z];

    for (int u : rec.flips) led.correct[u] = !led.correct[u];
    led.correct_total = d.new_correct_total;
    led.w_sol = d.new_w_sol;

    if (src_members.empty()) {
        rec.emptied_source = true;
        const int last = s.partition_count() - 1;
        if (rec.src != last) {
            s.members[rec.src] = std::move(s.members[last]);
            for (int u : s.members[rec.src]) s.part[u] = rec.src;
        }
        s.members.pop_back();
    }
    return rec;
}

// Restores the exact pre-move state: x, intra degrees, correctness flags and
// counters are all bit-identical to what move_vertex saw.
inline void undo_move(const WeightedGraph& g, Solution& s, DegreeLedger& led, int k,
                      const MoveRecord& rec) {
    (void)k;
    if (rec.noop) return;

    if (rec.emptied_source) {
        const int restored = s.partition_count();
        if (rec.src != restored) {
            s.members.push_back(std::move(s.members[rec.src]));
            for (int u : s.members.back()) s.part[u] = restored;
            s.members[rec.src].clear();
        } else {
            s.members.emplace_back();
        }
    }

    assert(s.slot[rec.v] == s.size_of(rec.tgt) - 1);
    for (const auto& [z, w] : g.adjacency[rec.v])
        if (s.part[z] == rec.tgt) --led.intra_deg[z];
    s.members[rec.tgt].pop_back();
    if (rec.created_target) s.members.pop_back();

    s.part[rec.v] = rec.src;
    auto& src_members = s.members[rec.src];
    src_members.push_back(rec.v);
    const int last_idx = static_cast<int>(src_members.size()) - 1;
    std::swap(src_members[rec.old_slot], src_members[last_idx]);
    s.slot[src_members[last_idx]] = last_idx;
    s.slot[src_members[rec.old_slot]] = rec.old_slot;

    led.intra_deg[rec.v] = rec.old_intra_deg_v;
    for (const auto& [z, w] : g.adjacency[rec.v])
        if (s.part[z] == rec.src && z != rec.v) ++led.intra_deg[z];

    for (int u : rec.flips) led.correct[u] = !led.correct[u];
    led.correct_total = rec.old_correct_total;
    led.w_sol = rec.old_w_sol;
}

struct FeasibilityReport {
    bool feasible = true;
    std::vector<int> violators;  // vertices failing the k-plex degree condition
};

// A solution is feasible iff every partition is a k-plex, i.e. every vertex
// has intra-partition degree >= |partition| - k.
inline FeasibilityReport is_feasible(const WeightedGraph& g, const Solution& s, int k) {
    const DegreeLedger led = recompute_ledger(g, s, k);
    FeasibilityReport rep;
    for (int v = 0; v < g.n; ++v)
        if (!led.correct[v]) rep.violators.push_back(v);
    rep.feasible = rep.violators.empty();
    return rep;
}

// Sum of weights of edges whose endpoints share a partition, regardless of
// correctness.
inline double partition_weight(const WeightedGraph& g, const Solution& s) {
    double w = 0.0;
    for (const auto& e : g.edges)
        if (s.part[e.u] == s.part[e.v]) w += e.w;
    return w;
}

// Text dump: header line, then one `P<j>: <v1> <v2> ...` line per partition.
// Vertex labels are 1-based; members are listed in increasing order.
inline void write_partition_dump(const WeightedGraph& g, const Solution& s, int k,
                                 double objective_value, std::ostream& out) {
    const FeasibilityReport rep = is_feasible(g, s, k);
    out << "# k=" << k << " feasible=" << (rep.feasible ? "true" : "false")
        << " weight=" << format_weight(partition_weight(g, s))
        << " objective=" << format_weight(objective_value) << '\n';
    for (int j = 0; j < s.partition_count(); ++j) {
        std::vector<int> sorted = s.members[j];
        std::sort(sorted.begin(), sorted.end());
        out << 'P' << (j + 1) << ':';
        for (int v : sorted) out << ' ' << (v + 1);
        out << '\n';
    }
}

// Reads the dump format back. Only the partition lines matter; `#` lines are
// comments. Every vertex of the instance must appear exactly once.
inline Solution parse_partition_dump(std::istream& in, int n) {
    std::vector<int> labels(n, -1);
    std::string line;
    int line_no = 0;
    int next_label = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        if (toks[0].size() < 2 || toks[0].front() != 'P' || toks[0].back() != ':')
            throw ParseError(line_no, "expected 'P<j>: <v1> <v2> ...'");
        const int label = next_label++;
        if (toks.size() == 1) throw ParseError(line_no, "empty partition");
        for (std::size_t i = 1; i < toks.size(); ++i) {
            int v = 0;
            if (!detail::parse_int(toks[i], v) || v < 1 || v > n)
                throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
            if (labels[v - 1] != -1)
                throw ParseError(line_no, "vertex " + std::to_string(v) + " assigned twice");
            labels[v - 1] = label;
        }
    }
    for (int v = 0; v < n; ++v)
        if (labels[v] == -1)
            throw ParseError(line_no, "vertex " + std::to_string(v + 1) + " missing from partition");
    return solution_from_labels(labels);
}

} // namespace ekpp
