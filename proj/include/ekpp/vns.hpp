#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ekpp/objective.hpp"
#include "ekpp/solution.hpp"

namespace ekpp {

struct SolverConfig {
    int k = 1;
    int n_min = 1;          // smallest shaking neighborhood
    int n_max = 80;         // largest shaking neighborhood
    long it_max = 20000;    // total iterations
    long itrep_max = 10000; // iterations without improving the best
    double t_max = 3600.0;  // wall-clock seconds
    double prob = 0.1;      // chance of moving to an equal-quality solution
    std::uint64_t seed = 1;
    int runs = 10;
};

inline void validate(const SolverConfig& cfg) {
    if (cfg.k < 1) throw std::invalid_argument("k must be >= 1");
    if (cfg.n_min < 1 || cfg.n_min > cfg.n_max)
        throw std::invalid_argument("need 1 <= n_min <= n_max");
    if (cfg.it_max <= 0 || cfg.itrep_max <= 0 || cfg.t_max <= 0.0 || cfg.runs < 1)
        throw std::invalid_argument("iteration, time and run limits must be positive");
    if (cfg.prob < 0.0 || cfg.prob > 1.0) throw std::invalid_argument("prob must be in [0, 1]");
}

enum class StopReason { IterationLimit, StallLimit, TimeLimit, Callback };

inline const char* to_string(StopReason r) {
    switch (r) {
        case StopReason::IterationLimit: return "iteration_limit";
        case StopReason::StallLimit: return "stall_limit";
        case StopReason::TimeLimit: return "time_limit";
        case StopReason::Callback: return "callback";
    }
    return "unknown";
}

using Clock = std::chrono::steady_clock;

// Moves min(kappa, n) distinct vertices, sampled without replacement, each to
// a partition drawn uniformly from {1, ..., l+1} where l is the partition
// count at that moment; l+1 opens a singleton. The partition count can grow
// and shrink as the perturbation proceeds.
inline void shake(const WeightedGraph& g, Solution& s, DegreeLedger& led, int k, int kappa,
                  Rng& rng, MoveScratch& ws, std::vector<int>& pick_buf) {
    const int n = g.n;
    const int moves = std::min(kappa, n);
    pick_buf.resize(n);
    for (int i = 0; i < n; ++i) pick_buf[i] = i;
    for (int i = 0; i < moves; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(pick_buf[i], pick_buf[j]);
        const int v = pick_buf[i];
        const int l = s.partition_count();
        const int q = static_cast<int>(rng.below(static_cast<std::uint64_t>(l) + 1));
        move_vertex(g, s, led, k, v, q == l ? kNewPartition : q, ws);
    }
}

inline void shake(const WeightedGraph& g, Solution& s, DegreeLedger& led, int k, int kappa,
                  Rng& rng) {
    MoveScratch ws;
    std::vector<int> pick_buf;
    shake(g, s, led, k, kappa, rng, ws, pick_buf);
}

// 1-swap first-improvement local search. Vertices are scanned in index
// order; for each vertex the candidate targets (every other partition plus a
// fresh singleton) are probed in a randomly permuted order with the partial
// objective calculation. The first strictly improving move is applied and
// the scan restarts from the first vertex; the search stops when a full scan
// finds nothing. An optional deadline is polled at every restart.
inline void local_search(const WeightedGraph& g, Solution& s, DegreeLedger& led, int k,
                         Rng& rng, MoveScratch& ws,
                         std::optional<Clock::time_point> deadline = std::nullopt) {
    const int n = g.n;
    std::vector<int> targets;
    bool improved = true;
    while (improved) {
        if (deadline && Clock::now() >= *deadline) return;
        improved = false;
        ObjectiveValue current = objective_from_ledger(g, led);
        for (int v = 0; v < n && !improved; ++v) {
            const int l = s.partition_count();
            const bool lone = s.size_of(s.part[v]) == 1;
            targets.clear();
            for (int t = 0; t < l; ++t)
                if (t != s.part[v]) targets.push_back(t);
            if (!lone) targets.push_back(kNewPartition);
            for (std::size_t i = targets.size(); i > 1; --i)
                std::swap(targets[i - 1], targets[rng.below(i)]);
            for (int t : targets) {
                const ObjectiveValue probe = evaluate_move(g, s, led, k, v, t, ws);
                if (compare(probe, current) == Ordering::Greater) {
                    move_vertex(g, s, led, k, v, t, ws);
                    improved = true;
                    break;
                }
            }
        }
    }
}

inline void local_search(const WeightedGraph& g, Solution& s, DegreeLedger& led, int k,
                         Rng& rng) {
    MoveScratch ws;
    local_search(g, s, led, k, rng, ws);
}

// Acceptance rule between the incumbent and the candidate produced by
// shake + local search: strictly better always wins, strictly worse never,
// equal quality wins with probability prob. Returns true when the candidate
// is chosen.
inline bool accept(const ObjectiveValue& incumbent, const ObjectiveValue& candidate,
                   double prob, Rng& rng) {
    switch (compare(candidate, incumbent)) {
        case Ordering::Greater: return true;
        case Ordering::Less: return false;
        case Ordering::Equal: return rng.unit() < prob;
    }
    return false;
}

struct RunResult {
    Solution best;
    ObjectiveValue objective;
    double weight = 0.0;  // partition weight of the best solution
    bool feasible = false;
    long iterations = 0;
    double seconds = 0.0;
    StopReason reason = StopReason::IterationLimit;
    std::uint64_t seed = 0;
};

// Called once per completed VNS iteration; return false to stop the run.
using IterationCallback = std::function<bool(long iteration, const ObjectiveValue& best)>;

namespace detail {

inline RunResult solve_run(const WeightedGraph& g, const SolverConfig& cfg, std::uint64_t seed,
                           const IterationCallback& on_iteration) {
    const auto t0 = Clock::now();
    const auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(cfg.t_max));
    Rng rng(seed);
    MoveScratch ws;
    std::vector<int> pick_buf;

    Solution best = random_initial(g, rng);
    DegreeLedger best_led = recompute_ledger(g, best, cfg.k);
    local_search(g, best, best_led, cfg.k, rng, ws, deadline);
    ObjectiveValue best_obj = objective_from_ledger(g, best_led);

    long iterations = 0;
    long stalled = 0;
    int kappa = cfg.n_min;
    StopReason reason = StopReason::IterationLimit;

    Solution work;
    DegreeLedger work_led;
    while (true) {
        if (iterations >= cfg.it_max) {
            reason = StopReason::IterationLimit;
            break;
        }
        if (stalled >= cfg.itrep_max) {
            reason = StopReason::StallLimit;
            break;
        }
        if (Clock::now() >= deadline) {
            reason = StopReason::TimeLimit;
            break;
        }
        work = best;
        work_led = best_led;
        shake(g, work, work_led, cfg.k, kappa, rng, ws, pick_buf);
        local_search(g, work, work_led, cfg.k, rng, ws, deadline);
        const ObjectiveValue work_obj = objective_from_ledger(g, work_led);
        const Ordering ord = compare(work_obj, best_obj);
        if (ord == Ordering::Greater) {
            best = std::move(work);
            best_led = std::move(work_led);
            best_obj = work_obj;
            kappa = cfg.n_min;
            stalled = 0;
        } else {
            if (ord == Ordering::Equal && rng.unit() < cfg.prob) {
                best = std::move(work);
                best_led = std::move(work_led);
                best_obj = work_obj;
            }
            kappa = kappa + 1 > cfg.n_max ? cfg.n_min : kappa + 1;
            ++stalled;
        }
        ++iterations;
        if (on_iteration && !on_iteration(iterations, best_obj)) {
            reason = StopReason::Callback;
            break;
        }
    }

    RunResult res;
    res.best = std::move(best);
    res.objective = best_obj;
    res.weight = partition_weight(g, res.best);
    res.feasible = best_obj.correct_total == g.n;
    res.iterations = iterations;
    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    res.reason = reason;
    res.seed = seed;
    return res;
}

} // namespace detail

// One VNS run with an explicit seed, e.g. run_seed(base, r) to reproduce run
// r of a repeated batch.
inline RunResult solve_with_seed(const WeightedGraph& g, const SolverConfig& cfg,
                                 std::uint64_t seed, const IterationCallback& on_iteration = {}) {
    validate(cfg);
    return detail::solve_run(g, cfg, seed, on_iteration);
}

// One VNS run, seeded as run 0 of the repeated protocol.
inline RunResult solve(const WeightedGraph& g, const SolverConfig& cfg,
                       const IterationCallback& on_iteration = {}) {
    return solve_with_seed(g, cfg, run_seed(cfg.seed, 0), on_iteration);
}

struct RunReport {
    std::vector<RunResult> runs;
    int best_run = 0;
    double best_weight = 0.0;
    double avg_weight = 0.0;
    double gap_percent = 0.0;  // 100 * (best - avg) / best on partition weight
    double total_seconds = 0.0;

    const RunResult& best() const { return runs[best_run]; }
};

inline void finalize_report(RunReport& rep) {
    rep.best_run = 0;
    double sum_w = 0.0;
    rep.total_seconds = 0.0;
    for (int r = 0; r < static_cast<int>(rep.runs.size()); ++r) {
        sum_w += rep.runs[r].weight;
        rep.total_seconds += rep.runs[r].seconds;
        if (compare(rep.runs[r].objective, rep.runs[rep.best_run].objective) == Ordering::Greater)
            rep.best_run = r;
    }
    rep.best_weight = rep.runs[rep.best_run].weight;
    rep.avg_weight = sum_w / static_cast<double>(rep.runs.size());
    rep.gap_percent =
        rep.best_weight == 0.0 ? 0.0 : 100.0 * (rep.best_weight - rep.avg_weight) / rep.best_weight;
}

// `runs` independent executions with per-run seeds derived from cfg.seed.
// Runs may execute on several threads; the aggregate is identical either way
// because results land in run order.
inline RunReport solve_repeated(const WeightedGraph& g, const SolverConfig& cfg, int threads = 1,
                                const IterationCallback& on_iteration = {}) {
    validate(cfg);
    RunReport rep;
    rep.runs.resize(cfg.runs);
    if (threads <= 1 || cfg.runs == 1) {
        for (int r = 0; r < cfg.runs; ++r)
            rep.runs[r] = detail::solve_run(g, cfg, run_seed(cfg.seed, r), on_iteration);
    } else {
        std::vector<std::future<void>> tasks;
        std::atomic<int> next{0};
        const int workers = std::min(threads, cfg.runs);
        tasks.reserve(workers);
        for (int t = 0; t < workers; ++t) {
            tasks.push_back(std::async(std::launch::async, [&] {
                for (int r = next.fetch_add(1); r < cfg.runs; r = next.fetch_add(1))
                    rep.runs[r] = detail::solve_run(g, cfg, run_seed(cfg.seed, r), on_iteration);
            }));
        }
        for (auto& t : tasks) t.get();
    }
    finalize_report(rep);
    return rep;
}

} // namespace ekpp
