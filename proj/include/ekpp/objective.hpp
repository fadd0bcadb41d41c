#pragma once

#include <stdexcept>

#include "ekpp/solution.hpp"

namespace ekpp {

// Equality slack for instances with non-integral weights, as a fraction of
// w_total. Integral-weight instances compare exactly.
constexpr double kRealEqTol = 1e-9;

enum class Ordering { Less, Equal, Greater };

// Objective of a (possibly infeasible) solution:
//   value = correct_total + w_sol / w_total
// The integer term dominates, so any feasible solution outranks any
// infeasible one, and among equally-correct solutions the heavier wins.
struct ObjectiveValue {
    int correct_total = 0;
    double w_sol = 0.0;
    double w_total = 0.0;
    bool integral = true;  // instance weights are exact integers

    double value() const {
        return correct_total + (w_total > 0.0 ? w_sol / w_total : 0.0);
    }
};

inline ObjectiveValue objective_from_ledger(const WeightedGraph& g, const DegreeLedger& led) {
    return {led.correct_total, led.w_sol, g.w_total, g.integral_weights};
}

// Full evaluation from scratch.
inline ObjectiveValue evaluate(const WeightedGraph& g, const Solution& s, int k) {
    return objective_from_ledger(g, recompute_ledger(g, s, k));
}

// Partial evaluation: the objective the solution would have after moving v
// to partition `target` (existing label or kNewPartition), examining only
// the members of v's source and target partitions and their incident edges.
// Does not mutate any state.
inline ObjectiveValue evaluate_move(const WeightedGraph& g, const Solution& s,
                                    const DegreeLedger& led, int k, int v, int target,
                                    MoveScratch& ws) {
    if (target == s.part[v])
        throw std::invalid_argument("probe target equals the current partition of the vertex");
    const int tgt = target == kNewPartition ? s.partition_count() : target;
    const MoveDelta d = detail::compute_move_delta(g, s, led, k, v, tgt, ws);
    detail::clear_move_scratch(g, v, ws);
    return {d.new_correct_total, d.new_w_sol, g.w_total, g.integral_weights};
}

inline ObjectiveValue evaluate_move(const WeightedGraph& g, const Solution& s,
                                    const DegreeLedger& led, int k, int v, int target) {
    MoveScratch ws;
    return evaluate_move(g, s, led, k, v, target, ws);
}

// Orders two objective values of the same instance. Works on the scaled form
// correct_total * w_total + w_sol, which is order-equivalent to value() but
// avoids the division: exact for integral weights, tolerance kRealEqTol *
// w_total otherwise. Equality must be deliberate because the solver treats
// it specially (acceptance with probability prob).
inline Ordering compare(const ObjectiveValue& a, const ObjectiveValue& b) {
    if (a.w_total != b.w_total || a.integral != b.integral)
        throw std::domain_error("objective values from different instances are not comparable");
    if (a.w_total == 0.0) {
        if (a.correct_total == b.correct_total) return Ordering::Equal;
        return a.correct_total < b.correct_total ? Ordering::Less : Ordering::Greater;
    }
    const double sa = a.correct_total * a.w_total + a.w_sol;
    const double sb = b.correct_total * b.w_total + b.w_sol;
    if (a.integral) {
        if (sa == sb) return Ordering::Equal;
    } else {
        if (std::abs(sa - sb) <= kRealEqTol * a.w_total) return Ordering::Equal;
    }
    return sa < sb ? Ordering::Less : Ordering::Greater;
}

} // namespace ekpp
