#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "ekpp/vns.hpp"

namespace ekpp {

struct InstanceInfo {
    std::string path;
    std::string format;           // "dimacs" or "edgelist"
    bool dimacs_weights = false;  // synthetic ((i+j) mod 200)+1 weights applied
};

inline nlohmann::json config_json(const SolverConfig& cfg) {
    return {{"k", cfg.k},
            {"n_min", cfg.n_min},
            {"n_max", cfg.n_max},
            {"it_max", cfg.it_max},
            {"itrep_max", cfg.itrep_max},
            {"t_max", cfg.t_max},
            {"prob", cfg.prob},
            {"seed", cfg.seed},
            {"runs", cfg.runs}};
}

inline nlohmann::json run_json(const RunResult& run) {
    return {{"seed", run.seed},
            {"objective", run.objective.value()},
            {"correct_total", run.objective.correct_total},
            {"w_sol", run.objective.w_sol},
            {"weight", run.weight},
            {"feasible", run.feasible},
            {"iterations", run.iterations},
            {"seconds", run.seconds},
            {"termination", to_string(run.reason)}};
}

// Full cmd-solve report, schema version 1.
inline nlohmann::json solve_report_json(const InstanceInfo& info, const WeightedGraph& g,
                                        const SolverConfig& cfg, const RunReport& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    j["instance"] = {{"path", info.path},
                     {"format", info.format},
                     {"dimacs_weights", info.dimacs_weights},
                     {"n", g.n},
                     {"m", g.edge_count()},
                     {"w_total", g.w_total},
                     {"integral_weights", g.integral_weights}};
    if (g.n >= 2) j["instance"]["density"] = density(g);
    j["config"] = config_json(cfg);
    j["runs"] = nlohmann::json::array();
    for (const auto& run : rep.runs) j["runs"].push_back(run_json(run));
    const RunResult& best = rep.best();
    nlohmann::json parts = nlohmann::json::array();
    for (int p = 0; p < best.best.partition_count(); ++p) {
        std::vector<int> block = best.best.members[p];
        std::sort(block.begin(), block.end());
        for (int& v : block) ++v;
        parts.push_back(block);
    }
    std::ostringstream dump;
    write_partition_dump(g, best.best, cfg.k, best.objective.value(), dump);
    j["best"] = {{"run", rep.best_run},
                 {"objective", best.objective.value()},
                 {"correct_total", best.objective.correct_total},
                 {"weight", best.weight},
                 {"feasible", best.feasible},
                 {"partitions", parts},
                 {"partition_dump", dump.str()}};
    j["summary"] = {{"best_weight", rep.best_weight},
                    {"avg_weight", rep.avg_weight},
                    {"gap_percent", rep.gap_percent},
                    {"total_seconds", rep.total_seconds}};
    return j;
}

} // namespace ekpp
