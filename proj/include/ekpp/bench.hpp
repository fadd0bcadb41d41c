#pragma once

#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ekpp/report.hpp"
#include "ekpp/vns.hpp"

namespace ekpp {

struct BenchRef {
    double value = 0.0;
    bool optimal = false;  // known optimum vs best-known
};

struct BenchTask {
    std::string path;
    std::string alias;  // display name; defaults to the file name
    std::string format = "dimacs";
    bool dimacs_weights = false;
    std::vector<int> ks;
    std::map<int, BenchRef> refs;  // per-k reference values
};

struct BenchManifest {
    SolverConfig config;  // shared solver settings; k comes from each task
    std::vector<BenchTask> tasks;
};

// Manifest layout:
// { "config": { solver fields, all optional },
//   "instances": [ { "path": ..., "format": "dimacs"|"edgelist",
//                    "dimacs_weights": bool, "alias": ...,
//                    "k": [1,2,3],
//                    "refs": { "1": {"value": 1260, "optimal": true}, ... } } ] }
inline BenchManifest parse_manifest(const nlohmann::json& j) {
    BenchManifest m;
    if (j.contains("config")) {
        const auto& c = j.at("config");
        if (c.contains("n_min")) m.config.n_min = c.at("n_min").get<int>();
        if (c.contains("n_max")) m.config.n_max = c.at("n_max").get<int>();
        if (c.contains("it_max")) m.config.it_max = c.at("it_max").get<long>();
        if (c.contains("itrep_max")) m.config.itrep_max = c.at("itrep_max").get<long>();
        if (c.contains("t_max")) m.config.t_max = c.at("t_max").get<double>();
        if (c.contains("prob")) m.config.prob = c.at("prob").get<double>();
        if (c.contains("seed")) m.config.seed = c.at("seed").get<std::uint64_t>();
        if (c.contains("runs")) m.config.runs = c.at("runs").get<int>();
    }
    if (!j.contains("instances") || !j.at("instances").is_array())
        throw std::invalid_argument("manifest needs an 'instances' array");
    for (const auto& t : j.at("instances")) {
        BenchTask task;
        task.path = t.at("path").get<std::string>();
        task.alias = t.value("alias", std::string{});
        if (task.alias.empty()) {
            const auto slash = task.path.find_last_of('/');
            task.alias = slash == std::string::npos ? task.path : task.path.substr(slash + 1);
        }
        task.format = t.value("format", std::string{"dimacs"});
        task.dimacs_weights = t.value("dimacs_weights", false);
        for (const auto& k : t.at("k")) task.ks.push_back(k.get<int>());
        if (task.ks.empty()) throw std::invalid_argument("instance with empty k list");
        if (t.contains("refs")) {
            for (const auto& [key, val] : t.at("refs").items()) {
                BenchRef ref;
                ref.value = val.at("value").get<double>();
                ref.optimal = val.value("optimal", false);
                task.refs[std::stoi(key)] = ref;
            }
        }
        m.tasks.push_back(std::move(task));
    }
    return m;
}

// Status mark against a supplied reference: "opt" when the best equals a
// known optimum, "best" when it equals the best-known value, "new" otherwise
// (including rows with no reference at all).
inline std::string bench_tag(double best, const BenchRef* ref) {
    if (ref && best == ref->value) return ref->optimal ? "opt" : "best";
    return "new";
}

struct BenchRow {
    std::string name;
    int k = 1;
    bool failed = false;
    std::string error;
    const BenchRef* ref = nullptr;  // points into the manifest
    double best = 0.0;
    double avg = 0.0;
    double gap = 0.0;
    bool feasible = false;
    int runs = 0;
    long stop_iteration = 0;
    long stop_stall = 0;
    long stop_time = 0;
    long stop_callback = 0;
    double total_seconds = 0.0;
    std::string tag;
    std::vector<RunResult> per_run;
};

inline BenchRow make_bench_row(const std::string& name, int k, const BenchRef* ref,
                               const RunReport& rep) {
    BenchRow row;
    row.name = name;
    row.k = k;
    row.ref = ref;
    row.best = rep.best_weight;
    row.avg = rep.avg_weight;
    row.gap = rep.gap_percent;
    row.feasible = rep.best().feasible;
    row.runs = static_cast<int>(rep.runs.size());
    for (const auto& run : rep.runs) {
        switch (run.reason) {
            case StopReason::IterationLimit: ++row.stop_iteration; break;
            case StopReason::StallLimit: ++row.stop_stall; break;
            case StopReason::TimeLimit: ++row.stop_time; break;
            case StopReason::Callback: ++row.stop_callback; break;
        }
    }
    row.total_seconds = rep.total_seconds;
    row.tag = bench_tag(row.best, ref);
    row.per_run = rep.runs;
    return row;
}

inline BenchRow failed_bench_row(const std::string& name, int k, std::string error) {
    BenchRow row;
    row.name = name;
    row.k = k;
    row.failed = true;
    for (char& c : error)
        if (c == ',' || c == '\n') c = ';';
    row.error = std::move(error);
    return row;
}

// Machine-readable results. Deliberately excludes wall-clock fields so that
// identical manifest + seed reproduce the file byte for byte.
inline std::string render_csv(const std::vector<BenchRow>& rows) {
    std::string out =
        "name,k,ref,ref_kind,best,tag,avg,gap_percent,feasible,runs,"
        "stop_iteration,stop_stall,stop_time,status\n";
    for (const auto& r : rows) {
        out += r.name + ',' + std::to_string(r.k) + ',';
        if (r.ref) {
            out += format_weight(r.ref->value);
            out += r.ref->optimal ? ",opt," : ",best,";
        } else {
            out += ",,";
        }
        if (r.failed) {
            out += ",,,,,,,,," + ("failed: " + r.error);
        } else {
            out += format_weight(r.best) + ',' + r.tag + ',' + format_weight(r.avg) + ',' +
                   format_weight(r.gap) + ',' + (r.feasible ? "true" : "false") + ',' +
                   std::to_string(r.runs) + ',' + std::to_string(r.stop_iteration) + ',' +
                   std::to_string(r.stop_stall) + ',' + std::to_string(r.stop_time) + ",ok";
        }
        out += '\n';
    }
    return out;
}

namespace detail {

// Fixed-point with up to two decimals, trailing zeros trimmed.
inline std::string short_num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", x);
    std::string s(buf);
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

} // namespace detail

// Human-readable summary in the usual benchmark column order:
// k, instance, known optimum, best known, achieved (or its mark), average,
// gap percent, total seconds.
inline std::string render_table(const std::vector<BenchRow>& rows) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"k", "inst", "opt", "best", "V_best", "V_avg", "V_gap", "V_t_tot"});
    for (const auto& r : rows) {
        if (r.failed) {
            cells.push_back({std::to_string(r.k), r.name, "-", "-", "failed", "-", "-", "-"});
            continue;
        }
        const std::string opt = r.ref && r.ref->optimal ? format_weight(r.ref->value) : "-";
        const std::string known =
            r.ref ? format_weight(r.ref->value) : format_weight(r.best);
        const std::string achieved = r.tag == "new" && r.ref ? format_weight(r.best) : r.tag;
        cells.push_back({std::to_string(r.k), r.name, opt, known, achieved,
                         detail::short_num(r.avg), detail::short_num(r.gap),
                         detail::short_num(r.total_seconds)});
    }
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += row[c];
            if (c + 1 < row.size()) out.append(width[c] - row[c].size() + 2, ' ');
        }
        out += '\n';
    }
    return out;
}

// Per-row JSON with the per-run detail, for cross-checking the CSV fields.
inline nlohmann::json bench_json(const std::vector<BenchRow>& rows) {
    nlohmann::json j;
    j["schema"] = 1;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row = {{"name", r.name}, {"k", r.k}, {"failed", r.failed}};
        if (r.failed) {
            row["error"] = r.error;
        } else {
            row["best"] = r.best;
            row["avg"] = r.avg;
            row["gap_percent"] = r.gap;
            row["tag"] = r.tag;
            row["feasible"] = r.feasible;
            row["total_seconds"] = r.total_seconds;
            row["runs"] = nlohmann::json::array();
            for (const auto& run : r.per_run) row["runs"].push_back(run_json(run));
        }
        if (r.ref) row["ref"] = {{"value", r.ref->value}, {"optimal", r.ref->optimal}};
        j["rows"].push_back(std::move(row));
    }
    return j;
}

} // namespace ekpp
