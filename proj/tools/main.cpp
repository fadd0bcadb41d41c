#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ekpp/bench.hpp"
#include "ekpp/exact.hpp"
#include "ekpp/graph.hpp"
#include "ekpp/report.hpp"
#include "ekpp/vns.hpp"

namespace {

using namespace ekpp;

struct InstanceFlags {
    std::string input;
    std::string format = "auto";
    bool dimacs_weights = false;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& f) {
    cmd->add_option("--input", f.input, "instance file")->required();
    cmd->add_option("--format", f.format, "input format")
        ->check(CLI::IsMember({"auto", "dimacs", "edgelist"}))
        ->capture_default_str();
    cmd->add_flag("--dimacs-weights", f.dimacs_weights,
                  "apply the synthetic weights ((i+j) mod 200)+1");
}

void add_solver_flags(CLI::App* cmd, SolverConfig& cfg) {
    cmd->add_option("--k", cfg.k, "k-plex relaxation")->capture_default_str();
    cmd->add_option("--runs", cfg.runs, "independent runs")->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "base random seed")->capture_default_str();
    cmd->add_option("--n-min", cfg.n_min, "smallest shaking neighborhood")->capture_default_str();
    cmd->add_option("--n-max", cfg.n_max, "largest shaking neighborhood")->capture_default_str();
    cmd->add_option("--it-max", cfg.it_max, "iteration limit per run")->capture_default_str();
    cmd->add_option("--itrep-max", cfg.itrep_max, "iterations without improvement before stopping")
        ->capture_default_str();
    cmd->add_option("--t-max", cfg.t_max, "wall-clock limit per run, seconds")
        ->capture_default_str();
    cmd->add_option("--prob", cfg.prob, "acceptance probability for equal-quality solutions")
        ->capture_default_str();
}

int default_threads() {
    if (const char* env = std::getenv("EKPP_THREADS")) {
        const int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

std::string resolve_format(const InstanceFlags& f) {
    if (f.format != "auto") return f.format;
    const auto dot = f.input.find_last_of('.');
    const std::string ext = dot == std::string::npos ? "" : f.input.substr(dot + 1);
    if (ext == "clq" || ext == "dimacs" || ext == "col") return "dimacs";
    return "edgelist";
}

WeightedGraph load_instance(const InstanceFlags& f, InstanceInfo& info) {
    std::ifstream in(f.input);
    if (!in) throw std::runtime_error("cannot open '" + f.input + "'");
    info.path = f.input;
    info.format = resolve_format(f);
    info.dimacs_weights = f.dimacs_weights;
    WeightedGraph g = info.format == "dimacs" ? parse_dimacs(in) : parse_weighted_edge_list(in);
    if (f.dimacs_weights) g = apply_dimacs_weights(g);
    return g;
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

int cmd_solve(const InstanceFlags& flags, const SolverConfig& cfg, int threads,
              const std::string& report_path, const std::string& dump_path) {
    validate(cfg);
    InstanceInfo info;
    const WeightedGraph g = load_instance(flags, info);
    const RunReport rep = solve_repeated(g, cfg, threads);
    const RunResult& best = rep.best();

    if (!dump_path.empty()) {
        std::ostringstream dump;
        write_partition_dump(g, best.best, cfg.k, best.objective.value(), dump);
        write_text(dump_path, dump.str());
    }
    write_text(report_path, solve_report_json(info, g, cfg, rep).dump(2) + "\n");
    std::cerr << "best weight " << format_weight(rep.best_weight) << ", objective "
              << format_weight(best.objective.value()) << ", "
              << (best.feasible ? "feasible" : "INFEASIBLE") << ", " << rep.runs.size()
              << " runs in " << detail::short_num(rep.total_seconds) << "s\n";
    return best.feasible ? 0 : 2;
}

int cmd_exact(const InstanceFlags& flags, int k, int limit, const std::string& dump_path) {
    InstanceInfo info;
    const WeightedGraph g = load_instance(flags, info);
    if (limit > 12)
        std::cerr << "warning: enumeration above 12 vertices grows as the Bell numbers\n";
    const ExactResult res = exact_solve(g, k, limit);
    std::cout << "optimum_weight: " << format_weight(res.optimum_weight) << '\n'
              << "optimum_objective: " << format_weight(res.optimum_objective) << '\n'
              << "partitions_enumerated: " << res.partitions_enumerated << '\n';
    std::ostringstream dump;
    write_partition_dump(g, res.best, k, res.optimum_objective, dump);
    std::cout << dump.str();
    if (!dump_path.empty()) write_text(dump_path, dump.str());
    return 0;
}

int cmd_verify(const InstanceFlags& flags, int k, const std::string& partition_path) {
    InstanceInfo info;
    const WeightedGraph g = load_instance(flags, info);
    std::ifstream in(partition_path);
    if (!in) throw std::runtime_error("cannot open '" + partition_path + "'");
    const Solution s = parse_partition_dump(in, g.n);
    const Certificate cert = verify_partition(g, s, k);
    std::cout << "feasible: " << (cert.feasible ? "true" : "false") << '\n'
              << "weight: " << format_weight(cert.weight) << '\n';
    std::cout << "violators:";
    for (int v : cert.violators) std::cout << ' ' << (v + 1);
    std::cout << '\n';
    return cert.feasible ? 0 : 2;
}

std::string dir_of(const std::string& path) {
    const auto slash = path.find_last_of('/');
    return slash == std::string::npos ? std::string{} : path.substr(0, slash + 1);
}

struct BenchOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<int> runs;
    std::optional<long> it_max;
    std::optional<long> itrep_max;
};

int cmd_bench(const std::string& manifest_path, const std::string& csv_path,
              const std::string& table_path, const std::string& json_path, int threads,
              const BenchOverrides& over) {
    std::ifstream in(manifest_path);
    if (!in) throw std::runtime_error("cannot open '" + manifest_path + "'");
    nlohmann::json mj;
    try {
        in >> mj;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("manifest parse error: " + std::string(e.what()));
    }
    const BenchManifest manifest = parse_manifest(mj);
    SolverConfig base = manifest.config;
    if (over.seed) base.seed = *over.seed;
    if (over.runs) base.runs = *over.runs;
    if (over.it_max) base.it_max = *over.it_max;
    if (over.itrep_max) base.itrep_max = *over.itrep_max;
    const std::string base_dir = dir_of(manifest_path);

    std::vector<BenchRow> rows;
    for (const auto& task : manifest.tasks) {
        WeightedGraph g;
        bool loaded = false;
        std::string error;
        try {
            InstanceFlags f;
            f.input = task.path.empty() || task.path.front() == '/' ? task.path
                                                                    : base_dir + task.path;
            f.format = task.format;
            f.dimacs_weights = task.dimacs_weights;
            InstanceInfo info;
            g = load_instance(f, info);
            loaded = true;
        } catch (const std::exception& e) {
            error = e.what();
        }
        for (int k : task.ks) {
            const auto ref_it = task.refs.find(k);
            const BenchRef* ref = ref_it == task.refs.end() ? nullptr : &ref_it->second;
            if (!loaded) {
                rows.push_back(failed_bench_row(task.alias, k, error));
                continue;
            }
            SolverConfig cfg = base;
            cfg.k = k;
            try {
                validate(cfg);
                const RunReport rep = solve_repeated(g, cfg, threads);
                rows.push_back(make_bench_row(task.alias, k, ref, rep));
            } catch (const std::exception& e) {
                rows.push_back(failed_bench_row(task.alias, k, e.what()));
            }
            std::cerr << "bench: " << task.alias << " k=" << k << " done\n";
        }
    }
    if (!csv_path.empty()) write_text(csv_path, render_csv(rows));
    if (!json_path.empty()) write_text(json_path, bench_json(rows).dump(2) + "\n");
    write_text(table_path, render_table(rows));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum edge-weight k-plex partitioning (Max-EkPP) solver"};
    app.require_subcommand(1);

    InstanceFlags solve_flags;
    SolverConfig solve_cfg;
    int threads = default_threads();
    std::string report_path = "-";
    std::string dump_path;
    auto* solve = app.add_subcommand("solve", "run the VNS solver");
    add_instance_flags(solve, solve_flags);
    add_solver_flags(solve, solve_cfg);
    solve->add_option("--threads", threads, "worker threads for repeated runs");
    solve->add_option("--report", report_path, "JSON report path, - for stdout")
        ->capture_default_str();
    solve->add_option("--dump", dump_path, "also write the best partition in dump form");

    InstanceFlags exact_flags;
    int exact_k = 1;
    int exact_limit = 12;
    std::string exact_dump;
    auto* exact = app.add_subcommand("exact", "exhaustive optimum for small instances");
    add_instance_flags(exact, exact_flags);
    exact->add_option("--k", exact_k, "k-plex relaxation")->capture_default_str();
    exact->add_option("--limit", exact_limit, "largest vertex count accepted")
        ->capture_default_str();
    exact->add_option("--dump", exact_dump, "write the optimal partition in dump form");

    InstanceFlags verify_flags;
    int verify_k = 1;
    std::string partition_path;
    auto* verify = app.add_subcommand("verify", "check a partition dump against an instance");
    add_instance_flags(verify, verify_flags);
    verify->add_option("--k", verify_k, "k-plex relaxation")->capture_default_str();
    verify->add_option("--partition", partition_path, "partition dump file")->required();

    std::string manifest_path, csv_path, table_path = "-", json_path;
    BenchOverrides over;
    auto* bench = app.add_subcommand("bench", "run a manifest of instances and tabulate");
    bench->add_option("--manifest", manifest_path, "JSON manifest")->required();
    bench->add_option("--csv", csv_path, "write results CSV (deterministic for a fixed seed)");
    bench->add_option("--table", table_path, "text table path, - for stdout")
        ->capture_default_str();
    bench->add_option("--json", json_path, "write per-run detail as JSON");
    bench->add_option("--threads", threads, "worker threads for repeated runs");
    bench->add_option("--seed", over.seed, "override the manifest seed");
    bench->add_option("--runs", over.runs, "override the manifest run count");
    bench->add_option("--it-max", over.it_max, "override the manifest iteration limit");
    bench->add_option("--itrep-max", over.itrep_max, "override the manifest stall limit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve->parsed())
            return cmd_solve(solve_flags, solve_cfg, threads, report_path, dump_path);
        if (exact->parsed()) return cmd_exact(exact_flags, exact_k, exact_limit, exact_dump);
        if (verify->parsed()) return cmd_verify(verify_flags, verify_k, partition_path);
        if (bench->parsed())
            return cmd_bench(manifest_path, csv_path, table_path, json_path, threads, over);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
