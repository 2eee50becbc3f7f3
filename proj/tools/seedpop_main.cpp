// Command-line front end: list benchmarks, emit seed pools, run
// initialization-strategy comparison experiments.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seedpop/report_io.hpp"

namespace {

using namespace seedpop;

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::string bounds_string(const BenchmarkSpec& spec) {
    bool uniform = true;
    for (const Bounds& b : spec.bounds) {
        if (b.lo != spec.bounds[0].lo || b.hi != spec.bounds[0].hi)
            uniform = false;
    }
    if (uniform) {
        return "(" + fmt6(spec.bounds[0].lo) + ":" + fmt6(spec.bounds[0].hi) +
               ")^" + std::to_string(spec.dimension);
    }
    std::string out;
    for (const Bounds& b : spec.bounds) {
        if (!out.empty()) out += "|";
        out += "(" + fmt6(b.lo) + ":" + fmt6(b.hi) + ")";
    }
    return out;
}

std::string valid_benchmark_names() {
    std::string names;
    for (BenchmarkId id : all_benchmarks()) {
        if (!names.empty()) names += ", ";
        names += to_string(id);
    }
    return names;
}

int write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    out.flush();
    if (!out) {
        std::cerr << "error: cannot write to '" << path << "'\n";
        return kExitIo;
    }
    return 0;
}

int cmd_list(const std::string& format) {
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (BenchmarkId id : all_benchmarks())
            arr.push_back(benchmark_spec_to_json(get_spec(id)));
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "id,dimension,bounds,optimum_value\r\n";
        for (BenchmarkId id : all_benchmarks()) {
            const BenchmarkSpec& spec = get_spec(id);
            std::cout << spec.name << "," << spec.dimension << ","
                      << bounds_string(spec) << "," << fmt(spec.optimum_value)
                      << "\r\n";
        }
    } else {
        std::printf("%-14s %4s  %-18s %s\n", "benchmark", "dim", "bounds",
                    "optimum");
        for (BenchmarkId id : all_benchmarks()) {
            const BenchmarkSpec& spec = get_spec(id);
            std::printf("%-14s %4d  %-18s %.6f\n", spec.name.c_str(),
                        spec.dimension, bounds_string(spec).c_str(),
                        spec.optimum_value);
        }
    }
    return 0;
}

int cmd_seed(const std::string& bench_name, double epsilon, int count,
             std::uint64_t rng_seed, const std::string& format) {
    auto id = parse_benchmark(bench_name);
    if (!id) {
        std::cerr << "error: unknown benchmark '" << bench_name
                  << "' (valid: " << valid_benchmark_names() << ")\n";
        return kExitUsage;
    }
    if (epsilon < 0.0) {
        std::cerr << "error: epsilon must be >= 0\n";
        return kExitUsage;
    }

    const SeedPool pool = analytic_seed_pool(*id, Epsilon{epsilon});
    std::vector<Point> points;
    if (count > 0) {
        std::mt19937_64 rng(rng_seed);
        points = materialize(pool, count, rng);
    }

    if (format == "json") {
        nlohmann::json j = seed_pool_to_json(pool);
        if (count > 0) {
            nlohmann::json arr = nlohmann::json::array();
            for (const Point& p : points) arr.push_back(p);
            j["points"] = std::move(arr);
        }
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "type,index,dim,value,branch\r\n";
        for (std::size_t d = 0; d < pool.per_dimension_candidates.size();
             ++d) {
            const auto& set = pool.per_dimension_candidates[d];
            for (std::size_t i = 0; i < set.size(); ++i) {
                std::cout << "candidate," << i << "," << d << ","
                          << fmt(set[i].value) << ","
                          << (set[i].branch == CandidateBranch::QuadraticTerm
                                  ? "quadratic"
                                  : "trig")
                          << "\r\n";
            }
        }
        for (std::size_t i = 0; i < pool.whole_point_seeds.size(); ++i) {
            const Point& p = pool.whole_point_seeds[i];
            for (std::size_t d = 0; d < p.size(); ++d)
                std::cout << "seed," << i << "," << d << "," << fmt(p[d])
                          << ",\r\n";
        }
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (std::size_t d = 0; d < points[i].size(); ++d)
                std::cout << "point," << i << "," << d << ","
                          << fmt(points[i][d]) << ",\r\n";
        }
    } else {
        std::cout << "benchmark: " << to_string(*id)
                  << "  epsilon: " << fmt6(epsilon) << "\n";
        for (std::size_t d = 0; d < pool.per_dimension_candidates.size();
             ++d) {
            const auto& set = pool.per_dimension_candidates[d];
            std::cout << "dim " << d << " (" << set.size()
                      << " candidates):";
            for (const Candidate& c : set) {
                std::cout << " " << fmt6(c.value)
                          << (c.branch == CandidateBranch::QuadraticTerm
                                  ? "[q]"
                                  : "[t]");
            }
            std::cout << "\n";
        }
        for (const Point& p : pool.whole_point_seeds) {
            std::cout << "seed point: (";
            for (std::size_t d = 0; d < p.size(); ++d)
                std::cout << (d ? ", " : "") << fmt6(p[d]);
            std::cout << ")\n";
        }
        if (count > 0) {
            std::cout << points.size() << " materialized points:\n";
            for (const Point& p : points) {
                std::cout << "  (";
                for (std::size_t d = 0; d < p.size(); ++d)
                    std::cout << (d ? ", " : "") << fmt6(p[d]);
                std::cout << ")\n";
            }
        }
    }
    return 0;
}

int cmd_run(const std::string& bench_name,
            const std::string& strategies_text, int runs, double epsilon,
            std::uint64_t master_seed, const std::string& format,
            const std::string& out_path, bool trace, int workers,
            const DEConfig& de_config) {
    auto id = parse_benchmark(bench_name);
    if (!id) {
        std::cerr << "error: unknown benchmark '" << bench_name
                  << "' (valid: " << valid_benchmark_names() << ")\n";
        return kExitUsage;
    }
    if (epsilon < 0.0) {
        std::cerr << "error: epsilon must be >= 0\n";
        return kExitUsage;
    }

    ExperimentSpec spec;
    spec.benchmark = *id;
    spec.runs = runs;
    spec.epsilon.value = epsilon;
    spec.master_seed = master_seed;
    spec.de_config = de_config;
    spec.workers = workers;

    std::stringstream ss(strategies_text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        auto strategy = parse_strategy(token);
        if (!strategy) {
            std::cerr << "error: invalid strategy '" << token
                      << "' (expected random, selected, or semi:<fraction> "
                         "with fraction in [0,1])\n";
            return kExitUsage;
        }
        spec.strategies.push_back(*strategy);
    }
    if (spec.strategies.empty()) {
        std::cerr << "error: at least one strategy is required\n";
        return kExitUsage;
    }

    const ExperimentReport report = run_experiment(spec);

    if (!out_path.empty()) {
        const std::string content = format == "csv"
                                        ? report_to_csv(report)
                                        : report_to_json(report).dump(2) + "\n";
        if (int rc = write_file(out_path, content)) return rc;
    }
    if (trace) {
        const std::string trace_path =
            (out_path.empty() ? std::string("trace") : out_path) +
            ".trace.csv";
        if (int rc = write_file(trace_path, traces_to_csv(report))) return rc;
    }

    if (format == "json" && out_path.empty()) {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else if (format == "csv" && out_path.empty()) {
        std::cout << report_to_csv(report);
    } else {
        std::printf("%-14s %12s %12s\n", "strategy", "mean_nfc",
                    "success_rate");
        for (const TableRow& row : compare_table(report)) {
            std::printf("%-14s %12s %12s\n", row.strategy.c_str(),
                        row.mean_nfc.c_str(), row.success_rate.c_str());
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perturbation-seeded population initialization for "
                 "Differential Evolution"};
    app.require_subcommand(1);

    std::string format = "table";

    auto* list = app.add_subcommand("list", "List the benchmark functions");
    list->add_option("--format", format, "table, csv, or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    std::string bench_name;
    double epsilon = 0.0;
    int count = 0;
    std::uint64_t rng_seed = 0;

    auto* seed = app.add_subcommand(
        "seed", "Print the analytic seed pool of a benchmark");
    seed->add_option("benchmark", bench_name, "benchmark name")->required();
    seed->add_option("--epsilon", epsilon, "perturbation magnitude");
    seed->add_option("--count", count, "materialize this many points");
    seed->add_option("--rng-seed", rng_seed, "rng seed for materialization");
    seed->add_option("--format", format, "table, csv, or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));

    std::string strategies = "random,selected";
    int runs = 40;
    std::uint64_t master_seed = 0;
    std::string out_path;
    bool trace = false;
    int workers = 0;
    DEConfig de_config;

    auto* run = app.add_subcommand(
        "run", "Run a population-initialization comparison experiment");
    run->add_option("benchmark", bench_name, "benchmark name")->required();
    run->add_option("--strategies", strategies,
                    "comma list of random, selected, semi:<fraction>");
    run->add_option("--runs", runs, "runs per strategy")
        ->check(CLI::PositiveNumber);
    run->add_option("--epsilon", epsilon, "perturbation magnitude");
    run->add_option("--master-seed", master_seed, "experiment master seed");
    run->add_option("--format", format, "table, csv, or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    run->add_option("--out", out_path, "write the report to this path");
    run->add_flag("--trace", trace, "also write per-run convergence traces");
    run->add_option("--workers", workers,
                    "worker threads (0 = number of processors)");
    run->add_option("--popsize", de_config.population_size,
                    "population size")
        ->check(CLI::PositiveNumber);
    run->add_option("--weight-f", de_config.differential_weight,
                    "differential weight F");
    run->add_option("--crossover-cr", de_config.crossover_rate,
                    "crossover rate CR");
    run->add_option("--max-nfc", de_config.max_nfc,
                    "evaluation budget per run");
    run->add_option("--vtr-tol", de_config.vtr_tolerance,
                    "value-to-reach tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (list->parsed()) return cmd_list(format);
        if (seed->parsed())
            return cmd_seed(bench_name, epsilon, count, rng_seed, format);
        return cmd_run(bench_name, strategies, runs, epsilon, master_seed,
                       format, out_path, trace, workers, de_config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
