#include "seedpop/report_io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace seedpop {

namespace {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json optional_to_json(const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
}

json optional_to_json(const std::optional<std::int64_t>& v) {
    return v ? json(*v) : json(nullptr);
}

json stats_to_json(const StrategyStats& s) {
    return json{{"mean_nfc", optional_to_json(s.mean_nfc)},
                {"median_nfc", optional_to_json(s.median_nfc)},
                {"stddev_nfc", optional_to_json(s.stddev_nfc)},
                {"min_nfc", optional_to_json(s.min_nfc)},
                {"max_nfc", optional_to_json(s.max_nfc)},
                {"success_rate", s.success_rate}};
}

StrategyStats stats_from_json(const json& j) {
    StrategyStats s;
    auto opt_double = [&](const char* key) -> std::optional<double> {
        if (j.at(key).is_null()) return std::nullopt;
        return j.at(key).get<double>();
    };
    auto opt_int = [&](const char* key) -> std::optional<std::int64_t> {
        if (j.at(key).is_null()) return std::nullopt;
        return j.at(key).get<std::int64_t>();
    };
    s.mean_nfc = opt_double("mean_nfc");
    s.median_nfc = opt_double("median_nfc");
    s.stddev_nfc = opt_double("stddev_nfc");
    s.min_nfc = opt_int("min_nfc");
    s.max_nfc = opt_int("max_nfc");
    s.success_rate = j.at("success_rate").get<double>();
    return s;
}

}  // namespace

json report_to_json(const ExperimentReport& report) {
    const ExperimentSpec& spec = report.spec;
    json strategies = json::array();
    for (const InitStrategy& s : spec.strategies)
        strategies.push_back(s.name());

    json per_strategy = json::array();
    for (const StrategyReport& sr : report.per_strategy) {
        json runs = json::array();
        for (const RunResult& r : sr.run_results) {
            runs.push_back(json{{"nfc", r.nfc},
                                {"best_value", r.best_value},
                                {"success", r.success}});
        }
        per_strategy.push_back(json{{"name", sr.strategy.name()},
                                    {"stats", stats_to_json(sr.stats)},
                                    {"runs", std::move(runs)}});
    }

    return json{
        {"spec",
         {{"benchmark", to_string(spec.benchmark)},
          {"strategies", std::move(strategies)},
          {"runs", spec.runs},
          {"epsilon", spec.epsilon.value},
          {"master_seed", spec.master_seed},
          {"de_config",
           {{"population_size", spec.de_config.population_size},
            {"differential_weight", spec.de_config.differential_weight},
            {"crossover_rate", spec.de_config.crossover_rate},
            {"max_nfc", spec.de_config.max_nfc},
            {"vtr_tolerance", spec.de_config.vtr_tolerance}}}}},
        {"per_strategy", std::move(per_strategy)}};
}

ExperimentReport report_from_json(const json& j) {
    ExperimentReport report;
    const json& spec = j.at("spec");
    auto bench = parse_benchmark(spec.at("benchmark").get<std::string>());
    if (!bench) throw std::invalid_argument("unknown benchmark in report");
    report.spec.benchmark = *bench;
    for (const auto& name : spec.at("strategies")) {
        auto strategy = parse_strategy(name.get<std::string>());
        if (!strategy)
            throw std::invalid_argument("unknown strategy in report");
        report.spec.strategies.push_back(*strategy);
    }
    report.spec.runs = spec.at("runs").get<int>();
    report.spec.epsilon.value = spec.at("epsilon").get<double>();
    report.spec.master_seed = spec.at("master_seed").get<std::uint64_t>();
    const json& de = spec.at("de_config");
    report.spec.de_config.population_size =
        de.at("population_size").get<int>();
    report.spec.de_config.differential_weight =
        de.at("differential_weight").get<double>();
    report.spec.de_config.crossover_rate =
        de.at("crossover_rate").get<double>();
    report.spec.de_config.max_nfc = de.at("max_nfc").get<std::int64_t>();
    report.spec.de_config.vtr_tolerance =
        de.at("vtr_tolerance").get<double>();

    for (const auto& sj : j.at("per_strategy")) {
        StrategyReport sr;
        auto strategy = parse_strategy(sj.at("name").get<std::string>());
        if (!strategy)
            throw std::invalid_argument("unknown strategy in report");
        sr.strategy = *strategy;
        sr.stats = stats_from_json(sj.at("stats"));
        for (const auto& rj : sj.at("runs")) {
            RunResult r;
            r.nfc = rj.at("nfc").get<std::int64_t>();
            r.best_value = rj.at("best_value").get<double>();
            r.success = rj.at("success").get<bool>();
            sr.run_results.push_back(std::move(r));
        }
        report.per_strategy.push_back(std::move(sr));
    }
    return report;
}

std::string report_to_csv(const ExperimentReport& report) {
    std::string out = "strategy,run_index,nfc,best_value,success\r\n";
    for (const StrategyReport& sr : report.per_strategy) {
        const std::string name = sr.strategy.name();
        for (std::size_t i = 0; i < sr.run_results.size(); ++i) {
            const RunResult& r = sr.run_results[i];
            out += name + "," + std::to_string(i) + "," +
                   std::to_string(r.nfc) + "," + format_double(r.best_value) +
                   "," + (r.success ? "true" : "false") + "\r\n";
        }
    }
    return out;
}

std::vector<CsvRunRow> report_rows_from_csv(const std::string& csv) {
    std::vector<CsvRunRow> rows;
    std::istringstream in(csv);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::istringstream fields(line);
        std::string strategy, run_index, nfc, best_value, success;
        std::getline(fields, strategy, ',');
        std::getline(fields, run_index, ',');
        std::getline(fields, nfc, ',');
        std::getline(fields, best_value, ',');
        std::getline(fields, success, ',');
        rows.push_back(CsvRunRow{strategy, std::stoi(run_index),
                                 std::stoll(nfc), std::stod(best_value),
                                 success == "true"});
    }
    return rows;
}

std::string traces_to_csv(const ExperimentReport& report) {
    std::string out = "strategy,run_index,nfc,best_value\r\n";
    for (const StrategyReport& sr : report.per_strategy) {
        const std::string name = sr.strategy.name();
        for (std::size_t i = 0; i < sr.run_results.size(); ++i) {
            for (const auto& [nfc, best] : sr.run_results[i].trace) {
                out += name + "," + std::to_string(i) + "," +
                       std::to_string(nfc) + "," + format_double(best) +
                       "\r\n";
            }
        }
    }
    return out;
}

json seed_pool_to_json(const SeedPool& pool) {
    json dims = json::array();
    for (const auto& set : pool.per_dimension_candidates) {
        json candidates = json::array();
        for (const Candidate& c : set) {
            candidates.push_back(
                json{{"value", c.value},
                     {"branch", c.branch == CandidateBranch::QuadraticTerm
                                    ? "quadratic"
                                    : "trig"}});
        }
        dims.push_back(std::move(candidates));
    }
    json seeds = json::array();
    for (const Point& p : pool.whole_point_seeds) seeds.push_back(p);
    return json{{"benchmark", to_string(pool.benchmark)},
                {"epsilon", pool.epsilon.value},
                {"per_dimension_candidates", std::move(dims)},
                {"whole_point_seeds", std::move(seeds)}};
}

json benchmark_spec_to_json(const BenchmarkSpec& spec) {
    json bounds = json::array();
    for (const Bounds& b : spec.bounds)
        bounds.push_back(json{{"lo", b.lo}, {"hi", b.hi}});
    json optimizers = json::array();
    for (const Point& p : spec.optimizers) optimizers.push_back(p);
    return json{{"id", spec.name},
                {"dimension", spec.dimension},
                {"bounds", std::move(bounds)},
                {"optimum_value", spec.optimum_value},
                {"optimizers", std::move(optimizers)}};
}

}  // namespace seedpop
