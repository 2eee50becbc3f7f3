#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seedpop/de.hpp"

namespace seedpop {

struct ExperimentSpec {
    BenchmarkId benchmark = BenchmarkId::Sphere;
    std::vector<InitStrategy> strategies;
    int runs = 40;
    DEConfig de_config;
    Epsilon epsilon;
    std::uint64_t master_seed = 0;
    int workers = 0;  // 0 = hardware concurrency
};

/// NFC statistics over the successful runs of one strategy; all fields
/// except success_rate are empty when no run succeeded.
struct StrategyStats {
    std::optional<double> mean_nfc;
    std::optional<double> median_nfc;
    std::optional<double> stddev_nfc;
    std::optional<std::int64_t> min_nfc;
    std::optional<std::int64_t> max_nfc;
    double success_rate = 0.0;
};

struct StrategyReport {
    InitStrategy strategy;
    StrategyStats stats;
    std::vector<RunResult> run_results;  // ordered by run index
};

struct ExperimentReport {
    ExperimentSpec spec;
    std::vector<StrategyReport> per_strategy;  // ordered as in the spec
};

/// RNG seed for one (strategy, run) cell. Depends only on the master
/// seed, the strategy's canonical name, and the run index, so reports
/// are reproducible and strategies independent of list position.
std::uint64_t run_seed(std::uint64_t master_seed, const InitStrategy& strategy,
                       int run_index);

/// Executes runs x strategies independent DE runs, possibly across
/// worker threads; the report is identical regardless of scheduling.
ExperimentReport run_experiment(const ExperimentSpec& spec);

StrategyStats compute_stats(const std::vector<RunResult>& runs);

struct TableRow {
    std::string strategy;
    std::string mean_nfc;      // integer-formatted, "-" when no success
    std::string success_rate;  // two decimals
};

std::vector<TableRow> compare_table(const ExperimentReport& report);

}  // namespace seedpop
