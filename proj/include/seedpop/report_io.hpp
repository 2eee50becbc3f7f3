#pragma once

#include <string>

#include <json.hpp>

#include "seedpop/harness.hpp"

namespace seedpop {

/// Full report: experiment settings, per-strategy statistics, and the
/// per-run (nfc, best_value, success) triples. Traces are not included
/// here; they go to a separate trace file.
nlohmann::json report_to_json(const ExperimentReport& report);

/// Inverse of report_to_json for the run values and statistics.
/// Best points and traces are not round-tripped.
ExperimentReport report_from_json(const nlohmann::json& j);

/// RFC-4180-style CSV, header "strategy,run_index,nfc,best_value,success".
std::string report_to_csv(const ExperimentReport& report);

struct CsvRunRow {
    std::string strategy;
    int run_index;
    std::int64_t nfc;
    double best_value;
    bool success;
};

std::vector<CsvRunRow> report_rows_from_csv(const std::string& csv);

/// Per-run convergence traces, "strategy,run_index,nfc,best_value" rows.
std::string traces_to_csv(const ExperimentReport& report);

nlohmann::json seed_pool_to_json(const SeedPool& pool);
nlohmann::json benchmark_spec_to_json(const BenchmarkSpec& spec);

}  // namespace seedpop
