#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "seedpop/popinit.hpp"

namespace seedpop {

struct DEConfig {
    int population_size = 100;
    double differential_weight = 0.5;  // F
    double crossover_rate = 0.9;       // CR
    std::int64_t max_nfc = 1'000'000;
    double vtr_tolerance = 1e-6;
};

/// Counts objective evaluations. Every evaluation inside the engine
/// flows through counted_evaluate; there is no uncounted path.
struct EvalCounter {
    std::int64_t count = 0;
};

double counted_evaluate(BenchmarkId id, const Point& x, EvalCounter& counter);

struct RunResult {
    std::int64_t nfc = 0;
    double best_value = 0.0;
    Point best_point;
    bool success = false;
    // (nfc, best_value) at init, each generation boundary, and the
    // stopping point.
    std::vector<std::pair<std::int64_t, double>> trace;
};

/// Invoked once per objective evaluation; used by tests as a shadow
/// counter.
using EvalObserver = std::function<void(const Point&, double)>;

/// DE/rand/1/bin with greedy selection and value-to-reach stopping.
/// Stops as soon as the best value is within vtr_tolerance of the
/// benchmark optimum (checked after every evaluation, including the
/// initial ones) or when the next evaluation would exceed max_nfc.
RunResult run_de(BenchmarkId id, const Population& initial,
                 const DEConfig& config, std::mt19937_64& rng,
                 const EvalObserver& observer = {});

}  // namespace seedpop
