#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "seedpop/bench.hpp"
#include "seedpop/seeder.hpp"

namespace seedpop {

enum class InitKind { Random, Selected, SemiRandom };

/// Initialization strategy. selected_fraction is only consulted for
/// SemiRandom; fraction 0 behaves like Random, fraction 1 like Selected.
struct InitStrategy {
    InitKind kind = InitKind::Random;
    double selected_fraction = 0.5;

    /// Stable name used for seed derivation and reporting:
    /// "random", "selected", or "semi:<fraction>".
    std::string name() const;
};

/// Parses "random", "selected", or "semi:<fraction>" with fraction in
/// [0, 1]. Returns nullopt on anything else.
std::optional<InitStrategy> parse_strategy(std::string_view text);

struct Population {
    BenchmarkId benchmark;
    std::vector<Point> members;
};

/// Builds an initial population of exactly `size` in-bounds points.
/// Random samples coordinate-wise uniformly; Selected materializes the
/// analytic seed pool; SemiRandom places round(fraction * size)
/// selected members first, then random ones.
Population init_population(const InitStrategy& strategy, BenchmarkId id,
                           int size, Epsilon eps, std::mt19937_64& rng);

}  // namespace seedpop
