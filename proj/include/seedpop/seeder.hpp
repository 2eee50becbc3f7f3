#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "seedpop/bench.hpp"

namespace seedpop {

/// Perturbation magnitude for the invariance equation F(x) = F(x + eps).
/// Analytic seed formulas accept eps >= 0; the numeric root scan
/// requires eps > 0 (at eps = 0 the equation is satisfied everywhere).
struct Epsilon {
    double value = 0.0;
};

enum class CandidateBranch { QuadraticTerm, TrigTerm };

struct Candidate {
    double value;
    CandidateBranch branch;
};

/// Seed candidates for one benchmark: either per-coordinate candidate
/// sets (dimension-separable objectives) or whole points (coupled
/// coordinates). Out-of-bounds solutions are dropped, never clamped.
struct SeedPool {
    BenchmarkId benchmark;
    Epsilon epsilon;
    std::vector<std::vector<Candidate>> per_dimension_candidates;
    std::vector<Point> whole_point_seeds;

    bool empty() const {
        return whole_point_seeds.empty() && per_dimension_candidates.empty();
    }
};

/// Closed-form solutions of the perturbation-invariance equation for
/// each benchmark, enumerating every integer branch that lands inside
/// the bounds. Deterministic; no randomness involved.
SeedPool analytic_seed_pool(BenchmarkId id, Epsilon eps);

struct RootScan {
    std::vector<double> roots;   // sorted ascending
    std::vector<std::string> warnings;
};

/// Finds all roots of g(x) = f(x + eps) - f(x) on [lo, hi] by scanning
/// a uniform grid for sign changes and bisecting each bracket down to
/// 1e-12. Roots are deduplicated at 1e-8 and filtered by the residual
/// test |g(r)| <= 1e-9 * (1 + |f(r)|).
RootScan numeric_perturbation_roots(const std::function<double(double)>& f,
                                    double lo, double hi, Epsilon eps,
                                    int grid_points = 10001);

/// Expands a pool into exactly `count` in-bounds points: whole-point
/// seeds first, then the per-dimension combinations (full Cartesian
/// product when it fits, otherwise the lexicographically first
/// combination followed by uniform per-coordinate draws), and finally
/// jittered copies of earlier seeds to fill remaining slots.
std::vector<Point> materialize(const SeedPool& pool, int count,
                               std::mt19937_64& rng);

}  // namespace seedpop
