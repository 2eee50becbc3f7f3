#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seedpop {

using Point = std::vector<double>;

enum class BenchmarkId {
    Sphere,
    AxisParallel,
    Rosenbrock,
    Rastrigin,
    Branin,
    Michalewicz,
    Matyas,
};

struct Bounds {
    double lo;
    double hi;
};

/// Static description of one benchmark: dimension, box bounds, known
/// global minimum value and the minimizer point(s) that attain it.
struct BenchmarkSpec {
    BenchmarkId id;
    std::string name;
    int dimension;
    std::vector<Bounds> bounds;
    double optimum_value;
    std::vector<Point> optimizers;
};

const std::vector<BenchmarkId>& all_benchmarks();
const BenchmarkSpec& get_spec(BenchmarkId id);

std::string to_string(BenchmarkId id);
std::optional<BenchmarkId> parse_benchmark(std::string_view name);

/// Evaluates the objective. Pure; throws std::invalid_argument on a
/// dimension mismatch.
double evaluate(BenchmarkId id, const Point& x);

/// Closed-interval containment test, lo <= x_i <= hi per coordinate.
bool in_bounds(const BenchmarkSpec& spec, const Point& x);

}  // namespace seedpop
