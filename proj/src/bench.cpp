#include "seedpop/bench.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace seedpop {

namespace {

constexpr double kPi = std::numbers::pi;

// Branin constants; reproduce the minimum 0.3979 at (pi, 2.275).
constexpr double kBraninA = 1.0;
const double kBraninB = 5.1 / (4.0 * kPi * kPi);
const double kBraninC = 5.0 / kPi;
constexpr double kBraninD = 6.0;
constexpr double kBraninE = 10.0;
const double kBraninF = 1.0 / (8.0 * kPi);

std::vector<Bounds> uniform_box(int dim, double lo, double hi) {
    return std::vector<Bounds>(static_cast<std::size_t>(dim), Bounds{lo, hi});
}

std::vector<BenchmarkSpec> build_specs() {
    std::vector<BenchmarkSpec> specs;

    specs.push_back({BenchmarkId::Sphere, "sphere", 30,
                     uniform_box(30, -5.12, 5.12), 0.0,
                     {Point(30, 0.0)}});

    specs.push_back({BenchmarkId::AxisParallel, "axis-parallel", 30,
                     uniform_box(30, -5.12, 5.12), 0.0,
                     {Point(30, 0.0)}});

    specs.push_back({BenchmarkId::Rosenbrock, "rosenbrock", 30,
                     uniform_box(30, -2.0, 2.0), 0.0,
                     {Point(30, 1.0)}});

    specs.push_back({BenchmarkId::Rastrigin, "rastrigin", 10,
                     uniform_box(10, -5.12, 5.12), 0.0,
                     {Point(10, 0.0)}});

    specs.push_back({BenchmarkId::Branin, "branin", 2,
                     {Bounds{-5.0, 10.0}, Bounds{0.0, 15.0}},
                     0.39788735772973816,
                     {Point{-kPi, 12.275}, Point{kPi, 2.275},
                      Point{3.0 * kPi, 2.475}}});

    // Minimizer refined per coordinate; the function is a sum of
    // one-dimensional terms so the coordinates are independent.
    specs.push_back({BenchmarkId::Michalewicz, "michalewicz", 5,
                     uniform_box(5, 0.0, kPi), -4.6876581790881495,
                     {Point{2.2029055233132966, 1.5707963240427996,
                            1.2849915705780124, 1.9230584701955176,
                            1.7204697725737934}}});

    specs.push_back({BenchmarkId::Matyas, "matyas", 2,
                     uniform_box(2, -10.0, 10.0), 0.0,
                     {Point{0.0, 0.0}}});

    return specs;
}

const std::vector<BenchmarkSpec>& specs() {
    static const std::vector<BenchmarkSpec> table = build_specs();
    return table;
}

void check_dimension(const BenchmarkSpec& spec, const Point& x) {
    if (static_cast<int>(x.size()) != spec.dimension) {
        throw std::invalid_argument(
            "benchmark '" + spec.name + "' expects dimension " +
            std::to_string(spec.dimension) + ", got " +
            std::to_string(x.size()));
    }
}

}  // namespace

const std::vector<BenchmarkId>& all_benchmarks() {
    static const std::vector<BenchmarkId> ids = {
        BenchmarkId::Sphere,      BenchmarkId::AxisParallel,
        BenchmarkId::Rosenbrock,  BenchmarkId::Rastrigin,
        BenchmarkId::Branin,      BenchmarkId::Michalewicz,
        BenchmarkId::Matyas,
    };
    return ids;
}

const BenchmarkSpec& get_spec(BenchmarkId id) {
    return specs()[static_cast<std::size_t>(id)];
}

std::string to_string(BenchmarkId id) { return get_spec(id).name; }

std::optional<BenchmarkId> parse_benchmark(std::string_view name) {
    for (BenchmarkId id : all_benchmarks()) {
        if (get_spec(id).name == name) return id;
    }
    return std::nullopt;
}

double evaluate(BenchmarkId id, const Point& x) {
    const BenchmarkSpec& spec = get_spec(id);
    check_dimension(spec, x);

    switch (id) {
        case BenchmarkId::Sphere: {
            double sum = 0.0;
            for (double xi : x) sum += xi * xi;
            return sum;
        }
        case BenchmarkId::AxisParallel: {
            double sum = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i)
                sum += static_cast<double>(i + 1) * x[i] * x[i];
            return sum;
        }
        case BenchmarkId::Rosenbrock: {
            double sum = 0.0;
            for (std::size_t i = 0; i + 1 < x.size(); ++i) {
                const double a = x[i + 1] - x[i] * x[i];
                const double b = 1.0 - x[i];
                sum += 100.0 * a * a + b * b;
            }
            return sum;
        }
        case BenchmarkId::Rastrigin: {
            double sum = 100.0;
            for (double xi : x)
                sum += xi * xi - 10.0 * std::cos(2.0 * kPi * xi);
            return sum;
        }
        case BenchmarkId::Branin: {
            const double u = x[1] - kBraninB * x[0] * x[0] +
                             kBraninC * x[0] - kBraninD;
            return kBraninA * u * u +
                   kBraninE * (1.0 - kBraninF) * std::cos(x[0]) + kBraninE;
        }
        case BenchmarkId::Michalewicz: {
            double sum = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                const double inner =
                    std::sin(static_cast<double>(i + 1) * x[i] * x[i] / kPi);
                sum -= std::sin(x[i]) * std::pow(inner, 20.0);
            }
            return sum;
        }
        case BenchmarkId::Matyas:
            return 0.26 * (x[0] * x[0] + x[1] * x[1]) - 0.48 * x[0] * x[1];
    }
    throw std::logic_error("unknown benchmark id");
}

bool in_bounds(const BenchmarkSpec& spec, const Point& x) {
    check_dimension(spec, x);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < spec.bounds[i].lo || x[i] > spec.bounds[i].hi) return false;
    }
    return true;
}

}  // namespace seedpop
