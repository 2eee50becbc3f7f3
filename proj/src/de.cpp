#include "seedpop/de.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace seedpop {

double counted_evaluate(BenchmarkId id, const Point& x, EvalCounter& counter) {
    counter.count += 1;
    return evaluate(id, x);
}

RunResult run_de(BenchmarkId id, const Population& initial,
                 const DEConfig& config, std::mt19937_64& rng,
                 const EvalObserver& observer) {
    const BenchmarkSpec& spec = get_spec(id);
    const int n = config.population_size;

    if (static_cast<int>(initial.members.size()) != n)
        throw std::invalid_argument(
            "initial population size " +
            std::to_string(initial.members.size()) +
            " does not match config.population_size " + std::to_string(n));
    if (n < 4)
        throw std::invalid_argument(
            "population_size must be >= 4 (mutation needs three distinct "
            "non-target members)");
    if (config.max_nfc < n)
        throw std::invalid_argument("max_nfc must cover the initial "
                                    "population evaluation");
    for (const Point& p : initial.members)
        if (!in_bounds(spec, p))
            throw std::invalid_argument("initial population member out of "
                                        "bounds");

    EvalCounter counter;
    auto eval = [&](const Point& x) {
        const double v = counted_evaluate(id, x, counter);
        if (observer) observer(x, v);
        return v;
    };

    const double vtr_limit = spec.optimum_value + config.vtr_tolerance;

    std::vector<Point> pop = initial.members;
    std::vector<double> values(static_cast<std::size_t>(n));

    RunResult result;
    result.best_value = std::numeric_limits<double>::infinity();

    auto note_best = [&](const Point& p, double v) {
        if (v < result.best_value) {
            result.best_value = v;
            result.best_point = p;
        }
    };

    for (int i = 0; i < n; ++i) {
        values[static_cast<std::size_t>(i)] = eval(pop[static_cast<std::size_t>(i)]);
        note_best(pop[static_cast<std::size_t>(i)],
                  values[static_cast<std::size_t>(i)]);
    }
    result.trace.emplace_back(counter.count, result.best_value);
    if (result.best_value <= vtr_limit) {
        result.nfc = counter.count;
        result.success = true;
        return result;
    }

    const int dim = spec.dimension;
    std::uniform_int_distribution<int> pick_member(0, n - 1);
    std::uniform_int_distribution<int> pick_coord(0, dim - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    Point trial(static_cast<std::size_t>(dim));
    for (;;) {
        for (int i = 0; i < n; ++i) {
            if (counter.count + 1 > config.max_nfc) {
                result.nfc = counter.count;
                result.success = false;
                result.trace.emplace_back(counter.count, result.best_value);
                return result;
            }

            int r1, r2, r3;
            do r1 = pick_member(rng); while (r1 == i);
            do r2 = pick_member(rng); while (r2 == i || r2 == r1);
            do r3 = pick_member(rng); while (r3 == i || r3 == r1 || r3 == r2);

            const Point& target = pop[static_cast<std::size_t>(i)];
            const Point& base = pop[static_cast<std::size_t>(r1)];
            const Point& pa = pop[static_cast<std::size_t>(r2)];
            const Point& pb = pop[static_cast<std::size_t>(r3)];

            const int jrand = pick_coord(rng);
            for (int j = 0; j < dim; ++j) {
                const std::size_t sj = static_cast<std::size_t>(j);
                if (unit(rng) < config.crossover_rate || j == jrand) {
                    double v = base[sj] + config.differential_weight *
                                              (pa[sj] - pb[sj]);
                    if (v < spec.bounds[sj].lo || v > spec.bounds[sj].hi) {
                        // bound repair by resampling, not clamping
                        std::uniform_real_distribution<double> u(
                            spec.bounds[sj].lo, spec.bounds[sj].hi);
                        v = u(rng);
                    }
                    trial[sj] = v;
                } else {
                    trial[sj] = target[sj];
                }
            }

            const double tv = eval(trial);
            if (tv <= values[static_cast<std::size_t>(i)]) {
                pop[static_cast<std::size_t>(i)] = trial;
                values[static_cast<std::size_t>(i)] = tv;
                note_best(trial, tv);
            }
            if (result.best_value <= vtr_limit) {
                result.nfc = counter.count;
                result.success = true;
                result.trace.emplace_back(counter.count, result.best_value);
                return result;
            }
        }
        result.trace.emplace_back(counter.count, result.best_value);
    }
}

}  // namespace seedpop
