#include "seedpop/seeder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace seedpop {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDedupTol = 1e-8;

// Same constants as the objective in bench.cpp.
const double kBraninB = 5.1 / (4.0 * kPi * kPi);
const double kBraninC = 5.0 / kPi;
constexpr double kBraninD = 6.0;

bool contains_close(const std::vector<Candidate>& set, double v,
                    CandidateBranch branch) {
    for (const Candidate& c : set) {
        if (c.branch == branch && std::abs(c.value - v) <= kDedupTol)
            return true;
    }
    return false;
}

void add_candidate(std::vector<Candidate>& set, double v, Bounds b,
                   CandidateBranch branch) {
    if (v < b.lo || v > b.hi) return;  // dropped, not clamped
    if (!contains_close(set, v, branch)) set.push_back({v, branch});
}

/// Enumerates v(k) = base + k * step for every integer k with v inside
/// the closed bounds. step > 0.
void add_integer_family(std::vector<Candidate>& set, double base, double step,
                        Bounds b, CandidateBranch branch) {
    const long kmin = static_cast<long>(std::ceil((b.lo - base) / step));
    const long kmax = static_cast<long>(std::floor((b.hi - base) / step));
    for (long k = kmin; k <= kmax; ++k)
        add_candidate(set, base + static_cast<double>(k) * step, b, branch);
}

// Quadratic-branch candidates first, then trig, each ascending.
// Keeps the lexicographically smallest all-quadratic combination at
// the front of every Cartesian enumeration.
void sort_candidates(std::vector<Candidate>& set) {
    std::stable_sort(set.begin(), set.end(),
                     [](const Candidate& a, const Candidate& b) {
                         if (a.branch != b.branch)
                             return a.branch == CandidateBranch::QuadraticTerm;
                         return a.value < b.value;
                     });
}

}  // namespace

SeedPool analytic_seed_pool(BenchmarkId id, Epsilon eps) {
    const BenchmarkSpec& spec = get_spec(id);
    const double e = eps.value;
    SeedPool pool{id, eps, {}, {}};

    switch (id) {
        case BenchmarkId::Sphere:
        case BenchmarkId::AxisParallel: {
            // x_i = eps/2 per coordinate.
            pool.per_dimension_candidates.resize(spec.dimension);
            for (int i = 0; i < spec.dimension; ++i)
                add_candidate(pool.per_dimension_candidates[i], e / 2.0,
                              spec.bounds[i], CandidateBranch::QuadraticTerm);
            break;
        }
        case BenchmarkId::Rastrigin: {
            // Quadratic term: x_i = eps/2.
            // Cosine term: x_i = (k*pi + eps) / (4*pi), k over all integers.
            pool.per_dimension_candidates.resize(spec.dimension);
            for (int i = 0; i < spec.dimension; ++i) {
                auto& set = pool.per_dimension_candidates[i];
                add_candidate(set, e / 2.0, spec.bounds[i],
                              CandidateBranch::QuadraticTerm);
                add_integer_family(set, e / (4.0 * kPi), 0.25, spec.bounds[i],
                                   CandidateBranch::TrigTerm);
                sort_candidates(set);
            }
            break;
        }
        case BenchmarkId::Michalewicz: {
            // x_i = k*pi +/- pi/2 + eps/2, i.e. odd multiples of pi/2
            // shifted by eps/2.
            pool.per_dimension_candidates.resize(spec.dimension);
            for (int i = 0; i < spec.dimension; ++i) {
                add_integer_family(pool.per_dimension_candidates[i],
                                   kPi / 2.0 + e / 2.0, kPi, spec.bounds[i],
                                   CandidateBranch::TrigTerm);
            }
            break;
        }
        case BenchmarkId::Rosenbrock: {
            // The chained per-coordinate constraint degenerates to the
            // all-ones point at eps = 0 and has no real solution
            // otherwise; the seed is the all-ones point for every eps.
            Point ones(spec.dimension, 1.0);
            if (in_bounds(spec, ones))
                pool.whole_point_seeds.push_back(std::move(ones));
            break;
        }
        case BenchmarkId::Branin: {
            // Cosine branch fixes x1 = k*pi + eps/2; the quadratic
            // branch then forces x2 = b*x1^2 - c*x1 + d + eps/2.
            const Bounds bx1 = spec.bounds[0];
            const Bounds bx2 = spec.bounds[1];
            const double base = e / 2.0;
            const long kmin = static_cast<long>(std::ceil((bx1.lo - base) / kPi));
            const long kmax = static_cast<long>(std::floor((bx1.hi - base) / kPi));
            for (long k = kmin; k <= kmax; ++k) {
                const double x1 = base + static_cast<double>(k) * kPi;
                const double x2 =
                    kBraninB * x1 * x1 - kBraninC * x1 + kBraninD + e / 2.0;
                if (x2 < bx2.lo || x2 > bx2.hi) continue;
                pool.whole_point_seeds.push_back(Point{x1, x2});
            }
            break;
        }
        case BenchmarkId::Matyas: {
            // x2 = eps/2, x1 from the linear relation between the
            // coordinates.
            const double x2 = e / 2.0;
            const double x1 = -(0.48 / 0.52) * x2 + (0.26 / 0.52) * e;
            Point p{x1, x2};
            if (in_bounds(spec, p))
                pool.whole_point_seeds.push_back(std::move(p));
            break;
        }
    }
    return pool;
}

RootScan numeric_perturbation_roots(const std::function<double(double)>& f,
                                    double lo, double hi, Epsilon eps,
                                    int grid_points) {
    if (!(eps.value > 0.0))
        throw std::invalid_argument(
            "numeric_perturbation_roots requires eps > 0 (at eps = 0 every "
            "point solves the equation)");
    if (grid_points < 2)
        throw std::invalid_argument("grid_points must be >= 2");
    if (!(lo < hi)) throw std::invalid_argument("requires lo < hi");

    const double e = eps.value;
    auto g = [&](double x) { return f(x + e) - f(x); };

    RootScan scan;
    const double h = (hi - lo) / static_cast<double>(grid_points - 1);
    std::vector<double> gv(static_cast<std::size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i)
        gv[static_cast<std::size_t>(i)] = g(lo + h * i);

    std::vector<double> roots;
    for (int i = 0; i + 1 < grid_points; ++i) {
        const double xa = lo + h * i;
        const double xb = lo + h * (i + 1);
        double ga = gv[static_cast<std::size_t>(i)];
        double gb = gv[static_cast<std::size_t>(i + 1)];
        if (!std::isfinite(ga) || !std::isfinite(gb)) {
            scan.warnings.push_back("non-finite value in bracket [" +
                                    std::to_string(xa) + ", " +
                                    std::to_string(xb) + "], skipped");
            continue;
        }
        if (ga == 0.0) {
            // exact grid zero; only a root when isolated, so an
            // identically zero g yields nothing
            const double gp =
                i > 0 ? gv[static_cast<std::size_t>(i - 1)] : gb;
            if (gp != 0.0 || gb != 0.0) roots.push_back(xa);
            continue;
        }
        if (i + 2 == grid_points && gb == 0.0 && ga != 0.0)
            roots.push_back(xb);
        if (ga * gb >= 0.0) continue;

        double a = xa, b = xb;
        while (b - a > 1e-12) {
            const double m = 0.5 * (a + b);
            const double gm = g(m);
            if (gm == 0.0) {
                a = b = m;
                break;
            }
            if ((gm < 0.0) == (ga < 0.0)) {
                a = m;
                ga = gm;
            } else {
                b = m;
            }
        }
        roots.push_back(0.5 * (a + b));
    }

    std::sort(roots.begin(), roots.end());
    for (double r : roots) {
        if (!scan.roots.empty() && r - scan.roots.back() <= kDedupTol) continue;
        if (std::abs(g(r)) > 1e-9 * (1.0 + std::abs(f(r)))) continue;
        scan.roots.push_back(r);
    }
    if (scan.roots.empty())
        scan.warnings.push_back(
            "no sign changes found; g(x) = f(x+eps) - f(x) may be "
            "identically zero or root-free on the interval");
    return scan;
}

std::vector<Point> materialize(const SeedPool& pool, int count,
                               std::mt19937_64& rng) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    const BenchmarkSpec& spec = get_spec(pool.benchmark);

    bool has_per_dim = !pool.per_dimension_candidates.empty();
    if (has_per_dim) {
        if (static_cast<int>(pool.per_dimension_candidates.size()) !=
            spec.dimension)
            throw std::invalid_argument(
                "per-dimension candidate sets do not match the benchmark "
                "dimension");
        for (const auto& set : pool.per_dimension_candidates)
            if (set.empty()) has_per_dim = false;
    }
    if (pool.whole_point_seeds.empty() && !has_per_dim)
        throw std::invalid_argument("seed pool is empty for benchmark '" +
                                    spec.name + "'");

    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(count));

    for (const Point& p : pool.whole_point_seeds) {
        if (static_cast<int>(points.size()) == count) break;
        points.push_back(p);
    }

    if (has_per_dim && static_cast<int>(points.size()) < count) {
        const auto& sets = pool.per_dimension_candidates;
        const int remaining = count - static_cast<int>(points.size());

        long product = 1;
        bool fits = true;
        for (const auto& set : sets) {
            product *= static_cast<long>(set.size());
            if (product > remaining) {
                fits = false;
                break;
            }
        }

        auto point_at = [&](const std::vector<std::size_t>& idx) {
            Point p(sets.size());
            for (std::size_t d = 0; d < sets.size(); ++d)
                p[d] = sets[d][idx[d]].value;
            return p;
        };

        std::vector<std::size_t> idx(sets.size(), 0);
        if (fits) {
            // Full Cartesian product in lexicographic order.
            bool done = false;
            while (!done) {
                points.push_back(point_at(idx));
                std::size_t d = sets.size();
                for (;;) {
                    if (d == 0) {
                        done = true;
                        break;
                    }
                    --d;
                    if (++idx[d] < sets[d].size()) break;
                    idx[d] = 0;
                }
            }
        } else {
            // First the lexicographically smallest combination, then
            // independent uniform draws per coordinate.
            points.push_back(point_at(idx));
            while (static_cast<int>(points.size()) < count) {
                for (std::size_t d = 0; d < sets.size(); ++d) {
                    std::uniform_int_distribution<std::size_t> pick(
                        0, sets[d].size() - 1);
                    idx[d] = pick(rng);
                }
                points.push_back(point_at(idx));
            }
        }
    }

    // Jitter-padded copies of earlier seeds; the originals stay exact.
    const std::size_t seed_count = points.size();
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::size_t base = 0;
    while (static_cast<int>(points.size()) < count) {
        Point p = points[base % seed_count];
        for (std::size_t d = 0; d < p.size(); ++d) {
            const Bounds b = spec.bounds[d];
            p[d] += gauss(rng) * 1e-3 * (b.hi - b.lo);
            p[d] = std::clamp(p[d], b.lo, b.hi);
        }
        points.push_back(std::move(p));
        ++base;
    }
    return points;
}

}  // namespace seedpop
