#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <numbers>
#include <random>

#include <doctest.h>

#include "seedpop/seeder.hpp"

using namespace seedpop;

namespace {

constexpr double kPi = std::numbers::pi;

// Test-side oracle: fine-grid sign-change scan of g(x) = f(x+e) - f(x),
// refined by plain interval halving. Independent of the implementation.
std::vector<double> brute_force_roots(const std::function<double(double)>& f,
                                      double lo, double hi, double e,
                                      long grid) {
    auto g = [&](double x) { return f(x + e) - f(x); };
    std::vector<double> roots;
    const double h = (hi - lo) / static_cast<double>(grid - 1);
    double prev = g(lo);
    for (long i = 1; i < grid; ++i) {
        const double x = lo + h * static_cast<double>(i);
        const double cur = g(x);
        if (prev == 0.0) roots.push_back(x - h);
        if (prev * cur < 0.0) {
            double a = x - h, b = x, ga = prev;
            for (int it = 0; it < 200 && b - a > 1e-14; ++it) {
                const double m = 0.5 * (a + b);
                const double gm = g(m);
                if ((gm < 0.0) == (ga < 0.0)) {
                    a = m;
                    ga = gm;
                } else {
                    b = m;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        prev = cur;
    }
    return roots;
}

std::size_t count_branch(const std::vector<Candidate>& set,
                         CandidateBranch branch) {
    return static_cast<std::size_t>(
        std::count_if(set.begin(), set.end(), [&](const Candidate& c) {
            return c.branch == branch;
        }));
}

}  // namespace

TEST_CASE("sphere and axis-parallel pools") {
    for (BenchmarkId id : {BenchmarkId::Sphere, BenchmarkId::AxisParallel}) {
        SeedPool pool = analytic_seed_pool(id, Epsilon{0.2});
        REQUIRE(pool.per_dimension_candidates.size() == 30);
        for (const auto& set : pool.per_dimension_candidates) {
            REQUIRE(set.size() == 1);
            CHECK(set[0].value == doctest::Approx(0.1).epsilon(1e-15));
            CHECK(set[0].branch == CandidateBranch::QuadraticTerm);
        }

        pool = analytic_seed_pool(id, Epsilon{0.0});
        for (const auto& set : pool.per_dimension_candidates) {
            REQUIRE(set.size() == 1);
            CHECK(set[0].value == 0.0);
        }
    }
}

TEST_CASE("rastrigin pool enumerates the cosine family") {
    const SeedPool pool =
        analytic_seed_pool(BenchmarkId::Rastrigin, Epsilon{0.0});
    REQUIRE(pool.per_dimension_candidates.size() == 10);
    for (const auto& set : pool.per_dimension_candidates) {
        // {0} quadratic plus k/4 for k in [-20, 20].
        CHECK(set.size() == 42);
        CHECK(count_branch(set, CandidateBranch::QuadraticTerm) == 1);
        CHECK(count_branch(set, CandidateBranch::TrigTerm) == 41);
        CHECK(set[0].branch == CandidateBranch::QuadraticTerm);
        CHECK(set[0].value == 0.0);
        for (const Candidate& c : set) {
            CHECK(c.value >= -5.12);
            CHECK(c.value <= 5.12);
            if (c.branch == CandidateBranch::TrigTerm) {
                const double k = c.value * 4.0;
                CHECK(std::abs(k - std::round(k)) <= 1e-9);
            }
        }
    }
}

TEST_CASE("michalewicz pool keeps only pi/2") {
    const SeedPool pool =
        analytic_seed_pool(BenchmarkId::Michalewicz, Epsilon{0.0});
    REQUIRE(pool.per_dimension_candidates.size() == 5);
    for (const auto& set : pool.per_dimension_candidates) {
        REQUIRE(set.size() == 1);
        CHECK(set[0].value == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    }
}

TEST_CASE("matyas pool") {
    SeedPool pool = analytic_seed_pool(BenchmarkId::Matyas, Epsilon{0.0});
    REQUIRE(pool.whole_point_seeds.size() == 1);
    CHECK(pool.whole_point_seeds[0] == Point{0.0, 0.0});

    pool = analytic_seed_pool(BenchmarkId::Matyas, Epsilon{0.2});
    REQUIRE(pool.whole_point_seeds.size() == 1);
    CHECK(pool.whole_point_seeds[0][1] == doctest::Approx(0.1));
    CHECK(pool.whole_point_seeds[0][0] ==
          doctest::Approx((0.26 * 0.2 - 0.48 * 0.1) / 0.52));
}

TEST_CASE("rosenbrock pool is the all-ones point for any epsilon") {
    for (double e : {0.0, 1e-6, 0.5}) {
        const SeedPool pool =
            analytic_seed_pool(BenchmarkId::Rosenbrock, Epsilon{e});
        REQUIRE(pool.whole_point_seeds.size() == 1);
        CHECK(pool.whole_point_seeds[0] == Point(30, 1.0));
    }
}

TEST_CASE("branin pool hits the known minima") {
    const SeedPool pool =
        analytic_seed_pool(BenchmarkId::Branin, Epsilon{0.0});
    REQUIRE(pool.whole_point_seeds.size() == 5);
    std::vector<double> x1s;
    int optimal = 0;
    for (const Point& p : pool.whole_point_seeds) {
        x1s.push_back(p[0]);
        CHECK(in_bounds(get_spec(BenchmarkId::Branin), p));
        if (std::abs(evaluate(BenchmarkId::Branin, p) - 0.3979) <= 1e-4)
            ++optimal;
    }
    std::sort(x1s.begin(), x1s.end());
    const double expected[] = {-kPi, 0.0, kPi, 2.0 * kPi, 3.0 * kPi};
    for (int i = 0; i < 5; ++i)
        CHECK(x1s[static_cast<std::size_t>(i)] ==
              doctest::Approx(expected[i]).epsilon(1e-12));
    CHECK(optimal == 3);  // x1 = -pi, pi, 3pi
}

TEST_CASE("optimum hitting at epsilon zero") {
    std::mt19937_64 rng(3);
    const BenchmarkId exact[] = {BenchmarkId::Sphere, BenchmarkId::AxisParallel,
                                 BenchmarkId::Rastrigin,
                                 BenchmarkId::Rosenbrock, BenchmarkId::Matyas};
    for (BenchmarkId id : exact) {
        const SeedPool pool = analytic_seed_pool(id, Epsilon{0.0});
        const auto points = materialize(pool, 20, rng);
        double best = 1e300;
        for (const Point& p : points) best = std::min(best, evaluate(id, p));
        CHECK(std::abs(best - get_spec(id).optimum_value) <= 1e-12);
    }
}

TEST_CASE("numeric roots of a quadratic term") {
    const double e = 1e-6;
    const RootScan scan = numeric_perturbation_roots(
        [](double x) { return x * x; }, -5.12, 5.12, Epsilon{e});
    REQUIRE(scan.roots.size() == 1);
    CHECK(std::abs(scan.roots[0] - (-e / 2.0)) <= 1e-9);
}

TEST_CASE("numeric roots of a cosine term match a brute-force scan") {
    const double e = 1e-3;
    auto f = [](double x) { return std::cos(2.0 * kPi * x); };
    const RootScan scan =
        numeric_perturbation_roots(f, -1.0, 1.0, Epsilon{e});
    REQUIRE(!scan.roots.empty());
    for (double r : scan.roots) {
        CHECK(std::abs(f(r + e) - f(r)) <= 1e-9);
        // every root sits where sin(2*pi*x + pi*e) vanishes
        CHECK(std::abs(std::sin(2.0 * kPi * r + kPi * e)) <= 1e-6);
    }
    const auto oracle = brute_force_roots(f, -1.0, 1.0, e, 1000000);
    REQUIRE(scan.roots.size() == oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i)
        CHECK(std::abs(scan.roots[i] - oracle[i]) <= 1e-6);
}

TEST_CASE("numeric scan degenerate cases") {
    const RootScan scan = numeric_perturbation_roots(
        [](double) { return 3.0; }, -1.0, 1.0, Epsilon{1e-3});
    CHECK(scan.roots.empty());
    CHECK(!scan.warnings.empty());

    CHECK_THROWS_AS(numeric_perturbation_roots([](double x) { return x; },
                                               -1.0, 1.0, Epsilon{0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(numeric_perturbation_roots([](double x) { return x; },
                                               -1.0, 1.0, Epsilon{1e-3}, 1),
                    std::invalid_argument);
}

TEST_CASE("non-finite brackets are skipped with a warning") {
    auto f = [](double x) { return 1.0 / x; };  // pole at 0
    const RootScan scan =
        numeric_perturbation_roots(f, -1.0, 1.0, Epsilon{1e-3}, 101);
    CHECK(!scan.warnings.empty());
    for (double r : scan.roots)
        CHECK(std::abs(f(r + 1e-3) - f(r)) <= 1e-9 * (1.0 + std::abs(f(r))));
}

TEST_CASE("numeric solver shadows the analytic quadratic candidates") {
    // Solving f(x+e) = f(x) lands at -e/2 where the printed analytic
    // form (which perturbs as x - e) gives +e/2; the shift is exactly e.
    const double e = 1e-6;
    struct Case {
        BenchmarkId id;
        std::function<double(double)> term;
    };
    const Case cases[] = {
        {BenchmarkId::Sphere, [](double x) { return x * x; }},
        {BenchmarkId::AxisParallel, [](double x) { return 7.0 * x * x; }},
        {BenchmarkId::Rastrigin, [](double x) { return x * x; }},
    };
    for (const auto& c : cases) {
        const BenchmarkSpec& spec = get_spec(c.id);
        const SeedPool pool = analytic_seed_pool(c.id, Epsilon{e});
        const RootScan scan = numeric_perturbation_roots(
            c.term, spec.bounds[0].lo, spec.bounds[0].hi, Epsilon{e});
        for (const Candidate& cand : pool.per_dimension_candidates[0]) {
            if (cand.branch != CandidateBranch::QuadraticTerm) continue;
            bool found = false;
            for (double r : scan.roots)
                if (std::abs(r - (cand.value - e)) <= 1e-6) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("materialize fill policies") {
    std::mt19937_64 rng(42);

    SUBCASE("single candidate pool pads with jitter") {
        const SeedPool pool =
            analytic_seed_pool(BenchmarkId::Sphere, Epsilon{0.0});
        const auto points = materialize(pool, 100, rng);
        REQUIRE(points.size() == 100);
        CHECK(points[0] == Point(30, 0.0));
        const BenchmarkSpec& spec = get_spec(BenchmarkId::Sphere);
        for (const Point& p : points) {
            CHECK(in_bounds(spec, p));
            for (double v : p) CHECK(std::abs(v) < 0.1);  // jitter is tight
        }
    }

    SUBCASE("large candidate sets sample per coordinate") {
        const SeedPool pool =
            analytic_seed_pool(BenchmarkId::Rastrigin, Epsilon{0.0});
        const auto points = materialize(pool, 100, rng);
        REQUIRE(points.size() == 100);
        CHECK(points[0] == Point(10, 0.0));
        for (const Point& p : points) {
            for (double v : p) {
                const double k = v * 4.0;
                CHECK(std::abs(k - std::round(k)) <= 1e-9);
            }
        }
    }

    SUBCASE("whole point seed plus jittered copies") {
        const SeedPool pool =
            analytic_seed_pool(BenchmarkId::Matyas, Epsilon{0.0});
        const auto points = materialize(pool, 5, rng);
        REQUIRE(points.size() == 5);
        CHECK(points[0] == Point{0.0, 0.0});
        for (std::size_t i = 1; i < points.size(); ++i) {
            CHECK(points[i] != points[0]);
            CHECK(in_bounds(get_spec(BenchmarkId::Matyas), points[i]));
        }
    }

    SUBCASE("small cartesian products are enumerated in full") {
        SeedPool pool{BenchmarkId::Matyas, Epsilon{0.0}, {}, {}};
        pool.per_dimension_candidates = {
            {{-1.0, CandidateBranch::QuadraticTerm},
             {1.0, CandidateBranch::QuadraticTerm}},
            {{-2.0, CandidateBranch::QuadraticTerm},
             {2.0, CandidateBranch::QuadraticTerm}}};
        const auto points = materialize(pool, 10, rng);
        REQUIRE(points.size() == 10);
        CHECK(points[0] == Point{-1.0, -2.0});
        CHECK(points[1] == Point{-1.0, 2.0});
        CHECK(points[2] == Point{1.0, -2.0});
        CHECK(points[3] == Point{1.0, 2.0});
    }

    SUBCASE("determinism under the rng seed") {
        const SeedPool pool =
            analytic_seed_pool(BenchmarkId::Rastrigin, Epsilon{0.0});
        std::mt19937_64 a(9), b(9);
        CHECK(materialize(pool, 50, a) == materialize(pool, 50, b));
    }

    SUBCASE("empty pool is rejected") {
        SeedPool pool{BenchmarkId::Matyas, Epsilon{0.0}, {}, {}};
        CHECK_THROWS_AS(materialize(pool, 5, rng), std::invalid_argument);
    }
}
