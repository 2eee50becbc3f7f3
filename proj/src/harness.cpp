#include "seedpop/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace seedpop {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

std::uint64_t run_seed(std::uint64_t master_seed, const InitStrategy& strategy,
                       int run_index) {
    std::uint64_t s = splitmix64(master_seed);
    s ^= splitmix64(fnv1a(strategy.name()));
    s ^= splitmix64(static_cast<std::uint64_t>(run_index) + 0x51ed2701ULL);
    return splitmix64(s);
}

StrategyStats compute_stats(const std::vector<RunResult>& runs) {
    StrategyStats stats;
    std::vector<double> nfc;
    for (const RunResult& r : runs)
        if (r.success) nfc.push_back(static_cast<double>(r.nfc));
    stats.success_rate =
        runs.empty() ? 0.0
                     : static_cast<double>(nfc.size()) /
                           static_cast<double>(runs.size());
    if (nfc.empty()) return stats;

    std::sort(nfc.begin(), nfc.end());
    const std::size_t n = nfc.size();
    double sum = 0.0;
    for (double v : nfc) sum += v;
    const double mean = sum / static_cast<double>(n);
    double sq = 0.0;
    for (double v : nfc) sq += (v - mean) * (v - mean);

    stats.mean_nfc = mean;
    stats.median_nfc = (n % 2 == 1)
                           ? nfc[n / 2]
                           : 0.5 * (nfc[n / 2 - 1] + nfc[n / 2]);
    stats.stddev_nfc = std::sqrt(sq / static_cast<double>(n));
    stats.min_nfc = static_cast<std::int64_t>(nfc.front());
    stats.max_nfc = static_cast<std::int64_t>(nfc.back());
    return stats;
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
    if (spec.runs < 1) throw std::invalid_argument("runs must be >= 1");
    if (spec.strategies.empty())
        throw std::invalid_argument("at least one strategy is required");

    const std::size_t n_strategies = spec.strategies.size();
    const std::size_t total =
        n_strategies * static_cast<std::size_t>(spec.runs);

    std::vector<RunResult> results(total);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> completed{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto worker = [&] {
        for (;;) {
            const std::size_t task = next.fetch_add(1);
            if (task >= total) return;
            {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (first_error) return;
            }
            const std::size_t si = task / static_cast<std::size_t>(spec.runs);
            const int run = static_cast<int>(
                task % static_cast<std::size_t>(spec.runs));
            const InitStrategy& strategy = spec.strategies[si];
            try {
                std::mt19937_64 rng(
                    run_seed(spec.master_seed, strategy, run));
                Population pop = init_population(
                    strategy, spec.benchmark, spec.de_config.population_size,
                    spec.epsilon, rng);
                results[task] =
                    run_de(spec.benchmark, pop, spec.de_config, rng);
                completed.fetch_add(1);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    int workers = spec.workers > 0
                      ? spec.workers
                      : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min<int>(workers, static_cast<int>(total));

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
        for (std::thread& t : threads) t.join();
    }

    if (first_error) {
        try {
            std::rethrow_exception(first_error);
        } catch (const std::exception& e) {
            throw std::runtime_error(
                "experiment aborted after " +
                std::to_string(completed.load()) + "/" +
                std::to_string(total) + " runs: " + e.what());
        }
    }

    ExperimentReport report;
    report.spec = spec;
    report.per_strategy.reserve(n_strategies);
    for (std::size_t si = 0; si < n_strategies; ++si) {
        StrategyReport sr;
        sr.strategy = spec.strategies[si];
        const std::size_t begin = si * static_cast<std::size_t>(spec.runs);
        sr.run_results.assign(
            results.begin() + static_cast<std::ptrdiff_t>(begin),
            results.begin() +
                static_cast<std::ptrdiff_t>(begin + spec.runs));
        sr.stats = compute_stats(sr.run_results);
        report.per_strategy.push_back(std::move(sr));
    }
    return report;
}

std::vector<TableRow> compare_table(const ExperimentReport& report) {
    std::vector<TableRow> rows;
    rows.reserve(report.per_strategy.size());
    for (const StrategyReport& sr : report.per_strategy) {
        TableRow row;
        row.strategy = sr.strategy.name();
        if (sr.stats.mean_nfc) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%lld",
                          static_cast<long long>(
                              std::llround(*sr.stats.mean_nfc)));
            row.mean_nfc = buf;
        } else {
            row.mean_nfc = "-";
        }
        char rate[16];
        std::snprintf(rate, sizeof(rate), "%.2f", sr.stats.success_rate);
        row.success_rate = rate;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace seedpop
