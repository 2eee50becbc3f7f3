#include "seedpop/popinit.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace seedpop {

std::string InitStrategy::name() const {
    switch (kind) {
        case InitKind::Random:
            return "random";
        case InitKind::Selected:
            return "selected";
        case InitKind::SemiRandom: {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "semi:%.6f", selected_fraction);
            return buf;
        }
    }
    throw std::logic_error("unknown init kind");
}

std::optional<InitStrategy> parse_strategy(std::string_view text) {
    if (text == "random") return InitStrategy{InitKind::Random, 0.5};
    if (text == "selected") return InitStrategy{InitKind::Selected, 0.5};
    if (text.rfind("semi", 0) == 0) {
        double fraction = 0.5;  // default mix when no fraction given
        if (text.size() > 4) {
            if (text[4] != ':') return std::nullopt;
            const std::string_view num = text.substr(5);
            const auto* end = num.data() + num.size();
            auto [ptr, ec] = std::from_chars(num.data(), end, fraction);
            if (ec != std::errc{} || ptr != end) return std::nullopt;
            if (!(fraction >= 0.0 && fraction <= 1.0)) return std::nullopt;
        }
        return InitStrategy{InitKind::SemiRandom, fraction};
    }
    return std::nullopt;
}

namespace {

Point random_point(const BenchmarkSpec& spec, std::mt19937_64& rng) {
    Point p(static_cast<std::size_t>(spec.dimension));
    for (int d = 0; d < spec.dimension; ++d) {
        std::uniform_real_distribution<double> u(spec.bounds[d].lo,
                                                 spec.bounds[d].hi);
        p[static_cast<std::size_t>(d)] = u(rng);
    }
    return p;
}

}  // namespace

Population init_population(const InitStrategy& strategy, BenchmarkId id,
                           int size, Epsilon eps, std::mt19937_64& rng) {
    if (size < 1) throw std::invalid_argument("population size must be >= 1");
    const BenchmarkSpec& spec = get_spec(id);

    int selected_count = 0;
    switch (strategy.kind) {
        case InitKind::Random:
            selected_count = 0;
            break;
        case InitKind::Selected:
            selected_count = size;
            break;
        case InitKind::SemiRandom:
            selected_count = static_cast<int>(
                std::lround(strategy.selected_fraction * size));
            break;
    }

    Population pop{id, {}};
    pop.members.reserve(static_cast<std::size_t>(size));
    if (selected_count > 0) {
        pop.members =
            materialize(analytic_seed_pool(id, eps), selected_count, rng);
    }
    while (static_cast<int>(pop.members.size()) < size)
        pop.members.push_back(random_point(spec, rng));
    return pop;
}

}  // namespace seedpop
