#pragma once

#include <algorithm>

#include "forestconc/simulation.hpp"

namespace forestconc {

constexpr std::uint64_t kStreamGridPilot = 3;

/// Threshold grid hitting prescribed tail levels: empirical quantiles of the
/// centered f from a dedicated pilot stream, forced strictly increasing and
/// positive. Deterministic given the seed.
inline std::vector<double> suggest_threshold_grid(const DependentSampler& sampler,
                                                  const LipschitzVector& c,
                                                  const std::vector<double>& tail_levels,
                                                  std::int64_t pilot_trials,
                                                  std::uint64_t seed) {
    if (pilot_trials < 1000)
        throw std::invalid_argument("suggest_threshold_grid: pilot_trials must be >= 1000");
    std::vector<double> devs(static_cast<std::size_t>(pilot_trials));
    std::vector<double> scratch;
    double sum = 0;
    for (std::int64_t t = 0; t < pilot_trials; ++t) {
        double f = sampler.sample_f(seed, kStreamGridPilot, static_cast<std::uint64_t>(t), c,
                                    scratch);
        devs[static_cast<std::size_t>(t)] = f;
        sum += f;
    }
    const double mu =
        sampler.exact_mean_available() ? sampler.exact_mean(c) : sum / static_cast<double>(pilot_trials);
    for (auto& d : devs) d -= mu;
    std::sort(devs.begin(), devs.end());

    std::vector<double> grid;
    double prev = 0.0;
    for (double level : tail_levels) {
        if (!(level > 0 && level < 1))
            throw std::invalid_argument("suggest_threshold_grid: levels must be in (0,1)");
        auto idx = static_cast<std::size_t>(
            std::min<double>(static_cast<double>(pilot_trials - 1),
                             std::max(0.0, std::ceil((1.0 - level) * static_cast<double>(pilot_trials)) - 1)));
        double t = devs[idx];
        if (t <= prev) {
            // step to the next distinct deviation value, or nudge past it
            auto it = std::upper_bound(devs.begin(), devs.end(), prev);
            t = it != devs.end() ? *it : prev + std::max(1e-9, std::abs(prev)) * 0.05;
        }
        if (t <= prev) t = prev + std::max(1e-9, std::abs(prev)) * 0.05;
        grid.push_back(t);
        prev = t;
    }
    return grid;
}

}  // namespace forestconc
