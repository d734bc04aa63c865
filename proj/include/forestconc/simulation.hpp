#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>

#include <boost/math/special_functions/beta.hpp>

#include "forestconc/bounds.hpp"
#include "forestconc/samplers.hpp"

namespace forestconc {

// Stream ids keep the main run, the pilot run and ad-hoc probes on disjoint
// generator families for one seed.
constexpr std::uint64_t kStreamMain = 1;
constexpr std::uint64_t kStreamPilot = 2;

/// Exact one-sided binomial upper confidence bound for the success
/// probability after observing `successes` out of `trials`.
inline double clopper_pearson_upper(std::int64_t successes, std::int64_t trials,
                                    double confidence) {
    if (trials < 1) throw std::invalid_argument("clopper_pearson_upper: trials must be >= 1");
    if (successes < 0 || successes > trials)
        throw std::invalid_argument("clopper_pearson_upper: successes out of range");
    if (!(confidence > 0 && confidence < 1))
        throw std::invalid_argument("clopper_pearson_upper: confidence outside (0,1)");
    if (successes == trials) return 1.0;
    return boost::math::ibeta_inv(static_cast<double>(successes + 1),
                                  static_cast<double>(trials - successes), confidence);
}

/// Empirical tail of f(X) = sum c_i X_i over a fixed threshold grid, with
/// one-sided Clopper-Pearson upper bounds per threshold.
struct TailEstimate {
    std::vector<double> t_grid;
    std::vector<std::int64_t> exceed_counts;
    std::vector<double> frequencies;
    std::vector<double> ci_upper;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    double confidence = 0.99;
    double mean_estimate = 0;   // mean of f over the main run
    double mean_se = 0;
    double centering_mean = 0;  // the mean actually subtracted
    double centering_radius = 0;
    bool exact_mean_used = false;
};

namespace detail {

struct PassTotals {
    std::vector<std::int64_t> counts;
    double sum = 0;
    double sum_sq = 0;
};

// Trials are cut into fixed blocks; each block is accumulated sequentially by
// whichever worker claims it and the block results are reduced in block
// order, so totals do not depend on the worker count.
template <typename TrialFn>
inline PassTotals blocked_pass(std::int64_t trials, int workers, std::size_t grid_size,
                               const std::vector<double>& grid, double mu, TrialFn&& trial_f) {
    constexpr std::int64_t kBlock = 8192;
    const std::int64_t blocks = (trials + kBlock - 1) / kBlock;
    std::vector<std::vector<std::int64_t>> block_counts(
        static_cast<std::size_t>(blocks), std::vector<std::int64_t>(grid_size, 0));
    std::vector<double> block_sum(static_cast<std::size_t>(blocks), 0.0);
    std::vector<double> block_sum_sq(static_cast<std::size_t>(blocks), 0.0);

    auto run_block = [&](std::int64_t b) {
        std::vector<double> scratch;
        const std::int64_t lo = b * kBlock;
        const std::int64_t hi = std::min(trials, lo + kBlock);
        auto& counts = block_counts[static_cast<std::size_t>(b)];
        double sum = 0, sum_sq = 0;
        for (std::int64_t trial = lo; trial < hi; ++trial) {
            double f = trial_f(static_cast<std::uint64_t>(trial), scratch);
            sum += f;
            sum_sq += f * f;
            double dev = f - mu;
            for (std::size_t k = 0; k < grid_size; ++k) {
                if (dev >= grid[k])
                    counts[k]++;
                else
                    break;  // grid is increasing
            }
        }
        block_sum[static_cast<std::size_t>(b)] = sum;
        block_sum_sq[static_cast<std::size_t>(b)] = sum_sq;
    };

    if (workers <= 1 || blocks == 1) {
        for (std::int64_t b = 0; b < blocks; ++b) run_block(b);
    } else {
        std::atomic<std::int64_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::int64_t b = next.fetch_add(1);
                if (b >= blocks) return;
                run_block(b);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    PassTotals tot;
    tot.counts.assign(grid_size, 0);
    for (std::int64_t b = 0; b < blocks; ++b) {
        for (std::size_t k = 0; k < grid_size; ++k)
            tot.counts[k] += block_counts[static_cast<std::size_t>(b)][k];
        tot.sum += block_sum[static_cast<std::size_t>(b)];
        tot.sum_sq += block_sum_sq[static_cast<std::size_t>(b)];
    }
    return tot;
}

}  // namespace detail

/// Monte Carlo tail estimate. Centers by the exact analytic mean when the
/// sampler provides one, otherwise by a pilot run of equal size on a disjoint
/// generator stream whose confidence radius is reported for validation slack.
inline TailEstimate estimate_tail(const DependentSampler& sampler, const LipschitzVector& c,
                                  std::vector<double> t_grid, std::int64_t trials,
                                  std::uint64_t seed, double confidence = 0.99,
                                  int workers = 1) {
    if (trials < 1000) throw std::invalid_argument("estimate_tail: trials must be >= 1000");
    if (t_grid.empty()) throw std::invalid_argument("estimate_tail: empty threshold grid");
    for (std::size_t k = 0; k < t_grid.size(); ++k) {
        if (!(t_grid[k] > 0)) throw std::invalid_argument("estimate_tail: thresholds must be positive");
        if (k > 0 && !(t_grid[k] > t_grid[k - 1]))
            throw std::invalid_argument("estimate_tail: grid must be strictly increasing");
    }
    if (c.size() != sampler.dimension())
        throw std::invalid_argument("estimate_tail: Lipschitz vector length mismatch");
    c.validate();

    TailEstimate est;
    est.t_grid = std::move(t_grid);
    est.trials = trials;
    est.seed = seed;
    est.confidence = confidence;

    auto trial_f = [&](std::uint64_t stream) {
        return [&sampler, &c, seed, stream](std::uint64_t trial, std::vector<double>& scratch) {
            return sampler.sample_f(seed, stream, trial, c, scratch);
        };
    };

    if (sampler.exact_mean_available()) {
        est.centering_mean = sampler.exact_mean(c);
        est.centering_radius = 0;
        est.exact_mean_used = true;
    } else {
        auto pilot = detail::blocked_pass(trials, workers, 0, est.t_grid, 0.0,
                                          trial_f(kStreamPilot));
        const double n = static_cast<double>(trials);
        est.centering_mean = pilot.sum / n;
        double var = std::max(0.0, pilot.sum_sq / n - est.centering_mean * est.centering_mean);
        est.centering_radius = 5.0 * std::sqrt(var / n);
        est.exact_mean_used = false;
    }

    auto main = detail::blocked_pass(trials, workers, est.t_grid.size(), est.t_grid,
                                     est.centering_mean, trial_f(kStreamMain));
    const double n = static_cast<double>(trials);
    est.mean_estimate = main.sum / n;
    double var = std::max(0.0, main.sum_sq / n - est.mean_estimate * est.mean_estimate);
    est.mean_se = std::sqrt(var / n);
    est.exceed_counts = main.counts;
    est.frequencies.resize(est.t_grid.size());
    est.ci_upper.resize(est.t_grid.size());
    for (std::size_t k = 0; k < est.t_grid.size(); ++k) {
        est.frequencies[k] = static_cast<double>(main.counts[k]) / n;
        est.ci_upper[k] = clopper_pearson_upper(main.counts[k], trials, confidence);
    }
    return est;
}

/// Bound curve over a grid. A positive shift evaluates each bound at t-shift
/// (floored at a tiny positive value): used to absorb pilot-centering error,
/// so that centering noise cannot produce false violations.
inline std::vector<TailBound> bound_curve(BoundFamily family, double denominator,
                                          const std::vector<double>& t_grid, double shift = 0) {
    std::vector<TailBound> curve;
    curve.reserve(t_grid.size());
    for (double t : t_grid) {
        double t_eff = std::max(t - shift, 1e-12);
        TailBound b = tail_from_denominator(family, denominator, t_eff);
        b.t = t;
        curve.push_back(b);
    }
    return curve;
}

struct ThresholdVerdict {
    double t = 0;
    double frequency = 0;
    double ci_upper = 0;
    double bound_probability = 0;
    double bound_raw = 0;
    bool pass = false;
    double slack = 0;  // bound / frequency, infinity-ish when frequency is 0
};

struct ValidationReport {
    std::vector<ThresholdVerdict> thresholds;
    bool pass = true;
};

/// Per-threshold check ci_upper <= clamped bound; overall pass iff every
/// threshold passes.
inline ValidationReport validate_bound(const TailEstimate& est,
                                       const std::vector<TailBound>& curve) {
    if (curve.size() != est.t_grid.size())
        throw std::invalid_argument("validate_bound: threshold grid mismatch");
    for (std::size_t k = 0; k < curve.size(); ++k)
        if (curve[k].t != est.t_grid[k])
            throw std::invalid_argument("validate_bound: threshold grid mismatch");
    ValidationReport report;
    for (std::size_t k = 0; k < curve.size(); ++k) {
        ThresholdVerdict v;
        v.t = est.t_grid[k];
        v.frequency = est.frequencies[k];
        v.ci_upper = est.ci_upper[k];
        v.bound_probability = curve[k].probability;
        v.bound_raw = curve[k].raw;
        v.pass = est.ci_upper[k] <= curve[k].probability;
        v.slack = v.frequency > 0 ? v.bound_probability / v.frequency
                                  : v.bound_probability / (1.0 / static_cast<double>(est.trials));
        report.pass = report.pass && v.pass;
        report.thresholds.push_back(v);
    }
    return report;
}

}  // namespace forestconc
