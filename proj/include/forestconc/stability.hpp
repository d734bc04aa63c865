#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "forestconc/bounds.hpp"
#include "forestconc/rng.hpp"

namespace forestconc {

constexpr std::uint64_t kStreamHousing = 11;
constexpr std::uint64_t kStreamHousingTest = 12;
constexpr std::uint64_t kStreamProbe = 13;

/// Training sample of window regressors over a single i.i.d. effect stream;
/// sample i sees effects i..i+2q, so the sample is 2q-dependent.
struct RegressionSample {
    std::vector<std::vector<double>> inputs;  // windows of length 2q+1
    std::vector<double> targets;              // clipped to [0,1]
    int n = 0;
    int q = 0;
    int m_dep = 0;  // = 2q
};

/// Linearly aligned locations with i.i.d. uniform effects; the target is the
/// window mean plus bounded noise, clipped to [0,1]. One admissible
/// instantiation of the neighborhood-influence model.
struct HousingModel {
    int q = 0;
    double noise = 0;

    std::pair<std::vector<double>, double> draw_point(std::uint64_t seed, std::uint64_t stream,
                                                      std::uint64_t index) const {
        const int w = 2 * q + 1;
        std::vector<double> window(static_cast<std::size_t>(w));
        for (int k = 0; k < w; ++k)
            window[static_cast<std::size_t>(k)] =
                counter_uniform(seed, stream, index, static_cast<std::uint64_t>(k));
        double y = target_of(window, counter_uniform(seed, stream, index, 1u << 20));
        return {std::move(window), y};
    }

    double target_of(const std::vector<double>& window, double noise_uniform) const {
        double mean = 0;
        for (double v : window) mean += v;
        mean /= static_cast<double>(window.size());
        double y = mean + noise * (2.0 * noise_uniform - 1.0);
        return std::min(1.0, std::max(0.0, y));
    }

    RegressionSample sample(int n, std::uint64_t seed, std::uint64_t repetition = 0) const {
        if (n < 4 * q + 4)
            throw std::invalid_argument("housing sample: n too small for the window size");
        const int w = 2 * q + 1;
        std::vector<double> effects(static_cast<std::size_t>(n + 2 * q));
        for (std::size_t j = 0; j < effects.size(); ++j)
            effects[j] = counter_uniform(seed, kStreamHousing, repetition,
                                         static_cast<std::uint64_t>(j));
        RegressionSample s;
        s.n = n;
        s.q = q;
        s.m_dep = 2 * q;
        s.inputs.reserve(static_cast<std::size_t>(n));
        s.targets.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            std::vector<double> window(effects.begin() + i, effects.begin() + i + w);
            double nu = counter_uniform(seed, kStreamHousing, repetition,
                                        (1ull << 32) + static_cast<std::uint64_t>(i));
            s.targets.push_back(target_of(window, nu));
            s.inputs.push_back(std::move(window));
        }
        return s;
    }
};

inline RegressionSample generate_housing_sample(int n, int q, double noise, std::uint64_t seed,
                                                std::uint64_t repetition = 0) {
    return HousingModel{q, noise}.sample(n, seed, repetition);
}

/// Loss bounded by M = 1 so the stability theory's precondition holds
/// exactly.
inline double clipped_squared_loss(double y, double y_hat) {
    double d = y - y_hat;
    return std::min(d * d, 1.0);
}

/// Ridge regression over [window, 1] features with clipped squared loss.
/// Deterministic given the sample; the declared stability schedule is
/// beta_i = B/i with B = 2 (2q+2) / lambda_reg from the usual
/// sigma-admissibility argument (loss slope <= 2, feature norm^2 <= 2q+2),
/// certified empirically by leave-one-out sweeps.
struct StableLearner {
    std::vector<double> weights;  // last entry multiplies the constant feature
    double lambda_reg = 0;
    int q = 0;
    double stability_B = 0;

    double predict(const std::vector<double>& window) const {
        double y = weights.back();
        for (std::size_t k = 0; k + 1 < weights.size(); ++k) y += weights[k] * window[k];
        return y;
    }

    double beta(int i) const { return stability_B / static_cast<double>(i); }
};

namespace detail {

// solve (A) w = b for symmetric positive definite A, by Cholesky
inline std::vector<double> solve_spd(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t d = b.size();
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < j; ++k) a[j][j] -= a[j][k] * a[j][k];
        if (!(a[j][j] > 0)) throw std::runtime_error("solve_spd: matrix not positive definite");
        a[j][j] = std::sqrt(a[j][j]);
        for (std::size_t i = j + 1; i < d; ++i) {
            for (std::size_t k = 0; k < j; ++k) a[i][j] -= a[i][k] * a[j][k];
            a[i][j] /= a[j][j];
        }
    }
    for (std::size_t i = 0; i < d; ++i) {  // L y = b
        for (std::size_t k = 0; k < i; ++k) b[i] -= a[i][k] * b[k];
        b[i] /= a[i][i];
    }
    for (std::size_t i = d; i-- > 0;) {  // L^T w = y
        for (std::size_t k = i + 1; k < d; ++k) b[i] -= a[k][i] * b[k];
        b[i] /= a[i][i];
    }
    return b;
}

}  // namespace detail

inline StableLearner train(const RegressionSample& sample, double lambda_reg) {
    if (!(lambda_reg > 0)) throw std::invalid_argument("train: lambda_reg must be positive");
    if (sample.n < 1) throw std::invalid_argument("train: empty sample");
    const std::size_t d = static_cast<std::size_t>(2 * sample.q + 2);
    bool any_feature = false;
    for (const auto& w : sample.inputs)
        for (double v : w) any_feature = any_feature || v != 0;
    if (!any_feature) throw std::invalid_argument("train: degenerate all-zero features");
    std::vector<std::vector<double>> gram(d, std::vector<double>(d, 0.0));
    std::vector<double> rhs(d, 0.0);
    std::vector<double> phi(d, 1.0);
    const double inv_n = 1.0 / static_cast<double>(sample.n);
    for (int i = 0; i < sample.n; ++i) {
        const auto& w = sample.inputs[static_cast<std::size_t>(i)];
        if (w.size() + 1 != d) throw std::invalid_argument("train: window size mismatch");
        for (std::size_t k = 0; k + 1 < d; ++k) phi[k] = w[k];
        phi[d - 1] = 1.0;
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c2 = r; c2 < d; ++c2) gram[r][c2] += phi[r] * phi[c2] * inv_n;
            rhs[r] += phi[r] * sample.targets[static_cast<std::size_t>(i)] * inv_n;
        }
    }
    for (std::size_t r = 0; r < d; ++r) {
        gram[r][r] += lambda_reg;
        for (std::size_t c2 = 0; c2 < r; ++c2) gram[r][c2] = gram[c2][r];
    }
    StableLearner learner;
    learner.weights = detail::solve_spd(std::move(gram), std::move(rhs));
    learner.lambda_reg = lambda_reg;
    learner.q = sample.q;
    learner.stability_B = 2.0 * static_cast<double>(2 * sample.q + 2) / lambda_reg;
    return learner;
}

inline double empirical_risk(const StableLearner& learner, const RegressionSample& sample) {
    double total = 0;
    for (int i = 0; i < sample.n; ++i)
        total += clipped_squared_loss(sample.targets[static_cast<std::size_t>(i)],
                                      learner.predict(sample.inputs[static_cast<std::size_t>(i)]));
    return total / static_cast<double>(sample.n);
}

struct RiskEstimate {
    double risk = 0;
    double se = 0;
    std::int64_t trials = 0;
};

/// Monte Carlo estimate of the risk on fresh independent points from the
/// model's marginal, with its standard error.
inline RiskEstimate generalization_risk(const StableLearner& learner, const HousingModel& model,
                                        std::int64_t test_trials, std::uint64_t seed,
                                        std::uint64_t repetition = 0) {
    if (test_trials < 1) throw std::invalid_argument("generalization_risk: need trials >= 1");
    double sum = 0, sum_sq = 0;
    for (std::int64_t t = 0; t < test_trials; ++t) {
        auto [window, y] =
            model.draw_point(seed, kStreamHousingTest + (repetition << 8), static_cast<std::uint64_t>(t));
        double loss = clipped_squared_loss(y, learner.predict(window));
        sum += loss;
        sum_sq += loss * loss;
    }
    RiskEstimate est;
    est.trials = test_trials;
    est.risk = sum / static_cast<double>(test_trials);
    double var = std::max(0.0, sum_sq / static_cast<double>(test_trials) - est.risk * est.risk);
    est.se = std::sqrt(var / static_cast<double>(test_trials));
    return est;
}

/// Largest observed change of the per-point loss when one training point is
/// removed, over all removal indices and a probe grid of fresh points.
inline double max_leave_one_out_difference(const RegressionSample& sample, double lambda_reg,
                                           const HousingModel& model, int probe_points,
                                           std::uint64_t seed) {
    StableLearner full = train(sample, lambda_reg);
    std::vector<std::pair<std::vector<double>, double>> probes;
    probes.reserve(static_cast<std::size_t>(probe_points));
    for (int p = 0; p < probe_points; ++p)
        probes.push_back(model.draw_point(seed, kStreamProbe, static_cast<std::uint64_t>(p)));
    double worst = 0;
    for (int i = 0; i < sample.n; ++i) {
        RegressionSample reduced;
        reduced.n = sample.n - 1;
        reduced.q = sample.q;
        reduced.m_dep = sample.m_dep;
        reduced.inputs = sample.inputs;
        reduced.targets = sample.targets;
        reduced.inputs.erase(reduced.inputs.begin() + i);
        reduced.targets.erase(reduced.targets.begin() + i);
        StableLearner loo = train(reduced, lambda_reg);
        for (const auto& [x, y] : probes) {
            double diff = std::abs(clipped_squared_loss(y, full.predict(x)) -
                                   clipped_squared_loss(y, loo.predict(x)));
            worst = std::max(worst, diff);
        }
    }
    return worst;
}

struct GapRecord {
    double empirical = 0;
    double generalization = 0;
    double generalization_se = 0;
    double gap = 0;
    double bound = 0;  // non-empirical terms of the risk bound
    bool pass = false;
};

struct GapExperimentReport {
    std::vector<GapRecord> records;
    double bound = 0;
    double pass_fraction = 0;
};

/// Repeated train/measure runs of the housing model against the m-dependent
/// risk bound (m = 2q; q = 0 uses the i.i.d.-shaped bound with Lambda = n).
/// The Monte Carlo standard error of the risk estimate is folded into the
/// pass criterion.
inline GapExperimentReport gap_experiment(int n, int q, double lambda_reg, double delta,
                                          int repetitions, std::int64_t test_trials,
                                          double noise, std::uint64_t seed) {
    if (repetitions < 1) throw std::invalid_argument("gap_experiment: repetitions must be >= 1");
    HousingModel model{q, noise};
    const int m = 2 * q;
    const double B = 2.0 * static_cast<double>(2 * q + 2) / lambda_reg;
    StabilitySchedule sched = StabilitySchedule::inverse_form(B, /*M=*/1.0, n, /*delta_cap=*/0);
    GeneralizationBound gb = m_dependent_generalization_bound(sched, m, /*empirical_risk=*/0.0, delta);
    const double bound_terms = gb.expected_gap_term + gb.deviation_term;

    GapExperimentReport report;
    report.bound = bound_terms;
    int passes = 0;
    for (int rep = 0; rep < repetitions; ++rep) {
        RegressionSample s = model.sample(n, seed, static_cast<std::uint64_t>(rep));
        StableLearner learner = train(s, lambda_reg);
        GapRecord rec;
        rec.empirical = empirical_risk(learner, s);
        RiskEstimate gen =
            generalization_risk(learner, model, test_trials, seed, static_cast<std::uint64_t>(rep));
        rec.generalization = gen.risk;
        rec.generalization_se = gen.se;
        rec.gap = gen.risk - rec.empirical;
        rec.bound = bound_terms;
        rec.pass = rec.gap <= bound_terms + 3.0 * gen.se;
        passes += rec.pass ? 1 : 0;
        report.records.push_back(rec);
    }
    report.pass_fraction = static_cast<double>(passes) / static_cast<double>(repetitions);
    return report;
}

}  // namespace forestconc
