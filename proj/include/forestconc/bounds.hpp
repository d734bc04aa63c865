#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "forestconc/graph.hpp"

namespace forestconc {

/// Per-coordinate Lipschitz coefficients of a function of the variables.
struct LipschitzVector {
    std::vector<double> c;

    static LipschitzVector uniform(int n, double value) {
        if (value < 0) throw std::invalid_argument("LipschitzVector: negative coefficient");
        return {std::vector<double>(static_cast<std::size_t>(n), value)};
    }

    void validate() const {
        for (double v : c)
            if (!(v >= 0)) throw std::invalid_argument("LipschitzVector: negative coefficient");
    }

    int size() const { return static_cast<int>(c.size()); }

    double l2_squared() const {
        double s = 0;
        for (double v : c) s += v * v;
        return s;
    }

    double linf() const {
        double m = 0;
        for (double v : c) m = std::max(m, v);
        return m;
    }

    double min() const {
        double m = c.empty() ? 0.0 : c.front();
        for (double v : c) m = std::min(m, v);
        return m;
    }
};

enum class BoundFamily { mcdiarmid, janson, tree, forest, general };

inline const char* family_name(BoundFamily f) {
    switch (f) {
        case BoundFamily::mcdiarmid: return "mcdiarmid";
        case BoundFamily::janson: return "janson";
        case BoundFamily::tree: return "tree";
        case BoundFamily::forest: return "forest";
        case BoundFamily::general: return "general";
    }
    return "?";
}

/// One evaluated deviation bound exp(-2 t^2 / D). The exponent is formed
/// first and exponentiated once; `probability` is the value clamped to 1,
/// `raw` keeps the unclamped number for diagnostics.
struct TailBound {
    BoundFamily family;
    double t = 0;
    double denominator = 0;
    double exponent = 0;
    double raw = 0;
    double probability = 0;
};

inline TailBound tail_from_denominator(BoundFamily family, double denominator, double t) {
    if (!(t > 0)) throw std::invalid_argument("tail bound: t must be positive");
    if (!(denominator > 0)) throw std::invalid_argument("tail bound: denominator must be positive");
    TailBound b;
    b.family = family;
    b.t = t;
    b.denominator = denominator;
    b.exponent = -2.0 * t * t / denominator;
    b.raw = std::exp(b.exponent);
    b.probability = std::min(b.raw, 1.0);
    return b;
}

inline double mcdiarmid_denominator(const LipschitzVector& c) {
    c.validate();
    double d = c.l2_squared();
    if (!(d > 0)) throw std::invalid_argument("mcdiarmid: all-zero Lipschitz vector");
    return d;
}

inline TailBound mcdiarmid_tail(const LipschitzVector& c, double t) {
    return tail_from_denominator(BoundFamily::mcdiarmid, mcdiarmid_denominator(c), t);
}

inline double janson_denominator(const LipschitzVector& c, double chi_star) {
    if (!(chi_star >= 1)) throw std::invalid_argument("janson: chi* must be >= 1");
    return chi_star * mcdiarmid_denominator(c);
}

/// Hoeffding-type baseline for f = sum X_i with X_i ranging in an interval of
/// length c_i; chi_star is the fractional coloring number of the dependency
/// graph.
inline TailBound janson_tail(const LipschitzVector& c, double chi_star, double t) {
    return tail_from_denominator(BoundFamily::janson, janson_denominator(c, chi_star), t);
}

inline double forest_denominator(const Graph& g, const LipschitzVector& c) {
    c.validate();
    if (c.size() != g.vertex_count())
        throw std::invalid_argument("forest tail: Lipschitz vector length mismatch");
    double d = 0;
    for (auto [i, j] : g.edges()) {
        double s = c.c[static_cast<std::size_t>(i)] + c.c[static_cast<std::size_t>(j)];
        d += s * s;
    }
    for (const auto& tree : connected_components(g)) {
        double cmin = c.c[static_cast<std::size_t>(tree.front())];
        for (int v : tree) cmin = std::min(cmin, c.c[static_cast<std::size_t>(v)]);
        d += cmin * cmin;
    }
    return d;
}

inline TailBound tree_tail(const Graph& g, const LipschitzVector& c, double t) {
    if (!is_tree(g)) throw std::invalid_argument("tree tail: graph is not a tree");
    return tail_from_denominator(BoundFamily::tree, forest_denominator(g, c), t);
}

inline TailBound forest_tail(const Graph& g, const LipschitzVector& c, double t) {
    if (!is_forest(g)) throw std::invalid_argument("forest tail: graph is not a forest");
    return tail_from_denominator(BoundFamily::forest, forest_denominator(g, c), t);
}

inline double general_denominator(std::int64_t lambda_g, double c_inf) {
    if (lambda_g < 1) throw std::invalid_argument("general tail: forest complexity must be >= 1");
    if (!(c_inf > 0)) throw std::invalid_argument("general tail: c_inf must be positive");
    return static_cast<double>(lambda_g) * c_inf * c_inf;
}

inline TailBound general_tail(std::int64_t lambda_g, double c_inf, double t) {
    return tail_from_denominator(BoundFamily::general, general_denominator(lambda_g, c_inf), t);
}

/// The t at which exp(-2 t^2 / D) equals delta.
inline double invert_tail(double denominator, double delta) {
    if (!(denominator > 0)) throw std::invalid_argument("invert_tail: denominator must be positive");
    if (!(delta > 0 && delta < 1)) throw std::invalid_argument("invert_tail: delta outside (0,1)");
    return std::sqrt(denominator * std::log(1.0 / delta) / 2.0);
}

/// Uniform-stability schedule beta_i together with the loss bound M, sample
/// size n and the dependency-degree cap Delta. beta is either the closed form
/// B/i or an explicit table (table[i-1] = beta_i).
struct StabilitySchedule {
    enum class Form { inverse, table };
    Form form = Form::inverse;
    double B = 0;
    std::vector<double> table;
    double M = 1;
    int n = 0;
    int delta_cap = 0;

    static StabilitySchedule inverse_form(double B, double M, int n, int delta_cap) {
        StabilitySchedule s;
        s.form = Form::inverse;
        s.B = B;
        s.M = M;
        s.n = n;
        s.delta_cap = delta_cap;
        s.validate();
        return s;
    }

    static StabilitySchedule table_form(std::vector<double> table, double M, int n,
                                        int delta_cap) {
        StabilitySchedule s;
        s.form = Form::table;
        s.table = std::move(table);
        s.M = M;
        s.n = n;
        s.delta_cap = delta_cap;
        s.validate();
        return s;
    }

    void validate() const {
        if (!(M > 0)) throw std::invalid_argument("StabilitySchedule: M must be positive");
        if (n < 1) throw std::invalid_argument("StabilitySchedule: n must be >= 1");
        if (delta_cap < 0 || delta_cap >= n)
            throw std::invalid_argument("StabilitySchedule: need 0 <= Delta < n");
        if (form == Form::inverse) {
            if (B < 0) throw std::invalid_argument("StabilitySchedule: B must be >= 0");
        } else {
            if (static_cast<int>(table.size()) < n)
                throw std::invalid_argument("StabilitySchedule: table shorter than n");
            for (double b : table)
                if (!(b >= 0)) throw std::invalid_argument("StabilitySchedule: negative beta");
        }
    }

    double beta(int i) const {
        if (i < 1) throw std::invalid_argument("StabilitySchedule: beta index must be >= 1");
        if (form == Form::inverse) return B / static_cast<double>(i);
        if (i > static_cast<int>(table.size()))
            throw std::invalid_argument("StabilitySchedule: beta index beyond table");
        return table[static_cast<std::size_t>(i - 1)];
    }

    double beta_n() const { return beta(n); }

    /// beta_{n,Delta} = max over i in [0, Delta] of beta_{n-i}; explicit max,
    /// schedules need not be monotone.
    double beta_window_max() const {
        double m = 0;
        for (int i = 0; i <= delta_cap; ++i) m = std::max(m, beta(n - i));
        return m;
    }
};

/// Bounded-difference constant of the generalization gap as a function of the
/// sample: one replaced entry moves it by at most 4 beta_n + M/n.
inline double stability_lipschitz_constant(const StabilitySchedule& sched) {
    return 4.0 * sched.beta_n() + sched.M / static_cast<double>(sched.n);
}

/// Deviation bound for the gap: exp(-2 n^2 t^2 / (Lambda (4 n beta_n + M)^2)),
/// identical to the general tail with c_inf = 4 beta_n + M/n.
inline TailBound stability_deviation_tail(const StabilitySchedule& sched, std::int64_t lambda_g,
                                          double t) {
    return general_tail(lambda_g, stability_lipschitz_constant(sched), t);
}

/// Expected gap: 2 beta_{n,Delta} (Delta + 1).
inline double expected_gap_bound(const StabilitySchedule& sched) {
    return 2.0 * sched.beta_window_max() * static_cast<double>(sched.delta_cap + 1);
}

struct GeneralizationBound {
    double empirical_risk = 0;
    double expected_gap_term = 0;
    double deviation_term = 0;
    double total = 0;
};

/// Risk bound holding with probability 1 - delta:
/// R <= R_hat + 2 beta_{n,Delta} (Delta+1) + ((4 n beta_n + M)/n) sqrt(Lambda ln(1/delta)/2).
inline GeneralizationBound generalization_bound(const StabilitySchedule& sched,
                                                std::int64_t lambda_g, double empirical_risk,
                                                double delta) {
    if (!(delta > 0 && delta < 1))
        throw std::invalid_argument("generalization_bound: delta outside (0,1)");
    if (empirical_risk < 0)
        throw std::invalid_argument("generalization_bound: negative empirical risk");
    GeneralizationBound b;
    b.empirical_risk = empirical_risk;
    b.expected_gap_term = expected_gap_bound(sched);
    b.deviation_term = stability_lipschitz_constant(sched) *
                       std::sqrt(static_cast<double>(lambda_g) * std::log(1.0 / delta) / 2.0);
    b.total = b.empirical_risk + b.expected_gap_term + b.deviation_term;
    return b;
}

/// m-dependent specialization: Delta = 2m and Lambda <= 4mn, giving
/// R <= R_hat + 2 beta_{n,2m} (2m+1) + (4 n beta_n + M) sqrt(2 m ln(1/delta) / n).
/// m = 0 would make the third term vanish incorrectly, so it routes to the
/// general bound with Lambda = n.
inline GeneralizationBound m_dependent_generalization_bound(StabilitySchedule sched, int m,
                                                            double empirical_risk, double delta) {
    if (m < 0) throw std::invalid_argument("m_dependent_generalization_bound: m must be >= 0");
    if (m == 0) {
        sched.delta_cap = 0;
        sched.validate();
        return generalization_bound(sched, sched.n, empirical_risk, delta);
    }
    if (2 * m >= sched.n)
        throw std::invalid_argument("m_dependent_generalization_bound: need 2m < n");
    if (!(delta > 0 && delta < 1))
        throw std::invalid_argument("m_dependent_generalization_bound: delta outside (0,1)");
    if (empirical_risk < 0)
        throw std::invalid_argument("m_dependent_generalization_bound: negative empirical risk");
    sched.delta_cap = 2 * m;
    sched.validate();
    GeneralizationBound b;
    b.empirical_risk = empirical_risk;
    b.expected_gap_term = expected_gap_bound(sched);
    b.deviation_term =
        (4.0 * sched.n * sched.beta_n() + sched.M) *
        std::sqrt(2.0 * static_cast<double>(m) * std::log(1.0 / delta) / static_cast<double>(sched.n));
    b.total = b.empirical_risk + b.expected_gap_term + b.deviation_term;
    return b;
}

}  // namespace forestconc
