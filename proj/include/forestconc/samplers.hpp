#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "forestconc/bounds.hpp"
#include "forestconc/graph.hpp"
#include "forestconc/rng.hpp"

namespace forestconc {

/// Closed axis-aligned rectangle inside the unit square; boundary touch
/// counts as intersection.
struct Rect {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;

    void validate() const {
        if (!(x0 <= x1 && y0 <= y1))
            throw std::invalid_argument("Rect: corners out of order");
        if (!(x0 >= 0 && y0 >= 0 && x1 <= 1 && y1 <= 1))
            throw std::invalid_argument("Rect: outside the unit square");
    }

    bool intersects(const Rect& o) const {
        return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1;
    }

    bool contains(double x, double y) const {
        return x0 <= x && x <= x1 && y0 <= y && y <= y1;
    }

    double area() const { return (x1 - x0) * (y1 - y0); }
};

enum class SamplerKind { edge_generator, m_dependent_average, poisson_regions };

/// Generates graph-dependent random vectors in [0,1]^n whose dependency graph
/// is certified by construction: variables on non-adjacent index sets are
/// computed from disjoint underlying generators (or, for the point process,
/// from counts on disjoint regions).
class DependentSampler {
public:
    /// X_v = mean of one generator per vertex and one per incident edge, so
    /// f = sum X_v is 1-Lipschitz per coordinate and E[X_v] = 1/2.
    static DependentSampler edge_generator(Graph g) {
        DependentSampler s;
        s.kind_ = SamplerKind::edge_generator;
        s.graph_ = std::move(g);
        return s;
    }

    /// X_i = mean of generators i..i+m of an i.i.d. stream of length n+m;
    /// the sequence is m-dependent and the chain graph certifies it.
    static DependentSampler m_dependent(int n, int m) {
        if (n < 1 || m < 0) throw std::invalid_argument("m_dependent sampler: need n >= 1, m >= 0");
        DependentSampler s;
        s.kind_ = SamplerKind::m_dependent_average;
        s.n_ = n;
        s.m_ = m;
        s.graph_ = m_dependent_chain(n, m);
        return s;
    }

    /// One spatial Poisson point process realization on the bounding box of
    /// the regions; X_i = min(count in region i, cap)/cap. Counts on disjoint
    /// regions are independent, so edges are exactly the intersecting pairs.
    static DependentSampler poisson_regions(std::vector<Rect> regions, double intensity,
                                            int cap) {
        if (regions.empty()) throw std::invalid_argument("poisson sampler: no regions");
        if (!(intensity > 0)) throw std::invalid_argument("poisson sampler: intensity must be > 0");
        if (cap < 1) throw std::invalid_argument("poisson sampler: cap must be >= 1");
        DependentSampler s;
        s.kind_ = SamplerKind::poisson_regions;
        s.regions_ = std::move(regions);
        s.intensity_ = intensity;
        s.cap_ = cap;
        double bx0 = 1, by0 = 1, bx1 = 0, by1 = 0;
        for (const auto& r : s.regions_) {
            r.validate();
            bx0 = std::min(bx0, r.x0);
            by0 = std::min(by0, r.y0);
            bx1 = std::max(bx1, r.x1);
            by1 = std::max(by1, r.y1);
        }
        s.bbox_ = Rect{bx0, by0, bx1, by1};
        if (s.intensity_ * s.bbox_.area() > 500.0)
            throw std::invalid_argument("poisson sampler: expected point count too large");
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < s.regions_.size(); ++i)
            for (std::size_t j = i + 1; j < s.regions_.size(); ++j)
                if (s.regions_[i].intersects(s.regions_[j]))
                    edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        s.graph_ = Graph(static_cast<int>(s.regions_.size()), std::move(edges));
        return s;
    }

    SamplerKind kind() const { return kind_; }
    const Graph& graph() const { return graph_; }
    int dimension() const { return graph_.vertex_count(); }
    int dependence_range() const { return m_; }
    const std::vector<Rect>& regions() const { return regions_; }
    double intensity() const { return intensity_; }
    int cap() const { return cap_; }

    bool exact_mean_available() const { return kind_ != SamplerKind::poisson_regions; }

    /// E[sum c_i X_i] where each coordinate has mean 1/2.
    double exact_mean(const LipschitzVector& c) const {
        double s = 0;
        for (double v : c.c) s += v;
        return s / 2.0;
    }

    // test hook: freeze every generator at 1/2 to obtain a constant vector
    void force_midpoint_generators(bool on) { midpoint_ = on; }

    void sample(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial,
                std::vector<double>& out) const {
        out.assign(static_cast<std::size_t>(dimension()), 0.0);
        switch (kind_) {
            case SamplerKind::edge_generator: sample_edge_generator(seed, stream, trial, out); break;
            case SamplerKind::m_dependent_average: sample_m_dependent(seed, stream, trial, out); break;
            case SamplerKind::poisson_regions: sample_poisson(seed, stream, trial, out); break;
        }
    }

    double sample_f(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial,
                    const LipschitzVector& c, std::vector<double>& scratch) const {
        sample(seed, stream, trial, scratch);
        double f = 0;
        for (std::size_t i = 0; i < scratch.size(); ++i) f += c.c[i] * scratch[i];
        return f;
    }

private:
    double uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial,
                   std::uint64_t index) const {
        return midpoint_ ? 0.5 : counter_uniform(seed, stream, trial, index);
    }

    // generator indices: vertex v -> v, edge of rank r -> n + r
    void sample_edge_generator(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial,
                               std::vector<double>& out) const {
        const int n = graph_.vertex_count();
        std::vector<double> acc(static_cast<std::size_t>(n), 0.0);
        std::vector<int> terms(static_cast<std::size_t>(n), 1);
        for (int v = 0; v < n; ++v)
            acc[static_cast<std::size_t>(v)] =
                uniform(seed, stream, trial, static_cast<std::uint64_t>(v));
        const auto& edges = graph_.edges();
        for (std::size_t r = 0; r < edges.size(); ++r) {
            double e = uniform(seed, stream, trial, static_cast<std::uint64_t>(n) + r);
            acc[static_cast<std::size_t>(edges[r].first)] += e;
            acc[static_cast<std::size_t>(edges[r].second)] += e;
            terms[static_cast<std::size_t>(edges[r].first)]++;
            terms[static_cast<std::size_t>(edges[r].second)]++;
        }
        for (int v = 0; v < n; ++v)
            out[static_cast<std::size_t>(v)] =
                acc[static_cast<std::size_t>(v)] / terms[static_cast<std::size_t>(v)];
    }

    void sample_m_dependent(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial,
                            std::vector<double>& out) const {
        std::vector<double> eps(static_cast<std::size_t>(n_ + m_), 0.0);
        for (std::size_t j = 0; j < eps.size(); ++j)
            eps[j] = uniform(seed, stream, trial, static_cast<std::uint64_t>(j));
        for (int i = 0; i < n_; ++i) {
            double s = 0;
            for (int k = 0; k <= m_; ++k) s += eps[static_cast<std::size_t>(i + k)];
            out[static_cast<std::size_t>(i)] = s / static_cast<double>(m_ + 1);
        }
    }

    void sample_poisson(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial,
                        std::vector<double>& out) const {
        CounterRng rng(seed, stream, trial);
        const double lambda = intensity_ * bbox_.area();
        // multiplication method: count uniforms until the running product
        // drops below exp(-lambda)
        const double limit = std::exp(-lambda);
        std::int64_t points = -1;
        double prod = 1.0;
        do {
            prod *= midpoint_ ? 0.5 : rng.next_uniform();
            ++points;
        } while (prod > limit);
        std::vector<std::int64_t> count(regions_.size(), 0);
        for (std::int64_t p = 0; p < points; ++p) {
            double x = bbox_.x0 + (bbox_.x1 - bbox_.x0) * (midpoint_ ? 0.5 : rng.next_uniform());
            double y = bbox_.y0 + (bbox_.y1 - bbox_.y0) * (midpoint_ ? 0.5 : rng.next_uniform());
            for (std::size_t i = 0; i < regions_.size(); ++i)
                if (regions_[i].contains(x, y)) count[i]++;
        }
        for (std::size_t i = 0; i < regions_.size(); ++i)
            out[i] = static_cast<double>(std::min<std::int64_t>(count[i], cap_)) /
                     static_cast<double>(cap_);
    }

    SamplerKind kind_ = SamplerKind::edge_generator;
    Graph graph_;
    int n_ = 0, m_ = 0;
    std::vector<Rect> regions_;
    double intensity_ = 0;
    int cap_ = 1;
    Rect bbox_;
    bool midpoint_ = false;
};

}  // namespace forestconc
