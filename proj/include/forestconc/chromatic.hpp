#pragma once

#include <cstdint>

#include "forestconc/graph.hpp"
#include "forestconc/simplex.hpp"

namespace forestconc {

/// Weighted cover of the vertices by independent sets: each listed set is
/// independent and every vertex gathers total weight >= 1.
struct FractionalColoring {
    std::vector<std::vector<int>> independent_sets;
    std::vector<Rational> weights;

    Rational total_weight() const {
        Rational t = 0;
        for (const auto& w : weights) t += w;
        return t;
    }
};

namespace detail {

/// All maximal independent sets, as bitmasks: maximal cliques of the
/// complement via Bron-Kerbosch with pivoting.
inline void maximal_independent_sets(const Graph& g, std::vector<std::uint32_t>& out) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> nonadj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u)
            if (u != v && !g.has_edge(u, v)) nonadj[static_cast<std::size_t>(v)] |= 1u << u;
    }
    const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);

    // iterative-friendly recursion; n <= 14 keeps this tiny
    struct Rec {
        const std::vector<std::uint32_t>& adj;
        std::vector<std::uint32_t>& out;
        void operator()(std::uint32_t r, std::uint32_t p, std::uint32_t x) {
            if (p == 0 && x == 0) {
                out.push_back(r);
                return;
            }
            std::uint32_t px = p | x;
            int pivot = __builtin_ctz(px);
            std::uint32_t best = p & ~adj[static_cast<std::size_t>(pivot)];
            for (std::uint32_t cand = px; cand; cand &= cand - 1) {
                int u = __builtin_ctz(cand);
                std::uint32_t cover = p & ~adj[static_cast<std::size_t>(u)];
                if (__builtin_popcount(cover) < __builtin_popcount(best)) {
                    best = cover;
                    pivot = u;
                }
            }
            for (std::uint32_t cand = best; cand; cand &= cand - 1) {
                int v = __builtin_ctz(cand);
                std::uint32_t bit = 1u << v;
                (*this)(r | bit, p & adj[static_cast<std::size_t>(v)],
                        x & adj[static_cast<std::size_t>(v)]);
                p &= ~bit;
                x |= bit;
            }
        }
    } rec{nonadj, out};
    rec(0, all, 0);
}

}  // namespace detail

/// Exact optimum of the covering program
///     min sum w_S   s.t.  sum_{S contains v} w_S >= 1  over maximal
/// independent sets S, solved in rational arithmetic, with a certifying
/// coloring. Restricting to maximal sets loses nothing: a non-maximal set is
/// dominated by any maximal superset.
inline std::pair<Rational, FractionalColoring> fractional_chromatic_number(const Graph& g,
                                                                           int max_n = 14) {
    const int n = g.vertex_count();
    if (n > max_n)
        throw std::invalid_argument("fractional_chromatic_number: instance too large (n = " +
                                    std::to_string(n) + " > budget " + std::to_string(max_n) +
                                    ")");
    if (n == 0) return {Rational(0), {}};
    std::vector<std::uint32_t> sets;
    detail::maximal_independent_sets(g, sets);

    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                         std::vector<Rational>(sets.size(), Rational(0)));
    for (std::size_t s = 0; s < sets.size(); ++s)
        for (int v = 0; v < n; ++v)
            if (sets[s] & (1u << v)) a[static_cast<std::size_t>(v)][s] = 1;
    ExactCoveringLp lp(std::move(a), std::vector<Rational>(static_cast<std::size_t>(n), 1),
                       std::vector<Rational>(sets.size(), 1));
    Rational opt = lp.solve();

    FractionalColoring coloring;
    for (std::size_t s = 0; s < sets.size(); ++s) {
        if (lp.solution()[s] == 0) continue;
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (sets[s] & (1u << v)) members.push_back(v);
        coloring.independent_sets.push_back(std::move(members));
        coloring.weights.push_back(lp.solution()[s]);
    }
    return {opt, coloring};
}

}  // namespace forestconc
