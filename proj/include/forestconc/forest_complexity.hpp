#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "forestconc/families.hpp"
#include "forestconc/graph.hpp"

namespace forestconc {

/// A vertex partition (the preimage sets of the merge map) together with a
/// forest on the blocks. Valid for a graph g when every g-edge either stays
/// inside a block or maps to a forest edge between the two blocks.
struct ForestApproximation {
    VertexPartition partition;
    Graph forest;  // vertices are block indices in partition order
};

struct ComplexityResult {
    std::int64_t value = 0;
    ForestApproximation witness;
    bool exact = false;
    std::string method;
};

inline void validate_forest_approximation(const Graph& g, const ForestApproximation& fa) {
    if (fa.partition.n != g.vertex_count())
        throw std::invalid_argument("forest approximation: partition does not cover the graph");
    if (fa.forest.vertex_count() != fa.partition.block_count())
        throw std::invalid_argument("forest approximation: forest vertex count != block count");
    if (!is_forest(fa.forest))
        throw std::invalid_argument("forest approximation: block graph is not a forest");
    for (auto [u, v] : g.edges()) {
        int bu = fa.partition.block_of[static_cast<std::size_t>(u)];
        int bv = fa.partition.block_of[static_cast<std::size_t>(v)];
        if (bu != bv && !fa.forest.has_edge(bu, bv))
            throw std::invalid_argument(
                "forest approximation: edge crosses non-adjacent distinct blocks");
    }
}

/// The complexity value of one approximation: sum over forest edges of
/// (|B_u| + |B_v|)^2 plus, per tree of the forest, the squared minimum block
/// size. Exact integer arithmetic.
inline std::int64_t lambda_value(const Graph& g, const ForestApproximation& fa) {
    validate_forest_approximation(g, fa);
    std::int64_t lambda = 0;
    for (auto [bu, bv] : fa.forest.edges()) {
        std::int64_t s = fa.partition.block_size(bu) + fa.partition.block_size(bv);
        lambda += s * s;
    }
    for (const auto& tree : connected_components(fa.forest)) {
        std::int64_t m = std::numeric_limits<std::int64_t>::max();
        for (int b : tree) m = std::min<std::int64_t>(m, fa.partition.block_size(b));
        lambda += m * m;
    }
    return lambda;
}

namespace detail {

// Backtracking enumeration of set partitions as restricted-growth strings in
// lexicographic order, keeping only prefixes whose partial quotient is still
// a forest. F is fixed to the quotient: an F edge absent from the quotient
// would join two trees and replace a min-preimage term by a strictly larger
// edge term.
class ForestPartitionSearch {
public:
    explicit ForestPartitionSearch(const Graph& g)
        : g_(g), n_(g.vertex_count()) {
        block_of_.assign(static_cast<std::size_t>(n_), -1);
        block_size_.assign(static_cast<std::size_t>(n_), 0);
        uf_parent_.assign(static_cast<std::size_t>(n_), 0);
        uf_size_.assign(static_cast<std::size_t>(n_), 1);
    }

    std::pair<std::int64_t, std::vector<int>> run() {
        best_value_ = std::numeric_limits<std::int64_t>::max();
        if (n_ == 0) return {0, {}};
        descend(0);
        return {best_value_, best_block_of_};
    }

private:
    struct Frame {
        int unions = 0;
        int edges_added = 0;
        std::int64_t edge_terms_before = 0;
        bool new_block = false;
    };

    int find(int x) const {
        while (uf_parent_[static_cast<std::size_t>(x)] != x)
            x = uf_parent_[static_cast<std::size_t>(x)];
        return x;
    }

    // returns false when the edge closes a cycle
    bool add_quotient_edge(int a, int b, Frame& fr) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        if (uf_size_[static_cast<std::size_t>(ra)] < uf_size_[static_cast<std::size_t>(rb)])
            std::swap(ra, rb);
        uf_parent_[static_cast<std::size_t>(rb)] = ra;
        uf_size_[static_cast<std::size_t>(ra)] += uf_size_[static_cast<std::size_t>(rb)];
        union_log_.emplace_back(ra, rb);
        fr.unions++;
        return true;
    }

    bool has_quotient_edge(int a, int b) const {
        for (auto [x, y] : quotient_edges_)
            if ((x == a && y == b) || (x == b && y == a)) return true;
        return false;
    }

    // Assign vertex v to block b (b == block_count_ opens a new block).
    // Returns false and fully rolls back if the partial quotient gains a cycle.
    bool try_assign(int v, int b, Frame& fr) {
        fr.edge_terms_before = edge_terms_;
        fr.new_block = (b == block_count_);
        if (fr.new_block) {
            uf_parent_[static_cast<std::size_t>(b)] = b;
            uf_size_[static_cast<std::size_t>(b)] = 1;
            block_count_++;
        }
        const std::int64_t old_size = block_size_[static_cast<std::size_t>(b)];
        // growing block b inflates every committed edge term incident to it
        if (old_size > 0) {
            for (auto [x, y] : quotient_edges_) {
                if (x != b && y != b) continue;
                std::int64_t other = block_size_[static_cast<std::size_t>(x == b ? y : x)];
                edge_terms_ += (other + old_size + 1) * (other + old_size + 1) -
                               (other + old_size) * (other + old_size);
            }
        }
        block_size_[static_cast<std::size_t>(b)] = old_size + 1;
        block_of_[static_cast<std::size_t>(v)] = b;
        for (int u : g_.neighbors(v)) {
            if (u >= v) continue;
            int bu = block_of_[static_cast<std::size_t>(u)];
            if (bu == b || has_quotient_edge(bu, b)) continue;
            if (!add_quotient_edge(bu, b, fr)) {
                unassign(v, b, fr);
                return false;
            }
            quotient_edges_.emplace_back(std::min(bu, b), std::max(bu, b));
            fr.edges_added++;
            std::int64_t s = block_size_[static_cast<std::size_t>(bu)] +
                             block_size_[static_cast<std::size_t>(b)];
            edge_terms_ += s * s;
        }
        return true;
    }

    void unassign(int v, int b, const Frame& fr) {
        for (int i = 0; i < fr.edges_added; ++i) quotient_edges_.pop_back();
        for (int i = 0; i < fr.unions; ++i) {
            auto [ra, rb] = union_log_.back();
            union_log_.pop_back();
            uf_parent_[static_cast<std::size_t>(rb)] = rb;
            uf_size_[static_cast<std::size_t>(ra)] -= uf_size_[static_cast<std::size_t>(rb)];
        }
        block_of_[static_cast<std::size_t>(v)] = -1;
        block_size_[static_cast<std::size_t>(b)]--;
        if (fr.new_block) block_count_--;
        edge_terms_ = fr.edge_terms_before;
    }

    std::int64_t leaf_value() const {
        // per-root minimum block size over the quotient components
        std::int64_t total = edge_terms_;
        std::vector<std::int64_t> comp_min(static_cast<std::size_t>(block_count_),
                                           std::numeric_limits<std::int64_t>::max());
        for (int b = 0; b < block_count_; ++b) {
            int r = find(b);
            comp_min[static_cast<std::size_t>(r)] = std::min(
                comp_min[static_cast<std::size_t>(r)], block_size_[static_cast<std::size_t>(b)]);
        }
        for (int b = 0; b < block_count_; ++b)
            if (uf_parent_[static_cast<std::size_t>(b)] == b)
                total += comp_min[static_cast<std::size_t>(b)] * comp_min[static_cast<std::size_t>(b)];
        return total;
    }

    void descend(int v) {
        if (v == n_) {
            std::int64_t val = leaf_value();
            if (val < best_value_) {
                best_value_ = val;
                best_block_of_ = block_of_;
            }
            return;
        }
        for (int b = 0; b <= block_count_ && b < n_; ++b) {
            Frame fr;
            if (!try_assign(v, b, fr)) continue;
            // committed edge terms only grow; every final tree adds at least 1
            if (edge_terms_ + 1 < best_value_) descend(v + 1);
            unassign(v, b, fr);
        }
    }

    const Graph& g_;
    int n_;
    int block_count_ = 0;
    std::int64_t edge_terms_ = 0;
    std::int64_t best_value_ = 0;
    std::vector<int> block_of_, best_block_of_;
    std::vector<std::int64_t> block_size_;
    std::vector<int> uf_parent_;
    std::vector<std::int64_t> uf_size_;
    std::vector<std::pair<int, int>> quotient_edges_;
    std::vector<std::pair<int, int>> union_log_;
};

inline ForestApproximation approximation_from_blocks(const Graph& g,
                                                     std::vector<std::vector<int>> blocks) {
    ForestApproximation fa;
    fa.partition = VertexPartition::from_blocks(g.vertex_count(), std::move(blocks));
    fa.forest = quotient(g, fa.partition);
    return fa;
}

inline std::vector<std::vector<int>> blocks_from_assignment(const std::vector<int>& block_of) {
    int k = 0;
    for (int b : block_of) k = std::max(k, b + 1);
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
    for (std::size_t v = 0; v < block_of.size(); ++v)
        blocks[static_cast<std::size_t>(block_of[v])].push_back(static_cast<int>(v));
    return blocks;
}

}  // namespace detail

constexpr int kDefaultOracleBudget = 12;

/// Exact minimum of the complexity value over all forest approximations,
/// with the first minimizing witness in enumeration order.
inline ComplexityResult exact_forest_complexity(const Graph& g,
                                                int max_n = kDefaultOracleBudget) {
    if (g.vertex_count() > max_n)
        throw std::invalid_argument("exact_forest_complexity: instance too large (n = " +
                                    std::to_string(g.vertex_count()) + " > budget " +
                                    std::to_string(max_n) + ")");
    detail::ForestPartitionSearch search(g);
    auto [value, block_of] = search.run();
    ComplexityResult res;
    res.witness = detail::approximation_from_blocks(g, detail::blocks_from_assignment(block_of));
    res.value = lambda_value(g, res.witness);
    res.exact = true;
    res.method = "oracle";
    if (res.value != value)
        throw std::logic_error("exact_forest_complexity: witness value mismatch");
    return res;
}

/// Identity approximation of a forest: 4|E| + (number of trees); 4n-3 for a tree.
inline ComplexityResult identity_upper_bound(const Graph& g) {
    if (!is_forest(g)) throw std::invalid_argument("identity_upper_bound: graph is not a forest");
    ComplexityResult res;
    res.witness.partition = VertexPartition::singletons(g.vertex_count());
    res.witness.forest = g;
    res.value = lambda_value(g, res.witness);
    res.exact = false;
    res.method = "identity";
    return res;
}

/// Merge BFS layers from a start vertex into blocks; the quotient is a path,
/// since every edge joins vertices in the same or adjacent layers.
inline ForestApproximation layer_approximation(const Graph& g, int start) {
    return detail::approximation_from_blocks(g, bfs_layers(g, start));
}

/// Fold of the cycle C_n into a path: antipodal pairing with one or two
/// singleton end blocks. Value 8n-13 for even n, 8n-14 for odd n.
inline ComplexityResult cycle_upper_bound(int n) {
    if (n < 3) throw std::invalid_argument("cycle_upper_bound: n must be >= 3");
    Graph g = cycle_graph(n);
    ComplexityResult res;
    res.witness = layer_approximation(g, 0);
    res.value = lambda_value(g, res.witness);
    res.exact = false;
    res.method = "cycle";
    return res;
}

/// Anti-diagonal merge of the m x m grid onto a path.
inline ComplexityResult grid_upper_bound(int m) {
    if (m < 2) throw std::invalid_argument("grid_upper_bound: m must be >= 2");
    Graph g = grid_graph(m);
    std::vector<std::vector<int>> diag(static_cast<std::size_t>(2 * m - 1));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) diag[static_cast<std::size_t>(i + j)].push_back(i * m + j);
    ComplexityResult res;
    res.witness = detail::approximation_from_blocks(g, std::move(diag));
    res.value = lambda_value(g, res.witness);
    res.exact = false;
    res.method = "grid";
    return res;
}

namespace detail {

inline std::vector<std::vector<int>> consecutive_blocks(int n, int m) {
    std::vector<std::vector<int>> blocks;
    for (int start = 0; start < n; start += m) {
        std::vector<int> b;
        for (int v = start; v < std::min(start + m, n); ++v) b.push_back(v);
        blocks.push_back(std::move(b));
    }
    return blocks;
}

}  // namespace detail

/// Consecutive blocks of size m of the chain graph (i ~ j iff |i-j| <= m)
/// mapped onto a path. Value is the witness's exact lambda, at most 4mn.
inline ComplexityResult m_dependent_upper_bound(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("m_dependent_upper_bound: need n, m >= 1");
    Graph g = m_dependent_chain(n, m);
    ComplexityResult res;
    res.witness = detail::approximation_from_blocks(g, detail::consecutive_blocks(n, m));
    res.value = lambda_value(g, res.witness);
    res.exact = false;
    res.method = "mdep_blocks";
    return res;
}

/// Per component: double-BFS picks a peripheral vertex, its BFS layers become
/// blocks, so the quotient is a disjoint union of paths as long as each
/// component's diameter.
inline ComplexityResult diameter_heuristic(const Graph& g) {
    std::vector<std::vector<int>> blocks;
    for (const auto& comp : connected_components(g)) {
        auto fromFirst = bfs_layers(g, comp.front());
        int peripheral = fromFirst.back().front();
        for (const auto& layer : bfs_layers(g, peripheral)) blocks.push_back(layer);
    }
    ComplexityResult res;
    res.witness = detail::approximation_from_blocks(g, std::move(blocks));
    res.value = lambda_value(g, res.witness);
    res.exact = false;
    res.method = "diameter";
    return res;
}

/// If g is exactly the chain of an m-dependent sequence, returns m.
inline std::optional<int> detect_m_dependent(const Graph& g) {
    if (g.edge_count() == 0) return std::nullopt;
    const int n = g.vertex_count();
    int m = 0;
    for (auto [u, v] : g.edges()) m = std::max(m, v - u);
    std::int64_t expected = 0;
    for (int d = 1; d <= m; ++d) expected += std::max(0, n - d);
    if (expected != g.edge_count()) return std::nullopt;
    return m;  // all edges have gap <= m and the count pins the edge set
}

/// Exact oracle when the instance fits the budget, otherwise the best value
/// among the applicable heuristics and constructions.
inline ComplexityResult best_upper_bound(const Graph& g, int budget = kDefaultOracleBudget) {
    if (g.vertex_count() <= budget) return exact_forest_complexity(g, budget);
    ComplexityResult best = diameter_heuristic(g);
    if (is_forest(g)) {
        ComplexityResult id = identity_upper_bound(g);
        if (id.value < best.value) best = id;
    }
    if (auto m = detect_m_dependent(g)) {
        ComplexityResult blocks = m_dependent_upper_bound(g.vertex_count(), *m);
        if (blocks.value < best.value) best = blocks;
    }
    return best;
}

/// Every applicable method and its value, for reporting.
inline std::vector<ComplexityResult> complexity_survey(const Graph& g,
                                                       int budget = kDefaultOracleBudget) {
    std::vector<ComplexityResult> out;
    if (g.vertex_count() <= budget) out.push_back(exact_forest_complexity(g, budget));
    out.push_back(diameter_heuristic(g));
    if (is_forest(g)) out.push_back(identity_upper_bound(g));
    if (auto m = detect_m_dependent(g))
        out.push_back(m_dependent_upper_bound(g.vertex_count(), *m));
    return out;
}

}  // namespace forestconc
