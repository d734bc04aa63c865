#pragma once

#include "forestconc/graph.hpp"
#include "forestconc/rng.hpp"

namespace forestconc {

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

/// m x m grid, vertex (i,j) -> i*m + j.
inline Graph grid_graph(int m) {
    if (m < 1) throw std::invalid_argument("grid_graph: m must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i + 1 < m) e.emplace_back(i * m + j, (i + 1) * m + j);
            if (j + 1 < m) e.emplace_back(i * m + j, i * m + j + 1);
        }
    return Graph(m * m, std::move(e));
}

/// Chain of an m-dependent sequence: i ~ j iff 0 < |i-j| <= m.
inline Graph m_dependent_chain(int n, int m) {
    if (n < 1) throw std::invalid_argument("m_dependent_chain: n must be >= 1");
    if (m < 0) throw std::invalid_argument("m_dependent_chain: m must be >= 0");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n && j - i <= m; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

/// Star with center 0 and leaves 1..n-1.
inline Graph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star_graph: n must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(0, v);
    return Graph(n, std::move(e));
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph(a + b, std::move(e));
}

/// Uniform random labeled tree via Pruefer sequence decoding.
inline Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
    if (n <= 2) return path_graph(n);
    CounterRng rng(seed, /*stream=*/0x7265653ull, /*trial=*/0);
    std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
    for (std::size_t i = 0; i < pruefer.size(); ++i)
        pruefer[i] = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int p : pruefer) deg[static_cast<std::size_t>(p)]++;
    std::vector<std::pair<int, int>> e;
    // standard decode: repeatedly join the smallest leaf to the next code entry
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) leaves.push(v);
    for (int p : pruefer) {
        int leaf = leaves.top();
        leaves.pop();
        e.emplace_back(leaf, p);
        if (--deg[static_cast<std::size_t>(p)] == 1) leaves.push(p);
    }
    int u = leaves.top();
    leaves.pop();
    int v = leaves.top();
    e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

}  // namespace forestconc
