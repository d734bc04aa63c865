#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace forestconc {

/// Undirected simple graph on vertices 0..n-1. Immutable after construction;
/// the edge set is canonical (each pair stored once, endpoints sorted, list sorted).
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        for (auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("Graph: edge endpoint out of range [0," +
                                            std::to_string(n) + ")");
            if (u == v)
                throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("Graph: duplicate edge");
        edges_ = std::move(edges);
        adj_.assign(static_cast<std::size_t>(n), {});
        for (auto [u, v] : edges_) {
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        const auto& nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Disjoint non-empty vertex sets covering 0..n-1. Canonical form: each block
/// sorted ascending, blocks ordered by their minimum element.
struct VertexPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of;  // vertex -> block index

    static VertexPartition from_blocks(int n, std::vector<std::vector<int>> blocks) {
        VertexPartition p;
        p.n = n;
        for (auto& b : blocks) {
            if (b.empty()) throw std::invalid_argument("VertexPartition: empty block");
            std::sort(b.begin(), b.end());
        }
        std::sort(blocks.begin(), blocks.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        p.block_of.assign(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            for (int v : blocks[i]) {
                if (v < 0 || v >= n)
                    throw std::invalid_argument("VertexPartition: vertex out of range");
                if (p.block_of[static_cast<std::size_t>(v)] != -1)
                    throw std::invalid_argument("VertexPartition: blocks not disjoint");
                p.block_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
            }
        }
        for (int v = 0; v < n; ++v)
            if (p.block_of[static_cast<std::size_t>(v)] == -1)
                throw std::invalid_argument("VertexPartition: vertex " + std::to_string(v) +
                                            " not covered");
        p.blocks = std::move(blocks);
        return p;
    }

    static VertexPartition singletons(int n) {
        std::vector<std::vector<int>> blocks;
        blocks.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) blocks.push_back({v});
        return from_blocks(n, std::move(blocks));
    }

    int block_count() const { return static_cast<int>(blocks.size()); }
    int block_size(int b) const { return static_cast<int>(blocks[static_cast<std::size_t>(b)].size()); }
};

inline bool is_forest(const Graph& g) {
    // acyclic iff DFS never revisits a vertex along a non-tree edge
    const int n = g.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    for (int s = 0; s < n; ++s) {
        if (parent[static_cast<std::size_t>(s)] != -2) continue;
        parent[static_cast<std::size_t>(s)] = -1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (parent[static_cast<std::size_t>(w)] == -2) {
                    parent[static_cast<std::size_t>(w)] = v;
                    stack.push_back(w);
                } else if (w != parent[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_forest(g);
}

/// Maximal connected vertex sets, ordered by smallest vertex; each set sorted.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

/// Graph on the partition blocks with an edge between two blocks iff some
/// original edge crosses them; self-loops and multiplicities dropped. Block
/// order (= quotient vertex order) is the partition's canonical order.
inline Graph quotient(const Graph& g, const VertexPartition& p) {
    if (p.n != g.vertex_count())
        throw std::invalid_argument("quotient: partition size mismatch");
    std::vector<std::pair<int, int>> qedges;
    for (auto [u, v] : g.edges()) {
        int bu = p.block_of[static_cast<std::size_t>(u)];
        int bv = p.block_of[static_cast<std::size_t>(v)];
        if (bu == bv) continue;
        if (bu > bv) std::swap(bu, bv);
        qedges.emplace_back(bu, bv);
    }
    std::sort(qedges.begin(), qedges.end());
    qedges.erase(std::unique(qedges.begin(), qedges.end()), qedges.end());
    return Graph(p.block_count(), std::move(qedges));
}

/// layers[d] = vertices at shortest-path distance d from source, within the
/// source's component.
inline std::vector<std::vector<int>> bfs_layers(const Graph& g, int source) {
    if (source < 0 || source >= g.vertex_count())
        throw std::invalid_argument("bfs_layers: source out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(source)] = 0;
    q.push(source);
    int maxd = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        maxd = std::max(maxd, dist[static_cast<std::size_t>(v)]);
        for (int w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] == -1) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    std::vector<std::vector<int>> layers(static_cast<std::size_t>(maxd + 1));
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dist[static_cast<std::size_t>(v)] >= 0)
            layers[static_cast<std::size_t>(dist[static_cast<std::size_t>(v)])].push_back(v);
    return layers;
}

}  // namespace forestconc
