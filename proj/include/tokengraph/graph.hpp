#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tokengraph {

// Raised when a certified structure fails one of its own checks (path
// systems, partitions, certificates). Bad caller input throws
// std::invalid_argument instead.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Simple undirected graph on dense vertex ids 0..n-1, immutable after
// construction. Edges are stored as unique (u, v) pairs with u < v in
// lexicographic order; adjacency lists are sorted. Duplicate and reversed
// input pairs are collapsed; self-loops and out-of-range endpoints are
// rejected.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n), adj_(n > 0 ? n : 0) {
        if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
        for (auto& [u, v] : edge_list) {
            if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                            std::to_string(v) + " (n = " + std::to_string(n) + ")");
            if (u > v) std::swap(u, v);
        }
        std::sort(edge_list.begin(), edge_list.end());
        edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
        edges_ = std::move(edge_list);
        for (const auto& [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    int order() const { return n_; }
    int size() const { return int(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return int(neighbors(v).size()); }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
        const auto& nbrs = adj_[u];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, std::move(edges));
}

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path graph needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

// Two K_t copies {0..t-1} and {t..2t-1} joined by the identity matching
// i -- t+i. Any perfect matching gives an isomorphic graph; the identity
// matching is fixed for determinism.
inline Graph matched_cliques(int t) {
    if (t < 2) throw std::invalid_argument("matched cliques need t >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int copy = 0; copy < 2; ++copy)
        for (int u = 0; u < t; ++u)
            for (int v = u + 1; v < t; ++v) edges.emplace_back(copy * t + u, copy * t + v);
    for (int i = 0; i < t; ++i) edges.emplace_back(i, t + i);
    return Graph(2 * t, std::move(edges));
}

// Two K_r copies {0..r-1} and {r..2r-1} joined by the single bridge 0 -- r.
inline Graph bridged_cliques(int r) {
    if (r < 2) throw std::invalid_argument("bridged cliques need r >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int copy = 0; copy < 2; ++copy)
        for (int u = 0; u < r; ++u)
            for (int v = u + 1; v < r; ++v) edges.emplace_back(copy * r + u, copy * r + v);
    edges.emplace_back(0, r);
    return Graph(2 * r, std::move(edges));
}

// Two K_r copies sharing the single vertex 0; order 2r - 1. The shared
// vertex is a cut vertex, so the graph has vertex-connectivity 1.
inline Graph shared_vertex_cliques(int r) {
    if (r < 2) throw std::invalid_argument("shared-vertex cliques need r >= 2");
    std::vector<std::pair<int, int>> edges;
    std::vector<int> copy_a(r), copy_b(r);
    copy_a[0] = copy_b[0] = 0;
    for (int i = 1; i < r; ++i) {
        copy_a[i] = i;
        copy_b[i] = r - 1 + i;
    }
    for (const auto& copy : {copy_a, copy_b})
        for (int u = 0; u < r; ++u)
            for (int v = u + 1; v < r; ++v) edges.emplace_back(copy[u], copy[v]);
    return Graph(2 * r - 1, std::move(edges));
}

// Directed simple path: ordered distinct vertices, every consecutive pair
// adjacent in the graph it was built against, at least one edge.
class DirectedPath {
public:
    DirectedPath(const Graph& g, std::vector<int> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.size() < 2) throw std::invalid_argument("path needs at least one edge");
        for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
            if (!g.has_edge(vertices_[i], vertices_[i + 1]))
                throw std::invalid_argument("path step " + std::to_string(vertices_[i]) + " -> " +
                                            std::to_string(vertices_[i + 1]) + " is not an edge");
        }
        std::vector<int> sorted = vertices_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("path repeats a vertex");
    }

    const std::vector<int>& vertices() const { return vertices_; }
    int length() const { return int(vertices_.size()) - 1; }
    int source() const { return vertices_.front(); }
    int target() const { return vertices_.back(); }

    bool contains_vertex(int v) const {
        return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
    }

    bool contains_edge(int u, int v) const {
        for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
            if ((vertices_[i] == u && vertices_[i + 1] == v) || (vertices_[i] == v && vertices_[i + 1] == u))
                return true;
        }
        return false;
    }

    // Edges as normalized (min, max) pairs, in traversal order.
    std::vector<std::pair<int, int>> edge_set() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(vertices_.size() - 1);
        for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
            int u = vertices_[i], v = vertices_[i + 1];
            out.emplace_back(std::min(u, v), std::max(u, v));
        }
        return out;
    }

    bool operator==(const DirectedPath& other) const { return vertices_ == other.vertices_; }

private:
    std::vector<int> vertices_;
};

}  // namespace tokengraph
