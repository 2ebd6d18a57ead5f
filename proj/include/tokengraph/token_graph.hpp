#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "binomial.hpp"
#include "graph.hpp"

namespace tokengraph {

// A configuration of k tokens: a strictly increasing list of k base-graph
// vertices. Plain vector; validate_config checks the shape at boundaries.
using TokenConfig = std::vector<int>;

inline void validate_config(int n, int k, const TokenConfig& config) {
    if (int(config.size()) != k)
        throw std::invalid_argument("configuration must place exactly " + std::to_string(k) + " tokens");
    for (std::size_t i = 0; i < config.size(); ++i) {
        if (config[i] < 0 || config[i] >= n)
            throw std::invalid_argument("token on out-of-range vertex " + std::to_string(config[i]));
        if (i > 0 && config[i] <= config[i - 1])
            throw std::invalid_argument("configuration must be strictly increasing");
    }
}

inline TokenConfig complement_config(int n, const TokenConfig& config) {
    TokenConfig rest;
    rest.reserve(n - config.size());
    std::size_t i = 0;
    for (int v = 0; v < n; ++v) {
        if (i < config.size() && config[i] == v) {
            ++i;
        } else {
            rest.push_back(v);
        }
    }
    return rest;
}

inline std::string config_label(const TokenConfig& config) {
    std::string label = "{";
    for (std::size_t i = 0; i < config.size(); ++i) {
        if (i) label += ",";
        label += std::to_string(config[i]);
    }
    label += "}";
    return label;
}

// The k-token graph of a base graph: one vertex per k-subset of base
// vertices, an edge whenever the symmetric difference of two subsets is an
// edge of the base. Vertex ids follow the colexicographic subset ranking,
// so rank and config are mutually inverse.
struct TokenGraph {
    Graph base;
    int k = 0;
    Graph graph;

    int rank(const TokenConfig& config) const {
        validate_config(base.order(), k, config);
        return int(subset_rank(config));
    }

    TokenConfig config(int vertex) const {
        if (vertex < 0 || vertex >= graph.order())
            throw std::invalid_argument("token graph vertex out of range");
        return subset_unrank(std::uint64_t(vertex), base.order(), k);
    }
};

// Materializes the token graph by walking each base edge uv against every
// (k-1)-subset of the remaining vertices; this touches each token-graph
// edge exactly once, giving |E| * C(n-2, k-1) edges total.
inline TokenGraph build_token_graph(const Graph& g, int k) {
    const int n = g.order();
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("token count must satisfy 1 <= k <= n-1");
    const std::uint64_t vertex_count = binomial(n, k);
    if (vertex_count > std::uint64_t(std::numeric_limits<int>::max()))
        throw std::invalid_argument("token graph too large to materialize");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(std::size_t(g.size()) * binomial(n - 2, k - 1));
    std::vector<int> pool;
    pool.reserve(n - 2);
    auto insert_sorted = [](const std::vector<int>& subset, int v) {
        TokenConfig out = subset;
        out.insert(std::upper_bound(out.begin(), out.end(), v), v);
        return out;
    };
    for (const auto& [u, v] : g.edges()) {
        pool.clear();
        for (int w = 0; w < n; ++w)
            if (w != u && w != v) pool.push_back(w);
        for_each_combination(pool, k - 1, [&](const std::vector<int>& rest) {
            const TokenConfig a = insert_sorted(rest, u);
            const TokenConfig b = insert_sorted(rest, v);
            edges.emplace_back(int(subset_rank(a)), int(subset_rank(b)));
        });
    }
    return TokenGraph{g, k, Graph(int(vertex_count), std::move(edges))};
}

// Number of token moves available from a configuration: pairs of an
// occupied vertex and an unoccupied neighbor. Equals the degree of the
// corresponding vertex in the materialized token graph.
inline int config_degree(const Graph& base, const TokenConfig& config) {
    validate_config(base.order(), int(config.size()), config);
    int moves = 0;
    for (int v : config) {
        for (int w : base.neighbors(v)) {
            if (!std::binary_search(config.begin(), config.end(), w)) ++moves;
        }
    }
    return moves;
}

}  // namespace tokengraph
