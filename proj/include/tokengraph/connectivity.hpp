#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "binomial.hpp"
#include "graph.hpp"
#include "max_flow.hpp"

namespace tokengraph {

inline int min_degree(const Graph& g) {
    if (g.order() < 1) throw std::invalid_argument("minimum degree of an empty graph");
    int d = g.degree(0);
    for (int v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

inline bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    std::vector<char> seen(g.order(), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (int w : g.neighbors(queue[i])) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == g.order();
}

namespace detail {

// Unit-capacity network modelling an undirected graph: one arc pair per
// edge, arc 2e running lo -> hi of edge e, each direction capacity 1.
// Because edges are sorted, the arcs out of any vertex appear in order of
// increasing head, which path decomposition relies on for determinism.
inline FlowNetwork unit_network(const Graph& g) {
    FlowNetwork net(g.order());
    for (const auto& [u, v] : g.edges()) net.add_arc(u, v, 1, 1);
    return net;
}

inline void check_pair(const Graph& g, int s, int t) {
    if (s < 0 || t < 0 || s >= g.order() || t >= g.order())
        throw std::invalid_argument("vertex out of range");
    if (s == t) throw std::invalid_argument("needs two distinct vertices");
}

}  // namespace detail

// Size of a smallest edge set separating s from t, as a max-flow value.
inline int local_edge_connectivity(const Graph& g, int s, int t) {
    detail::check_pair(g, s, t);
    FlowNetwork net = detail::unit_network(g);
    return net.max_flow(s, t);
}

// A maximum set of pairwise edge-disjoint s-t paths, obtained from a unit
// capacity max-flow followed by flow decomposition. Flow cycles are
// cancelled during the walk, so every returned path is simple. The
// decomposition always leaves each vertex toward its lowest-numbered
// usable neighbor, making the output deterministic.
inline std::vector<DirectedPath> max_flow_paths(const Graph& g, int s, int t) {
    detail::check_pair(g, s, t);
    FlowNetwork net = detail::unit_network(g);
    const int value = net.max_flow(s, t);

    // With the paired unit arcs, an edge ends in one of three states:
    // unused, or carrying one unit in exactly one direction.
    std::vector<char> used(net.arc_count(), 0);
    for (int a = 0; a < net.arc_count(); ++a) used[a] = net.flow(a) > 0;

    std::vector<std::vector<int>> out(g.order());
    for (int e = 0; e < g.size(); ++e) {
        out[g.edges()[e].first].push_back(2 * e);
        out[g.edges()[e].second].push_back(2 * e + 1);
    }

    std::vector<DirectedPath> paths;
    paths.reserve(value);
    std::vector<int> pos(g.order(), -1);
    for (int extracted = 0; extracted < value; ++extracted) {
        std::vector<int> walk{s};
        std::vector<int> walk_arcs;
        pos[s] = 0;
        int v = s;
        while (v != t) {
            int chosen = -1;
            for (int a : out[v]) {
                if (used[a]) {
                    chosen = a;
                    break;
                }
            }
            if (chosen < 0) throw invariant_error("flow decomposition ran out of arcs");
            int w = net.head(chosen);
            if (pos[w] >= 0) {
                // cancel the flow cycle w .. v -> w
                used[chosen] = 0;
                while (int(walk.size()) > pos[w] + 1) {
                    used[walk_arcs.back()] = 0;
                    walk_arcs.pop_back();
                    pos[walk.back()] = -1;
                    walk.pop_back();
                }
                v = w;
            } else {
                used[chosen] = 0;
                walk_arcs.push_back(chosen);
                pos[w] = int(walk.size());
                walk.push_back(w);
                v = w;
            }
        }
        for (int u : walk) pos[u] = -1;
        paths.emplace_back(g, std::move(walk));
    }
    return paths;
}

// A minimum edge cut separating s from t (residual side of the max flow).
inline std::vector<std::pair<int, int>> min_edge_cut_between(const Graph& g, int s, int t) {
    detail::check_pair(g, s, t);
    FlowNetwork net = detail::unit_network(g);
    net.max_flow(s, t);
    std::vector<char> reach = net.residual_reachable(s);
    std::vector<std::pair<int, int>> cut;
    for (const auto& [u, v] : g.edges())
        if (reach[u] != reach[v]) cut.emplace_back(u, v);
    return cut;
}

// Edge-connectivity with a witness cut. lambda is the minimum over s-t
// max-flow values with s fixed at a vertex of minimum degree; disconnected
// graphs (and graphs on one vertex) report 0 with an empty witness.
struct EdgeCutWitness {
    int lambda = 0;
    std::vector<std::pair<int, int>> cut;
};

inline EdgeCutWitness edge_connectivity_with_witness(const Graph& g) {
    EdgeCutWitness result;
    if (g.order() <= 1 || !is_connected(g)) return result;
    int s = 0;
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) < g.degree(s)) s = v;
    int best = std::numeric_limits<int>::max();
    int best_t = -1;
    for (int t = 0; t < g.order(); ++t) {
        if (t == s) continue;
        int local = local_edge_connectivity(g, s, t);
        if (local < best) {
            best = local;
            best_t = t;
        }
    }
    result.lambda = best;
    result.cut = min_edge_cut_between(g, s, best_t);
    return result;
}

inline int edge_connectivity(const Graph& g) { return edge_connectivity_with_witness(g).lambda; }

// The adjacent-pairs formulation: the minimum over edges uv of the u-v
// max-flow value. Agrees with edge_connectivity on every connected graph;
// kept as an independently-routed cross-check.
inline int edge_connectivity_adjacent_pairs(const Graph& g) {
    if (g.order() <= 1 || !is_connected(g)) return 0;
    int best = std::numeric_limits<int>::max();
    for (const auto& [u, v] : g.edges()) best = std::min(best, local_edge_connectivity(g, u, v));
    return best;
}

namespace detail {

// Vertex-splitting reduction: v becomes 2v (in) -> 2v+1 (out) with unit
// capacity; each edge uv becomes two arcs of effectively infinite capacity.
inline FlowNetwork split_network(const Graph& g) {
    FlowNetwork net(2 * g.order());
    const int inf = g.order() + 1;
    for (int v = 0; v < g.order(); ++v) net.add_arc(2 * v, 2 * v + 1, 1);
    for (const auto& [u, v] : g.edges()) {
        net.add_arc(2 * u + 1, 2 * v, inf);
        net.add_arc(2 * v + 1, 2 * u, inf);
    }
    return net;
}

inline bool is_complete(const Graph& g) {
    return std::uint64_t(g.size()) == binomial(g.order(), 2);
}

}  // namespace detail

struct VertexCutWitness {
    int kappa = 0;
    std::vector<int> cut;
};

// Vertex-connectivity via the vertex-splitting max-flow reduction,
// minimized over non-adjacent pairs. kappa(K_n) is n-1 by convention,
// witnessed by all vertices but one; disconnected graphs report 0.
inline VertexCutWitness vertex_connectivity_with_witness(const Graph& g) {
    VertexCutWitness result;
    if (g.order() <= 1 || !is_connected(g)) return result;
    if (detail::is_complete(g)) {
        result.kappa = g.order() - 1;
        for (int v = 1; v < g.order(); ++v) result.cut.push_back(v);
        return result;
    }
    int best = std::numeric_limits<int>::max();
    std::pair<int, int> best_pair{-1, -1};
    for (int s = 0; s < g.order(); ++s) {
        for (int t = s + 1; t < g.order(); ++t) {
            if (g.has_edge(s, t)) continue;
            FlowNetwork net = detail::split_network(g);
            int local = net.max_flow(2 * s + 1, 2 * t);
            if (local < best) {
                best = local;
                best_pair = {s, t};
            }
        }
    }
    FlowNetwork net = detail::split_network(g);
    net.max_flow(2 * best_pair.first + 1, 2 * best_pair.second);
    std::vector<char> reach = net.residual_reachable(2 * best_pair.first + 1);
    for (int v = 0; v < g.order(); ++v)
        if (reach[2 * v] && !reach[2 * v + 1]) result.cut.push_back(v);
    result.kappa = best;
    return result;
}

inline int vertex_connectivity(const Graph& g) { return vertex_connectivity_with_witness(g).kappa; }

// Minimum degree, edge- and vertex-connectivity with witness cuts. For a
// connected graph these satisfy delta >= lambda >= kappa.
struct ConnectivityReport {
    int delta = 0;
    int lambda = 0;
    int kappa = 0;
    std::vector<std::pair<int, int>> min_edge_cut;
    std::vector<int> min_vertex_cut;
};

inline ConnectivityReport connectivity_report(const Graph& g) {
    ConnectivityReport report;
    report.delta = min_degree(g);
    EdgeCutWitness ec = edge_connectivity_with_witness(g);
    report.lambda = ec.lambda;
    report.min_edge_cut = std::move(ec.cut);
    VertexCutWitness vc = vertex_connectivity_with_witness(g);
    report.kappa = vc.kappa;
    report.min_vertex_cut = std::move(vc.cut);
    return report;
}

// Smallest number of edges whose removal disconnects the graph, found by
// enumerating edge subsets in increasing size. Independent of the flow
// machinery; exponential in |E|, so callers guard (the CLI oracle only
// uses it when |E| <= 25).
inline int min_edge_cut_exhaustive(const Graph& g) {
    if (g.order() <= 1) return 0;
    if (!is_connected(g)) return 0;
    const int m = g.size();
    std::vector<int> edge_ids(m);
    std::iota(edge_ids.begin(), edge_ids.end(), 0);

    std::vector<char> removed(m, 0);
    auto connected_without = [&]() {
        std::vector<std::vector<int>> adj(g.order());
        for (int e = 0; e < m; ++e) {
            if (removed[e]) continue;
            adj[g.edges()[e].first].push_back(g.edges()[e].second);
            adj[g.edges()[e].second].push_back(g.edges()[e].first);
        }
        std::vector<char> seen(g.order(), 0);
        std::vector<int> queue{0};
        seen[0] = 1;
        int reached = 1;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (int w : adj[queue[i]])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    queue.push_back(w);
                }
        return reached == g.order();
    };

    for (int size = 1; size <= m; ++size) {
        bool found = false;
        for_each_combination(edge_ids, size, [&](const std::vector<int>& subset) {
            if (found) return;
            std::fill(removed.begin(), removed.end(), 0);
            for (int e : subset) removed[e] = 1;
            if (!connected_without()) found = true;
        });
        if (found) return size;
    }
    return m;
}

}  // namespace tokengraph
