#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "token_graph.hpp"

namespace tokengraph {

// A base-graph path is admissible for a configuration when it starts on a
// token and ends on an unoccupied vertex; exactly the paths that can be
// lifted to the token graph.
inline bool is_admissible(const DirectedPath& path, const TokenConfig& config) {
    return std::binary_search(config.begin(), config.end(), path.source()) &&
           !std::binary_search(config.begin(), config.end(), path.target());
}

// A walk of the token graph recorded both as configurations and as the
// single-token moves between them. Lifting preserves length, so a lift of
// a base path of length m has m moves and m+1 configurations.
struct LiftedPath {
    std::vector<TokenConfig> configs;
    std::vector<std::pair<int, int>> moves;

    int length() const { return int(moves.size()); }
    const TokenConfig& source() const { return configs.front(); }
    const TokenConfig& target() const { return configs.back(); }
};

inline TokenConfig config_after_move(const TokenConfig& config, int from, int to) {
    TokenConfig next;
    next.reserve(config.size());
    for (int v : config)
        if (v != from) next.push_back(v);
    next.insert(std::upper_bound(next.begin(), next.end(), to), to);
    return next;
}

// Lifts an admissible path into the token graph by simulating token
// occupancy: the last token on the path slides to the free far end, then
// each earlier token slides forward into the slot the next one vacated.
// Every single-edge slide must land on an unoccupied vertex; the
// simulation checks this instead of assuming it.
inline LiftedPath lift_path(const Graph& g, const TokenConfig& config, const DirectedPath& path) {
    validate_config(g.order(), int(config.size()), config);
    if (!is_admissible(path, config))
        throw std::invalid_argument("path is not admissible for the configuration");

    const auto& verts = path.vertices();
    std::vector<char> occupied(g.order(), 0);
    for (int v : config) occupied[v] = 1;

    std::vector<int> token_pos;
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (occupied[verts[i]]) token_pos.push_back(int(i));
    // admissibility puts the first token at the path head and none at the tail

    std::vector<std::pair<int, int>> stages;  // index ranges on the path
    const int q = int(token_pos.size());
    stages.emplace_back(token_pos[q - 1], int(verts.size()) - 1);
    for (int j = q - 2; j >= 0; --j) stages.emplace_back(token_pos[j], token_pos[j + 1]);

    LiftedPath lifted;
    lifted.configs.push_back(config);
    for (const auto& [begin, end] : stages) {
        for (int i = begin; i < end; ++i) {
            const int from = verts[i], to = verts[i + 1];
            if (occupied[to]) throw invariant_error("lift would move a token onto an occupied vertex");
            occupied[from] = 0;
            occupied[to] = 1;
            lifted.moves.emplace_back(from, to);
            lifted.configs.push_back(config_after_move(lifted.configs.back(), from, to));
        }
    }
    if (lifted.length() != path.length()) throw invariant_error("lifted path length mismatch");
    return lifted;
}

// Joins two lifts sharing a junction configuration.
inline LiftedPath concat(LiftedPath first, const LiftedPath& second) {
    if (first.configs.back() != second.configs.front())
        throw std::invalid_argument("lifted paths do not share a junction configuration");
    first.configs.insert(first.configs.end(), second.configs.begin() + 1, second.configs.end());
    first.moves.insert(first.moves.end(), second.moves.begin(), second.moves.end());
    return first;
}

// True when the lift is a genuine path of the materialized token graph:
// all configurations distinct and every consecutive pair an edge. On
// failure, why (if given) receives a description.
inline bool is_token_path(const TokenGraph& tg, const LiftedPath& lifted, std::string* why = nullptr) {
    auto fail = [&](const std::string& message) {
        if (why) *why = message;
        return false;
    };
    if (lifted.configs.size() < 2) return fail("lifted path has no edges");
    if (lifted.moves.size() + 1 != lifted.configs.size()) return fail("move/configuration count mismatch");
    std::unordered_set<int> seen;
    int prev = -1;
    for (std::size_t i = 0; i < lifted.configs.size(); ++i) {
        const int id = tg.rank(lifted.configs[i]);
        if (!seen.insert(id).second)
            return fail("configuration " + config_label(lifted.configs[i]) + " repeats");
        if (i > 0 && !tg.graph.has_edge(prev, id))
            return fail("configurations " + config_label(lifted.configs[i - 1]) + " and " +
                        config_label(lifted.configs[i]) + " are not adjacent");
        prev = id;
    }
    return true;
}

}  // namespace tokengraph
