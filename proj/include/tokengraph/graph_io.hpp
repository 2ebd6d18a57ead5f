#pragma once

#include <functional>
#include <sstream>
#include <string>

#include "graph.hpp"

namespace tokengraph {

// Edge-list text format: the first non-blank line is the vertex count,
// then one "u v" pair per line, 0-based. '#' starts a comment; blank
// lines are skipped.
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        std::string extra;
        if (n < 0) {
            if (!(fields >> n) || n < 0 || (fields >> extra))
                throw std::invalid_argument("line " + std::to_string(lineno) + ": malformed vertex count header");
        } else {
            int u = 0, v = 0;
            if (!(fields >> u >> v) || (fields >> extra))
                throw std::invalid_argument("line " + std::to_string(lineno) + ": expected \"u v\"");
            edges.emplace_back(u, v);
        }
    }
    if (n < 0) throw std::invalid_argument("missing vertex count header");
    return Graph(n, std::move(edges));
}

inline std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

// DOT output for an undirected graph, one edge statement per edge. The
// optional labeler supplies display labels, e.g. token-set strings
// "{a,b,...}" for token-graph vertices.
inline std::string emit_dot(const Graph& g, const std::function<std::string(int)>& label = {}) {
    std::ostringstream out;
    out << "graph G {\n";
    if (label) {
        for (int v = 0; v < g.order(); ++v) out << "  " << v << " [label=\"" << label(v) << "\"];\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace tokengraph
