#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "connectivity.hpp"
#include "graph.hpp"

namespace tokengraph {

// Role of a path inside a repaired system of edge-disjoint x-y paths.
//   two_step_detour: the path x,z,y through a stationary token adjacent
//                    to both ends (present for every such token after repair)
//   token_free:      touches no stationary token at all
//   bad:             first or last internal vertex sits on a stationary
//                    token; skipped when lifting
//   good:            meets stationary tokens only strictly inside
enum class PathClass { two_step_detour, token_free, bad, good };

struct ClassifiedPath {
    DirectedPath path;
    PathClass cls;
    // First and last internal vertices, -1 for single-edge paths. Only
    // bad/good paths use them as shifted lift endpoints.
    int first_internal = -1;
    int last_internal = -1;
};

// A repaired maximum family of pairwise edge-disjoint x-y paths together
// with its classification bookkeeping. `stationary` holds the tokens that
// stay put while x swaps for y; `doubly_adjacent` are those adjacent to
// both x and y.
struct MengerSystem {
    int x = -1;
    int y = -1;
    std::vector<int> stationary;
    std::vector<int> doubly_adjacent;
    std::vector<ClassifiedPath> paths;

    int count(PathClass cls) const {
        int total = 0;
        for (const auto& entry : paths)
            if (entry.cls == cls) ++total;
        return total;
    }
};

namespace detail {

inline void check_edge_disjoint(const std::vector<DirectedPath>& paths, const char* when) {
    std::map<std::pair<int, int>, std::size_t> owner;
    for (std::size_t r = 0; r < paths.size(); ++r) {
        for (const auto& edge : paths[r].edge_set()) {
            auto [it, fresh] = owner.emplace(edge, r);
            if (!fresh)
                throw invariant_error(std::string(when) + ": paths " + std::to_string(it->second) +
                                      " and " + std::to_string(r) + " share edge " +
                                      std::to_string(edge.first) + "-" + std::to_string(edge.second));
        }
    }
}

// Removes loops from a walk, keeping a subset of its edges: whenever a
// vertex repeats, the cycle between its two occurrences is dropped.
inline std::vector<int> shortcut_walk(const std::vector<int>& walk) {
    std::vector<int> out;
    std::map<int, int> pos;
    for (int v : walk) {
        auto it = pos.find(v);
        if (it != pos.end()) {
            while (int(out.size()) > it->second + 1) {
                pos.erase(out.back());
                out.pop_back();
            }
        } else {
            pos[v] = int(out.size());
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace detail

// Rewrites a maximum family of pairwise edge-disjoint x-y paths so that
// for every stationary token z adjacent to both x and y, the two-step
// path x,z,y is itself a member, then classifies every path. The family
// keeps its size and edge-disjointness throughout.
//
// For each such z (in increasing order) exactly one case applies:
//   - neither edge xz nor zy is used: swap the detour in for the
//     lowest-indexed path that is not itself a two-step detour;
//   - exactly one of them is used, by path P: swap the detour in for P;
//   - both are used by different paths: those two paths are re-spliced
//     into the detour plus one path over their remaining edges
//     (shortcut to a simple path when the splice revisits a vertex).
inline MengerSystem repair_menger_system(const Graph& g, std::vector<DirectedPath> paths, int x, int y,
                                         std::vector<int> stationary) {
    if (x < 0 || y < 0 || x >= g.order() || y >= g.order() || x == y)
        throw std::invalid_argument("repair needs two distinct vertices of the graph");
    std::sort(stationary.begin(), stationary.end());
    if (std::adjacent_find(stationary.begin(), stationary.end()) != stationary.end())
        throw std::invalid_argument("stationary tokens must be distinct");
    for (int z : stationary)
        if (z == x || z == y || z < 0 || z >= g.order())
            throw std::invalid_argument("stationary tokens must avoid x and y and lie in the graph");
    if (paths.size() < stationary.size() + 1)
        throw std::invalid_argument("need at least k edge-disjoint paths to repair");
    for (const auto& path : paths)
        if (path.source() != x || path.target() != y)
            throw std::invalid_argument("every path must run from x to y");
    detail::check_edge_disjoint(paths, "input family");

    std::vector<int> doubly_adjacent;
    for (int z : stationary)
        if (g.has_edge(x, z) && g.has_edge(z, y)) doubly_adjacent.push_back(z);

    auto is_two_step_detour = [&](const DirectedPath& path) {
        return path.length() == 2 &&
               std::binary_search(doubly_adjacent.begin(), doubly_adjacent.end(), path.vertices()[1]);
    };

    for (int z : doubly_adjacent) {
        int uses_xz = -1, uses_zy = -1;
        for (std::size_t r = 0; r < paths.size(); ++r) {
            const auto& verts = paths[r].vertices();
            if (verts[1] == z) uses_xz = int(r);                  // xz can only be a first edge
            if (verts[verts.size() - 2] == z) uses_zy = int(r);   // zy can only be a last edge
        }
        if (uses_xz >= 0 && uses_xz == uses_zy) continue;  // already the two-step detour

        DirectedPath detour(g, {x, z, y});
        if (uses_xz < 0 && uses_zy < 0) {
            int victim = -1;
            for (std::size_t r = 0; r < paths.size(); ++r) {
                if (!is_two_step_detour(paths[r])) {
                    victim = int(r);
                    break;
                }
            }
            if (victim < 0) throw invariant_error("no replaceable path found during repair");
            paths[victim] = std::move(detour);
        } else if (uses_xz < 0 || uses_zy < 0) {
            paths[uses_xz < 0 ? uses_zy : uses_xz] = std::move(detour);
        } else {
            // splice: prefix of the zy-path down to z, then the xz-path after z
            const auto& xz_path = paths[uses_xz].vertices();
            const auto& zy_path = paths[uses_zy].vertices();
            std::vector<int> walk(zy_path.begin(), zy_path.end() - 1);
            walk.insert(walk.end(), xz_path.begin() + 2, xz_path.end());
            DirectedPath spliced(g, detail::shortcut_walk(walk));
            paths[uses_xz] = std::move(detour);
            paths[uses_zy] = std::move(spliced);
        }
    }
    detail::check_edge_disjoint(paths, "repaired family");

    MengerSystem system;
    system.x = x;
    system.y = y;
    system.stationary = std::move(stationary);
    system.doubly_adjacent = doubly_adjacent;
    const auto& tokens = system.stationary;

    for (auto& path : paths) {
        ClassifiedPath entry{std::move(path), PathClass::token_free, -1, -1};
        const auto& verts = entry.path.vertices();
        if (verts.size() > 2) {
            entry.first_internal = verts[1];
            entry.last_internal = verts[verts.size() - 2];
        }
        if (is_two_step_detour(entry.path)) {
            entry.cls = PathClass::two_step_detour;
        } else {
            bool touches = false;
            for (int v : verts)
                if (std::binary_search(tokens.begin(), tokens.end(), v)) touches = true;
            if (!touches) {
                entry.cls = PathClass::token_free;
            } else {
                if (entry.path.length() < 3)
                    throw invariant_error("token-touching path shorter than three edges after repair");
                const bool first_on_token =
                    std::binary_search(tokens.begin(), tokens.end(), entry.first_internal);
                const bool last_on_token =
                    std::binary_search(tokens.begin(), tokens.end(), entry.last_internal);
                if (std::binary_search(doubly_adjacent.begin(), doubly_adjacent.end(), entry.first_internal) ||
                    std::binary_search(doubly_adjacent.begin(), doubly_adjacent.end(), entry.last_internal))
                    throw invariant_error("path endpoint rests on a doubly adjacent token after repair");
                entry.cls = (first_on_token || last_on_token) ? PathClass::bad : PathClass::good;
            }
        }
        system.paths.push_back(std::move(entry));
    }

    // every two-step detour must be present, exactly once each
    if (system.count(PathClass::two_step_detour) != int(doubly_adjacent.size()))
        throw invariant_error("repair failed to install every two-step detour");
    // partition sanity: |N| = detours + token-free + bad + good by
    // construction; the bad count is capped by the stationary tokens that
    // are not doubly adjacent
    const int bad = system.count(PathClass::bad);
    const int spare = int(system.stationary.size()) - int(doubly_adjacent.size());
    if (bad > spare)
        throw invariant_error("bad path count " + std::to_string(bad) + " exceeds its cap " +
                              std::to_string(spare));
    return system;
}

}  // namespace tokengraph
