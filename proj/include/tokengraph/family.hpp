#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "connectivity.hpp"
#include "graph.hpp"
#include "lifting.hpp"
#include "menger.hpp"
#include "token_graph.hpp"

namespace tokengraph {

// Which construction a family member came from:
//   detour:  length-3 lift through an outside neighbor of a stationary token
//   direct:  straight lift of a token-free or two-step-detour base path
//   shifted: lift of a good base path with both endpoints shifted off x, y
enum class FamilyKind { detour, direct, shifted };

inline const char* family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::detour: return "detour";
        case FamilyKind::direct: return "direct";
        default: return "shifted";
    }
}

struct FamilyMember {
    LiftedPath path;
    FamilyKind kind;
};

namespace detail {

// The swapped pair of two adjacent configurations: x leaves X, y enters Y.
inline std::pair<int, int> swapped_pair(const TokenConfig& source, const TokenConfig& target) {
    std::vector<int> out_x, in_y;
    std::set_difference(source.begin(), source.end(), target.begin(), target.end(), std::back_inserter(out_x));
    std::set_difference(target.begin(), target.end(), source.begin(), source.end(), std::back_inserter(in_y));
    if (out_x.size() != 1 || in_y.size() != 1)
        throw std::invalid_argument("configurations do not differ in exactly one token");
    return {out_x[0], in_y[0]};
}

inline DirectedPath edge_path(const Graph& g, int u, int v) { return DirectedPath(g, {u, v}); }

}  // namespace detail

struct DetourFamily {
    std::vector<FamilyMember> members;
    // Outside-neighbor count per stationary token, in increasing token order.
    std::vector<int> neighbor_counts;
};

// For each stationary token z and each neighbor u of z outside both
// configurations, the length-3 member: slide z aside to u, swap x for y,
// slide the token back from u to z. Members for different tokens share no
// internal configuration, and neither do members for different neighbors
// of the same token.
inline DetourFamily build_detour_family(const Graph& g, const TokenConfig& source, const TokenConfig& target) {
    const auto [x, y] = detail::swapped_pair(source, target);
    if (!g.has_edge(x, y)) throw std::invalid_argument("configurations are not adjacent: swapped pair is not an edge");

    TokenConfig stationary;
    std::set_intersection(source.begin(), source.end(), target.begin(), target.end(),
                          std::back_inserter(stationary));

    DetourFamily family;
    for (int z : stationary) {
        int count = 0;
        for (int u : g.neighbors(z)) {
            if (std::binary_search(source.begin(), source.end(), u) ||
                std::binary_search(target.begin(), target.end(), u))
                continue;
            LiftedPath aside = lift_path(g, source, detail::edge_path(g, z, u));
            LiftedPath swap = lift_path(g, aside.target(), detail::edge_path(g, x, y));
            LiftedPath back = lift_path(g, swap.target(), detail::edge_path(g, u, z));
            family.members.push_back({concat(concat(std::move(aside), swap), back), FamilyKind::detour});
            ++count;
        }
        family.neighbor_counts.push_back(count);
    }
    return family;
}

// Lifts the repaired path system: token-free and two-step-detour paths
// lift directly; good paths lift between shifted endpoint configurations
// (token x parks on the path's first internal vertex, the far token
// arrives from its last one); bad paths are skipped.
inline std::vector<FamilyMember> lift_system_paths(const Graph& g, const MengerSystem& system,
                                                   const TokenConfig& source, const TokenConfig& target) {
    std::vector<FamilyMember> members;
    for (const auto& entry : system.paths) {
        switch (entry.cls) {
            case PathClass::token_free:
            case PathClass::two_step_detour:
                members.push_back({lift_path(g, source, entry.path), FamilyKind::direct});
                break;
            case PathClass::bad:
                break;
            case PathClass::good: {
                const int x_r = entry.first_internal, y_r = entry.last_internal;
                if (std::binary_search(source.begin(), source.end(), x_r) ||
                    std::binary_search(target.begin(), target.end(), x_r) ||
                    std::binary_search(source.begin(), source.end(), y_r) ||
                    std::binary_search(target.begin(), target.end(), y_r))
                    throw invariant_error("good path endpoint lies inside a configuration");
                const auto& verts = entry.path.vertices();
                DirectedPath middle(g, std::vector<int>(verts.begin() + 1, verts.end() - 1));
                LiftedPath park = lift_path(g, source, detail::edge_path(g, system.x, x_r));
                LiftedPath across = lift_path(g, park.target(), middle);
                LiftedPath finish = lift_path(g, across.target(), detail::edge_path(g, y_r, system.y));
                members.push_back({concat(concat(std::move(park), across), finish), FamilyKind::shifted});
                break;
            }
        }
    }
    return members;
}

// Result of checking a family for pairwise edge-disjointness in the
// token graph; on failure carries the shared edge and both member indices.
struct DisjointnessReport {
    bool disjoint = true;
    int first_member = -1;
    int second_member = -1;
    TokenConfig edge_a, edge_b;
};

inline DisjointnessReport verify_edge_disjoint(const std::vector<FamilyMember>& members, const TokenGraph& tg) {
    std::map<std::pair<int, int>, int> owner;
    for (std::size_t idx = 0; idx < members.size(); ++idx) {
        const auto& configs = members[idx].path.configs;
        for (std::size_t i = 0; i + 1 < configs.size(); ++i) {
            const int a = tg.rank(configs[i]);
            const int b = tg.rank(configs[i + 1]);
            auto key = std::minmax(a, b);
            auto [it, fresh] = owner.emplace(std::pair<int, int>(key.first, key.second), int(idx));
            if (!fresh)
                return {false, it->second, int(idx), configs[i], configs[i + 1]};
        }
    }
    return {};
}

// An explicit family of pairwise edge-disjoint paths between two adjacent
// token-graph vertices, with the counts that certify its size against the
// k(lambda - k + 1) lower bound.
struct FamilyCertificate {
    int k = 0;
    int lambda_g = 0;
    int x = -1, y = -1;
    TokenConfig source, target;
    std::vector<FamilyMember> members;
    std::vector<int> outside_neighbor_counts;  // per stationary token
    int doubly_adjacent_count = 0;
    int token_free_count = 0;
    int bad_count = 0;
    int good_count = 0;
    int bound = 0;
    int achieved = 0;
};

// Builds and checks the full family between two adjacent configurations:
// detour members plus lifted system members. Throws invariant_error if
// any certified property fails; throws std::invalid_argument when the
// inputs violate the k <= lambda(G) hypothesis or are not adjacent.
inline FamilyCertificate construct_family(const TokenGraph& tg, const TokenConfig& source,
                                          const TokenConfig& target) {
    const Graph& g = tg.base;
    validate_config(g.order(), tg.k, source);
    validate_config(g.order(), tg.k, target);
    const auto [x, y] = detail::swapped_pair(source, target);
    if (!g.has_edge(x, y))
        throw std::invalid_argument("configurations are not adjacent in the token graph");
    if (!is_connected(g)) throw std::invalid_argument("base graph must be connected");

    const int k = tg.k;
    const int t = edge_connectivity(g);
    if (k > t)
        throw std::invalid_argument("token count " + std::to_string(k) +
                                    " exceeds the edge-connectivity " + std::to_string(t));

    std::vector<DirectedPath> flow = max_flow_paths(g, x, y);
    if (int(flow.size()) < t) throw invariant_error("max-flow produced fewer than lambda paths");
    flow.erase(flow.begin() + t, flow.end());  // keep the first lambda(G), deterministically

    TokenConfig stationary;
    std::set_intersection(source.begin(), source.end(), target.begin(), target.end(),
                          std::back_inserter(stationary));
    MengerSystem system = repair_menger_system(g, std::move(flow), x, y, stationary);

    DetourFamily detours = build_detour_family(g, source, target);
    std::vector<FamilyMember> lifted = lift_system_paths(g, system, source, target);

    FamilyCertificate cert;
    cert.k = k;
    cert.lambda_g = t;
    cert.x = x;
    cert.y = y;
    cert.source = source;
    cert.target = target;
    cert.members = std::move(detours.members);
    cert.members.insert(cert.members.end(), std::make_move_iterator(lifted.begin()),
                        std::make_move_iterator(lifted.end()));
    cert.outside_neighbor_counts = std::move(detours.neighbor_counts);
    cert.doubly_adjacent_count = int(system.doubly_adjacent.size());
    cert.token_free_count = system.count(PathClass::token_free);
    cert.bad_count = system.count(PathClass::bad);
    cert.good_count = system.count(PathClass::good);
    cert.bound = k * (t - k + 1);
    cert.achieved = int(cert.members.size());

    // counting floors: a stationary token has at least t - k outside
    // neighbors, one more when it is not adjacent to both x and y
    int neighbor_total = 0;
    for (std::size_t i = 0; i < stationary.size(); ++i) {
        const bool doubly = std::binary_search(system.doubly_adjacent.begin(),
                                               system.doubly_adjacent.end(), stationary[i]);
        const int floor = doubly ? t - k : t - k + 1;
        if (cert.outside_neighbor_counts[i] < floor)
            throw invariant_error("stationary token " + std::to_string(stationary[i]) +
                                  " has fewer outside neighbors than its floor");
        neighbor_total += cert.outside_neighbor_counts[i];
    }
    if (neighbor_total < (k - 1) * (t - k + 1) - cert.doubly_adjacent_count)
        throw invariant_error("detour family is smaller than its counting floor");

    // partition identity and the bad-path cap
    if (cert.doubly_adjacent_count + cert.token_free_count + cert.bad_count + cert.good_count != t)
        throw invariant_error("path classification does not partition the system");
    if (cert.bad_count > k - 1 - cert.doubly_adjacent_count)
        throw invariant_error("bad path count exceeds its cap");

    // family size bookkeeping and the certified bound
    if (cert.achieved != neighbor_total + cert.doubly_adjacent_count + cert.token_free_count + cert.good_count)
        throw invariant_error("family size disagrees with its counting identity");
    if (cert.achieved < cert.bound)
        throw invariant_error("family of " + std::to_string(cert.achieved) +
                              " paths misses the bound " + std::to_string(cert.bound));

    // structural verification against the materialized token graph
    for (const auto& member : cert.members) {
        std::string why;
        if (!is_token_path(tg, member.path, &why)) throw invariant_error("invalid family member: " + why);
        if (member.path.source() != source || member.path.target() != target)
            throw invariant_error("family member does not run between the two configurations");
    }
    DisjointnessReport report = verify_edge_disjoint(cert.members, tg);
    if (!report.disjoint)
        throw invariant_error("family members " + std::to_string(report.first_member) + " and " +
                              std::to_string(report.second_member) + " share the edge " +
                              config_label(report.edge_a) + " -- " + config_label(report.edge_b));
    return cert;
}

inline FamilyCertificate construct_family(const Graph& g, int k, const TokenConfig& source,
                                          const TokenConfig& target) {
    return construct_family(build_token_graph(g, k), source, target);
}

}  // namespace tokengraph
