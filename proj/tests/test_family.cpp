#include <catch2/catch_amalgamated.hpp>

#include "tokengraph/certificate_json.hpp"
#include "tokengraph/family.hpp"
#include "tokengraph/graph_spec.hpp"

using namespace tokengraph;

TEST_CASE("detour family on the complete graph") {
    // X = {0,1}, Y = {0,2}: token 0 stays, and its only neighbor outside
    // both configurations is 3.
    Graph k4 = complete_graph(4);
    DetourFamily family = build_detour_family(k4, {0, 1}, {0, 2});
    REQUIRE(family.neighbor_counts == std::vector<int>{1});
    REQUIRE(family.members.size() == 1);
    const std::vector<TokenConfig> expected = {{0, 1}, {1, 3}, {2, 3}, {0, 2}};
    CHECK(family.members[0].path.configs == expected);
    CHECK(family.members[0].kind == FamilyKind::detour);
}

TEST_CASE("detour family with a single token is empty") {
    Graph k4 = complete_graph(4);
    DetourFamily family = build_detour_family(k4, {1}, {2});
    CHECK(family.members.empty());
    CHECK(family.neighbor_counts.empty());
}

TEST_CASE("detour members have length three and the internal signature") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Graph g = random_connected_graph(7, 0.6, 1100 + seed);
        const auto& edge = g.edges()[seed % g.edges().size()];
        const int x = edge.first, y = edge.second;
        TokenConfig source, target;
        for (int v = 0; v < g.order() && source.size() < 3; ++v)
            if (v != x && v != y) {
                source.push_back(v);
                target.push_back(v);
            }
        source.push_back(x);
        target.push_back(y);
        std::sort(source.begin(), source.end());
        std::sort(target.begin(), target.end());
        for (const auto& member : build_detour_family(g, source, target).members) {
            REQUIRE(member.path.length() == 3);
            // first internal keeps x (not yet swapped), second keeps y;
            // both stand on the parked token's outside neighbor
            const TokenConfig& aside = member.path.configs[1];
            const TokenConfig& swapped = member.path.configs[2];
            CHECK(std::binary_search(aside.begin(), aside.end(), x));
            CHECK_FALSE(std::binary_search(aside.begin(), aside.end(), y));
            CHECK(std::binary_search(swapped.begin(), swapped.end(), y));
            CHECK_FALSE(std::binary_search(swapped.begin(), swapped.end(), x));
            const int parked = member.path.moves[0].second;
            CHECK(std::binary_search(aside.begin(), aside.end(), parked));
            CHECK(std::binary_search(swapped.begin(), swapped.end(), parked));
            CHECK_FALSE(std::binary_search(source.begin(), source.end(), parked));
            CHECK_FALSE(std::binary_search(target.begin(), target.end(), parked));
            // the token that moved aside is absent from both internals
            const int stepped = member.path.moves[0].first;
            CHECK_FALSE(std::binary_search(aside.begin(), aside.end(), stepped));
            CHECK_FALSE(std::binary_search(swapped.begin(), swapped.end(), stepped));
        }
    }
}

TEST_CASE("lifting a two-step detour passes through both swapped vertices") {
    Graph k4 = complete_graph(4);
    std::vector<DirectedPath> flow{DirectedPath(k4, {1, 0, 2}), DirectedPath(k4, {1, 2}),
                                   DirectedPath(k4, {1, 3, 2})};
    MengerSystem system = repair_menger_system(k4, flow, 1, 2, {0});
    auto members = lift_system_paths(k4, system, {0, 1}, {0, 2});
    REQUIRE(members.size() == 3);
    bool found = false;
    for (const auto& member : members) {
        if (member.path.configs.size() == 3 && member.path.configs[1] == TokenConfig{1, 2}) {
            // internal configuration holds x = 1 and y = 2 at once
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("lifting a good path shifts both endpoints") {
    Graph c6 = cycle_graph(6);
    std::vector<DirectedPath> flow{DirectedPath(c6, {0, 1}), DirectedPath(c6, {0, 5, 4, 3, 2, 1})};
    MengerSystem system = repair_menger_system(c6, flow, 0, 1, {3});
    auto members = lift_system_paths(c6, system, {0, 3}, {1, 3});
    REQUIRE(members.size() == 2);

    const auto& shifted = members[1];
    REQUIRE(shifted.kind == FamilyKind::shifted);
    CHECK(shifted.path.length() == 5);
    const std::vector<TokenConfig> expected = {{0, 3}, {3, 5}, {2, 5}, {2, 4}, {2, 3}, {1, 3}};
    CHECK(shifted.path.configs == expected);
    // internal configurations avoid both swapped vertices
    for (std::size_t i = 1; i + 1 < shifted.path.configs.size(); ++i) {
        const auto& c = shifted.path.configs[i];
        CHECK_FALSE(std::binary_search(c.begin(), c.end(), 0));
        CHECK_FALSE(std::binary_search(c.begin(), c.end(), 1));
    }
}

TEST_CASE("a mistagged system path is rejected while lifting") {
    // a path whose first internal vertex sits on a stationary token must
    // not be tagged good; lifting catches the inconsistency
    Graph c5 = cycle_graph(5);
    MengerSystem forged;
    forged.x = 0;
    forged.y = 1;
    forged.stationary = {4};
    forged.paths.push_back({DirectedPath(c5, {0, 4, 3, 2, 1}), PathClass::good, 4, 2});
    CHECK_THROWS_AS(lift_system_paths(c5, forged, {0, 4}, {1, 4}), invariant_error);
}

TEST_CASE("family construction on the five-cycle") {
    TokenGraph tg = build_token_graph(cycle_graph(5), 2);
    FamilyCertificate cert = construct_family(tg, {1, 2}, {1, 3});
    CHECK(cert.bound == 2);
    CHECK(cert.achieved >= 2);
    // never more than the true flow between the two vertices
    auto flow = max_flow_paths(tg.graph, tg.rank({1, 2}), tg.rank({1, 3}));
    CHECK(cert.achieved <= int(flow.size()));
}

TEST_CASE("family construction on the complete graph is tight") {
    TokenGraph tg = build_token_graph(complete_graph(4), 2);
    FamilyCertificate cert = construct_family(tg, {0, 1}, {0, 2});
    CHECK(cert.bound == 4);
    // the configuration degree is 4, so the family cannot be larger either
    CHECK(cert.achieved == 4);
}

TEST_CASE("every token in play still meets the bound") {
    // k = n-1 forces the base graph complete; no outside neighbors remain,
    // so the family is carried entirely by the repaired path system
    TokenGraph tg = build_token_graph(complete_graph(4), 3);
    FamilyCertificate cert = construct_family(tg, {0, 1, 2}, {0, 1, 3});
    CHECK(cert.bound == 3);
    CHECK(cert.achieved == 3);
    CHECK(cert.outside_neighbor_counts == std::vector<int>{0, 0});
}

TEST_CASE("the smallest base graph") {
    TokenGraph tg = build_token_graph(complete_graph(2), 1);
    FamilyCertificate cert = construct_family(tg, {0}, {1});
    CHECK(cert.achieved == 1);
    CHECK(cert.bound == 1);
}

TEST_CASE("construction is deterministic") {
    Graph g = random_connected_graph(7, 0.7, 99);
    REQUIRE(edge_connectivity(g) >= 2);
    TokenGraph tg = build_token_graph(g, 2);
    const auto& [a, b] = tg.graph.edges()[tg.graph.size() / 2];
    const std::string first = certificate_json(construct_family(tg, tg.config(a), tg.config(b))).dump();
    const std::string second = certificate_json(construct_family(tg, tg.config(a), tg.config(b))).dump();
    CHECK(first == second);
}

TEST_CASE("single-token families are the base Menger paths") {
    TokenGraph tg = build_token_graph(complete_graph(3), 1);
    FamilyCertificate cert = construct_family(tg, {0}, {1});
    CHECK(cert.achieved == 2);
    CHECK(cert.bound == 2);
    CHECK(cert.members.size() == 2);
    for (const auto& member : cert.members) CHECK(member.kind == FamilyKind::direct);
}

TEST_CASE("construction refuses a violated hypothesis") {
    // bridged cliques have edge-connectivity 1, so two tokens are too many
    TokenGraph tg = build_token_graph(bridged_cliques(3), 2);
    CHECK_THROWS_AS(construct_family(tg, {0, 1}, {0, 2}), std::invalid_argument);
}

TEST_CASE("construction refuses non-adjacent configurations") {
    TokenGraph tg = build_token_graph(cycle_graph(5), 2);
    CHECK_THROWS_AS(construct_family(tg, {1, 2}, {2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(construct_family(tg, {1, 2}, {3, 4}), std::invalid_argument);
}

TEST_CASE("edge-disjointness checker reports the clash") {
    TokenGraph tg = build_token_graph(cycle_graph(5), 2);
    LiftedPath lift = lift_path(tg.base, {1, 2}, DirectedPath(tg.base, {2, 3}));
    std::vector<FamilyMember> twice{{lift, FamilyKind::direct}, {lift, FamilyKind::direct}};
    DisjointnessReport report = verify_edge_disjoint(twice, tg);
    REQUIRE_FALSE(report.disjoint);
    CHECK(report.first_member == 0);
    CHECK(report.second_member == 1);
}

TEST_CASE("detour members for distinct tokens stay disjoint") {
    TokenGraph tg = build_token_graph(complete_graph(5), 3);
    DetourFamily family = build_detour_family(tg.base, {0, 1, 2}, {0, 1, 3});
    REQUIRE(family.members.size() == 2);  // tokens 0 and 1, sole outside neighbor 4
    CHECK(verify_edge_disjoint(family.members, tg).disjoint);
}

TEST_CASE("certificates hold across a random corpus") {
    int certificates = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const int n = 5 + int(seed % 3);
        Graph g = random_connected_graph(n, 0.6, 1200 + seed);
        const int lambda = edge_connectivity(g);
        for (int k = 1; k <= std::min(3, lambda); ++k) {
            TokenGraph tg = build_token_graph(g, k);
            const int step = std::max(1, tg.graph.size() / 8);
            for (int e = 0; e < tg.graph.size(); e += step) {
                const auto& [a, b] = tg.graph.edges()[e];
                FamilyCertificate cert = construct_family(tg, tg.config(a), tg.config(b));
                ++certificates;
                REQUIRE(cert.achieved >= cert.bound);
                REQUIRE(cert.bound == k * (lambda - k + 1));
                // the certificate never claims more than the true flow
                auto flow = max_flow_paths(tg.graph, a, b);
                REQUIRE(cert.achieved <= int(flow.size()));
            }
        }
    }
    REQUIRE(certificates >= 100);
}

// heavier instances, run on demand: ./unit_tests "[stress]"
TEST_CASE("certificates on ten-vertex graphs", "[.][stress]") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Graph g = random_connected_graph(10, 0.55, 1300 + seed);
        const int lambda = edge_connectivity(g);
        for (int k = 2; k <= std::min(4, lambda); ++k) {
            TokenGraph tg = build_token_graph(g, k);
            const int step = std::max(1, tg.graph.size() / 40);
            for (int e = 0; e < tg.graph.size(); e += step) {
                const auto& [a, b] = tg.graph.edges()[e];
                FamilyCertificate cert = construct_family(tg, tg.config(a), tg.config(b));
                REQUIRE(cert.achieved >= k * (lambda - k + 1));
            }
        }
    }
}

TEST_CASE("certificate json shape") {
    TokenGraph tg = build_token_graph(complete_graph(4), 2);
    FamilyCertificate cert = construct_family(tg, {0, 1}, {0, 2});
    auto doc = certificate_json(cert);
    const std::string text = doc.dump();
    CHECK(text.rfind("{\"schema\":1,\"k\":2,", 0) == 0);  // stable field order
    CHECK(doc["bound"] == 4);
    CHECK(doc["achieved"] == 4);
    CHECK(doc["X"] == nlohmann::ordered_json({0, 1}));
    CHECK(doc["families"].size() == 4);
    for (const auto& entry : doc["families"]) {
        CHECK(entry["configs"].size() == entry["moves"].size() + 1);
    }
}
