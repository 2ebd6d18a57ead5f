#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "tokengraph/graph.hpp"
#include "tokengraph/graph_io.hpp"
#include "tokengraph/graph_spec.hpp"

using namespace tokengraph;

TEST_CASE("graph construction") {
    SECTION("cycle") {
        Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
        CHECK(c5.order() == 5);
        CHECK(c5.size() == 5);
        CHECK(c5.has_edge(4, 0));
        CHECK_FALSE(c5.has_edge(0, 2));
        CHECK(c5 == cycle_graph(5));
    }
    SECTION("single edge") {
        Graph k2(2, {{0, 1}});
        CHECK(k2.order() == 2);
        CHECK(k2.size() == 1);
    }
    SECTION("duplicates and reversed pairs collapse") {
        Graph g(4, {{0, 1}, {1, 0}, {0, 1}});
        CHECK(g.size() == 1);
    }
    SECTION("rejects bad input") {
        CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
        CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
        CHECK_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);
    }
}

TEST_CASE("family generators") {
    SECTION("complete") {
        CHECK(complete_graph(4).size() == 6);
        CHECK(complete_graph(1).size() == 0);
        CHECK_THROWS_AS(complete_graph(0), std::invalid_argument);
    }
    SECTION("matched cliques") {
        // 2 * C(3,2) clique edges plus a matching of size 3
        Graph g = matched_cliques(3);
        CHECK(g.order() == 6);
        CHECK(g.size() == 9);
        for (int i = 0; i < 3; ++i) CHECK(g.has_edge(i, 3 + i));
        CHECK(matched_cliques(2).size() == 4);  // two K2 plus a 2-matching is C4
        CHECK_THROWS_AS(matched_cliques(1), std::invalid_argument);
    }
    SECTION("bridged cliques") {
        Graph g = bridged_cliques(4);
        CHECK(g.order() == 8);
        CHECK(g.size() == 13);  // 2 * C(4,2) + 1
        CHECK(g.has_edge(0, 4));
        // the bridge is the unique edge whose removal disconnects
        int bridges = 0;
        for (int e = 0; e < g.size(); ++e) {
            std::vector<std::pair<int, int>> rest;
            for (int f = 0; f < g.size(); ++f)
                if (f != e) rest.push_back(g.edges()[f]);
            Graph cut(g.order(), rest);
            if (!is_connected(cut)) ++bridges;
        }
        CHECK(bridges == 1);
        CHECK_THROWS_AS(bridged_cliques(1), std::invalid_argument);
    }
    SECTION("shared-vertex cliques") {
        Graph g = shared_vertex_cliques(4);
        CHECK(g.order() == 7);
        CHECK(g.size() == 12);
        CHECK(g.degree(0) == 6);
    }
    SECTION("handshake identity across the families") {
        for (const Graph& g : {complete_graph(5), cycle_graph(6), path_graph(4), matched_cliques(3),
                               bridged_cliques(3), shared_vertex_cliques(3)}) {
            int degree_sum = 0;
            for (int v = 0; v < g.order(); ++v) degree_sum += g.degree(v);
            CHECK(degree_sum == 2 * g.size());
        }
    }
}

TEST_CASE("directed path validation") {
    Graph c5 = cycle_graph(5);
    DirectedPath p(c5, {2, 1, 0, 4, 3});
    CHECK(p.length() == 4);
    CHECK(p.source() == 2);
    CHECK(p.target() == 3);
    CHECK(p.contains_edge(4, 0));
    CHECK_FALSE(p.contains_edge(2, 3));

    CHECK_THROWS_AS(DirectedPath(c5, {0, 2}), std::invalid_argument);        // not an edge
    CHECK_THROWS_AS(DirectedPath(c5, {0, 1, 0}), std::invalid_argument);     // repeated vertex
    CHECK_THROWS_AS(DirectedPath(c5, {3}), std::invalid_argument);           // no edge
}

TEST_CASE("edge list round trip") {
    SECTION("fixed example") {
        Graph c5 = parse_edge_list("5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
        CHECK(c5 == cycle_graph(5));
    }
    SECTION("comments and blank lines") {
        Graph g = parse_edge_list("# a triangle\n3\n\n0 1 # first\n1 2\n0 2\n");
        CHECK(g == complete_graph(3));
    }
    SECTION("errors") {
        CHECK_THROWS_AS(parse_edge_list("3\n0 3\n"), std::invalid_argument);  // endpoint out of range
        CHECK_THROWS_AS(parse_edge_list("3\n0\n"), std::invalid_argument);    // malformed line
        CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);          // missing header
        CHECK_THROWS_AS(parse_edge_list("3 4\n0 1\n"), std::invalid_argument);
    }
    SECTION("parse after emit is the identity on random graphs") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            int n = 2 + int(seed % 7) * 8;  // up to n = 50
            Graph g = random_connected_graph(n, 0.3, seed);
            CHECK(parse_edge_list(emit_edge_list(g)) == g);
        }
    }
}

TEST_CASE("dot emission") {
    std::string dot = emit_dot(complete_graph(2));
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    std::size_t statements = 0, at = 0;
    while ((at = dot.find("--", at)) != std::string::npos) {
        ++statements;
        at += 2;
    }
    CHECK(statements == 1);

    std::string labeled = emit_dot(complete_graph(2), [](int v) { return "v" + std::to_string(v); });
    CHECK(labeled.find("label=\"v0\"") != std::string::npos);
}
