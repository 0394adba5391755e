#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cubefan/graph.hpp"
#include "oracles.hpp"

using namespace cubefan;

namespace {

template <class E, class F>
bool throws_with(F&& fn, const std::string& needle) {
    try {
        fn();
    } catch (const E& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    } catch (...) {
        return false;
    }
    return false;
}

} // namespace

TEST_CASE("edge list parsing") {
    Graph p3 = parse_edge_list("3\n1 2\n2 3");
    CHECK(p3.node_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(1, 2));
    CHECK(p3.has_edge(2, 3));
    CHECK(!p3.has_edge(1, 3));
    CHECK(p3 == Graph::path(3));

    Graph single = parse_edge_list("1\n");
    CHECK(single.node_count() == 1);
    CHECK(single.edge_count() == 0);

    SUBCASE("comments, blank lines, duplicate edges") {
        Graph g = parse_edge_list("# header comment\n3\n\n1 2 # inline\n1 2\n");
        CHECK(g.node_count() == 3);
        CHECK(g.edge_count() == 1);
    }

    SUBCASE("errors name the line") {
        CHECK(throws_with<FormatError>([] { parse_edge_list("3\nx y"); }, "line 2"));
        CHECK(throws_with<FormatError>([] { parse_edge_list("2\n1 3"); }, "line 2"));
        CHECK(throws_with<FormatError>([] { parse_edge_list("2\n1 1"); }, "self-loop"));
        CHECK_THROWS_AS(parse_edge_list(""), FormatError);
        CHECK_THROWS_AS(parse_edge_list("3\n1 2 junk"), FormatError);
    }
}

TEST_CASE("graph6 decoding") {
    // Decoded by the published byte layout: 'C'-63 = 4 nodes, '~'-63 = 111111,
    // so all six pairs are edges.
    Graph k4 = parse_graph6("C~");
    CHECK(k4.node_count() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4 == Graph::complete(4));

    CHECK(to_graph6(Graph::complete(3)) == "Bw");
    CHECK(to_graph6(Graph::path(3)) == "Bg");
    CHECK(parse_graph6("Bg") == Graph::path(3));

    SUBCASE("round trip") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 60; ++trial) {
            int n = 1 + static_cast<int>(rng() % 10);
            Graph g = oracle::random_graph(rng, n, 0.4);
            CHECK(parse_graph6(to_graph6(g)) == g);
        }
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(parse_graph6(""), FormatError);
        CHECK_THROWS_AS(parse_graph6("C"), FormatError);   // missing edge bytes
        CHECK_THROWS_AS(parse_graph6("C~~"), FormatError); // trailing bytes
    }
}

TEST_CASE("format auto-detection") {
    CHECK(parse_graph("3\n1 2\n2 3") == Graph::path(3));
    CHECK(parse_graph("C~") == Graph::complete(4));
    CHECK(parse_graph("C~", GraphFormat::Graph6) == Graph::complete(4));
    CHECK_THROWS_AS(parse_graph("C~", GraphFormat::EdgeList), FormatError);
}

TEST_CASE("capacity") {
    CHECK_THROWS_AS(Graph(65), CapacityError);
    CHECK_NOTHROW(Graph(64));
}

TEST_CASE("is_connected") {
    Graph p3 = Graph::path(3);
    CHECK(!is_connected(p3, NodeSet::of({1, 3})));
    CHECK(is_connected(p3, NodeSet::of({1, 2, 3})));
    CHECK(is_connected(p3, NodeSet::single(2)));
    CHECK(!is_connected(p3, NodeSet()));

    Graph c4 = Graph::cycle(4);
    CHECK(!is_connected(c4, NodeSet::of({1, 3})));
    CHECK(is_connected(c4, NodeSet::of({1, 2, 3})));
}

TEST_CASE("connected_components") {
    CHECK(connected_components(Graph::path(3)) ==
          std::vector<NodeSet>{NodeSet::of({1, 2, 3})});

    Graph g(4);
    g.add_edge(1, 2);
    CHECK(connected_components(g) ==
          std::vector<NodeSet>{NodeSet::of({1, 2}), NodeSet::single(3), NodeSet::single(4)});

    CHECK(connected_components(Graph(0)).empty());
}

TEST_CASE("enumerate_tubes") {
    CHECK(enumerate_tubes(Graph::path(3)) ==
          std::vector<NodeSet>{NodeSet::single(1), NodeSet::single(2), NodeSet::single(3),
                               NodeSet::of({1, 2}), NodeSet::of({2, 3}),
                               NodeSet::of({1, 2, 3})});

    CHECK(enumerate_tubes(Graph(1)) == std::vector<NodeSet>{NodeSet::single(1)});
    CHECK(enumerate_tubes(Graph::complete(3)).size() == 7);
    CHECK(enumerate_tubes(Graph(0)).empty());
}

TEST_CASE("tube enumeration equals brute force, all graphs n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
            Graph g(n);
            int t = 0;
            for (int j = 2; j <= n; ++j)
                for (int i = 1; i < j; ++i, ++t)
                    if ((mask >> t) & 1) g.add_edge(i, j);
            REQUIRE(enumerate_tubes(g) == oracle::all_tubes(g));
        }
    }
}

TEST_CASE("graph_fano_test") {
    CHECK(graph_fano_test(Graph::path(2)));
    CHECK(!graph_fano_test(Graph::path(3)));

    Graph g(3); // an edge plus a singleton
    g.add_edge(1, 2);
    CHECK(graph_fano_test(g));

    CHECK(graph_fano_test(Graph(0)));
}
