#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "cubefan/fan.hpp"
#include "oracles.hpp"

using namespace cubefan;

namespace {

std::vector<std::vector<FacetLabel>> sorted_sets(std::vector<std::vector<FacetLabel>> sets) {
    for (auto& set : sets) std::sort(set.begin(), set.end(), label_less);
    std::sort(sets.begin(), sets.end(),
              [](const std::vector<FacetLabel>& a, const std::vector<FacetLabel>& b) {
                  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                                      label_less);
              });
    return sets;
}

Graph from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int t = 0;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i, ++t)
            if ((mask >> t) & 1) g.add_edge(i, j);
    return g;
}

// Relabels the nodes of comp as 1..|comp| and restricts g to it.
Graph component_graph(const Graph& g, NodeSet comp) {
    std::vector<int> nodes = comp.elements();
    Graph out(static_cast<int>(nodes.size()));
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b)
            if (g.has_edge(nodes[a], nodes[b]))
                out.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
    return out;
}

} // namespace

TEST_CASE("ray_vector") {
    CHECK(ray_vector(FacetLabel::make_tube(NodeSet::of({1, 3})), 3) ==
          LatticeVector{1, 0, 1});
    CHECK(ray_vector(FacetLabel::make_bar(2), 3) == LatticeVector{0, -1, 0});
    CHECK(ray_vector(FacetLabel::make_tube(NodeSet::of({1, 2})), 2) == LatticeVector{1, 1});
}

TEST_CASE("label order and strings") {
    FacetLabel t1 = FacetLabel::make_tube(NodeSet::single(1));
    FacetLabel t14 = FacetLabel::make_tube(NodeSet::of({1, 4}));
    FacetLabel t23 = FacetLabel::make_tube(NodeSet::of({2, 3}));
    FacetLabel b2 = FacetLabel::make_bar(2);
    CHECK(label_less(t1, t14));
    CHECK(label_less(t14, t23)); // lexicographic within a size
    CHECK(label_less(t23, b2));  // tubes before bars
    CHECK(label_to_string(t14) == "{1,4}");
    CHECK(label_to_string(b2) == "~2");
}

TEST_CASE("compatibility on P2") {
    Graph p2 = Graph::path(2);
    FacetLabel t1 = FacetLabel::make_tube(NodeSet::single(1));
    FacetLabel t2 = FacetLabel::make_tube(NodeSet::single(2));
    FacetLabel t12 = FacetLabel::make_tube(NodeSet::of({1, 2}));
    FacetLabel b1 = FacetLabel::make_bar(1);
    FacetLabel b2 = FacetLabel::make_bar(2);

    CHECK(!compatible(t1, t2, p2));  // union is a tube, no nesting
    CHECK(!compatible(t12, b1, p2)); // bar node inside the tube
    CHECK(compatible(b1, b2, p2));
    CHECK(compatible(t1, t12, p2));
    CHECK(compatible(t1, b2, p2));
}

TEST_CASE("compatibility is symmetric, all label pairs, all graphs n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
            Graph g = from_mask(n, mask);
            std::vector<FacetLabel> labels;
            for (NodeSet t : enumerate_tubes(g)) labels.push_back(FacetLabel::make_tube(t));
            for (int v = 1; v <= n; ++v) labels.push_back(FacetLabel::make_bar(v));
            for (std::size_t i = 0; i < labels.size(); ++i)
                for (std::size_t j = i + 1; j < labels.size(); ++j)
                    REQUIRE(compatible(labels[i], labels[j], g) ==
                            compatible(labels[j], labels[i], g));
        }
    }
}

TEST_CASE("maximal_nerve_sets on P2: the five vertex sets") {
    auto fives = sorted_sets(maximal_nerve_sets(Graph::path(2)));

    FacetLabel t1 = FacetLabel::make_tube(NodeSet::single(1));
    FacetLabel t2 = FacetLabel::make_tube(NodeSet::single(2));
    FacetLabel t12 = FacetLabel::make_tube(NodeSet::of({1, 2}));
    FacetLabel b1 = FacetLabel::make_bar(1);
    FacetLabel b2 = FacetLabel::make_bar(2);
    auto expected = sorted_sets({{t1, t12}, {t2, t12}, {t1, b2}, {t2, b1}, {b1, b2}});
    CHECK(fives == expected);
}

TEST_CASE("maximal_nerve_sets on the singleton") {
    auto sets = sorted_sets(maximal_nerve_sets(Graph(1)));
    auto expected = sorted_sets({{FacetLabel::make_tube(NodeSet::single(1))},
                                 {FacetLabel::make_bar(1)}});
    CHECK(sets == expected);
}

TEST_CASE("maximal_nerve_sets equals brute force") {
    SUBCASE("P3") {
        auto sets = maximal_nerve_sets(Graph::path(3));
        CHECK(sets.size() == 14); // frozen from the brute-force oracle
        CHECK(sorted_sets(sets) == sorted_sets(oracle::maximal_nerves(Graph::path(3))));
    }
    SUBCASE("all graphs n <= 4") {
        for (int n = 1; n <= 4; ++n) {
            std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
            for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
                Graph g = from_mask(n, mask);
                REQUIRE(sorted_sets(maximal_nerve_sets(g)) ==
                        sorted_sets(oracle::maximal_nerves(g)));
            }
        }
    }
}

TEST_CASE("build_fan on P2 matches the pinned picture") {
    Fan f = build_fan(Graph::path(2));
    REQUIRE(f.labels.size() == 5);
    CHECK(f.maximal_cones.size() == 5);

    std::vector<LatticeVector> rays = f.rays;
    std::sort(rays.begin(), rays.end());
    std::vector<LatticeVector> expected{{-1, 0}, {0, -1}, {0, 1}, {1, 0}, {1, 1}};
    CHECK(rays == expected);
}

TEST_CASE("build_fan on the singleton") {
    Fan f = build_fan(Graph(1));
    REQUIRE(f.rays.size() == 2);
    CHECK(f.maximal_cones.size() == 2);
    std::vector<LatticeVector> rays = f.rays;
    std::sort(rays.begin(), rays.end());
    CHECK(rays == std::vector<LatticeVector>{{-1}, {1}});
}

TEST_CASE("build_fan on P3") {
    Fan f = build_fan(Graph::path(3));
    CHECK(f.rays.size() == 9); // 6 tubes + 3 bars
    CHECK(f.maximal_cones.size() == 14);
}

TEST_CASE("every maximal cone is unimodular") {
    for (const Graph& g :
         {Graph::path(3), Graph::complete(3), Graph::cycle(4), Graph::complete(4)}) {
        Fan f = build_fan(g);
        for (const auto& cone : f.maximal_cones) {
            std::int64_t d = det(cone_matrix(f, cone));
            REQUIRE((d == 1 || d == -1));
        }
    }
}

TEST_CASE("verify_fan flags a deleted cone") {
    Fan f = build_fan(Graph::path(2));
    CHECK(verify_fan(f).ok());
    f.maximal_cones.pop_back();
    VerifyReport rep = verify_fan(f);
    CHECK(!rep.ok());
    bool mentions_wall = false;
    for (const std::string& issue : rep.issues)
        if (issue.find("wall") != std::string::npos) mentions_wall = true;
    CHECK(mentions_wall);
}

TEST_CASE("fan structure, all graphs n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
            Graph g = from_mask(n, mask);
            Fan f = build_fan(g); // build_fan verifies internally
            REQUIRE(f.rays.size() == enumerate_tubes(g).size() + static_cast<std::size_t>(n));
        }
    }
}

TEST_CASE("cone count multiplies over components") {
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = oracle::random_graph(rng, n, 0.3);
        std::vector<NodeSet> comps = connected_components(g);
        if (comps.size() < 2) continue;
        ++checked;
        long long product = 1;
        for (NodeSet comp : comps)
            product *= static_cast<long long>(
                build_fan(component_graph(g, comp)).maximal_cones.size());
        REQUIRE(static_cast<long long>(build_fan(g).maximal_cones.size()) == product);
    }
    CHECK(checked >= 20);
}
