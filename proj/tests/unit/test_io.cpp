#include <doctest.h>

#include <pach/coloring_construction.hpp>
#include <pach/io.hpp>

using namespace pach;

TEST_SUITE("io") {
    TEST_CASE("PLMap round trip is exact") {
        const JoinComplex X(2, 3);
        const PLMap map = build_pushed_map(X, random_coloring(X, 2), 2);
        const json j = plmap_to_json(map);
        CHECK(j["version"] == kPLMapFormatVersion);
        const PLMap back = plmap_from_json(json::parse(j.dump()));
        CHECK(plmap_to_json(back) == j);
        CHECK(back.vertices.points() == map.vertices.points());
    }

    TEST_CASE("cochain, configuration and coloring round trips") {
        const JoinComplex X(2, 3);
        F2Cochain a = F2Cochain::zero(X, 1);
        a.bits().set(4);
        a.bits().set(26);
        CHECK(cochain_from_json(X, cochain_to_json(X, a)) == a);
        CHECK_THROWS_AS(cochain_from_json(JoinComplex(2, 4), cochain_to_json(X, a)), std::invalid_argument);

        Rng rng(1);
        const auto config = random_configuration(3, 3, rng);
        CHECK(configuration_from_json(configuration_to_json(config)).points() == config.points());

        const TwoColoring c = random_coloring(X, 77);
        const TwoColoring back = coloring_from_json(coloring_to_json(c));
        CHECK(back.negative == c.negative);
        CHECK(back.seed == 77);
    }

    TEST_CASE("graph and hypergraph round trips") {
        TripartiteGraph g({2, 3, 4});
        g.add_edge({0, 1}, {2, 3});
        g.add_edge({1, 2}, {2, 0});
        const TripartiteGraph back = graph_from_json(graph_to_json(g));
        CHECK(graph_to_json(back) == graph_to_json(g));
        CHECK(back.has_edge({2, 3}, {0, 1}));

        PartiteHypergraph h(3, 3);
        h.insert(std::vector<int>{0, 2, 1});
        CHECK(hypergraph_from_json(hypergraph_to_json(h)).bits() == h.bits());
    }

    TEST_CASE("malformed input is rejected") {
        CHECK_THROWS_AS(plmap_from_json(json{{"d", 2}}), std::invalid_argument);
        CHECK_THROWS_AS(point_from_json(json::array({"1/2"})), std::invalid_argument);
        CHECK_THROWS_AS(point_from_json(json::array({"1/0", "1"})), std::invalid_argument);
        CHECK_THROWS_AS(face_from_json(json::array({json::array({0, 1}), json::array({0, 2})})), std::invalid_argument);
        json g = graph_to_json(TripartiteGraph({1, 1, 1}));
        g["adjacency"]["0-1"] = json::array({json::array({5})});
        CHECK_THROWS_AS(graph_from_json(g), std::invalid_argument);
    }
}
