#include <doctest.h>

#include <pach/coloring_construction.hpp>
#include <pach/errors.hpp>
#include <pach/pl_intersection.hpp>

using namespace pach;

namespace {

Point P(long x, long y) { return {Rational(x), Rational(y)}; }

const PLMap& pushed4() {
    static const PLMap map = [] {
        const JoinComplex X(2, 4);
        return build_pushed_map(X, random_coloring(X, 3), 3);
    }();
    return map;
}

Point random_point(Rng& rng) { return {rng.bounded_rational(1200, 97), rng.bounded_rational(2500, 89)}; }

}  // namespace

TEST_SUITE("pl_intersection") {
    TEST_CASE("affine maps of certified configurations validate") {
        const PLMap map = random_affine_map(4, 1);
        const auto rep = validate_map(map);
        CHECK(rep.valid());
        CHECK(rep.segments_checked == map_segments(map).size());
    }

    TEST_CASE("a dropped cone triangle breaks the boundary condition") {
        PLMap map = pushed4();
        map.faces[5].pop_back();
        const auto rep = validate_map(map);
        REQUIRE_FALSE(rep.valid());
        CHECK(rep.violations.front().kind == "boundary");
    }

    TEST_CASE("mismatched endpoints and concurrent segments are reported") {
        PLMap map = random_affine_map(2, 4);
        map.edges[0].points.back() = P(10000, 10000);
        bool endpoint = false;
        for (const auto& v : validate_map(map).violations) endpoint = endpoint || v.kind == "endpoint";
        CHECK(endpoint);

        // Three straight edges through the origin.
        const PointConfiguration star(3, 2, {P(-2, -1), P(3, 7), P(2, 1), P(-5, 3), P(-3, -7), P(5, -3)});
        bool concurrent = false;
        for (const auto& v : validate_map(affine_map(star)).violations) concurrent = concurrent || v.kind == "concurrency";
        CHECK(concurrent);
    }

    TEST_CASE("triangle-count parity agrees with boundary ray parity") {
        const PLMap& map = pushed4();
        Rng rng(2);
        int checked = 0;
        for (int i = 0; i < 200; ++i) {
            const Point p = random_point(rng);
            const Face sigma = map.complex.unrank(2, rng.below(map.complex.face_count(2)));
            try {
                CHECK(point_face_parity(map, sigma, p) == boundary_ray_parity(map, sigma, p));
                ++checked;
            } catch (const DegeneracyError&) {
            }
        }
        CHECK(checked > 190);
    }

    TEST_CASE("single triangle parities") {
        const PLMap map = affine_map(PointConfiguration(3, 1, {P(0, 0), P(4, 0), P(0, 4)}));
        const Face sigma({{0, 0}, {1, 0}, {2, 0}});
        CHECK(point_face_parity(map, sigma, P(1, 1)) == 1);
        CHECK(point_face_parity(map, sigma, P(5, 5)) == 0);
        CHECK_THROWS_AS(point_face_parity(map, sigma, P(2, 0)), DegeneracyError);
        CHECK(edge_ray_parities(map, P(1, 1)).count() == 1);
    }

    TEST_CASE("edge path parity on a hand-checked tent") {
        // Tent (0,0) -> (2,6) -> (4,0); a vertical path at x = 1 from y = 1
        // to y = 10 crosses the rising side once.
        const PointConfiguration c(3, 1, {P(0, 0), P(4, 0), P(9, 9)});
        PLMap map = affine_map(c);
        map.edges[map.complex.rank(Face({{0, 0}, {1, 0}}))] = Polyline{{P(0, 0), P(2, 6), P(4, 0)}};
        const Face edge({{0, 0}, {1, 0}});
        CHECK(edge_path_parity(map, edge, Polyline{{P(1, 1), P(1, 10)}}) == 1);
        CHECK(edge_path_parity(map, edge, Polyline{{P(1, 1), P(3, 1)}}) == 0);
        CHECK(edge_path_parity(map, edge, Polyline{{P(100, 100), P(101, 103)}}) == 0);
        CHECK(edge_path_parity(map, edge, Polyline{{P(1, 1), P(1, 5), P(1, 10)}}) == 1);
        CHECK_THROWS_AS(edge_path_parity(map, edge, Polyline{{P(2, 0), P(2, 7)}}), DegeneracyError);
    }

    TEST_CASE("edge path parity is additive under concatenation") {
        const PLMap& map = pushed4();
        Rng rng(6);
        int checked = 0;
        for (int i = 0; i < 100; ++i) {
            const Point a = random_point(rng), b = random_point(rng), c = random_point(rng);
            const Face edge = map.complex.unrank(1, rng.below(map.complex.face_count(1)));
            try {
                const int whole = edge_path_parity(map, edge, Polyline{{a, b, c}});
                const int parts = edge_path_parity(map, edge, Polyline{{a, b}}) ^ edge_path_parity(map, edge, Polyline{{b, c}});
                CHECK(whole == parts);
                ++checked;
            } catch (const DegeneracyError&) {
            }
        }
        CHECK(checked > 90);
    }

    TEST_CASE("boundary identity holds on random faces and paths") {
        const PLMap& map = pushed4();
        Rng rng(8);
        int checked = 0;
        for (int i = 0; i < 100; ++i) {
            const Polyline path{{random_point(rng), random_point(rng), random_point(rng)}};
            const Face sigma = map.complex.unrank(2, rng.below(map.complex.face_count(2)));
            try {
                CHECK(boundary_identity_check(map, sigma, path));
                ++checked;
            } catch (const DegeneracyError&) {
            }
        }
        CHECK(checked > 90);
        const PLMap tri = affine_map(PointConfiguration(3, 1, {P(0, 0), P(4, 0), P(0, 4)}));
        const Face sigma({{0, 0}, {1, 0}, {2, 0}});
        CHECK(boundary_identity_check(tri, sigma, Polyline{{P(1, 1), P(50, 31)}}));
        CHECK(boundary_identity_check(tri, sigma, Polyline{{P(50, 50), P(60, 71)}}));
    }
}
