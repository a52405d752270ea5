#include <doctest.h>

#include <pach/coloring_construction.hpp>
#include <pach/errors.hpp>
#include <pach/overlap_pipeline.hpp>
#include <pach/sphere_construction.hpp>

using namespace pach;

namespace {

Point P(long x, long y) { return {Rational(x), Rational(y)}; }

}  // namespace

TEST_SUITE("overlap_pipeline") {
    TEST_CASE("a single triangle is covered at its interior candidate") {
        const PLMap map = affine_map(PointConfiguration(3, 1, {P(0, 0), P(4, 0), P(0, 4)}));
        const HeavyPoint hp = heavy_point(map);
        CHECK(hp.faces == std::vector<std::uint64_t>{0});
        CHECK(hp.density == 1);
    }

    TEST_CASE("heavy point beats random samples") {
        const PLMap map = random_affine_map(5, 2);
        const HeavyPoint hp = heavy_point(map);
        CHECK(face_parities(map, hp.p).count() == hp.faces.size());
        Rng rng(3);
        for (int i = 0; i < 1000; ++i) {
            const Point q{rng.bounded_rational(1000, 7), rng.bounded_rational(1000, 11)};
            try {
                CHECK(face_parities(map, q).count() <= hp.faces.size());
            } catch (const DegeneracyError&) {
            }
        }
        CHECK(heavy_point(map, 3).faces == hp.faces);
    }

    TEST_CASE("escape path properties") {
        const JoinComplex X(2, 4);
        const PLMap map = build_pushed_map(X, random_coloring(X, 1), 1);
        const HeavyPoint hp = heavy_point(map);
        const Polyline r = escape_path(map, hp.p, 7);
        CHECK(r.points == escape_path(map, hp.p, 7).points);
        CHECK(r.points.front() == hp.p);
        CHECK(r.points.back() == exterior_point(map));
        CHECK(face_parities(map, r.points.back()).none());
        const BitVector at_p = face_parities(map, hp.p);
        for (std::uint64_t f = 0; f < X.face_count(2); ++f) {
            const PiVector pi = pi_vector(map, X.unrank(2, f), r);
            CHECK((pi[0] + pi[1] + pi[2]) % 2 == static_cast<int>(at_p.test(f)));
        }
    }

    TEST_CASE("paths outside the image have zero pi vectors") {
        const PLMap map = random_affine_map(3, 5);
        const Point far = exterior_point(map);
        const Polyline r{{far, Point{far.x + 1, far.y + 3}}};
        for (const auto& f : map.complex.faces(2)) CHECK(pi_vector(map, f, r) == PiVector{0, 0, 0});
    }

    TEST_CASE("pigeonhole and H") {
        const JoinComplex X(2, 5);
        const PLMap map = build_pushed_map(X, random_coloring(X, 4), 4);
        const HeavyPoint hp = heavy_point(map);
        const Polyline r = escape_path(map, hp.p, 1);
        const PiClass cls = pigeonhole_class(map, hp.faces, r);
        CHECK(cls.class_count <= 4);
        CHECK(cls.faces.size() * 8 >= hp.faces.size());
        CHECK((cls.pi[0] + cls.pi[1] + cls.pi[2]) % 2 == 1);
        const TripartiteGraph h = build_h(X, cls.faces);
        CHECK(h.edge_count() <= 3 * cls.faces.size());
        // Every triangle of H is a face covering p.
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b)
                for (int c = 0; c < 5; ++c)
                    if (h.has_edge({0, a}, {1, b}) && h.has_edge({0, a}, {2, c}) && h.has_edge({1, b}, {2, c}))
                        CHECK(point_face_parity(map, Face({{0, a}, {1, b}, {2, c}}), hp.p) == 1);
        const TripartiteGraph single = build_h(X, {7});
        CHECK(single.edge_count() == 3);
    }

    TEST_CASE("affine pipeline agrees with covers() and is deterministic") {
        const PLMap map = random_affine_map(6, 11);
        const PipelineResult a = run_pipeline(map, 5);
        CHECK(a.verified);
        CHECK(a.covers_agreement);
        CHECK(a.witness.size >= 1);
        CHECK(verify_witness(map.complex, standard_filling(map.complex), map.vertices, a.witness));
        const PipelineResult b = run_pipeline(map, 5);
        CHECK(a.witness.parts == b.witness.parts);
        CHECK(a.log == b.log);
    }

    TEST_CASE("invalid maps fail in the validate stage") {
        PLMap map = random_affine_map(3, 1);
        map.faces[2].clear();
        try {
            run_pipeline(map, 1);
            FAIL("expected a pipeline error");
        } catch (const PipelineError& e) {
            CHECK(e.stage() == "validate");
        }
    }
}
