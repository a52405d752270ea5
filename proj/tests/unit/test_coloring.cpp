#include <doctest.h>

#include <pach/coloring_construction.hpp>
#include <pach/errors.hpp>
#include <pach/overlap_pipeline.hpp>

#include <functional>

using namespace pach;

namespace {

// Direct enumeration: for every triple of m-subsets, look for a triangle
// whose three edges share a color, for each color.
bool direct_verify(const JoinComplex& X, const TwoColoring& c, int m) {
    const int n = X.part_size();
    std::vector<std::vector<int>> subsets;
    for (int mask = 0; mask < (1 << n); ++mask)
        if (__builtin_popcount(static_cast<unsigned>(mask)) == m) {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) s.push_back(i);
            subsets.push_back(s);
        }
    auto edge_color = [&](Vertex a, Vertex b) { return c.color(X.rank(Face({a, b}))); };
    for (const auto& s0 : subsets)
        for (const auto& s1 : subsets)
            for (const auto& s2 : subsets) {
                bool plus = false, minus = false;
                for (int a : s0)
                    for (int b : s1)
                        for (int cc : s2) {
                            const int x = edge_color({0, a}, {1, b}), y = edge_color({0, a}, {2, cc}), z = edge_color({1, b}, {2, cc});
                            if (x == y && y == z) (x > 0 ? plus : minus) = true;
                        }
                if (!plus || !minus) return false;
            }
    return true;
}

}  // namespace

TEST_SUITE("coloring_construction") {
    TEST_CASE("monochromatic colorings fail") {
        const JoinComplex X(2, 4);
        const auto r = verify_coloring(X, constant_coloring(X, 1), 2);
        CHECK_FALSE(r.ok);
        REQUIRE(r.failure);
        CHECK(r.failure_lacks_negative);
        CHECK_FALSE(r.failure_lacks_positive);
        CHECK(*r.failure == Selector{{0, 1}, {0, 1}, {0, 1}});
    }

    TEST_CASE("verifier agrees with direct enumeration") {
        const JoinComplex X(2, 6);
        int agreed_true = 0;
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            const TwoColoring c = random_coloring(X, seed);
            for (int m = 2; m <= 4; ++m) {
                const bool expected = direct_verify(X, c, m);
                CHECK(verify_coloring(X, c, m).ok == expected);
                agreed_true += expected;
            }
        }
        MESSAGE("colorings passing: " << agreed_true);
    }

    TEST_CASE("verification is monotone in m and independent of jobs") {
        const JoinComplex X(2, 5);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const TwoColoring c = random_coloring(X, seed);
            bool passed = false;
            for (int m = 1; m <= 5; ++m) {
                const auto r = verify_coloring(X, c, m);
                if (passed) CHECK(r.ok);
                passed = passed || r.ok;
                ColoringVerifyOptions par;
                par.jobs = 3;
                const auto p = verify_coloring(X, c, m, par);
                CHECK(p.ok == r.ok);
                CHECK(p.failure == r.failure);
            }
        }
    }

    TEST_CASE("search coloring") {
        const JoinComplex X(2, 4);
        const auto whole = search_coloring(X, 4, 1, 50);
        REQUIRE(whole.coloring);
        CHECK(verify_coloring(X, *whole.coloring, 4).ok);
        const auto again = search_coloring(X, 4, 1, 50);
        CHECK(again.coloring->negative == whole.coloring->negative);
        CHECK_FALSE(search_coloring(X, 1, 1, 10).coloring);
    }

    TEST_CASE("over-budget verification samples") {
        const JoinComplex X(2, 6);
        ColoringVerifyOptions tiny;
        tiny.budget = 10;
        tiny.samples = 50;
        tiny.seed = 4;
        const auto r = verify_coloring(X, random_coloring(X, 1), 3, tiny);
        CHECK(r.sampled_only);
        CHECK(r.selectors_checked <= 50);
    }

    TEST_CASE("clique probability") {
        const auto one = clique_probability_oracle(1, 2);
        CHECK(one.exact);
        CHECK(one.fraction == make_rational(7, 8));
        CHECK(one.bound == make_rational(7, 8));
        CHECK(one.edges == 3);

        const auto two = clique_probability_oracle(2, 2);
        CHECK(two.edges == 12);
        CHECK(two.subsets == 4096);
        CHECK(two.regular);
        CHECK(two.cliques_per_edge == 2);
        CHECK(two.within_bound);
        // Independent count of triangle-free subsets of K(2,2,2).
        int free = 0;
        const JoinComplex X(2, 2);
        for (int s = 0; s < 4096; ++s) {
            bool has = false;
            for (int a = 0; a < 2 && !has; ++a)
                for (int b = 0; b < 2 && !has; ++b)
                    for (int c = 0; c < 2 && !has; ++c) {
                        const auto e1 = X.rank(Face({{0, a}, {1, b}})), e2 = X.rank(Face({{0, a}, {2, c}})), e3 = X.rank(Face({{1, b}, {2, c}}));
                        has = (s >> e1 & 1) && (s >> e2 & 1) && (s >> e3 & 1);
                    }
            free += !has;
        }
        CHECK(two.fraction == make_rational(free, 4096));
        CHECK(two.fraction <= make_rational(2401, 4096));

        CliqueProbabilityOptions sampled;
        sampled.max_exhaustive_edges = 4;
        sampled.samples = 20000;
        const auto est = clique_probability_oracle(2, 2, sampled);
        CHECK_FALSE(est.exact);
        CHECK(est.ci_low <= two.fraction.get_d() + 0.02);
        CHECK(est.ci_high >= two.fraction.get_d() - 0.02);
    }

    TEST_CASE("threshold and union bound") {
        CHECK(pach_threshold_coloring(100, 2) == 116);
        CHECK(coloring_union_bound(1000, 2, 173).certified_sign == -1);
        CHECK(coloring_construction_cap(100, 2) == doctest::Approx(30 * std::log(100.0)));
    }

    TEST_CASE("pushed map validates and obeys the sign law") {
        const JoinComplex X(2, 5);
        const TwoColoring c = random_coloring(X, 9);
        const PLMap map = build_pushed_map(X, c, 9);
        CHECK(validate_map(map).valid());
        Rng rng(1);
        int tested = 0;
        for (int i = 0; i < 100; ++i) {
            const Point p{rng.bounded_rational(1100, 101), rng.bounded_rational(2500, 103)};
            if (p.y == 0) continue;
            for (const auto& f : X.faces(2)) {
                const int color = face_color(X, c, f);
                if (color == 0) continue;
                try {
                    if (point_face_parity(map, f, p)) CHECK(color == sgn(p.y));
                } catch (const DegeneracyError&) {
                }
            }
            ++tested;
        }
        CHECK(tested >= 95);
    }

    TEST_CASE("monochromatic faces meet the axis only at their vertices") {
        const JoinComplex X(2, 3);
        const TwoColoring c = random_coloring(X, 2);
        const PLMap map = build_pushed_map(X, c, 2);
        for (std::uint64_t r = 0; r < X.face_count(2); ++r) {
            const int color = face_color(X, c, X.unrank(2, r));
            if (color == 0) continue;
            for (const auto& t : map.faces[r])
                for (const auto& v : t.v) CHECK(sgn(v.y) * color >= 0);
        }
    }

    TEST_CASE("pushed layouts reject collisions") {
        const JoinComplex X(2, 2);
        const TwoColoring c = random_coloring(X, 1);
        PushedLayout bad = default_pushed_layout(X, c, 1);
        bad.heights[1] = bad.heights[0];
        CHECK_THROWS_AS(build_pushed_map(X, c, bad), std::invalid_argument);
        PushedLayout flipped = default_pushed_layout(X, constant_coloring(X, 1), 1);
        flipped.apexes[0].y = -flipped.apexes[0].y;
        CHECK_THROWS_AS(build_pushed_map(X, constant_coloring(X, 1), flipped), std::invalid_argument);
    }

    TEST_CASE("q set") {
        const JoinComplex X(2, 4);
        const PLMap map = build_pushed_map(X, random_coloring(X, 5), 5);
        for (const auto& p : map.vertices.points()) {
            const auto q = q_set(map.vertices, p);
            CHECK(q.size() == 1);
            CHECK(q.size() <= 2);
        }
        CHECK(q_set(map.vertices, Point{Rational(123456), Rational(0)}).empty());
    }

    TEST_CASE("no large Pach family off the axis avoids both colors") {
        // A family at p with p_y != 0 whose parts all have size m_target would
        // contain monochromatic faces of both colors, yet every covering
        // monochromatic face has the sign of p_y; so the pipeline's witness at
        // an off-axis point must stay below m_target.
        const JoinComplex X(2, 5);
        const auto found = search_coloring(X, 4, 3, 200);
        REQUIRE(found.coloring);
        const PLMap map = build_pushed_map(X, *found.coloring, 3);
        const auto result = run_pipeline(map, 1);
        CHECK(result.verified);
        if (result.witness.p.y != 0) CHECK(result.witness.size < 4);
    }
}
