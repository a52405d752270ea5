#include "oracles.hpp"

#include <doctest.h>

#include <pach/join_complex.hpp>

using namespace pach;

TEST_SUITE("join_complex") {
    TEST_CASE("face counts and ranking match brute-force enumeration") {
        for (int d = 1; d <= 3; ++d)
            for (int n = 1; n <= 3; ++n) {
                const JoinComplex X(d, n);
                for (int k = 0; k <= d; ++k) {
                    const auto expected = oracle::faces(d, n, k);
                    REQUIRE(X.face_count(k) == expected.size());
                    for (std::uint64_t r = 0; r < expected.size(); ++r) {
                        const Face f = X.unrank(k, r);
                        CHECK(f.vertices() == expected[r]);
                        CHECK(X.rank(Face(expected[r])) == r);
                    }
                }
            }
    }

    TEST_CASE("face_count closed form") {
        const JoinComplex X(2, 5);
        CHECK(X.face_count(0) == 15);
        CHECK(X.face_count(1) == 75);
        CHECK(X.face_count(2) == 125);
        CHECK_THROWS_AS(X.face_count(3), std::out_of_range);
        CHECK_THROWS_AS(X.face_count(-1), std::out_of_range);
    }

    TEST_CASE("facet ranks are the faces missing one vertex, by removed part") {
        const int d = 2, n = 3;
        const JoinComplex X(d, n);
        for (int k = 1; k <= d; ++k) {
            const auto big = oracle::faces(d, n, k);
            const auto small = oracle::faces(d, n, k - 1);
            for (std::uint64_t r = 0; r < big.size(); ++r) {
                std::vector<std::uint64_t> expected;
                for (const auto& removed : big[r]) {
                    std::vector<Vertex> rest;
                    for (const auto& v : big[r])
                        if (!(v == removed)) rest.push_back(v);
                    expected.push_back(static_cast<std::uint64_t>(std::find(small.begin(), small.end(), rest) - small.begin()));
                }
                CHECK(X.facet_ranks(k, r) == expected);
            }
        }
    }

    TEST_CASE("opposite_face drops the vertex in the named part") {
        const JoinComplex X(2, 4);
        const Face top({{2, 1}, {0, 3}, {1, 0}});
        CHECK(opposite_face(X, top, 1).vertices() == std::vector<Vertex>{{0, 3}, {2, 1}});
        CHECK_THROWS_AS(opposite_face(X, Face({{0, 1}, {1, 1}}), 0), std::invalid_argument);
    }

    TEST_CASE("faces reject repeated parts and invalid indices") {
        CHECK_THROWS_AS(Face({{0, 1}, {0, 2}}), std::invalid_argument);
        const JoinComplex X(2, 2);
        CHECK_FALSE(X.is_valid(Face({{0, 2}})));
        CHECK_FALSE(X.is_valid(Face({{3, 0}})));
        CHECK(X.is_valid(Face({{1, 1}, {2, 0}})));
    }

    TEST_CASE("sparsity matches the brute-force maximum") {
        for (int d = 1; d <= 3; ++d)
            for (int n = 1; n <= 3; ++n) {
                Rational best = 0;
                for (int j = 0; j <= d; ++j)
                    for (const auto& tau : oracle::faces(d, n, j))
                        for (int k = 0; k <= d; ++k) {
                            const auto all = oracle::faces(d, n, k);
                            std::size_t touching = 0;
                            for (const auto& f : all)
                                if (std::any_of(f.begin(), f.end(), [&](const Vertex& v) {
                                        return std::find(tau.begin(), tau.end(), v) != tau.end();
                                    }))
                                    ++touching;
                            const Rational frac(static_cast<long>(touching), static_cast<long>(all.size()));
                            if (frac > best) best = frac;
                        }
                best.canonicalize();
                CHECK(sparsity(JoinComplex(d, n)) == best);
            }
    }

    TEST_CASE("binomial") {
        CHECK(binomial(10, 3) == 120);
        CHECK(binomial(5, 0) == 1);
        CHECK(binomial(5, 6) == 0);
        CHECK(binomial(60, 30) == 118264581564861424ULL);
    }
}
