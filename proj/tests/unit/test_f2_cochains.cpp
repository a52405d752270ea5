#include "oracles.hpp"

#include <doctest.h>

#include <pach/errors.hpp>
#include <pach/f2_cochains.hpp>
#include <pach/random.hpp>

#include <limits>

using namespace pach;

namespace {

BitVector random_bits(Rng& rng, std::size_t size) {
    BitVector v(size);
    for (std::size_t i = 0; i < size; ++i)
        if (rng.bit()) v.set(i);
    return v;
}

// Dense coboundary matrix from the brute-force face lists.
std::vector<std::vector<int>> dense_coboundary(int d, int n, int k) {
    const auto rows = oracle::faces(d, n, k + 1);
    const auto cols = oracle::faces(d, n, k);
    std::vector<std::vector<int>> m(rows.size(), std::vector<int>(cols.size(), 0));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) m[r][c] = oracle::is_facet(cols[c], rows[r]) ? 1 : 0;
    return m;
}

std::size_t oracle_cohomology(int d, int n, int k) {
    const std::size_t dim = oracle::faces(d, n, k).size();
    const std::size_t rank_out = k < d ? oracle::rank(dense_coboundary(d, n, k)) : 0;
    // Reduced: the augmentation C^{-1} -> C^0 has rank 1.
    const std::size_t rank_in = k == 0 ? 1 : oracle::rank(dense_coboundary(d, n, k - 1));
    return dim - rank_out - rank_in;
}

std::size_t popcount(std::uint64_t x) { return static_cast<std::size_t>(__builtin_popcountll(x)); }

}  // namespace

TEST_SUITE("f2_cochains") {
    TEST_CASE("boundary of a boundary and coboundary of a coboundary vanish on basis faces") {
        for (int n = 2; n <= 3; ++n) {
            const JoinComplex X(2, n);
            for (int k = 1; k <= 2; ++k)
                for (std::uint64_t r = 0; r < X.face_count(k); ++r) {
                    F2Chain c = F2Chain::zero(X, k);
                    c.bits().set(r);
                    CHECK(boundary(X, boundary(X, c)).bits().none());
                }
            for (std::uint64_t r = 0; r < X.face_count(0); ++r) {
                F2Cochain a = F2Cochain::zero(X, 0);
                a.bits().set(r);
                CHECK(coboundary(X, coboundary(X, a)).bits().none());
            }
        }
    }

    TEST_CASE("coboundary matrix equals the brute-force incidence matrix") {
        const JoinComplex X(2, 2);
        for (int k = 0; k < 2; ++k) {
            const BitMatrix m = coboundary_matrix(X, k);
            const auto dense = dense_coboundary(2, 2, k);
            REQUIRE(m.rows.size() == dense.size());
            for (std::size_t r = 0; r < dense.size(); ++r)
                for (std::size_t c = 0; c < dense[r].size(); ++c) CHECK(m.rows[r].test(c) == (dense[r][c] == 1));
        }
    }

    TEST_CASE("coboundary is adjoint to boundary") {
        const JoinComplex X(2, 3);
        Rng rng(11);
        for (int i = 0; i < 300; ++i) {
            const int k = static_cast<int>(rng.below(2));
            const F2Cochain a(k, random_bits(rng, X.face_count(k)));
            const F2Chain c(k + 1, random_bits(rng, X.face_count(k + 1)));
            CHECK(pairing(coboundary(X, a), c) == pairing(a, boundary(X, c)));
        }
    }

    TEST_CASE("edge cases of the operators") {
        const JoinComplex X(2, 2);
        F2Chain v = F2Chain::zero(X, 0);
        v.bits().set(0);
        CHECK(boundary(X, v).bits().size() == 0);
        CHECK_THROWS_AS(coboundary(X, F2Cochain::zero(X, 2)), std::out_of_range);
        F2Cochain a = F2Cochain::zero(X, 1);
        a.bits().set(0);
        a.bits().set(5);
        CHECK(norm(X, a) == make_rational(2, 12));
    }

    TEST_CASE("reduced cohomology ranks match dense elimination and the wedge-of-spheres count") {
        for (int d = 1; d <= 3; ++d)
            for (int n = 1; n <= (d == 3 ? 2 : 3); ++n) {
                const JoinComplex X(d, n);
                std::uint64_t top = 1;
                for (int i = 0; i <= d; ++i) top *= static_cast<std::uint64_t>(n - 1);
                for (int k = 0; k <= d; ++k) {
                    const auto rank = cohomology_rank(X, k);
                    CHECK(rank == oracle_cohomology(d, n, k));
                    CHECK(rank == (k == d ? top : 0));
                }
            }
        CHECK(f2_rank(coboundary_matrix(JoinComplex(2, 3), 0)) == 8);
        CHECK(f2_rank(coboundary_matrix(JoinComplex(2, 3), 1)) == 19);
    }

    TEST_CASE("cohomology_rank honours the matrix budget") {
        CHECK_THROWS_AS(cohomology_rank(JoinComplex(2, 5), 1, 10), BudgetExceededError);
    }

    TEST_CASE("exact cofilling is the minimum over every cochain") {
        const JoinComplex X(2, 2);
        Rng rng(5);
        for (int k = 1; k <= 2; ++k) {
            const std::size_t cols = X.face_count(k - 1);
            REQUIRE(cols <= 20);
            const BitMatrix m = coboundary_matrix(X, k - 1);
            for (int trial = 0; trial < 6; ++trial) {
                const F2Cochain seed(k - 1, random_bits(rng, cols));
                const F2Cochain b = coboundary(X, seed);
                const CofillingReport rep = minimal_cofilling(X, b);
                CHECK(coboundary(X, rep.a) == b);
                std::size_t best = std::numeric_limits<std::size_t>::max();
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cols); ++mask) {
                    BitVector v(cols);
                    for (std::size_t i = 0; i < cols; ++i)
                        if (mask >> i & 1) v.set(i);
                    if (coboundary(X, F2Cochain(k - 1, v)) == b) best = std::min(best, popcount(mask));
                }
                CHECK(rep.a.bits().count() == best);
                CHECK(rep.exact);
                if (b.bits().none())
                    CHECK(rep.ratio == 0);
                else
                    CHECK(rep.ratio == norm(X, rep.a) / norm(X, b));

                CofillingOptions greedy;
                greedy.mode = CofillingMode::greedy;
                const CofillingReport g = minimal_cofilling(X, b, greedy);
                CHECK(coboundary(X, g.a) == b);
                CHECK(g.a.bits().count() >= best);
            }
        }
    }

    TEST_CASE("cofilling rejects non-coboundaries and oversized cosets") {
        const JoinComplex X(2, 2);
        F2Cochain b = F2Cochain::zero(X, 1);
        b.bits().set(0);
        CHECK_THROWS_AS(minimal_cofilling(X, b), NotACoboundaryError);
        CofillingOptions tight;
        tight.max_coset_bits = 1;
        CHECK_THROWS_AS(minimal_cofilling(JoinComplex(2, 3), F2Cochain::zero(JoinComplex(2, 3), 2), tight), BudgetExceededError);
    }

    TEST_CASE("parallel exact search gives the same cofilling") {
        const JoinComplex X(2, 2);
        Rng rng(9);
        const F2Cochain b = coboundary(X, F2Cochain(1, random_bits(rng, X.face_count(1))));
        CofillingOptions par;
        par.jobs = 3;
        CHECK(minimal_cofilling(X, b, par).a == minimal_cofilling(X, b).a);
    }

    TEST_CASE("constants") {
        CHECK(cofilling_constant(2, 5, 1) == 1);
        CHECK(cofilling_constant(2, 5, 2) == 1);
        CHECK(cofilling_constant(2, 2, 2) == 1);
        CHECK(cofilling_constant(3, 2, 1) == make_rational(3, 2));
        CHECK(gromov_bound(2) == make_rational(1, 192));
        CHECK(gromov_bound(1) == make_rational(1, 8));
    }
}
