#include <doctest.h>

#include <pach/errors.hpp>
#include <pach/extraction.hpp>
#include <pach/random.hpp>

using namespace pach;

namespace {

TripartiteGraph random_graph(int n, std::uint64_t seed, std::uint64_t num, std::uint64_t den) {
    TripartiteGraph g({n, n, n});
    Rng rng(seed);
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (rng.below(den) < num) g.add_edge({a, u}, {b, v});
    return g;
}

std::uint64_t cubic_triangles(const TripartiteGraph& g) {
    std::uint64_t count = 0;
    const auto& s = g.sizes();
    for (int a = 0; a < s[0]; ++a)
        for (int b = 0; b < s[1]; ++b)
            for (int c = 0; c < s[2]; ++c)
                if (g.has_edge({0, a}, {1, b}) && g.has_edge({0, a}, {2, c}) && g.has_edge({1, b}, {2, c})) ++count;
    return count;
}

TripartiteGraph complete(int n) { return random_graph(n, 0, 1, 1); }

}  // namespace

TEST_SUITE("extraction") {
    TEST_CASE("triangle counts match cubic enumeration") {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const auto g = random_graph(1 + static_cast<int>(seed % 8), seed, 1, 2);
            CHECK(count_triangles(g) == cubic_triangles(g));
        }
        CHECK(count_triangles(complete(4)) == 64);
        CHECK(count_triangles(TripartiteGraph({3, 3, 3})) == 0);
    }

    TEST_CASE("edges are symmetric and never inside a part") {
        TripartiteGraph g({2, 3, 1});
        g.add_edge({1, 2}, {0, 1});
        CHECK(g.has_edge({0, 1}, {1, 2}));
        CHECK(g.edge_count() == 1);
        CHECK_THROWS_AS(g.add_edge({0, 0}, {0, 1}), std::invalid_argument);
        CHECK_THROWS_AS(g.add_edge({0, 0}, {2, 4}), std::out_of_range);
    }

    TEST_CASE("complete graphs yield prefix parts") {
        const auto g = complete(5);
        for (int t = 1; t <= 5; ++t) {
            const auto parts = extract_tripartite(g, t);
            REQUIRE(parts);
            for (const auto& p : *parts) {
                std::vector<int> prefix(static_cast<std::size_t>(t));
                for (int i = 0; i < t; ++i) prefix[static_cast<std::size_t>(i)] = i;
                CHECK(p == prefix);
            }
        }
        CHECK_FALSE(extract_tripartite(g, 6));
        CHECK(extract_largest_tripartite(g).t == 5);
    }

    TEST_CASE("small oracle instances") {
        TripartiteGraph g = complete(3);
        TripartiteGraph minus({3, 3, 3});
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                for (int u = 0; u < 3; ++u)
                    for (int v = 0; v < 3; ++v)
                        if (!(a == 0 && b == 1 && u == 0 && v == 0)) minus.add_edge({a, u}, {b, v});
        CHECK(brute_max_complete_tripartite(g).t == 3);
        CHECK(brute_max_complete_tripartite(minus).t == 2);
        CHECK(brute_max_complete_tripartite(TripartiteGraph({3, 3, 3})).t == 0);
        TripartiteGraph tri({2, 2, 2});
        tri.add_edge({0, 1}, {1, 0});
        tri.add_edge({0, 1}, {2, 1});
        tri.add_edge({1, 0}, {2, 1});
        CHECK(brute_max_complete_tripartite(tri).t == 1);
        CHECK_FALSE(extract_tripartite(random_graph(4, 1, 0, 1), 1));
        CHECK_THROWS_AS(brute_max_complete_tripartite(complete(9)), BudgetExceededError);
    }

    TEST_CASE("greedy success never exceeds the oracle and is verified") {
        int gap_total = 0;
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            const auto g = random_graph(7, seed, 1, 2);
            const auto greedy = extract_largest_tripartite(g);
            const auto exact = brute_max_complete_tripartite(g);
            CHECK(greedy.t <= exact.t);
            if (greedy.t > 0) CHECK(is_complete_tripartite(g, greedy.parts));
            if (exact.t > 0) CHECK(is_complete_tripartite(g, exact.parts));
            gap_total += exact.t - greedy.t;
        }
        MESSAGE("total greedy shortfall over 40 graphs: " << gap_total);
    }

    TEST_CASE("adding edges rarely lowers the greedy result") {
        int lowered = 0;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            TripartiteGraph g = random_graph(7, seed, 1, 2);
            const int before = extract_largest_tripartite(g).t;
            Rng rng(seed + 1000);
            for (int i = 0; i < 5; ++i) {
                const int a = static_cast<int>(rng.below(3));
                const int b = (a + 1 + static_cast<int>(rng.below(2))) % 3;
                g.add_edge({a, static_cast<int>(rng.below(7))}, {b, static_cast<int>(rng.below(7))});
            }
            if (extract_largest_tripartite(g).t < before) ++lowered;
        }
        MESSAGE("greedy lowered by added edges in " << lowered << " of 100 pairs");
        CHECK(lowered <= 10);
    }

    TEST_CASE("partite hypergraph ranking and density") {
        PartiteHypergraph h(3, 4);
        const std::vector<int> t{1, 2, 3};
        CHECK(h.rank(t) == 1 * 16 + 2 * 4 + 3);
        CHECK(h.unrank(h.rank(t)) == t);
        h.insert(t);
        CHECK(h.contains(t));
        CHECK(h.density() == make_rational(1, 64));
        h.erase(t);
        CHECK_FALSE(h.contains(t));
    }

    TEST_CASE("box extraction") {
        PartiteHypergraph full(3, 4);
        full.bits().set_all();
        for (int t = 1; t <= 4; ++t) {
            const auto box = extract_box(full, t);
            REQUIRE(box);
            CHECK(is_complete_box(full, *box));
        }
        PartiteHypergraph missing = full;
        missing.erase(std::vector<int>{0, 0, 0});
        CHECK_FALSE(extract_box(missing, 4));
        const auto box3 = extract_box(missing, 3);
        REQUIRE(box3);
        CHECK(is_complete_box(missing, *box3));
        CHECK(brute_max_box(missing).t == 3);

        PartiteHypergraph four(4, 3);
        four.bits().set_all();
        four.erase(std::vector<int>{2, 2, 2, 2});
        CHECK(brute_max_box(four).t == 2);
        CHECK_FALSE(extract_box(four, 3));
        REQUIRE(extract_box(four, 2));
    }

    TEST_CASE("greedy box never beats the oracle") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            PartiteHypergraph h(3, 5);
            Rng rng(seed);
            for (std::uint64_t r = 0; r < h.tuple_count(); ++r)
                if (rng.below(4) != 0) h.bits().set(r);
            const auto exact = brute_max_box(h);
            for (int t = 1; t <= 5; ++t)
                if (const auto box = extract_box(h, t)) {
                    CHECK(t <= exact.t);
                    CHECK(is_complete_box(h, *box));
                }
        }
    }
}
