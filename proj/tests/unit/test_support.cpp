#include <doctest.h>

#include <pach/bitvector.hpp>
#include <pach/random.hpp>
#include <pach/rational.hpp>

#include <set>
#include <vector>

using namespace pach;

TEST_SUITE("support") {
    TEST_CASE("bit vector operations agree with std::vector<bool>") {
        Rng rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t size = rng.below(200);
            BitVector a(size), b(size);
            std::vector<bool> ra(size), rb(size);
            for (std::size_t i = 0; i < size; ++i) {
                if (rng.bit()) a.set(i), ra[i] = true;
                if (rng.bit()) b.set(i), rb[i] = true;
            }
            std::size_t count = 0, common = 0;
            for (std::size_t i = 0; i < size; ++i) {
                count += ra[i];
                common += ra[i] && rb[i];
            }
            CHECK(a.count() == count);
            CHECK(a.and_count(b) == common);
            CHECK(a.dot(b) == (common % 2 == 1));
            const BitVector x = a ^ b;
            for (std::size_t i = 0; i < size; ++i) CHECK(x.test(i) == (ra[i] != rb[i]));
            std::vector<std::size_t> support;
            for (std::size_t i = 0; i < size; ++i)
                if (ra[i]) support.push_back(i);
            CHECK(a.support() == support);
            CHECK(BitVector::from_hex(a.to_hex(), size) == a);
        }
    }

    TEST_CASE("hex layout is little-endian with the low bit first") {
        BitVector v(12);
        v.set(0);
        v.set(9);
        CHECK(v.to_hex() == "0102");
    }

    TEST_CASE("support_less prefers the vector owning the lowest differing bit") {
        BitVector a(4), b(4);
        a.set(1);
        b.set(2);
        CHECK(support_less(a, b));
        CHECK_FALSE(support_less(b, a));
        CHECK_FALSE(support_less(a, a));
    }

    TEST_CASE("rng is deterministic and below() stays in range") {
        Rng a(42), b(42);
        for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
        Rng r(3);
        for (int i = 0; i < 1000; ++i) CHECK(r.below(7) < 7);
        const Rational q = r.bounded_rational(10, 4);
        CHECK(abs(q) <= 10);
        std::set<std::uint64_t> seeds;
        for (std::uint64_t s = 0; s < 100; ++s) seeds.insert(derive_seed(5, s));
        CHECK(seeds.size() == 100);
    }

    TEST_CASE("rationals print as num/den and parse back") {
        CHECK(to_string(make_rational(6, -4)) == "-3/2");
        CHECK(to_string(Rational(5)) == "5/1");
        CHECK(parse_rational("-3/2") == make_rational(-3, 2));
        CHECK(parse_rational("7") == 7);
        CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
        CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
        CHECK(hash_value(make_rational(2, 4)) == hash_value(make_rational(1, 2)));
    }
}
