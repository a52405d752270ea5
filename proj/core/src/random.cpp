#include "pach/random.hpp"

#include <stdexcept>

namespace pach {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    // Rejection sampling keeps the draw exactly uniform.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

Rational Rng::grid(const Rational& lo, const Rational& hi, std::uint64_t steps) {
    if (steps == 0) return lo;
    const std::uint64_t k = below(steps + 1);
    Rational t(mpz_class(std::to_string(k)), mpz_class(std::to_string(steps)));
    t.canonicalize();
    return lo + (hi - lo) * t;
}

Rational Rng::bounded_rational(std::int64_t radius, std::uint64_t max_den) {
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(radius) + 1;
    const std::int64_t num = static_cast<std::int64_t>(below(span)) - radius;
    const std::uint64_t den = 1 + below(max_den);
    Rational r(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    r.canonicalize();
    return r;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace pach
