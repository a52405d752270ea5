#pragma once

#include "pach/rational.hpp"

#include <cstdint>
#include <random>

namespace pach {

/// Seeded random source. Only the raw mt19937_64 stream is consumed (never
/// the implementation-defined std distributions), so every draw is
/// reproducible across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    bool bit() { return (engine_() >> 63) != 0; }

    /// Uniform on the grid {lo + (hi - lo) * k / steps : 0 <= k <= steps}.
    Rational grid(const Rational& lo, const Rational& hi, std::uint64_t steps);

    /// Rational num/den with num uniform in [-radius, radius] and den
    /// uniform in [1, max_den].
    Rational bounded_rational(std::int64_t radius, std::uint64_t max_den);

private:
    std::mt19937_64 engine_;
};

/// Derives independent sub-seeds from one user seed (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace pach
