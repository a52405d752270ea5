#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace pach {

/// Exact rational number. Always kept in canonical form.
using Rational = mpq_class;

/// Formats as "num/den" (the denominator is always written, "3/1" for 3).
std::string to_string(const Rational& value);

/// Parses "num/den" or an integer literal. Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

std::size_t hash_value(const Rational& value) noexcept;

}  // namespace pach
