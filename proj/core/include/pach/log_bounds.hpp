#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace pach {

/// Enclosure of a natural-log quantity. lower <= true value <= upper is
/// guaranteed by directed rounding; certified_sign is 0 only when the
/// enclosure contains zero.
struct LogBound {
    double estimate = 0;
    double lower = 0;
    double upper = 0;
    int certified_sign = 0;
    std::string lower_text;  // decimal rendering of the rounded-down bound
    std::string upper_text;
};

/// sum_i c_i * ln(a_i) with integer coefficients and positive integer
/// arguments.
class LogLinearForm {
public:
    LogLinearForm& add(const mpz_class& coefficient, const mpz_class& argument);
    LogLinearForm& add(long coefficient, unsigned long argument) { return add(mpz_class(coefficient), mpz_class(argument)); }

    /// Evaluates at the given working precision (bits).
    LogBound evaluate(unsigned precision_bits = 128) const;

private:
    struct Term {
        mpz_class coefficient;
        mpz_class argument;
    };
    std::vector<Term> terms_;
};

mpz_class binomial_mpz(std::uint64_t n, std::uint64_t k);

/// ceil(scale * (ln n)^(1/root)) for integers scale >= 1, n >= 2, root >= 1,
/// certified by refining the enclosure until both ends share a ceiling.
std::int64_t certified_ceil_scaled_log_root(unsigned long scale, std::uint64_t n, unsigned long root);

/// scale * (ln n)^(1/root) as a double, for reporting.
double scaled_log_root(double scale, std::uint64_t n, unsigned long root);

}  // namespace pach
