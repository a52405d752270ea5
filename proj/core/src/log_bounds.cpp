#include "pach/log_bounds.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace pach {

namespace {

class Mpfr {
public:
    explicit Mpfr(unsigned precision) { mpfr_init2(value_, static_cast<mpfr_prec_t>(precision)); }
    ~Mpfr() { mpfr_clear(value_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }

private:
    mpfr_t value_;
};

std::string render(mpfr_srcptr x, mpfr_rnd_t rnd) {
    char* buffer = nullptr;
    mpfr_asprintf(&buffer, rnd == MPFR_RNDD ? "%.30RDe" : "%.30RUe", x);
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

}  // namespace

LogLinearForm& LogLinearForm::add(const mpz_class& coefficient, const mpz_class& argument) {
    if (argument <= 0) throw std::invalid_argument("LogLinearForm: logarithm of a non-positive integer");
    terms_.push_back({coefficient, argument});
    return *this;
}

LogBound LogLinearForm::evaluate(unsigned precision_bits) const {
    Mpfr lower(precision_bits), upper(precision_bits), term(precision_bits), arg(precision_bits);
    mpfr_set_zero(lower.get(), 1);
    mpfr_set_zero(upper.get(), 1);
    for (const auto& t : terms_) {
        if (t.coefficient == 0) continue;
        const bool positive = t.coefficient > 0;
        // Lower bound: positive terms use ln rounded down, negative ones
        // ln rounded up; the upper bound mirrors this.
        for (int side = 0; side < 2; ++side) {
            const bool want_lower = side == 0;
            const mpfr_rnd_t log_rnd = (want_lower == positive) ? MPFR_RNDD : MPFR_RNDU;
            const mpfr_rnd_t rnd = want_lower ? MPFR_RNDD : MPFR_RNDU;
            mpfr_set_z(arg.get(), t.argument.get_mpz_t(), log_rnd);
            mpfr_log(term.get(), arg.get(), log_rnd);
            mpfr_mul_z(term.get(), term.get(), t.coefficient.get_mpz_t(), rnd);
            mpfr_ptr acc = want_lower ? lower.get() : upper.get();
            mpfr_add(acc, acc, term.get(), rnd);
        }
    }
    LogBound out;
    out.lower = mpfr_get_d(lower.get(), MPFR_RNDD);
    out.upper = mpfr_get_d(upper.get(), MPFR_RNDU);
    out.estimate = 0.5 * (out.lower + out.upper);
    out.lower_text = render(lower.get(), MPFR_RNDD);
    out.upper_text = render(upper.get(), MPFR_RNDU);
    if (mpfr_sgn(lower.get()) > 0)
        out.certified_sign = 1;
    else if (mpfr_sgn(upper.get()) < 0)
        out.certified_sign = -1;
    return out;
}

mpz_class binomial_mpz(std::uint64_t n, std::uint64_t k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::int64_t certified_ceil_scaled_log_root(unsigned long scale, std::uint64_t n, unsigned long root) {
    if (n < 2) throw std::invalid_argument("certified_ceil_scaled_log_root: n must be >= 2");
    if (root < 1 || scale < 1) throw std::invalid_argument("certified_ceil_scaled_log_root: scale and root must be >= 1");
    for (unsigned precision = 128; precision <= 8192; precision *= 2) {
        Mpfr lo(precision), hi(precision);
        mpfr_set_ui(lo.get(), static_cast<unsigned long>(n), MPFR_RNDD);
        mpfr_set_ui(hi.get(), static_cast<unsigned long>(n), MPFR_RNDU);
        mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
        mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
        mpfr_rootn_ui(lo.get(), lo.get(), root, MPFR_RNDD);
        mpfr_rootn_ui(hi.get(), hi.get(), root, MPFR_RNDU);
        mpfr_mul_ui(lo.get(), lo.get(), scale, MPFR_RNDD);
        mpfr_mul_ui(hi.get(), hi.get(), scale, MPFR_RNDU);
        mpfr_ceil(lo.get(), lo.get());
        mpfr_ceil(hi.get(), hi.get());
        if (mpfr_equal_p(lo.get(), hi.get())) return static_cast<std::int64_t>(mpfr_get_si(lo.get(), MPFR_RNDN));
    }
    throw std::runtime_error("certified_ceil_scaled_log_root: could not separate the enclosure from an integer");
}

double scaled_log_root(double scale, std::uint64_t n, unsigned long root) {
    return scale * std::pow(std::log(static_cast<double>(n)), 1.0 / static_cast<double>(root));
}

}  // namespace pach
