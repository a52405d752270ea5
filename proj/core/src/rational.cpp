#include "pach/rational.hpp"

#include <functional>
#include <stdexcept>

namespace pach {

std::string to_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    auto is_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
    mpz_class n(strip_plus(num), 10);
    mpz_class d(strip_plus(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::size_t hash_value(const Rational& value) noexcept {
    auto limb_hash = [](mpz_srcptr z) {
        std::size_t h = static_cast<std::size_t>(z->_mp_size) * 0x9e3779b97f4a7c15ull;
        const int limbs = z->_mp_size < 0 ? -z->_mp_size : z->_mp_size;
        for (int i = 0; i < limbs; ++i)
            h ^= std::hash<mp_limb_t>{}(z->_mp_d[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    };
    const std::size_t a = limb_hash(value.get_num_mpz_t());
    const std::size_t b = limb_hash(value.get_den_mpz_t());
    return a ^ (b * 0x100000001b3ull + (a << 7));
}

}  // namespace pach
