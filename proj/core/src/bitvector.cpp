#include "pach/bitvector.hpp"

#include <bit>
#include <stdexcept>

namespace pach {

void BitVector::reset() {
    for (auto& w : words_) w = 0;
}

void BitVector::set_all() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

std::size_t BitVector::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool BitVector::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

std::size_t BitVector::find_next_from(std::size_t from) const {
    if (from >= size_) return npos;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
        if (++wi >= words_.size()) return npos;
        w = words_[wi];
    }
}

bool BitVector::dot(const BitVector& other) const {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return (std::popcount(acc) & 1) != 0;
}

std::size_t BitVector::and_count(const BitVector& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
    if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = find_first(); i != npos; i = find_next_from(i + 1)) out.push_back(i);
    return out;
}

std::string BitVector::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    const std::size_t bytes = (size_ + 7) / 8;
    std::string out;
    out.reserve(2 * bytes);
    for (std::size_t j = 0; j < bytes; ++j) {
        const auto byte = static_cast<unsigned>((words_[j / 8] >> (8 * (j % 8))) & 0xffu);
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0xf]);
    }
    return out;
}

BitVector BitVector::from_hex(std::string_view hex, std::size_t size) {
    if (hex.size() != 2 * ((size + 7) / 8))
        throw std::invalid_argument("hex length does not match bit-vector size");
    auto nibble = [](char c) -> unsigned {
        if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
        throw std::invalid_argument("invalid hex digit");
    };
    BitVector v(size);
    for (std::size_t j = 0; j < hex.size() / 2; ++j) {
        const std::uint64_t byte = (nibble(hex[2 * j]) << 4) | nibble(hex[2 * j + 1]);
        for (unsigned b = 0; b < 8; ++b) {
            if (!((byte >> b) & 1u)) continue;
            const std::size_t i = 8 * j + b;
            if (i >= size) throw std::invalid_argument("hex sets bits past the vector size");
            v.set(i);
        }
    }
    return v;
}

bool support_less(const BitVector& a, const BitVector& b) {
    const auto wa = a.words();
    const auto wb = b.words();
    for (std::size_t i = 0; i < wa.size() && i < wb.size(); ++i) {
        const std::uint64_t diff = wa[i] ^ wb[i];
        if (diff) {
            const std::uint64_t low = diff & (~diff + 1);
            return (wa[i] & low) != 0;
        }
    }
    return wa.size() < wb.size();
}

}  // namespace pach
