#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pach {

/// Dense vector over F2.
class BitVector {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void reset();
    void set_all();

    std::size_t count() const;
    bool any() const;
    bool none() const { return !any(); }

    std::size_t find_first() const { return find_next_from(0); }
    /// First set bit with index >= from, or npos.
    std::size_t find_next_from(std::size_t from) const;

    /// Parity of the number of common set bits.
    bool dot(const BitVector& other) const;
    /// Number of common set bits.
    std::size_t and_count(const BitVector& other) const;

    BitVector& operator^=(const BitVector& other);
    BitVector& operator&=(const BitVector& other);
    BitVector& operator|=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::vector<std::size_t> support() const;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    /// Little-endian hex: byte j holds bits 8j..8j+7, bit 8j in its low bit.
    std::string to_hex() const;
    static BitVector from_hex(std::string_view hex, std::size_t size);

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Total order used for deterministic tie-breaks: at the lowest index where
/// the two vectors differ, the vector holding the set bit is smaller.
bool support_less(const BitVector& a, const BitVector& b);

}  // namespace pach
