#pragma once

#include <bit>
#include <cassert>
#if defined(__BMI2__)
#include <immintrin.h>
#endif
#include <cstddef>
#include <cstdint>

namespace sig::bits {

inline constexpr std::size_t word_bits = 64;

inline constexpr std::size_t words_for(std::size_t nbits) {
    return (nbits + word_bits - 1) / word_bits;
}

// Bits needed to store any value in [0, max_value]; at least 1.
inline constexpr unsigned width_for(std::uint64_t max_value) {
    unsigned w = static_cast<unsigned>(std::bit_width(max_value));
    return w == 0 ? 1 : w;
}

inline constexpr std::uint64_t low_mask(unsigned width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

// Position (0..63) of the k-th set bit of x, k is 0-based; x must have more than k ones.
inline unsigned select_in_word(std::uint64_t x, unsigned k) {
    assert(static_cast<unsigned>(std::popcount(x)) > k);
#if defined(__BMI2__)
    return static_cast<unsigned>(std::countr_zero(_pdep_u64(std::uint64_t{1} << k, x)));
#else
    unsigned base = 0;
    for (;;) {
        const auto c = static_cast<unsigned>(std::popcount(x & 0xffu));
        if (k < c) break;
        k -= c;
        x >>= 8;
        base += 8;
    }
    for (; k > 0; --k) x &= x - 1;
    return base + static_cast<unsigned>(std::countr_zero(x));
#endif
}

}  // namespace sig::bits
