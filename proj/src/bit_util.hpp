#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>

namespace scp::detail {

constexpr std::array<std::uint8_t, 256> make_reversed_bytes() {
    std::array<std::uint8_t, 256> table{};
    for (unsigned b = 0; b < 256; ++b) {
        unsigned r = 0;
        for (unsigned i = 0; i < 8; ++i)
            r |= ((b >> i) & 1u) << (7 - i);
        table[b] = static_cast<std::uint8_t>(r);
    }
    return table;
}

// reversed_bytes[b] is b with its bit order mirrored.
inline constexpr auto reversed_bytes = make_reversed_bytes();

// Sets bits lo..hi-1 (0-based, LSB-first across words). Requires lo < hi and
// hi <= 64 * words.size().
inline void set_bit_range(std::span<std::uint64_t> words, std::uint64_t lo,
                          std::uint64_t hi) noexcept {
    const std::size_t w0 = lo / 64;
    const std::size_t w1 = (hi - 1) / 64;
    const auto head = ~std::uint64_t{0} << (lo % 64);
    const auto tail = ~std::uint64_t{0} >> (63 - (hi - 1) % 64);
    if (w0 == w1) {
        words[w0] |= head & tail;
        return;
    }
    words[w0] |= head;
    std::fill(words.begin() + static_cast<std::ptrdiff_t>(w0 + 1),
              words.begin() + static_cast<std::ptrdiff_t>(w1), ~std::uint64_t{0});
    words[w1] |= tail;
}

}  // namespace scp::detail
