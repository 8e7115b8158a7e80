#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scp/types.hpp"

namespace scp {

// A vertex of the hypercube graph H(t,2): t coordinates over {+1,-1},
// addressed 1..t. Stored bit-packed, LSB-first within 64-bit words,
// bit set meaning -1. Bits past coordinate t are always zero.
class SignVector {
public:
    // All-ones vector of dimension t. Throws dimension_error if t < 3.
    explicit SignVector(Dimension t);

    // Build from a pattern over {'+','-'}, e.g. "+-+".
    static SignVector from_pattern(std::string_view pattern);

    // Build from signs given as +1/-1 integers.
    static SignVector from_ints(std::span<const int> signs);

    Dimension size() const noexcept { return t_; }

    Sign at(Dimension e) const;
    bool is_negative(Dimension e) const;
    void set(Dimension e, Sign s);

    // Marks coordinates first..last (inclusive) negative.
    void set_negative_range(Dimension first, Dimension last);

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> mutable_words() noexcept { return words_; }

    // Clears storage bits past coordinate t; call after writing words directly.
    void trim() noexcept;

    SignVector operator-() const;

    // Number of -1 coordinates.
    Dimension negative_count() const noexcept;

    std::string to_pattern() const;

    bool operator==(const SignVector&) const = default;

private:
    void check_coordinate(Dimension e) const {
        if (e < 1 || e > t_)
            throw_bad_coordinate(e);
    }
    [[noreturn]] void throw_bad_coordinate(Dimension e) const;

    Dimension t_;
    std::vector<std::uint64_t> words_;
};

// Words needed to hold t bits.
constexpr std::size_t word_count(Dimension t) noexcept {
    return static_cast<std::size_t>((t + 63) / 64);
}

}  // namespace scp
