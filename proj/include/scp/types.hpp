#pragma once

#include <cstdint>

namespace scp {

// Hypercube dimension t: number of coordinates of a sign vector.
using Dimension = std::uint64_t;

// Index k in [0, 2t-1] naming the cycle vertex R^k.
using CycleIndex = std::uint64_t;

// Smallest dimension of the model.
inline constexpr Dimension min_dimension = 3;

// Largest dimension accepted anywhere; keeps 2t representable.
inline constexpr Dimension max_dimension = Dimension{1} << 62;

enum class Sign : std::int8_t { plus = 1, minus = -1 };

constexpr Sign operator-(Sign s) noexcept {
    return s == Sign::plus ? Sign::minus : Sign::plus;
}

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

}  // namespace scp
