#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "scp/index_set.hpp"
#include "scp/types.hpp"

namespace scp {

enum class PortraitMode : std::uint8_t { matrix = 0, vector = 1 };

std::string_view to_string(PortraitMode mode) noexcept;

// The tuple (t, tau, Q_1, ..., Q_tau) that exactly represents a tau x t
// sign matrix, one index set per row.
class Portrait {
public:
    // Throws invalid_portrait when rows.size() != tau, a row has another
    // dimension, or vector mode has tau != 1.
    Portrait(PortraitMode mode, Dimension t, std::uint64_t tau,
             std::vector<CycleIndexSet> rows);

    PortraitMode mode() const noexcept { return mode_; }
    Dimension dimension() const noexcept { return t_; }
    std::uint64_t rows_count() const noexcept { return tau_; }
    const std::vector<CycleIndexSet>& rows() const noexcept { return rows_; }

    bool operator==(const Portrait&) const = default;

private:
    PortraitMode mode_;
    Dimension t_;
    std::uint64_t tau_;
    std::vector<CycleIndexSet> rows_;
};

// Sum of row-set cardinalities.
std::uint64_t portrait_weight(const Portrait& p) noexcept;

struct WeightBounds {
    std::uint64_t lower;
    std::uint64_t upper;

    bool contains(std::uint64_t weight) const noexcept {
        return lower <= weight && weight <= upper;
    }
    bool operator==(const WeightBounds&) const = default;
};

// tau <= weight <= tau*t for odd t, tau*(t-1) for even t.
// Throws range_error when t < 3, tau == 0, or the product overflows.
WeightBounds weight_bounds(Dimension t, std::uint64_t tau);

struct PortraitStats {
    PortraitMode mode;
    Dimension t;
    std::uint64_t tau;
    std::vector<std::uint64_t> row_sizes;
    std::uint64_t weight;
    WeightBounds bounds;
    double upper_ratio;  // weight / bounds.upper
};

PortraitStats portrait_stats(const Portrait& p);

}  // namespace scp
