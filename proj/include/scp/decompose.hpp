#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "scp/index_set.hpp"
#include "scp/intervals.hpp"
#include "scp/sign_vector.hpp"
#include "scp/types.hpp"

namespace scp {

// Unique inclusion-minimal set of cycle indices whose vertices sum to T.
//
// With negative intervals [a_1,b_1] < ... < [a_m,b_m]:
//   m = 0                     -> {0}
//   a_1 > 1, b_m < t          -> {0} u {b_i} u {t+a_i-1}
//   a_1 = 1, b_m < t          -> {b_i} u {t+a_i-1 : i >= 2}
//   a_1 > 1, b_m = t          -> {b_i : i < m} u {t+a_i-1}
//   a_1 = 1, b_m = t          -> {t} u {b_i : i < m} u {t+a_i-1 : i >= 2}
CycleIndexSet decompose(const SignVector& T);

// Same construction starting from already extracted intervals.
CycleIndexSet decompose(const IntervalSet& negative_part);

// Single-pass decomposition over coordinates revealed in order 1..t.
//
// Opening a negative run at a records t+a-1, closing one at b records b;
// finish() resolves the boundary cases. State beyond the recorded indices
// is constant, and the indices come out sorted without a sort.
//
// Not thread-safe; one session per producer.
class DecomposeStream {
public:
    // Throws dimension_error if t < 3.
    explicit DecomposeStream(Dimension t);

    void push(Sign s);
    void push_negative(bool negative);

    // Eight coordinates, most significant bit first; bit 1 means -1.
    void push_byte(std::uint8_t byte);

    // `count` coordinates taken from bit 0 upwards of `bits`.
    void push_bits(std::uint64_t bits, unsigned count);

    // Throws protocol_error unless exactly t coordinates were pushed.
    // The session is spent afterwards.
    CycleIndexSet finish();

    Dimension dimension() const noexcept { return t_; }
    Dimension consumed() const noexcept { return consumed_; }

    // Bytes held by the session, including recorded indices.
    std::size_t footprint_bytes() const noexcept;

private:
    void check_room(Dimension count) const;

    Dimension t_;
    Dimension consumed_ = 0;
    bool in_run_ = false;
    bool finished_ = false;
    std::vector<CycleIndex> closes_;
    std::vector<CycleIndex> opens_;
};

// Coordinate-wise sum of the named cycle vertices, which must be +1 or -1
// everywhere. Indices must be strictly increasing within [0, 2t-1].
// Throws range_error for out-of-range indices and invalid_portrait when
// the indices are unsorted or some coordinate sums to anything else.
SignVector recompose(Dimension t, std::span<const CycleIndex> indices);
SignVector recompose(const CycleIndexSet& set);

}  // namespace scp
