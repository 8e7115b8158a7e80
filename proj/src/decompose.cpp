#include "scp/decompose.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "bit_util.hpp"
#include "scp/cycle.hpp"
#include "scp/error.hpp"

namespace scp {

namespace {

// Skips the first few regrowths of the index buffers.
constexpr std::size_t initial_capacity = 16;

}  // namespace

CycleIndexSet decompose(const IntervalSet& negative_part) {
    const Dimension t = negative_part.dimension();
    const auto& runs = negative_part.intervals();
    if (runs.empty())
        return CycleIndexSet::trusted(t, {0});

    const std::size_t m = runs.size();
    const bool starts_at_one = runs.front().first == 1;
    const bool ends_at_t = runs.back().last == t;

    std::vector<CycleIndex> out;
    out.reserve(2 * m + 1);
    if (!starts_at_one && !ends_at_t)
        out.push_back(0);
    const std::size_t close_count = ends_at_t ? m - 1 : m;
    for (std::size_t i = 0; i < close_count; ++i)
        out.push_back(runs[i].last);
    if (starts_at_one && ends_at_t)
        out.push_back(t);
    for (std::size_t i = starts_at_one ? 1 : 0; i < m; ++i)
        out.push_back(t + runs[i].first - 1);
    return CycleIndexSet::trusted(t, std::move(out));
}

CycleIndexSet decompose(const SignVector& T) {
    return decompose(negative_intervals(T));
}

DecomposeStream::DecomposeStream(Dimension t) : t_(t) {
    check_dimension(t);
    closes_.reserve(initial_capacity);
    opens_.reserve(initial_capacity);
}

void DecomposeStream::check_room(Dimension count) const {
    if (finished_)
        throw protocol_error("stream already finished");
    if (count > t_ - consumed_)
        throw protocol_error("more than " + std::to_string(t_) +
                             " coordinates pushed");
}

void DecomposeStream::push(Sign s) {
    push_negative(s == Sign::minus);
}

void DecomposeStream::push_negative(bool negative) {
    check_room(1);
    if (negative && !in_run_)
        opens_.push_back(t_ + consumed_);
    else if (!negative && in_run_)
        closes_.push_back(consumed_);
    in_run_ = negative;
    ++consumed_;
}

void DecomposeStream::push_byte(std::uint8_t byte) {
    push_bits(detail::reversed_bytes[byte], 8);
}

void DecomposeStream::push_bits(std::uint64_t bits, unsigned count) {
    if (count == 0)
        return;
    if (count > 64)
        throw protocol_error("at most 64 coordinates per push_bits call");
    check_room(count);
    const std::uint64_t mask = count == 64 ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << count) - 1;
    bits &= mask;
    const std::uint64_t prev = (bits << 1) | (in_run_ ? 1u : 0u);
    for (std::uint64_t opened = bits & ~prev; opened != 0; opened &= opened - 1)
        opens_.push_back(t_ + consumed_ + static_cast<Dimension>(std::countr_zero(opened)));
    for (std::uint64_t closed = prev & ~bits & mask; closed != 0; closed &= closed - 1)
        closes_.push_back(consumed_ + static_cast<Dimension>(std::countr_zero(closed)));
    in_run_ = (bits >> (count - 1)) & 1u;
    consumed_ += count;
}

CycleIndexSet DecomposeStream::finish() {
    if (finished_)
        throw protocol_error("stream already finished");
    if (consumed_ != t_)
        throw protocol_error("stream received " + std::to_string(consumed_) +
                             " of " + std::to_string(t_) + " coordinates");
    finished_ = true;
    if (in_run_)
        closes_.push_back(t_);
    if (closes_.empty())
        return CycleIndexSet::trusted(t_, {0});

    // A run opening at coordinate 1 records t, as does a run closing at t.
    // One such record is dropped; two collapse into a single t; none means
    // R^0 joins the set.
    const bool starts_at_one = opens_.front() == t_;
    const bool ends_at_t = closes_.back() == t_;
    // The result is assembled in the closes buffer.
    std::vector<CycleIndex> out = std::move(closes_);
    if (ends_at_t)
        out.pop_back();
    if (!starts_at_one && !ends_at_t)
        out.insert(out.begin(), 0);
    out.insert(out.end(), (starts_at_one && !ends_at_t) ? opens_.begin() + 1 : opens_.begin(),
               opens_.end());
    closes_ = {};
    opens_ = {};
    return CycleIndexSet::trusted(t_, std::move(out));
}

std::size_t DecomposeStream::footprint_bytes() const noexcept {
    return sizeof(*this) +
           (closes_.capacity() + opens_.capacity()) * sizeof(CycleIndex);
}

SignVector recompose(Dimension t, std::span<const CycleIndex> indices) {
    check_dimension(t);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= 2 * t)
            throw range_error("cycle index " + std::to_string(indices[i]) +
                              " outside 0.." + std::to_string(2 * t - 1));
        if (i > 0 && indices[i - 1] >= indices[i])
            throw invalid_portrait("cycle indices not strictly increasing");
    }

    // R^k with k < t contributes -1 on 1..k and +1 after, so its share of
    // the sum rises by 2 past coordinate k; R^{h+t} contributes +1 on 1..h
    // and -1 after, so its share falls by 2 past h. The sweep merges the two
    // sorted change lists and fills each constant stretch at once.
    const auto split = std::lower_bound(indices.begin(), indices.end(), t);
    const CycleIndex* low = indices.data();
    const CycleIndex* const low_end = low + (split - indices.begin());
    const CycleIndex* high = low_end;
    const CycleIndex* const high_end = indices.data() + indices.size();

    // Sum at coordinate 1: R^0 gives +1, other lows -1; R^t gives -1,
    // other highs +1.
    std::int64_t sum = -static_cast<std::int64_t>(low_end - low) +
                       (static_cast<std::int64_t>(high_end - high));
    if (low != low_end && *low == 0) {
        sum += 2;
        ++low;
    }
    if (high != high_end && *high == t) {
        sum -= 2;
        ++high;
    }

    SignVector out(t);
    const auto words = out.mutable_words();
    Dimension e = 1;
    while (e <= t) {
        // The sum holds on e..last; it changes right after the next
        // threshold or ends at t.
        Dimension last = t;
        if (low != low_end)
            last = *low;
        if (high != high_end)
            last = std::min(last, *high - t);
        if (sum == -1)
            detail::set_bit_range(words, e - 1, last);
        else if (sum != 1)
            throw invalid_portrait("coordinate " + std::to_string(e) + " sums to " +
                                   std::to_string(sum));
        for (; low != low_end && *low == last; ++low)
            sum += 2;
        for (; high != high_end && *high - t == last; ++high)
            sum -= 2;
        e = last + 1;
    }
    return out;
}

SignVector recompose(const CycleIndexSet& set) {
    return recompose(set.dimension(), set.indices());
}

}  // namespace scp
