#include "scp/intervals.hpp"

#include <bit>
#include <string>

#include "scp/cycle.hpp"
#include "scp/error.hpp"

namespace scp {

IntervalSet::IntervalSet(Dimension t, std::vector<Interval> intervals)
    : t_(t), intervals_(std::move(intervals)) {
    check_dimension(t);
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        const auto& iv = intervals_[i];
        if (iv.first < 1 || iv.first > iv.last || iv.last > t)
            throw range_error("interval " + std::to_string(i) + " is not within 1.." +
                              std::to_string(t));
        if (i > 0 && intervals_[i - 1].last + 1 >= iv.first)
            throw range_error("intervals " + std::to_string(i - 1) + " and " +
                              std::to_string(i) + " overlap or touch");
    }
}

IntervalSet negative_intervals(const SignVector& T) {
    const auto words = T.words();
    std::vector<Dimension> starts;
    std::vector<Dimension> ends;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
        const std::uint64_t w = words[i];
        const std::uint64_t prev = (w << 1) | carry;
        carry = w >> 63;
        const Dimension base = static_cast<Dimension>(i) * 64;
        // Bit p of `opened`: coordinate base+p+1 negative, its predecessor not.
        for (std::uint64_t opened = w & ~prev; opened != 0; opened &= opened - 1)
            starts.push_back(base + static_cast<Dimension>(std::countr_zero(opened)) + 1);
        // Bit p of `closed`: coordinate base+p (1-based) was the last negative one.
        for (std::uint64_t closed = prev & ~w; closed != 0; closed &= closed - 1)
            ends.push_back(base + static_cast<Dimension>(std::countr_zero(closed)));
    }
    if (carry)
        ends.push_back(T.size());

    std::vector<Interval> runs(starts.size());
    for (std::size_t j = 0; j < starts.size(); ++j)
        runs[j] = Interval{starts[j], ends[j]};
    return IntervalSet(T.size(), std::move(runs));
}

}  // namespace scp
