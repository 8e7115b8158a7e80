#pragma once

#include <vector>

#include "scp/sign_vector.hpp"
#include "scp/types.hpp"

namespace scp {

// Closed coordinate interval [first, last], 1-based.
struct Interval {
    Dimension first;
    Dimension last;

    bool operator==(const Interval&) const = default;
};

// Inclusion-maximal intervals of a vector's negative part: sorted,
// disjoint, and separated by at least one positive coordinate.
class IntervalSet {
public:
    // Validates ordering and maximality; throws range_error otherwise.
    IntervalSet(Dimension t, std::vector<Interval> intervals);

    Dimension dimension() const noexcept { return t_; }
    const std::vector<Interval>& intervals() const noexcept { return intervals_; }
    std::size_t size() const noexcept { return intervals_.size(); }
    bool empty() const noexcept { return intervals_.empty(); }

    bool operator==(const IntervalSet&) const = default;

private:
    Dimension t_;
    std::vector<Interval> intervals_;
};

// Runs of -1 coordinates in T. Empty iff T is all-ones.
IntervalSet negative_intervals(const SignVector& T);

}  // namespace scp
