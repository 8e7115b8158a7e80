#pragma once

#include "scp/sign_vector.hpp"
#include "scp/types.hpp"

namespace scp {

namespace detail {
[[noreturn]] void throw_bad_dimension(Dimension t);
}  // namespace detail

// Throws dimension_error unless 3 <= t <= 2^62.
inline void check_dimension(Dimension t) {
    if (t < min_dimension || t > max_dimension)
        detail::throw_bad_dimension(t);
}

// Coordinate e of the cycle vertex R^k, computed from (t, k, e) alone.
// R^0 is all-ones, R^s for 1 <= s <= t-1 is -1 on 1..s and +1 after,
// and R^{k+t} = -R^k. Throws range_error for k >= 2t or e outside 1..t.
Sign cycle_component(Dimension t, CycleIndex k, Dimension e);

// Materializes R^k.
SignVector cycle_vertex(Dimension t, CycleIndex k);

// Number of coordinates where x and y differ. {x,y} is an edge of H(t,2)
// iff the result is 1. Throws dimension_error when sizes differ.
Dimension hamming_distance(const SignVector& x, const SignVector& y);

}  // namespace scp
