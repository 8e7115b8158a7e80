#pragma once

#include "scp/index_set.hpp"
#include "scp/sign_vector.hpp"

namespace scp {

inline constexpr Dimension oracle_max_dimension = 10;

// Decomposes T by exhaustive search over all 2^(2t) subsets of cycle
// vertices, independent of the interval construction.
//
// Returns the smallest subset summing to T after checking that it is the
// only subset of that size doing so and the only inclusion-minimal one.
// Throws dimension_error for t > 10 and consistency_error if either check
// fails or nothing sums to T.
CycleIndexSet brute_force_decompose(const SignVector& T);

}  // namespace scp
