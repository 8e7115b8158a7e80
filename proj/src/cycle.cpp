#include "scp/cycle.hpp"

#include <bit>
#include <string>

#include "scp/error.hpp"

namespace scp {

namespace detail {

void throw_bad_dimension(Dimension t) {
    if (t < min_dimension)
        throw dimension_error("dimension " + std::to_string(t) + " is below 3");
    if (t > max_dimension)
        throw dimension_error("dimension " + std::to_string(t) + " exceeds 2^62");
    throw dimension_error("dimension " + std::to_string(t) + " is invalid");
}

}  // namespace detail

namespace {

void check_index(Dimension t, CycleIndex k) {
    if (k >= 2 * t)
        throw range_error("cycle index " + std::to_string(k) + " outside 0.." +
                          std::to_string(2 * t - 1));
}

}  // namespace

Sign cycle_component(Dimension t, CycleIndex k, Dimension e) {
    check_dimension(t);
    check_index(t, k);
    if (e < 1 || e > t)
        throw range_error("coordinate " + std::to_string(e) + " outside 1.." +
                          std::to_string(t));
    if (k < t)
        return e <= k ? Sign::minus : Sign::plus;
    return e <= k - t ? Sign::plus : Sign::minus;
}

SignVector cycle_vertex(Dimension t, CycleIndex k) {
    check_dimension(t);
    check_index(t, k);
    SignVector v(t);
    if (k < t) {
        v.set_negative_range(1, k);
    } else {
        v.set_negative_range(k - t + 1, t);
    }
    return v;
}

Dimension hamming_distance(const SignVector& x, const SignVector& y) {
    if (x.size() != y.size())
        throw dimension_error("hamming distance of vectors with dimensions " +
                              std::to_string(x.size()) + " and " +
                              std::to_string(y.size()));
    const auto a = x.words();
    const auto b = y.words();
    Dimension d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += static_cast<Dimension>(std::popcount(a[i] ^ b[i]));
    return d;
}

}  // namespace scp
