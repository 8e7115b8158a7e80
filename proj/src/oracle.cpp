#include "scp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "scp/cycle.hpp"
#include "scp/error.hpp"

namespace scp {

namespace {

// Coordinate sums are packed six bits per coordinate. Each chosen vertex
// adds 2 to a field where it is +1 and 0 where it is -1, so a field holds
// (true sum + subset size), which stays within [0, 4t] < 64.
constexpr unsigned field_bits = 6;

std::uint64_t packed_shift(Dimension t, CycleIndex k) {
    std::uint64_t w = 0;
    for (Dimension e = 1; e <= t; ++e)
        if (cycle_component(t, k, e) == Sign::plus)
            w |= std::uint64_t{2} << (field_bits * (e - 1));
    return w;
}

}  // namespace

CycleIndexSet brute_force_decompose(const SignVector& T) {
    const Dimension t = T.size();
    if (t > oracle_max_dimension)
        throw dimension_error("brute-force oracle supports t <= 10, got " +
                              std::to_string(t));
    const unsigned n = static_cast<unsigned>(2 * t);

    std::vector<std::uint64_t> shifts(n);
    for (unsigned k = 0; k < n; ++k)
        shifts[k] = packed_shift(t, k);

    // targets[size] is the packed field pattern a subset of that size must hit.
    std::vector<std::uint64_t> targets(n + 1, 0);
    for (unsigned size = 1; size <= n; ++size)
        for (Dimension e = 1; e <= t; ++e) {
            const auto field = static_cast<std::uint64_t>(to_int(T.at(e)) + static_cast<int>(size));
            targets[size] |= field << (field_bits * (e - 1));
        }

    // Gray-code walk over all subsets: one vertex enters or leaves per step.
    std::vector<std::uint32_t> matches;
    std::uint32_t subset = 0;
    std::uint64_t packed = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < total; ++step) {
        const auto k = static_cast<unsigned>(std::countr_zero(step));
        subset ^= std::uint32_t{1} << k;
        if ((subset >> k) & 1u)
            packed += shifts[k];
        else
            packed -= shifts[k];
        if (packed == targets[static_cast<unsigned>(std::popcount(subset))])
            matches.push_back(subset);
    }
    if (matches.empty())
        throw consistency_error("no subset of cycle vertices sums to " + T.to_pattern());

    std::sort(matches.begin(), matches.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = std::popcount(a);
        const int pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    const std::uint32_t smallest = matches.front();
    if (matches.size() > 1 && std::popcount(matches[1]) == std::popcount(smallest))
        throw consistency_error("two smallest decompositions of " + T.to_pattern());

    // Inclusion-minimal: no other matching subset sits strictly inside.
    std::size_t minimal = 0;
    for (std::size_t i = 0; i < matches.size(); ++i) {
        const std::uint32_t s = matches[i];
        bool has_smaller_match = false;
        for (std::size_t j = 0; j < i && !has_smaller_match; ++j)
            has_smaller_match = matches[j] != s && (matches[j] & ~s) == 0;
        if (!has_smaller_match)
            ++minimal;
    }
    if (minimal != 1)
        throw consistency_error(std::to_string(minimal) +
                                " inclusion-minimal decompositions of " + T.to_pattern());

    std::vector<CycleIndex> indices;
    for (unsigned k = 0; k < n; ++k)
        if ((smallest >> k) & 1u)
            indices.push_back(k);
    return CycleIndexSet(t, std::move(indices));
}

}  // namespace scp
