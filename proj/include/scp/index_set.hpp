#pragma once

#include <span>
#include <vector>

#include "scp/types.hpp"

namespace scp {

// Sorted cycle indices of a decomposition set Q(T,R).
//
// Invariants: odd cardinality, strictly increasing, every index in
// [0, 2t-1], and no antipodal pair {k, k+t}.
class CycleIndexSet {
public:
    // Validates every invariant; throws invalid_portrait on violation and
    // dimension_error on a bad dimension.
    CycleIndexSet(Dimension t, std::vector<CycleIndex> indices);

    // Skips validation. Only for producers that guarantee the invariants.
    static CycleIndexSet trusted(Dimension t, std::vector<CycleIndex> indices);

    Dimension dimension() const noexcept { return t_; }
    std::span<const CycleIndex> indices() const noexcept { return indices_; }
    std::size_t size() const noexcept { return indices_.size(); }

    bool operator==(const CycleIndexSet&) const = default;

private:
    CycleIndexSet() = default;

    Dimension t_ = 0;
    std::vector<CycleIndex> indices_;
};

// Reason the indices break a CycleIndexSet invariant, or nullptr if they don't.
const char* index_set_violation(Dimension t, std::span<const CycleIndex> indices);

}  // namespace scp
