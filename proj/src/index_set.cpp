#include "scp/index_set.hpp"

#include <string>

#include "scp/cycle.hpp"
#include "scp/error.hpp"

namespace scp {

const char* index_set_violation(Dimension t, std::span<const CycleIndex> indices) {
    if (indices.size() % 2 == 0)
        return "even cardinality";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= 2 * t)
            return "index out of range";
        if (i > 0 && indices[i - 1] >= indices[i])
            return "indices not strictly increasing";
    }
    // Sorted, so each low index k < t has its antipode k+t among the high ones.
    std::size_t hi = 0;
    while (hi < indices.size() && indices[hi] < t)
        ++hi;
    for (std::size_t lo = 0, h = hi; lo < hi && h < indices.size();) {
        const CycleIndex partner = indices[lo] + t;
        if (indices[h] == partner)
            return "antipodal pair present";
        if (indices[h] < partner)
            ++h;
        else
            ++lo;
    }
    return nullptr;
}

CycleIndexSet::CycleIndexSet(Dimension t, std::vector<CycleIndex> indices)
    : t_(t), indices_(std::move(indices)) {
    check_dimension(t);
    if (const char* why = index_set_violation(t_, indices_))
        throw invalid_portrait(std::string("cycle index set: ") + why);
}

CycleIndexSet CycleIndexSet::trusted(Dimension t, std::vector<CycleIndex> indices) {
    CycleIndexSet s;
    s.t_ = t;
    s.indices_ = std::move(indices);
    return s;
}

}  // namespace scp
