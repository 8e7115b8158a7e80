#include "scp/portrait.hpp"

#include <string>

#include "scp/cycle.hpp"
#include "scp/error.hpp"

namespace scp {

std::string_view to_string(PortraitMode mode) noexcept {
    return mode == PortraitMode::matrix ? "matrix" : "vector";
}

Portrait::Portrait(PortraitMode mode, Dimension t, std::uint64_t tau,
                   std::vector<CycleIndexSet> rows)
    : mode_(mode), t_(t), tau_(tau), rows_(std::move(rows)) {
    check_dimension(t);
    if (tau_ == 0)
        throw invalid_portrait("portrait needs at least one row");
    if (rows_.size() != tau_)
        throw invalid_portrait("portrait declares " + std::to_string(tau_) +
                               " rows but holds " + std::to_string(rows_.size()));
    if (mode_ == PortraitMode::vector && tau_ != 1)
        throw invalid_portrait("vector-mode portrait must have exactly one row");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].dimension() != t_)
            throw invalid_portrait("row " + std::to_string(i + 1) + " has dimension " +
                                   std::to_string(rows_[i].dimension()));
}

std::uint64_t portrait_weight(const Portrait& p) noexcept {
    std::uint64_t w = 0;
    for (const auto& row : p.rows())
        w += row.size();
    return w;
}

WeightBounds weight_bounds(Dimension t, std::uint64_t tau) {
    if (t < min_dimension || tau == 0)
        throw range_error("weight bounds need t >= 3 and tau >= 1");
    const std::uint64_t per_row = t % 2 == 1 ? t : t - 1;
    std::uint64_t upper = 0;
    if (__builtin_mul_overflow(tau, per_row, &upper))
        throw range_error("weight bound overflows 64 bits");
    return {tau, upper};
}

PortraitStats portrait_stats(const Portrait& p) {
    PortraitStats s{p.mode(), p.dimension(), p.rows_count(), {}, portrait_weight(p),
                    weight_bounds(p.dimension(), p.rows_count()), 0.0};
    s.row_sizes.reserve(p.rows().size());
    for (const auto& row : p.rows())
        s.row_sizes.push_back(row.size());
    s.upper_ratio = static_cast<double>(s.weight) / static_cast<double>(s.bounds.upper);
    return s;
}

}  // namespace scp
