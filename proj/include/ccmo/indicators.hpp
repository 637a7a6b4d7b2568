#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ccmo/types.hpp"

namespace ccmo {

struct HypervolumeResult {
    double value = 0.0;
    bool exact = true;
    // Monte-Carlo only (M > 3)
    double stderr_ = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

struct HypervolumeOptions {
    std::uint64_t mc_samples = 1'000'000;
    std::uint64_t mc_seed = 20'240'601;
};

/// Lebesgue measure of the region dominated by `points` and bounded by
/// `reference` (larger is better). Points that do not strictly dominate the
/// reference point in every objective contribute nothing. Exact for M <= 3,
/// Monte-Carlo above.
HypervolumeResult hypervolume(std::span<ObjectiveVector const> points, ObjectiveVector const& reference,
                              HypervolumeOptions const& options = {});

/// Mean over reference points of the distance to the nearest member of
/// `approximation`.
double igd(std::span<ObjectiveVector const> approximation, std::span<ObjectiveVector const> reference);

/// Componentwise maximum over all sets, each component scaled by 1.1 (or
/// shifted by 0.1 when the maximum is not positive).
ObjectiveVector default_reference_point(std::span<Front const> sets);

struct IndicatorResult {
    double hv = 0.0;
    double hv_stderr = 0.0;
    double igd = 0.0;
    ObjectiveVector reference_point;
    std::size_t reference_set_size = 0;
};

IndicatorResult compute_indicators(std::span<ObjectiveVector const> points, ObjectiveVector const& reference_point,
                                   std::span<ObjectiveVector const> reference_set,
                                   HypervolumeOptions const& options = {});

} // namespace ccmo
