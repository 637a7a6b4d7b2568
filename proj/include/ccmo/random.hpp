#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>

#include "ccmo/types.hpp"

namespace ccmo {

// Hand-rolled draws so the sequence for a seed is identical on every
// standard library, not just within one build.

/// Uniform in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

/// Uniform in [0, n).
inline std::size_t uniform_index(Rng& rng, std::size_t n)
{
    auto const k = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n));
    return k < n ? k : n - 1;
}

/// Standard normal via Box-Muller; consumes exactly two uniforms.
inline double standard_normal(Rng& rng)
{
    auto const u1 = 1.0 - uniform01(rng); // (0, 1]
    auto const u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace ccmo
