#pragma once

// Slow, obviously-correct reference implementations the library is checked
// against. Nothing here calls into the library's algorithms.

#include <cstdint>
#include <vector>

#include "ccmo/problems.hpp"
#include "ccmo/types.hpp"

namespace oracle {

using ccmo::Front;
using ccmo::ObjectiveVector;

bool dominates(ObjectiveVector const& a, ObjectiveVector const& b);

/// Indices not dominated by any other point, ascending. O(N^2).
std::vector<std::size_t> nondominated(Front const& points);

/// Repeatedly strip the non-dominated layer.
std::vector<std::vector<std::size_t>> peel(Front const& points);

/// Gaussian elimination with partial pivoting. Throws on a zero pivot.
std::vector<double> solve(std::vector<std::vector<double>> a, std::vector<double> b);

struct McEstimate {
    double value;
    double stderr_;
};

/// Hit-or-miss estimate of the region dominated by `points` inside the box
/// [lower, r].
McEstimate mc_hypervolume(Front const& points, ObjectiveVector const& r, ObjectiveVector const& lower,
                          std::uint64_t samples, std::uint64_t seed);

/// All set partitions of {0..n-1} as restricted growth strings.
std::vector<std::vector<int>> set_partitions(std::size_t n);

/// f1 = sum_k 2^k x_{2k} x_{2k+1}, f2 = sum_k 2^k (1 - x_{2k})(1 - x_{2k+1}) on
/// [0,1]^dim: consecutive pairs interact, distinct pairs do not.
ccmo::Problem paired_problem(std::size_t dim);

/// True when every pair (2k, 2k+1) shares a label.
bool pairs_together(std::vector<int> const& labels);

} // namespace oracle
