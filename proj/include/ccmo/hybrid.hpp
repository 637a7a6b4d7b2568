#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "ccmo/types.hpp"

namespace ccmo {

/// A worse parent and a better offspring; the line through p along d points
/// toward the convergence point.
struct MovePair {
    Vector p;
    Vector o;
    Vector d;  // o - p
    Vector d0; // d / |d|

    /// Throws when |o - p| < 1e-12.
    static MovePair make(Vector parent, Vector offspring);
};

enum class EstimatorMethod { LeastSquares, PfAverage };

struct ConvergenceEstimate {
    Vector point;
    EstimatorMethod method = EstimatorMethod::PfAverage;
    bool condition_flag = false; // near-singular system; point is not usable
};

class SingularSystem : public std::runtime_error {
public:
    SingularSystem() : std::runtime_error("convergence point: directions do not determine a point") {}
};

/// Point minimizing the summed squared distance to every line (p_i, d0_i),
/// from [sum (I - d0 d0^T)] X = sum (I - d0 d0^T) p_i.
///
/// Throws SingularSystem when the smallest singular value falls below 1e-10
/// times the largest, e.g. when all directions are parallel.
ConvergenceEstimate estimate_point_least_squares(std::span<MovePair const> pairs);

/// Same, reporting a singular system through condition_flag instead.
ConvergenceEstimate try_estimate_point_least_squares(std::span<MovePair const> pairs) noexcept;

/// Sum of squared point-to-line distances from x to every pair's line.
double line_distance_objective(std::span<MovePair const> pairs, std::span<double const> x);

/// Componentwise mean of the given decision vectors.
ConvergenceEstimate estimate_point_average(std::span<Vector const> front);

/// `count` draws from N(centre, diag(sigma^2)), each clipped to [lower, upper].
std::vector<Vector> gaussian_samples(std::span<double const> centre, std::span<double const> sigma,
                                     std::size_t count, std::span<double const> lower,
                                     std::span<double const> upper, Rng& rng);

/// Gaussian sampling around the mean of `front`.
std::vector<Vector> egs(std::span<Vector const> front, std::size_t count, std::span<double const> sigma,
                        std::span<double const> lower, std::span<double const> upper, Rng& rng);

} // namespace ccmo
