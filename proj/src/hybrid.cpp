#include "ccmo/hybrid.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "ccmo/random.hpp"

namespace ccmo {

MovePair MovePair::make(Vector parent, Vector offspring)
{
    if (parent.size() != offspring.size()) { throw std::invalid_argument("move pair: dimension mismatch"); }
    MovePair pair;
    pair.d.resize(parent.size());
    double norm2 = 0.0;
    for (std::size_t i = 0; i < parent.size(); ++i) {
        pair.d[i] = offspring[i] - parent[i];
        norm2 += pair.d[i] * pair.d[i];
    }
    auto const norm = std::sqrt(norm2);
    if (norm < 1e-12) { throw std::invalid_argument("move pair: parent and offspring coincide"); }
    pair.d0 = pair.d;
    for (auto& v : pair.d0) { v /= norm; }
    pair.p = std::move(parent);
    pair.o = std::move(offspring);
    return pair;
}

ConvergenceEstimate try_estimate_point_least_squares(std::span<MovePair const> pairs) noexcept
{
    ConvergenceEstimate out;
    out.method = EstimatorMethod::LeastSquares;
    if (pairs.size() < 2 || pairs.front().p.size() < 2) {
        out.condition_flag = true;
        return out;
    }
    auto const n = static_cast<Eigen::Index>(pairs.front().p.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
    for (auto const& pair : pairs) {
        if (static_cast<Eigen::Index>(pair.p.size()) != n || static_cast<Eigen::Index>(pair.d0.size()) != n) {
            out.condition_flag = true;
            return out;
        }
        Eigen::Map<Eigen::VectorXd const> d0(pair.d0.data(), n);
        Eigen::Map<Eigen::VectorXd const> p(pair.p.data(), n);
        Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(n, n) - d0 * d0.transpose();
        a += proj;
        b += proj * p;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    auto const& sv = svd.singularValues();
    if (!(sv(n - 1) >= 1e-10 * sv(0)) || sv(0) == 0.0) {
        out.condition_flag = true;
        return out;
    }
    Eigen::VectorXd x = svd.solve(b);
    out.point.assign(x.data(), x.data() + n);
    out.condition_flag = !std::all_of(out.point.begin(), out.point.end(), [](double v) { return std::isfinite(v); });
    return out;
}

ConvergenceEstimate estimate_point_least_squares(std::span<MovePair const> pairs)
{
    if (pairs.size() < 2) { throw std::invalid_argument("least squares estimate: needs at least two pairs"); }
    if (pairs.front().p.size() < 2) { throw std::invalid_argument("least squares estimate: needs dimension >= 2"); }
    auto out = try_estimate_point_least_squares(pairs);
    if (out.condition_flag) { throw SingularSystem(); }
    return out;
}

double line_distance_objective(std::span<MovePair const> pairs, std::span<double const> x)
{
    double total = 0.0;
    for (auto const& pair : pairs) {
        double along = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) { along += (x[i] - pair.p[i]) * pair.d0[i]; }
        for (std::size_t i = 0; i < x.size(); ++i) {
            auto const r = (x[i] - pair.p[i]) - along * pair.d0[i];
            total += r * r;
        }
    }
    return total;
}

ConvergenceEstimate estimate_point_average(std::span<Vector const> front)
{
    if (front.empty()) { throw std::invalid_argument("average estimate: empty front"); }
    ConvergenceEstimate out;
    out.method = EstimatorMethod::PfAverage;
    out.point.assign(front.front().size(), 0.0);
    for (auto const& x : front) {
        if (x.size() != out.point.size()) { throw std::invalid_argument("average estimate: dimension mismatch"); }
        for (std::size_t i = 0; i < x.size(); ++i) { out.point[i] += x[i]; }
    }
    for (auto& v : out.point) { v /= static_cast<double>(front.size()); }
    return out;
}

std::vector<Vector> gaussian_samples(std::span<double const> centre, std::span<double const> sigma,
                                     std::size_t count, std::span<double const> lower,
                                     std::span<double const> upper, Rng& rng)
{
    auto const n = centre.size();
    if (sigma.size() != n || lower.size() != n || upper.size() != n) {
        throw std::invalid_argument("gaussian sampling: dimension mismatch");
    }
    std::vector<Vector> out(count, Vector(n));
    for (auto& x : out) {
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = std::clamp(centre[i] + sigma[i] * standard_normal(rng), lower[i], upper[i]);
        }
    }
    return out;
}

std::vector<Vector> egs(std::span<Vector const> front, std::size_t count, std::span<double const> sigma,
                        std::span<double const> lower, std::span<double const> upper, Rng& rng)
{
    if (count == 0) { throw std::invalid_argument("egs: sample count must be positive"); }
    auto const centre = estimate_point_average(front);
    return gaussian_samples(centre.point, sigma, count, lower, upper, rng);
}

} // namespace ccmo
