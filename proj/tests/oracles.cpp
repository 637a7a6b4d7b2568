#include "oracles.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace oracle {

bool dominates(ObjectiveVector const& a, ObjectiveVector const& b)
{
    bool strictly = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) { return false; }
        if (a[k] < b[k]) { strictly = true; }
    }
    return strictly;
}

std::vector<std::size_t> nondominated(Front const& points)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool beaten = false;
        for (std::size_t j = 0; j < points.size() && !beaten; ++j) { beaten = j != i && dominates(points[j], points[i]); }
        if (!beaten) { out.push_back(i); }
    }
    return out;
}

std::vector<std::vector<std::size_t>> peel(Front const& points)
{
    std::vector<std::size_t> left(points.size());
    for (std::size_t i = 0; i < left.size(); ++i) { left[i] = i; }
    std::vector<std::vector<std::size_t>> fronts;
    while (!left.empty()) {
        Front sub;
        for (auto i : left) { sub.push_back(points[i]); }
        auto const layer = nondominated(sub);
        std::vector<std::size_t> front;
        std::vector<bool> taken(left.size(), false);
        for (auto k : layer) {
            front.push_back(left[k]);
            taken[k] = true;
        }
        std::vector<std::size_t> rest;
        for (std::size_t k = 0; k < left.size(); ++k) {
            if (!taken[k]) { rest.push_back(left[k]); }
        }
        fronts.push_back(front);
        left = rest;
    }
    return fronts;
}

std::vector<double> solve(std::vector<std::vector<double>> a, std::vector<double> b)
{
    auto const n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::abs(a[r][c]) > std::abs(a[pivot][c])) { pivot = r; }
        }
        if (a[pivot][c] == 0.0) { throw std::runtime_error("oracle::solve: singular"); }
        std::swap(a[c], a[pivot]);
        std::swap(b[c], b[pivot]);
        for (std::size_t r = c + 1; r < n; ++r) {
            auto const factor = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) { a[r][k] -= factor * a[c][k]; }
            b[r] -= factor * b[c];
        }
    }
    std::vector<double> x(n);
    for (std::size_t r = n; r-- > 0;) {
        double acc = b[r];
        for (std::size_t k = r + 1; k < n; ++k) { acc -= a[r][k] * x[k]; }
        x[r] = acc / a[r][r];
    }
    return x;
}

McEstimate mc_hypervolume(Front const& points, ObjectiveVector const& r, ObjectiveVector const& lower,
                          std::uint64_t samples, std::uint64_t seed)
{
    std::mt19937 gen(static_cast<std::uint32_t>(seed));
    std::vector<std::uniform_real_distribution<double>> axis;
    double box = 1.0;
    for (std::size_t k = 0; k < r.size(); ++k) {
        axis.emplace_back(lower[k], r[k]);
        box *= r[k] - lower[k];
    }
    std::uint64_t hits = 0;
    ObjectiveVector z(r.size());
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (std::size_t k = 0; k < r.size(); ++k) { z[k] = axis[k](gen); }
        for (auto const& p : points) {
            bool inside = true;
            for (std::size_t k = 0; k < r.size() && inside; ++k) { inside = p[k] <= z[k]; }
            if (inside) {
                ++hits;
                break;
            }
        }
    }
    auto const frac = static_cast<double>(hits) / static_cast<double>(samples);
    return {box * frac, box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples))};
}

namespace {

void grow(std::vector<int>& current, std::size_t n, int used, std::vector<std::vector<int>>& out)
{
    if (current.size() == n) {
        out.push_back(current);
        return;
    }
    for (int label = 0; label <= used; ++label) {
        current.push_back(label);
        grow(current, n, label == used ? used + 1 : used, out);
        current.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> set_partitions(std::size_t n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    grow(current, n, 0, out);
    return out;
}

ccmo::Problem paired_problem(std::size_t dim)
{
    auto fn = [](std::span<double const> x, std::span<double> f) {
        f[0] = 0.0;
        f[1] = 0.0;
        double weight = 1.0;
        for (std::size_t k = 0; 2 * k + 1 < x.size(); ++k) {
            f[0] += weight * x[2 * k] * x[2 * k + 1];
            f[1] += weight * (1.0 - x[2 * k]) * (1.0 - x[2 * k + 1]);
            weight *= 2.0;
        }
    };
    return ccmo::Problem("paired", 2, ccmo::Vector(dim, 0.0), ccmo::Vector(dim, 1.0), fn);
}

bool pairs_together(std::vector<int> const& labels)
{
    for (std::size_t k = 0; 2 * k + 1 < labels.size(); ++k) {
        if (labels[2 * k] != labels[2 * k + 1]) { return false; }
    }
    return true;
}

} // namespace oracle
