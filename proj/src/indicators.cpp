#include "ccmo/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ccmo/random.hpp"

namespace ccmo {
namespace {

// Area dominated by 2-D points (already strictly inside the reference box).
double area_2d(std::vector<std::pair<double, double>> pts, double r0, double r1)
{
    std::sort(pts.begin(), pts.end());
    double area = 0.0;
    double ceiling = r1;
    for (auto const& [a, b] : pts) {
        if (b < ceiling) {
            area += (r0 - a) * (ceiling - b);
            ceiling = b;
        }
    }
    return area;
}

double volume_3d(std::vector<ObjectiveVector> pts, ObjectiveVector const& r)
{
    std::sort(pts.begin(), pts.end(), [](auto const& a, auto const& b) { return a[2] < b[2]; });
    double volume = 0.0;
    std::vector<std::pair<double, double>> slice;
    slice.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        slice.emplace_back(pts[i][0], pts[i][1]);
        auto const top = i + 1 < pts.size() ? pts[i + 1][2] : r[2];
        auto const height = top - pts[i][2];
        if (height > 0.0) { volume += height * area_2d(slice, r[0], r[1]); }
    }
    return volume;
}

} // namespace

HypervolumeResult hypervolume(std::span<ObjectiveVector const> points, ObjectiveVector const& reference,
                              HypervolumeOptions const& options)
{
    auto const m = reference.size();
    if (m == 0) { throw std::invalid_argument("hypervolume: empty reference point"); }
    std::vector<ObjectiveVector> inside;
    for (auto const& p : points) {
        if (p.size() != m) { throw std::invalid_argument("hypervolume: objective count differs from reference point"); }
        bool strictly = true;
        for (std::size_t k = 0; k < m; ++k) { strictly = strictly && p[k] < reference[k]; }
        if (strictly) { inside.push_back(p); }
    }

    HypervolumeResult result;
    if (inside.empty()) { return result; }

    if (m == 1) {
        double best = reference[0];
        for (auto const& p : inside) { best = std::min(best, p[0]); }
        result.value = reference[0] - best;
        return result;
    }
    if (m == 2) {
        std::vector<std::pair<double, double>> pts;
        for (auto const& p : inside) { pts.emplace_back(p[0], p[1]); }
        result.value = area_2d(std::move(pts), reference[0], reference[1]);
        return result;
    }
    if (m == 3) {
        result.value = volume_3d(std::move(inside), reference);
        return result;
    }

    // Monte-Carlo over the box spanned by the ideal point and the reference.
    ObjectiveVector ideal(m, std::numeric_limits<double>::infinity());
    for (auto const& p : inside) {
        for (std::size_t k = 0; k < m; ++k) { ideal[k] = std::min(ideal[k], p[k]); }
    }
    double box = 1.0;
    for (std::size_t k = 0; k < m; ++k) { box *= reference[k] - ideal[k]; }

    Rng rng(options.mc_seed);
    std::uint64_t hits = 0;
    ObjectiveVector sample(m);
    for (std::uint64_t s = 0; s < options.mc_samples; ++s) {
        for (std::size_t k = 0; k < m; ++k) { sample[k] = uniform(rng, ideal[k], reference[k]); }
        auto const covered = std::any_of(inside.begin(), inside.end(), [&](auto const& p) {
            for (std::size_t k = 0; k < m; ++k) {
                if (p[k] > sample[k]) { return false; }
            }
            return true;
        });
        hits += covered ? 1 : 0;
    }
    auto const n = static_cast<double>(options.mc_samples);
    auto const frac = static_cast<double>(hits) / n;
    result.exact = false;
    result.value = box * frac;
    result.stderr_ = box * std::sqrt(frac * (1.0 - frac) / n);
    result.samples = options.mc_samples;
    result.seed = options.mc_seed;
    return result;
}

double igd(std::span<ObjectiveVector const> approximation, std::span<ObjectiveVector const> reference)
{
    if (approximation.empty() || reference.empty()) { throw std::invalid_argument("igd: empty set"); }
    auto const m = reference.front().size();
    double total = 0.0;
    for (auto const& r : reference) {
        if (r.size() != m) { throw std::invalid_argument("igd: inconsistent objective counts"); }
        double best = std::numeric_limits<double>::infinity();
        for (auto const& a : approximation) {
            if (a.size() != m) { throw std::invalid_argument("igd: inconsistent objective counts"); }
            double d2 = 0.0;
            for (std::size_t k = 0; k < m; ++k) { d2 += (r[k] - a[k]) * (r[k] - a[k]); }
            best = std::min(best, d2);
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(reference.size());
}

ObjectiveVector default_reference_point(std::span<Front const> sets)
{
    ObjectiveVector worst;
    for (auto const& set : sets) {
        for (auto const& p : set) {
            if (worst.empty()) {
                worst = p;
                continue;
            }
            if (p.size() != worst.size()) { throw std::invalid_argument("reference point: inconsistent objective counts"); }
            for (std::size_t k = 0; k < p.size(); ++k) { worst[k] = std::max(worst[k], p[k]); }
        }
    }
    if (worst.empty()) { throw std::invalid_argument("reference point: all sets are empty"); }
    for (auto& v : worst) { v = v > 0.0 ? v * 1.1 : v + 0.1; }
    return worst;
}

IndicatorResult compute_indicators(std::span<ObjectiveVector const> points, ObjectiveVector const& reference_point,
                                   std::span<ObjectiveVector const> reference_set, HypervolumeOptions const& options)
{
    IndicatorResult out;
    auto const hv = hypervolume(points, reference_point, options);
    out.hv = hv.value;
    out.hv_stderr = hv.stderr_;
    out.igd = igd(points, reference_set);
    out.reference_point = reference_point;
    out.reference_set_size = reference_set.size();
    return out;
}

} // namespace ccmo
