#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ccmo/nsga2.hpp"
#include "ccmo/problems.hpp"

namespace ccmo {

std::string_view to_string(Separability s) noexcept
{
    return s == Separability::Separable ? "separable" : "partially-separable";
}

Problem::Problem(std::string name, std::size_t objectives, Vector lower, Vector upper, ObjectiveFunction function,
                 Separability separability, FrontSampler sampler)
    : name_(std::move(name))
    , objectives_(objectives)
    , lower_(std::move(lower))
    , upper_(std::move(upper))
    , function_(std::move(function))
    , separability_(separability)
    , sampler_(std::move(sampler))
{
    if (objectives_ == 0) { throw std::invalid_argument(name_ + ": objective count must be positive"); }
    if (lower_.empty() || lower_.size() != upper_.size()) {
        throw std::invalid_argument(name_ + ": bounds must be non-empty and of equal length");
    }
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        if (!(lower_[i] < upper_[i])) { throw std::invalid_argument(name_ + ": lower bound not below upper bound"); }
    }
    if (!function_) { throw std::invalid_argument(name_ + ": missing objective function"); }
}

bool Problem::in_bounds(std::span<double const> x) const noexcept
{
    if (x.size() != dim()) { return false; }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < lower_[i] || x[i] > upper_[i]) { return false; }
    }
    return true;
}

ObjectiveVector Problem::evaluate(std::span<double const> x) const
{
    ObjectiveVector f(objectives_);
    evaluate(x, f);
    return f;
}

void Problem::evaluate(std::span<double const> x, std::span<double> f) const
{
    if (x.size() != dim()) {
        throw std::invalid_argument(name_ + ": expected " + std::to_string(dim()) + " variables, got " +
                                    std::to_string(x.size()));
    }
    if (f.size() != objectives_) { throw std::invalid_argument(name_ + ": objective buffer has wrong length"); }
    function_(x, f);
}

Front Problem::sample_true_front(std::size_t n) const
{
    if (!sampler_) { throw std::invalid_argument(name_ + ": no analytic Pareto-front sampler"); }
    if (n < 2) { throw std::invalid_argument("sample_true_front: need at least 2 points"); }
    return sampler_(n);
}

std::vector<std::string> const& problem_names()
{
    static std::vector<std::string> const names{
        "ZDT1",  "ZDT2",  "ZDT3",  "ZDT4",  "ZDT6",  "DTLZ1", "DTLZ2", "DTLZ3", "DTLZ4", "DTLZ5", "DTLZ6",
        "DTLZ7", "UF1",   "UF2",   "WFG1",  "WFG2",  "WFG3",  "WFG4",  "WFG5",  "WFG7",
    };
    return names;
}

Problem make_problem(std::string_view name, std::size_t dim, std::optional<std::size_t> objectives)
{
    for (auto* factory : {&detail::make_zdt, &detail::make_dtlz, &detail::make_uf, &detail::make_wfg}) {
        if (auto p = factory(name, dim, objectives)) { return std::move(*p); }
    }
    std::string known;
    for (auto const& n : problem_names()) { known += (known.empty() ? "" : ", ") + n; }
    throw std::invalid_argument("unknown problem '" + std::string(name) + "' (known: " + known + ")");
}

namespace detail {

Front thin_evenly(Front points, std::size_t n)
{
    auto const total = points.size();
    if (total <= n) { return points; }
    Front out;
    out.reserve(n);
    if (n == 1) {
        out.push_back(std::move(points.front()));
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto const idx = static_cast<std::size_t>(std::llround(static_cast<double>(i) * static_cast<double>(total - 1) /
                                                               static_cast<double>(n - 1)));
        out.push_back(points[idx]);
    }
    return out;
}

Front nondominated_unique(Front const& points)
{
    if (points.empty()) { return {}; }
    if (points.front().size() == 2) {
        // Sweep in lexicographic order; a point survives when it strictly
        // improves the second objective over everything before it.
        std::vector<std::size_t> order(points.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return points[a] < points[b]; });
        Front out;
        auto best = std::numeric_limits<double>::infinity();
        for (auto i : order) {
            if (points[i][1] < best) {
                out.push_back(points[i]);
                best = points[i][1];
            }
        }
        return out;
    }
    Front out;
    for (auto i : quick_search(points)) {
        if (std::find(out.begin(), out.end(), points[i]) == out.end()) { out.push_back(points[i]); }
    }
    return out;
}

std::vector<Vector> unit_grid(std::size_t dims, std::size_t per_axis)
{
    std::vector<Vector> out;
    if (dims == 0 || per_axis == 0) { return out; }
    std::vector<std::size_t> idx(dims, 0);
    auto const step = per_axis > 1 ? 1.0 / static_cast<double>(per_axis - 1) : 0.0;
    while (true) {
        Vector p(dims);
        for (std::size_t d = 0; d < dims; ++d) { p[d] = static_cast<double>(idx[d]) * step; }
        out.push_back(std::move(p));
        std::size_t d = 0;
        while (d < dims && ++idx[d] == per_axis) { idx[d++] = 0; }
        if (d == dims) { break; }
    }
    return out;
}

std::vector<Vector> simplex_lattice(std::size_t objectives, std::size_t n)
{
    auto count = [objectives](std::size_t h) {
        // C(h + M - 1, M - 1) computed incrementally
        double c = 1.0;
        for (std::size_t i = 1; i < objectives; ++i) {
            c = c * static_cast<double>(h + i) / static_cast<double>(i);
        }
        return c;
    };
    std::size_t h = 1;
    while (count(h) < static_cast<double>(n)) { ++h; }

    std::vector<Vector> out;
    std::vector<std::size_t> parts(objectives, 0);
    // Enumerate compositions of h into `objectives` non-negative parts.
    auto recurse = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
        if (pos + 1 == objectives) {
            parts[pos] = left;
            Vector p(objectives);
            for (std::size_t i = 0; i < objectives; ++i) {
                p[i] = static_cast<double>(parts[i]) / static_cast<double>(h);
            }
            out.push_back(std::move(p));
            return;
        }
        for (std::size_t v = 0; v <= left; ++v) {
            parts[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    recurse(recurse, 0, h);
    return out;
}

} // namespace detail
} // namespace ccmo
