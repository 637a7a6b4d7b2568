// WFG toolkit problems 1-5 and 7. k = 2(M-1) position variables, the rest
// distance variables; z_i ranges over [0, 2i] (1-based i).

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ccmo/problems.hpp"

namespace ccmo::detail {
namespace {

constexpr double pi = std::numbers::pi;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// --- transformation primitives ---------------------------------------------

double b_poly(double y, double alpha) { return clamp01(std::pow(y, alpha)); }

double b_flat(double y, double a, double b, double c)
{
    auto const t1 = std::min(0.0, std::floor(y - b)) * a * (b - y) / b;
    auto const t2 = std::min(0.0, std::floor(c - y)) * (1.0 - a) * (y - c) / (1.0 - c);
    return clamp01(a + t1 - t2);
}

double b_param(double y, double u, double a, double b, double c)
{
    auto const v = a - (1.0 - 2.0 * u) * std::abs(std::floor(0.5 - u) + a);
    return clamp01(std::pow(y, b + (c - b) * v));
}

double s_linear(double y, double a) { return clamp01(std::abs(y - a) / std::abs(std::floor(a - y) + a)); }

double s_decept(double y, double a, double b, double c)
{
    auto const t1 = std::floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b);
    auto const t2 = std::floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b);
    return clamp01(1.0 + (std::abs(y - a) - b) * (t1 + t2 + 1.0 / b));
}

double s_multi(double y, double a, double b, double c)
{
    auto const t1 = std::abs(y - c) / (2.0 * (std::floor(c - y) + c));
    auto const t2 = (4.0 * a + 2.0) * pi * (0.5 - t1);
    return clamp01((1.0 + std::cos(t2) + 4.0 * b * t1 * t1) / (b + 2.0));
}

double r_sum(std::span<double const> y, std::span<double const> w)
{
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        num += w[i] * y[i];
        den += w[i];
    }
    return clamp01(num / den);
}

double r_nonsep(std::span<double const> y, std::size_t a)
{
    auto const n = y.size();
    double num = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        num += y[j];
        for (std::size_t k = 0; k + 2 <= a; ++k) { num += std::abs(y[j] - y[(j + 1 + k) % n]); }
    }
    auto const half = std::ceil(static_cast<double>(a) / 2.0);
    auto const den = static_cast<double>(n) / static_cast<double>(a) * half * (1.0 + 2.0 * static_cast<double>(a) - 2.0 * half);
    return clamp01(num / den);
}

// --- shapes (m is 1-based, x holds the M-1 position parameters) -------------

double convex(std::span<double const> x, std::size_t m, std::size_t big_m)
{
    double r = 1.0;
    for (std::size_t i = 0; i + m < big_m; ++i) { r *= 1.0 - std::cos(x[i] * pi / 2.0); }
    if (m > 1) { r *= 1.0 - std::sin(x[big_m - m] * pi / 2.0); }
    return r;
}

double concave(std::span<double const> x, std::size_t m, std::size_t big_m)
{
    double r = 1.0;
    for (std::size_t i = 0; i + m < big_m; ++i) { r *= std::sin(x[i] * pi / 2.0); }
    if (m > 1) { r *= std::cos(x[big_m - m] * pi / 2.0); }
    return r;
}

double linear(std::span<double const> x, std::size_t m, std::size_t big_m)
{
    double r = 1.0;
    for (std::size_t i = 0; i + m < big_m; ++i) { r *= x[i]; }
    if (m > 1) { r *= 1.0 - x[big_m - m]; }
    return r;
}

double mixed(double x0, double alpha, double a)
{
    return std::pow(1.0 - x0 - std::cos(2.0 * a * pi * x0 + pi / 2.0) / (2.0 * a * pi), alpha);
}

double disc(double x0, double alpha, double beta, double a)
{
    auto const c = std::cos(a * std::pow(x0, beta) * pi);
    return 1.0 - std::pow(x0, alpha) * c * c;
}

enum class Shape { ConvexMixed, ConvexDisc, Linear, Concave };

struct WfgConfig {
    int id;
    std::size_t objectives;
    std::size_t k;
    std::size_t n;
};

/// Position/distance reduction shared by every problem here: the position
/// variables are averaged in M-1 equal blocks, the distance variables in one.
Vector reduce(std::span<double const> y, std::size_t k, std::size_t objectives, bool weighted)
{
    Vector t(objectives);
    auto const gap = k / (objectives - 1);
    Vector w(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) { w[i] = weighted ? 2.0 * static_cast<double>(i + 1) : 1.0; }
    std::span<double const> ws(w);
    for (std::size_t b = 0; b + 1 < objectives; ++b) { t[b] = r_sum(y.subspan(b * gap, gap), ws.subspan(b * gap, gap)); }
    t[objectives - 1] = r_sum(y.subspan(k), ws.subspan(k, y.size() - k));
    return t;
}

/// Objective values from the reduced parameters t (length M).
void shape_objectives(Vector const& t, Shape shape, bool degenerate, std::span<double> f)
{
    auto const big_m = t.size();
    Vector x(big_m - 1);
    auto const dist = t[big_m - 1];
    for (std::size_t i = 0; i + 1 < big_m; ++i) {
        auto const a = (degenerate && i > 0) ? 0.0 : 1.0;
        x[i] = std::max(dist, a) * (t[i] - 0.5) + 0.5;
    }
    for (std::size_t m = 1; m <= big_m; ++m) {
        double h = 0.0;
        switch (shape) {
        case Shape::ConvexMixed: h = m < big_m ? convex(x, m, big_m) : mixed(x[0], 1.0, 5.0); break;
        case Shape::ConvexDisc: h = m < big_m ? convex(x, m, big_m) : disc(x[0], 1.0, 1.0, 5.0); break;
        case Shape::Linear: h = linear(x, m, big_m); break;
        case Shape::Concave: h = concave(x, m, big_m); break;
        }
        f[m - 1] = dist + 2.0 * static_cast<double>(m) * h;
    }
}

Shape shape_of(int id)
{
    switch (id) {
    case 1: return Shape::ConvexMixed;
    case 2: return Shape::ConvexDisc;
    case 3: return Shape::Linear;
    default: return Shape::Concave;
    }
}

void wfg_evaluate(WfgConfig const& cfg, std::span<double const> z, std::span<double> f)
{
    auto const n = cfg.n;
    auto const k = cfg.k;
    Vector y(n);
    for (std::size_t i = 0; i < n; ++i) { y[i] = clamp01(z[i] / (2.0 * static_cast<double>(i + 1))); }

    Vector t;
    switch (cfg.id) {
    case 1:
        for (std::size_t i = k; i < n; ++i) { y[i] = b_flat(s_linear(y[i], 0.35), 0.8, 0.75, 0.85); }
        for (auto& v : y) { v = b_poly(v, 0.02); }
        t = reduce(y, k, cfg.objectives, true);
        break;
    case 2:
    case 3: {
        for (std::size_t i = k; i < n; ++i) { y[i] = s_linear(y[i], 0.35); }
        auto const l = n - k;
        Vector y2(k + l / 2);
        std::copy_n(y.begin(), k, y2.begin());
        for (std::size_t i = 0; i < l / 2; ++i) {
            double pair[2] = {y[k + 2 * i], y[k + 2 * i + 1]};
            y2[k + i] = r_nonsep(pair, 2);
        }
        t = reduce(y2, k, cfg.objectives, false);
        break;
    }
    case 4:
        for (auto& v : y) { v = s_multi(v, 30.0, 10.0, 0.35); }
        t = reduce(y, k, cfg.objectives, false);
        break;
    case 5:
        for (auto& v : y) { v = s_decept(v, 0.35, 0.001, 0.05); }
        t = reduce(y, k, cfg.objectives, false);
        break;
    default: { // 7
        Vector biased = y;
        // Suffix sums give r_sum(y[i+1..n)) for each position variable.
        double suffix = 0.0;
        for (std::size_t i = n; i-- > 0;) {
            if (i < k) {
                auto const u = clamp01(suffix / static_cast<double>(n - i - 1));
                biased[i] = b_param(y[i], u, 0.98 / 49.98, 0.02, 50.0);
            }
            suffix += y[i];
        }
        for (std::size_t i = k; i < n; ++i) { biased[i] = s_linear(y[i], 0.35); }
        t = reduce(biased, k, cfg.objectives, false);
        break;
    }
    }
    shape_objectives(t, shape_of(cfg.id), cfg.id == 3, f);
}

/// True front in objective space: distance parameter 0, position parameters
/// on a grid, dominated and duplicate points removed.
Front wfg_front(int id, std::size_t objectives, std::size_t n)
{
    auto const free_dims = id == 3 ? std::size_t{1} : objectives - 1;
    auto const target = 10.0 * static_cast<double>(n);
    auto const per_axis =
        static_cast<std::size_t>(std::ceil(std::pow(target, 1.0 / static_cast<double>(free_dims))));
    Front dense;
    for (auto const& p : unit_grid(free_dims, per_axis)) {
        Vector t(objectives, 0.5);
        for (std::size_t i = 0; i < free_dims; ++i) { t[i] = p[i]; }
        t[objectives - 1] = 0.0;
        ObjectiveVector f(objectives);
        shape_objectives(t, shape_of(id), id == 3, f);
        dense.push_back(std::move(f));
    }
    return thin_evenly(nondominated_unique(dense), n);
}

Separability wfg_separability(int id)
{
    return (id == 2 || id == 3) ? Separability::PartiallySeparable : Separability::Separable;
}

} // namespace

std::optional<Problem> make_wfg(std::string_view name, std::size_t dim, std::optional<std::size_t> objectives)
{
    if (!name.starts_with("WFG") || name.size() != 4) { return std::nullopt; }
    auto const id = name[3] - '0';
    if (id < 1 || id > 7 || id == 6) { return std::nullopt; }

    auto const m = objectives.value_or(2);
    if (m < 2) { throw std::invalid_argument(std::string(name) + " needs at least 2 objectives"); }
    auto const k = 2 * (m - 1);
    if (dim < m + 1 || dim <= k) {
        throw std::invalid_argument(std::string(name) + ": dim must exceed the " + std::to_string(k) +
                                    " position variables");
    }
    if ((id == 2 || id == 3) && (dim - k) % 2 != 0) {
        throw std::invalid_argument(std::string(name) + " needs an even number of distance variables");
    }

    Vector lower(dim, 0.0);
    Vector upper(dim);
    for (std::size_t i = 0; i < dim; ++i) { upper[i] = 2.0 * static_cast<double>(i + 1); }

    WfgConfig const cfg{id, m, k, dim};
    auto fn = [cfg](std::span<double const> z, std::span<double> f) { wfg_evaluate(cfg, z, f); };
    auto sampler = [id, m](std::size_t n) { return wfg_front(id, m, n); };
    return Problem(std::string(name), m, std::move(lower), std::move(upper), std::move(fn), wfg_separability(id),
                   std::move(sampler));
}

} // namespace ccmo::detail
