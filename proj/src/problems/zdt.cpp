// ZDT suite (bi-objective). ZDT5 is binary-coded and not provided.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ccmo/problems.hpp"

namespace ccmo::detail {
namespace {

constexpr double pi = std::numbers::pi;

double tail_mean(std::span<double const> x)
{
    double sum = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) { sum += x[i]; }
    return sum / static_cast<double>(x.size() - 1);
}

double zdt6_f1(double x1) { return 1.0 - std::exp(-4.0 * x1) * std::pow(std::sin(6.0 * pi * x1), 6); }

// Smallest attainable ZDT6 f1; the minimum lies in the first hump of sin^6.
double zdt6_f1_min()
{
    double lo = 0.0;
    double hi = 1.0 / 6.0;
    constexpr double ratio = 0.6180339887498949;
    for (int it = 0; it < 200; ++it) {
        auto const a = hi - ratio * (hi - lo);
        auto const b = lo + ratio * (hi - lo);
        if (zdt6_f1(a) < zdt6_f1(b)) {
            hi = b;
        } else {
            lo = a;
        }
    }
    return zdt6_f1(0.5 * (lo + hi));
}

// f2 = 1 - sqrt(f1), sampled uniformly in t = sqrt(f1).
Front convex_front(std::size_t n)
{
    Front out;
    for (std::size_t i = 0; i < n; ++i) {
        auto const t = static_cast<double>(i) / static_cast<double>(n - 1);
        out.push_back({t * t, 1.0 - t});
    }
    return out;
}

Front concave_front(std::size_t n, double f1_min)
{
    Front out;
    for (std::size_t i = 0; i < n; ++i) {
        auto const f1 = f1_min + (1.0 - f1_min) * static_cast<double>(i) / static_cast<double>(n - 1);
        out.push_back({f1, 1.0 - f1 * f1});
    }
    return out;
}

Front zdt3_front(std::size_t n)
{
    Front dense;
    auto const samples = 20 * n;
    for (std::size_t i = 0; i < samples; ++i) {
        auto const f1 = static_cast<double>(i) / static_cast<double>(samples - 1);
        dense.push_back({f1, 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * pi * f1)});
    }
    return thin_evenly(nondominated_unique(dense), n);
}

} // namespace

std::optional<Problem> make_zdt(std::string_view name, std::size_t dim, std::optional<std::size_t> objectives)
{
    if (!name.starts_with("ZDT")) { return std::nullopt; }
    if (name == "ZDT5") { throw std::invalid_argument("ZDT5 is binary-coded and not supported"); }
    if (name != "ZDT1" && name != "ZDT2" && name != "ZDT3" && name != "ZDT4" && name != "ZDT6") { return std::nullopt; }
    if (objectives && *objectives != 2) { throw std::invalid_argument(std::string(name) + " is bi-objective"); }
    if (dim < 2) { throw std::invalid_argument(std::string(name) + " needs at least 2 variables"); }

    Vector lower(dim, 0.0);
    Vector upper(dim, 1.0);
    ObjectiveFunction fn;
    FrontSampler sampler;

    if (name == "ZDT1") {
        fn = [](std::span<double const> x, std::span<double> f) {
            auto const g = 1.0 + 9.0 * tail_mean(x);
            f[0] = x[0];
            f[1] = g * (1.0 - std::sqrt(f[0] / g));
        };
        sampler = convex_front;
    } else if (name == "ZDT2") {
        fn = [](std::span<double const> x, std::span<double> f) {
            auto const g = 1.0 + 9.0 * tail_mean(x);
            f[0] = x[0];
            f[1] = g * (1.0 - (f[0] / g) * (f[0] / g));
        };
        sampler = [](std::size_t n) { return concave_front(n, 0.0); };
    } else if (name == "ZDT3") {
        fn = [](std::span<double const> x, std::span<double> f) {
            auto const g = 1.0 + 9.0 * tail_mean(x);
            f[0] = x[0];
            auto const r = f[0] / g;
            f[1] = g * (1.0 - std::sqrt(r) - r * std::sin(10.0 * pi * f[0]));
        };
        sampler = zdt3_front;
    } else if (name == "ZDT4") {
        for (std::size_t i = 1; i < dim; ++i) {
            lower[i] = -5.0;
            upper[i] = 5.0;
        }
        fn = [](std::span<double const> x, std::span<double> f) {
            auto g = 1.0 + 10.0 * static_cast<double>(x.size() - 1);
            for (std::size_t i = 1; i < x.size(); ++i) { g += x[i] * x[i] - 10.0 * std::cos(4.0 * pi * x[i]); }
            f[0] = x[0];
            f[1] = g * (1.0 - std::sqrt(f[0] / g));
        };
        sampler = convex_front;
    } else { // ZDT6
        fn = [](std::span<double const> x, std::span<double> f) {
            auto const g = 1.0 + 9.0 * std::pow(tail_mean(x), 0.25);
            f[0] = zdt6_f1(x[0]);
            f[1] = g * (1.0 - (f[0] / g) * (f[0] / g));
        };
        sampler = [f1_min = zdt6_f1_min()](std::size_t n) { return concave_front(n, f1_min); };
    }
    return Problem(std::string(name), 2, std::move(lower), std::move(upper), std::move(fn), Separability::Separable,
                   std::move(sampler));
}

} // namespace ccmo::detail
