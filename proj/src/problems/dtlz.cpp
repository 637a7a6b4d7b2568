// DTLZ suite. The last k = D - M + 1 variables are distance variables.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ccmo/problems.hpp"

namespace ccmo::detail {
namespace {

constexpr double pi = std::numbers::pi;

double g_rastrigin(std::span<double const> xm)
{
    double s = 0.0;
    for (auto v : xm) { s += (v - 0.5) * (v - 0.5) - std::cos(20.0 * pi * (v - 0.5)); }
    return 100.0 * (static_cast<double>(xm.size()) + s);
}

double g_sphere(std::span<double const> xm)
{
    double s = 0.0;
    for (auto v : xm) { s += (v - 0.5) * (v - 0.5); }
    return s;
}

// f_m = (1+g) prod_{i<M-m} cos(theta_i) * sin(theta_{M-m})   (1-based m)
void spherical(std::span<double const> theta, double g, std::span<double> f)
{
    auto const m = f.size();
    for (std::size_t j = 0; j < m; ++j) {
        double v = 1.0 + g;
        for (std::size_t i = 0; i + j + 1 < m; ++i) { v *= std::cos(theta[i]); }
        if (j > 0) { v *= std::sin(theta[m - j - 1]); }
        f[j] = v;
    }
}

Front lattice_front(std::size_t objectives, std::size_t n, bool unit_sphere)
{
    Front out;
    for (auto& p : simplex_lattice(objectives, n)) {
        if (unit_sphere) {
            double norm = 0.0;
            for (auto v : p) { norm += v * v; }
            norm = std::sqrt(norm);
            for (auto& v : p) { v /= norm; }
        } else {
            for (auto& v : p) { v *= 0.5; }
        }
        out.push_back(std::move(p));
    }
    return thin_evenly(std::move(out), n);
}

} // namespace

std::optional<Problem> make_dtlz(std::string_view name, std::size_t dim, std::optional<std::size_t> objectives)
{
    if (!name.starts_with("DTLZ") || name.size() != 5 || name[4] < '1' || name[4] > '7') { return std::nullopt; }
    auto const which = name[4] - '0';
    auto const m = objectives.value_or(3);
    if (m < 2) { throw std::invalid_argument(std::string(name) + " needs at least 2 objectives"); }
    if (dim < m + 1) {
        throw std::invalid_argument(std::string(name) + " needs dim >= objectives + 1");
    }

    ObjectiveFunction fn;
    FrontSampler sampler;
    auto const split = m - 1; // position variables

    switch (which) {
    case 1:
        fn = [split](std::span<double const> x, std::span<double> f) {
            auto const g = g_rastrigin(x.subspan(split));
            auto const mm = f.size();
            for (std::size_t j = 0; j < mm; ++j) {
                double v = 0.5 * (1.0 + g);
                for (std::size_t i = 0; i + j + 1 < mm; ++i) { v *= x[i]; }
                if (j > 0) { v *= 1.0 - x[mm - j - 1]; }
                f[j] = v;
            }
        };
        sampler = [m](std::size_t n) { return lattice_front(m, n, false); };
        break;
    case 2:
    case 3:
    case 4: {
        auto const alpha = which == 4 ? 100.0 : 1.0;
        auto const rastrigin = which == 3;
        fn = [split, alpha, rastrigin](std::span<double const> x, std::span<double> f) {
            auto const tail = x.subspan(split);
            auto const g = rastrigin ? g_rastrigin(tail) : g_sphere(tail);
            Vector theta(split);
            for (std::size_t i = 0; i < split; ++i) { theta[i] = std::pow(x[i], alpha) * pi / 2.0; }
            spherical(theta, g, f);
        };
        sampler = [m](std::size_t n) { return lattice_front(m, n, true); };
        break;
    }
    case 5:
    case 6: {
        auto const dtlz6 = which == 6;
        fn = [split, dtlz6](std::span<double const> x, std::span<double> f) {
            auto const tail = x.subspan(split);
            double g = 0.0;
            if (dtlz6) {
                for (auto v : tail) { g += std::pow(v, 0.1); }
            } else {
                g = g_sphere(tail);
            }
            Vector theta(split);
            theta[0] = x[0] * pi / 2.0;
            for (std::size_t i = 1; i < split; ++i) { theta[i] = pi / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * x[i]); }
            spherical(theta, g, f);
        };
        // Degenerate curve: g = 0 makes every theta_i (i > 0) equal pi/4.
        sampler = [m](std::size_t n) {
            Front out;
            for (std::size_t s = 0; s < n; ++s) {
                Vector theta(m - 1, pi / 4.0);
                theta[0] = static_cast<double>(s) / static_cast<double>(n - 1) * pi / 2.0;
                ObjectiveVector f(m);
                spherical(theta, 0.0, f);
                out.push_back(std::move(f));
            }
            return out;
        };
        break;
    }
    default: { // 7
        fn = [split](std::span<double const> x, std::span<double> f) {
            auto const tail = x.subspan(split);
            double s = 0.0;
            for (auto v : tail) { s += v; }
            auto const g = 1.0 + 9.0 * s / static_cast<double>(tail.size());
            auto const mm = f.size();
            double h = static_cast<double>(mm);
            for (std::size_t i = 0; i + 1 < mm; ++i) {
                f[i] = x[i];
                h -= f[i] / (1.0 + g) * (1.0 + std::sin(3.0 * pi * f[i]));
            }
            f[mm - 1] = (1.0 + g) * h;
        };
        sampler = [m](std::size_t n) {
            auto const target = 10.0 * static_cast<double>(n);
            auto const per_axis =
                static_cast<std::size_t>(std::ceil(std::pow(target, 1.0 / static_cast<double>(m - 1))));
            Front dense;
            for (auto const& p : unit_grid(m - 1, per_axis)) {
                ObjectiveVector f(m);
                double h = static_cast<double>(m);
                for (std::size_t i = 0; i + 1 < m; ++i) {
                    f[i] = p[i];
                    h -= p[i] / 2.0 * (1.0 + std::sin(3.0 * pi * p[i]));
                }
                f[m - 1] = 2.0 * h;
                dense.push_back(std::move(f));
            }
            return thin_evenly(nondominated_unique(dense), n);
        };
        break;
    }
    }

    return Problem(std::string(name), m, Vector(dim, 0.0), Vector(dim, 1.0), std::move(fn), Separability::Separable,
                   std::move(sampler));
}

} // namespace ccmo::detail
