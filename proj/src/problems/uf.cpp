// UF1 and UF2 from the CEC 2009 unconstrained suite.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ccmo/problems.hpp"

namespace ccmo::detail {
namespace {

constexpr double pi = std::numbers::pi;

// j is 1-based; odd j (from 3) feed f1, even j feed f2.
template <typename Residual>
void uf_objectives(std::span<double const> x, std::span<double> f, Residual residual)
{
    auto const n = static_cast<double>(x.size());
    double sum1 = 0.0;
    double sum2 = 0.0;
    std::size_t count1 = 0;
    std::size_t count2 = 0;
    for (std::size_t j = 2; j <= x.size(); ++j) {
        auto const y = residual(x, j, n);
        if (j % 2 == 1) {
            sum1 += y * y;
            ++count1;
        } else {
            sum2 += y * y;
            ++count2;
        }
    }
    f[0] = x[0] + (count1 > 0 ? 2.0 * sum1 / static_cast<double>(count1) : 0.0);
    f[1] = 1.0 - std::sqrt(x[0]) + (count2 > 0 ? 2.0 * sum2 / static_cast<double>(count2) : 0.0);
}

} // namespace

std::optional<Problem> make_uf(std::string_view name, std::size_t dim, std::optional<std::size_t> objectives)
{
    if (name != "UF1" && name != "UF2") { return std::nullopt; }
    if (objectives && *objectives != 2) { throw std::invalid_argument(std::string(name) + " is bi-objective"); }
    if (dim < 3) { throw std::invalid_argument(std::string(name) + " needs at least 3 variables"); }

    Vector lower(dim, -1.0);
    Vector upper(dim, 1.0);
    lower[0] = 0.0;

    ObjectiveFunction fn;
    if (name == "UF1") {
        fn = [](std::span<double const> x, std::span<double> f) {
            uf_objectives(x, f, [](std::span<double const> v, std::size_t j, double n) {
                return v[j - 1] - std::sin(6.0 * pi * v[0] + static_cast<double>(j) * pi / n);
            });
        };
    } else {
        fn = [](std::span<double const> x, std::span<double> f) {
            uf_objectives(x, f, [](std::span<double const> v, std::size_t j, double n) {
                auto const x1 = v[0];
                auto const jd = static_cast<double>(j);
                auto const amp = 0.3 * x1 * x1 * std::cos(24.0 * pi * x1 + 4.0 * jd * pi / n) + 0.6 * x1;
                auto const phase = 6.0 * pi * x1 + jd * pi / n;
                return v[j - 1] - amp * (j % 2 == 1 ? std::cos(phase) : std::sin(phase));
            });
        };
    }
    auto sampler = [](std::size_t n) {
        Front out;
        for (std::size_t i = 0; i < n; ++i) {
            auto const t = static_cast<double>(i) / static_cast<double>(n - 1);
            out.push_back({t * t, 1.0 - t});
        }
        return out;
    };
    return Problem(std::string(name), 2, std::move(lower), std::move(upper), std::move(fn), Separability::Separable,
                   sampler);
}

} // namespace ccmo::detail
