#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccmo/types.hpp"

namespace ccmo {

enum class Separability { Separable, PartiallySeparable };

std::string_view to_string(Separability s) noexcept;

/// Writes the M objective values of x into f. Must be pure.
using ObjectiveFunction = std::function<void(std::span<double const> x, std::span<double> f)>;

/// Returns n points on the analytic Pareto front.
using FrontSampler = std::function<Front(std::size_t n)>;

/// A box-constrained multi-objective minimization problem. Immutable after
/// construction; evaluate() is safe to call concurrently.
class Problem {
public:
    Problem(std::string name, std::size_t objectives, Vector lower, Vector upper, ObjectiveFunction function,
            Separability separability = Separability::PartiallySeparable, FrontSampler sampler = {});

    [[nodiscard]] std::string const& name() const noexcept { return name_; }
    [[nodiscard]] std::size_t dim() const noexcept { return lower_.size(); }
    [[nodiscard]] std::size_t objectives() const noexcept { return objectives_; }
    [[nodiscard]] Vector const& lower() const noexcept { return lower_; }
    [[nodiscard]] Vector const& upper() const noexcept { return upper_; }
    [[nodiscard]] Separability declared_separability() const noexcept { return separability_; }
    [[nodiscard]] bool has_front_sampler() const noexcept { return static_cast<bool>(sampler_); }

    [[nodiscard]] bool in_bounds(std::span<double const> x) const noexcept;

    // Out-of-bounds input is the caller's responsibility; only the length is checked.
    [[nodiscard]] ObjectiveVector evaluate(std::span<double const> x) const;
    void evaluate(std::span<double const> x, std::span<double> f) const;

    /// n >= 2 points, deterministically spaced on the true front.
    [[nodiscard]] Front sample_true_front(std::size_t n) const;

private:
    std::string name_;
    std::size_t objectives_;
    Vector lower_;
    Vector upper_;
    ObjectiveFunction function_;
    Separability separability_;
    FrontSampler sampler_;
};

/// Builds a benchmark by name: ZDT1-4, ZDT6, DTLZ1-7, UF1, UF2, WFG1-5, WFG7.
/// ZDT and UF are bi-objective. When `objectives` is empty DTLZ defaults to 3
/// and WFG to 2.
Problem make_problem(std::string_view name, std::size_t dim, std::optional<std::size_t> objectives = std::nullopt);

std::vector<std::string> const& problem_names();

namespace detail {
// Suite factories, one per translation unit.
std::optional<Problem> make_zdt(std::string_view name, std::size_t dim, std::optional<std::size_t> objectives);
std::optional<Problem> make_dtlz(std::string_view name, std::size_t dim, std::optional<std::size_t> objectives);
std::optional<Problem> make_uf(std::string_view name, std::size_t dim, std::optional<std::size_t> objectives);
std::optional<Problem> make_wfg(std::string_view name, std::size_t dim, std::optional<std::size_t> objectives);

// Front sampling helpers shared by the suites.

/// Keeps n entries at evenly spaced indices (first and last included).
Front thin_evenly(Front points, std::size_t n);

/// Non-dominated subset with exact duplicates removed, order preserved.
Front nondominated_unique(Front const& points);

/// All points of a regular grid over [0,1]^dims with `per_axis` levels.
std::vector<Vector> unit_grid(std::size_t dims, std::size_t per_axis);

/// Simplex-lattice points with coordinates summing to 1, smallest lattice
/// holding at least n points.
std::vector<Vector> simplex_lattice(std::size_t objectives, std::size_t n);
} // namespace detail

} // namespace ccmo
