#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ccmo/budget.hpp"
#include "ccmo/grouping.hpp"
#include "ccmo/hybrid.hpp"
#include "ccmo/nsga2.hpp"
#include "ccmo/types.hpp"

namespace ccmo {

class Problem;

/// Context vector with the group indices overwritten by `sub`. Throws when
/// sizes disagree or an index repeats or falls outside the context.
Vector assemble(std::span<double const> sub, std::span<std::size_t const> group, std::span<double const> context);

struct ArchiveEntry {
    Vector x;
    ObjectiveVector f;
};

/// Bounded set of mutually non-dominated full solutions. Entries with equal
/// objective vectors are kept once (the earliest).
class ParetoArchive {
public:
    explicit ParetoArchive(std::size_t capacity = 200);

    [[nodiscard]] std::size_t capacity() const noexcept { return capacity_; }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
    [[nodiscard]] std::vector<ArchiveEntry> const& entries() const noexcept { return entries_; }
    [[nodiscard]] Front front() const;

    /// Non-dominated union with the candidates, cut back to capacity by
    /// descending crowding distance.
    void update(std::span<ArchiveEntry const> candidates);
    void update(Population const& candidates);

private:
    std::size_t capacity_;
    std::vector<ArchiveEntry> entries_;
};

/// The s full solutions every sub-problem is evaluated against, plus which
/// group last wrote each variable (-1 until written).
struct ContextPopulation {
    Population members;
    std::vector<int> provenance;
};

struct CcParams {
    std::size_t pop_size = 50;
    VariationParams variation;
    bool hybrid = false;
    EstimatorMethod estimator = EstimatorMethod::PfAverage;
    double sigma_fraction = 0.05;
    std::size_t archive_capacity = 200;
    // Passes over all groups. Zero keeps cycling until the budget runs out.
    std::size_t passes = 1;
    // Per-group generation cap; zero derives it from the remaining budget.
    std::size_t generations = 0;
};

struct GenerationReport {
    std::size_t pass;
    std::size_t group;
    std::size_t generation; // within this visit of the group
    ParetoArchive const& archive;
    EvaluationBudget const& budget;
    ContextPopulation const& context;
};

using GenerationObserver = std::function<void(GenerationReport const&)>;

/// Supplies the grouping for each pass; returning the same grouping every
/// time is the static case, a fresh random one is dynamic random grouping.
using GroupingSchedule = std::function<Grouping(std::size_t pass, Rng& rng)>;

struct CcResult {
    ParetoArchive archive;
    ContextPopulation context;
    std::size_t generations = 0;       // over all groups
    std::size_t egs_samples = 0;       // evaluated Gaussian samples
    std::size_t least_squares_used = 0; // generations whose centre came from the line estimator
    bool budget_exhausted = false;
};

/// Cooperative coevolution over the groups of a grouping.
///
/// The context population is initialized with pop_size random solutions;
/// `seeded` points (already evaluated and charged) take the first slots.
/// Each group then runs NSGA-II generations that vary only its own
/// coordinates, starting from the current context population, which it hands
/// back when done. The number of generations per visit is the remaining
/// budget shared evenly over the visits left, at least one.
///
/// With `hybrid`, after each generation's offspring are evaluated, Gaussian
/// samples (pop_size / 10, at least one) are drawn around a convergence point
/// of the offspring's non-dominated set in the group's coordinates and join
/// the selection pool.
CcResult cc_optimize(Problem const& problem, GroupingSchedule const& schedule, CcParams const& params,
                     EvaluationBudget& budget, Rng& rng, std::span<EvaluatedPoint const> seeded = {},
                     GenerationObserver const& observer = {});

CcResult cc_optimize(Problem const& problem, Grouping const& grouping, CcParams const& params,
                     EvaluationBudget& budget, Rng& rng, std::span<EvaluatedPoint const> seeded = {},
                     GenerationObserver const& observer = {});

/// Plain NSGA-II on the full space: cc_optimize with a single group.
CcResult run_nsga2(Problem const& problem, CcParams const& params, EvaluationBudget& budget, Rng& rng,
                   GenerationObserver const& observer = {});

} // namespace ccmo
