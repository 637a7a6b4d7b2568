#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "ccmo/budget.hpp"
#include "ccmo/types.hpp"

namespace ccmo {

class Problem;

using Group = std::vector<std::size_t>;
using LabelVector = std::vector<int>;

/// A partition of the decision variables, stored as one integer label per
/// variable. Variables sharing a label form a group; unused labels form none.
class Grouping {
public:
    Grouping() = default;
    explicit Grouping(LabelVector labels);

    static Grouping singletons(std::size_t dim);
    static Grouping single_group(std::size_t dim);
    /// Throws unless `groups` partitions {0..dim-1}.
    static Grouping from_groups(std::size_t dim, std::vector<Group> const& groups);

    [[nodiscard]] LabelVector const& labels() const noexcept { return labels_; }
    [[nodiscard]] std::size_t dim() const noexcept { return labels_.size(); }
    [[nodiscard]] std::size_t group_count() const noexcept { return groups_.size(); }
    /// Groups ordered by their smallest member; members ascending.
    [[nodiscard]] std::vector<Group> const& groups() const noexcept { return groups_; }

    /// Labels renumbered 0, 1, ... in order of first appearance.
    [[nodiscard]] LabelVector canonical_labels() const;

    friend bool operator==(Grouping const& a, Grouping const& b) { return a.groups_ == b.groups_; }

private:
    LabelVector labels_;
    std::vector<Group> groups_;
};

// ---------------------------------------------------------------------------
// Perturbation and linkage measurement

/// s with s[i] += delta[i] for every i in `indices`; a coordinate that would
/// leave [lower, upper] moves by -delta[i] instead.
Vector perturb(std::span<double const> s, std::span<std::size_t const> indices, std::span<double const> delta,
               std::span<double const> lower, std::span<double const> upper);

/// Same with one magnitude for all coordinates.
Vector perturb(std::span<double const> s, std::span<std::size_t const> indices, double delta,
               std::span<double const> lower, std::span<double const> upper);

/// A base point with its signed per-variable steps and cached objective
/// values at the base, at each single-variable perturbation and at the joint
/// perturbation of all variables.
struct LinkageSample {
    Vector base;
    Vector step; // signed so that base + step stays in bounds
    ObjectiveVector base_value;
    std::vector<ObjectiveVector> single_value;
    ObjectiveVector joint_value;
};

/// Perturbation magnitude used by every grouper: this fraction of the range.
inline constexpr double default_step_fraction = 0.1;

/// Evaluates the base point (charged to `base_phase`) and the D + 1 single
/// and joint perturbations (charged to the decomposition phase).
LinkageSample make_linkage_sample(Problem const& problem, Vector base, EvaluationBudget& budget,
                                  double step_fraction = default_step_fraction,
                                  Phase base_phase = Phase::Decomposition);

/// f(perturb(s, group)) for multi-variable groups already evaluated at one
/// sample. A hit costs no evaluation.
using GroupValueCache = std::map<Group, ObjectiveVector>;

/// Per group, per objective: f(perturb(s, group)) - f(s). Singleton groups
/// reuse the cached values; larger groups cost one evaluation each unless
/// found in `cache`.
std::vector<ObjectiveVector> group_deltas(Problem const& problem, LinkageSample const& sample,
                                          Grouping const& grouping, EvaluationBudget& budget,
                                          GroupValueCache* cache = nullptr);

/// Per objective: |delta_all - sum_g delta_g|. Rejects single-group
/// groupings, whose residual is zero by construction.
ObjectiveVector linkage_residual(Problem const& problem, LinkageSample const& sample, Grouping const& grouping,
                                 EvaluationBudget& budget, GroupValueCache* cache = nullptr);

/// Sum over samples of the weighted residual divided by the group count.
/// Weights must be non-negative and sum to 1. `caches`, when given, holds
/// one cache per sample.
double linkage_measure(Problem const& problem, std::span<LinkageSample const> samples, Grouping const& grouping,
                       std::span<double const> weights, EvaluationBudget& budget,
                       std::vector<GroupValueCache>* caches = nullptr);

// ---------------------------------------------------------------------------
// Elitist GA over label vectors

struct EgaParams {
    std::size_t label_count = 64;
    double crossover_rate = 0.9;
    double mutation_rate = -1.0; // per gene; negative means 1/D
    std::size_t tournament_size = 2;
};

/// Candidate ordering: lower measure first, then more groups.
struct ScoredLabels {
    double measure;
    std::size_t groups;
};
bool better(ScoredLabels const& a, ScoredLabels const& b) noexcept;

/// Tournament selection, one-point crossover and uniform relabel mutation.
std::vector<LabelVector> ega_offspring(std::vector<LabelVector> const& population,
                                       std::vector<ScoredLabels> const& scores, EgaParams const& params, Rng& rng);

/// Overwrites the worst member of `population` with the elite, unchanged.
void replace_worst(std::vector<LabelVector>& population, std::vector<ScoredLabels>& scores, LabelVector const& elite,
                   ScoredLabels const& elite_score);

using LabelScorer = std::function<ScoredLabels(LabelVector const&)>;

/// ega_offspring, score, replace_worst.
std::vector<LabelVector> ega_generation(std::vector<LabelVector> const& population,
                                        std::vector<ScoredLabels>& scores, LabelVector const& elite,
                                        ScoredLabels const& elite_score, LabelScorer const& score,
                                        EgaParams const& params, Rng& rng);

// ---------------------------------------------------------------------------
// Decomposition

struct EvaluatedPoint {
    Vector x;
    ObjectiveVector f;
};

struct DecompositionResult {
    Grouping grouping;
    std::int64_t fes_consumed = 0; // decomposition-phase evaluations
    bool detected_fully_separable = false;
    bool budget_exhausted = false;
    std::vector<double> measure_history; // best measure per generation
    // Base points evaluated while building linkage samples; the optimizer may
    // reuse them as initial solutions.
    std::vector<EvaluatedPoint> evaluated_points;
};

struct LmmParams {
    std::size_t pop_size = 20;
    std::size_t generations = 20;
    std::size_t gene_length = 6;
    std::size_t sample_count = 3;
    double step_fraction = default_step_fraction;
    double separable_threshold = 0.01;
    double crossover_rate = 0.9;
    double mutation_rate = -1.0; // negative means 1/D
};

/// Linkage measurement minimization. Checks the all-singletons grouping
/// first and returns it when its measure is below the threshold; otherwise
/// searches label vectors with an elitist GA. Base points of the linkage
/// samples are charged to the optimization phase and handed back in
/// `evaluated_points`.
DecompositionResult lmm_decompose(Problem const& problem, LmmParams const& params, EvaluationBudget& budget, Rng& rng);

/// Balanced random assignment of D variables to m non-empty groups.
Grouping random_grouping(std::size_t dim, std::size_t groups, Rng& rng);

/// Pairwise nonlinearity check around the centre of the box; x_i and x_j are
/// merged when the check exceeds epsilon in any objective. Connected
/// components become groups.
DecompositionResult dg_decompose(Problem const& problem, double epsilon, EvaluationBudget& budget,
                                 double step_fraction = default_step_fraction);

/// Pairwise monotonicity check over `sample_count` random points; x_i and x_j
/// are merged when an objective that responds to both fails to move
/// monotonically in the same direction.
DecompositionResult limd_decompose(Problem const& problem, EvaluationBudget& budget, Rng& rng,
                                   std::size_t sample_count = 2, double step_fraction = default_step_fraction);

} // namespace ccmo
