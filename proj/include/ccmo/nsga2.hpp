#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ccmo/budget.hpp"
#include "ccmo/types.hpp"

namespace ccmo {

class Problem;

struct Individual {
    Vector x;
    ObjectiveVector objectives;
    std::size_t rank = 0; // 1-based once sorted
    double crowding = 0.0;
};

using Population = std::vector<Individual>;

// ---------------------------------------------------------------------------
// Dominance

/// -1 when a dominates b, 1 when b dominates a, 0 otherwise (equal vectors
/// included). Throws on length mismatch.
int dominate(std::span<double const> a, std::span<double const> b);

inline bool dominates(std::span<double const> a, std::span<double const> b) { return dominate(a, b) == -1; }

struct QuickSearchStats {
    std::size_t comparisons = 0;
};

/// Indices of the members not dominated by any other member, ascending.
///
/// Each member is compared only against later, still-alive members; a member
/// is dropped as soon as something dominates it, and members it dominates are
/// marked so they are skipped later. One pass over a domination chain costs
/// O(N) comparisons, a full antichain O(N^2).
std::vector<std::size_t> quick_search(std::span<ObjectiveVector const> objectives, QuickSearchStats* stats = nullptr);

/// Fronts of indices, F1 first. Every index appears in exactly one front.
std::vector<std::vector<std::size_t>> fast_nondominated_sort(std::span<ObjectiveVector const> objectives);

/// Sets rank (1-based) on every member and returns the fronts.
std::vector<std::vector<std::size_t>> fast_nondominated_sort(Population& population);

/// Crowding distance of each point of one front. Boundary points get
/// +infinity; an objective with zero range contributes nothing.
std::vector<double> crowding_distance(std::span<ObjectiveVector const> front);

/// Reduces `pool` to `size` members: whole fronts first, the cut front
/// truncated by descending crowding distance. Rank and crowding are set on
/// the survivors.
Population environmental_selection(Population pool, std::size_t size);

/// Binary tournament on (rank ascending, crowding descending); full ties go to
/// a uniformly random side. Returns {winner, loser}.
std::pair<std::size_t, std::size_t> binary_tournament(Population const& population, Rng& rng);

// ---------------------------------------------------------------------------
// Variation

struct VariationParams {
    double crossover_rate = 0.9;
    // Probability that an offspring is mutated at all; inside a mutation each
    // active variable changes with probability 1/|active|.
    double mutation_rate = 0.2;
    double crossover_eta = 20.0;
    double mutation_eta = 20.0;
};

/// Simulated binary crossover over the active coordinates, bounded form.
void simulated_binary_crossover(Vector& a, Vector& b, std::span<std::size_t const> active, Vector const& lower,
                                Vector const& upper, double eta, Rng& rng);

/// Bounded polynomial mutation; each active coordinate mutates with
/// probability `per_variable`.
void polynomial_mutation(Vector& x, std::span<std::size_t const> active, Vector const& lower, Vector const& upper,
                         double eta, double per_variable, Rng& rng);

// ---------------------------------------------------------------------------
// Generation

struct GenerationOutcome {
    Population offspring;                     // evaluated, before selection
    std::vector<std::size_t> tournament_loser; // per offspring, index into the parent population
    Population extra;                         // members injected by the hook
    bool truncated = false;                   // budget could not cover the offspring
};

/// Called after the offspring are evaluated and before environmental
/// selection. Returned members must already be evaluated (and charged).
using OffspringHook = std::function<Population(Population const& parents, GenerationOutcome const& outcome)>;

/// One NSGA-II generation restricted to the `active` coordinates: tournament
/// selection, SBX, polynomial mutation, clipping, evaluation of |P| offspring,
/// then environmental selection on P + Q (+ hook members). Inactive
/// coordinates are inherited from the first parent.
///
/// When the budget cannot cover all offspring nothing is evaluated, P is left
/// as it is and the outcome is flagged as truncated.
GenerationOutcome nsga2_generation(Population& population, Problem const& problem,
                                   std::span<std::size_t const> active, VariationParams const& params,
                                   EvaluationBudget& budget, Rng& rng, OffspringHook const& hook = {});

} // namespace ccmo
