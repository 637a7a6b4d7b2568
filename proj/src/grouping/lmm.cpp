#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "ccmo/grouping.hpp"
#include "ccmo/problems.hpp"
#include "ccmo/random.hpp"

namespace ccmo {

bool better(ScoredLabels const& a, ScoredLabels const& b) noexcept
{
    if (a.measure != b.measure) { return a.measure < b.measure; }
    return a.groups > b.groups;
}

std::vector<LabelVector> ega_offspring(std::vector<LabelVector> const& population,
                                       std::vector<ScoredLabels> const& scores, EgaParams const& params, Rng& rng)
{
    if (population.empty()) { throw std::invalid_argument("ega_offspring: empty population"); }
    if (scores.size() != population.size()) { throw std::invalid_argument("ega_offspring: one score per member"); }
    auto const n = population.size();
    auto const dim = population.front().size();
    auto const per_gene = params.mutation_rate < 0.0 ? 1.0 / static_cast<double>(std::max<std::size_t>(dim, 1))
                                                     : params.mutation_rate;
    auto const rounds = std::max<std::size_t>(params.tournament_size, 1);

    auto tournament = [&]() {
        auto best = uniform_index(rng, n);
        for (std::size_t r = 1; r < rounds; ++r) {
            auto const c = uniform_index(rng, n);
            if (better(scores[c], scores[best])) { best = c; }
        }
        return best;
    };
    auto mutate = [&](LabelVector& genes) {
        for (auto& g : genes) {
            if (uniform01(rng) < per_gene) { g = static_cast<int>(uniform_index(rng, params.label_count)); }
        }
    };

    std::vector<LabelVector> next;
    next.reserve(n);
    while (next.size() < n) {
        auto a = population[tournament()];
        auto b = population[tournament()];
        if (dim > 1 && uniform01(rng) < params.crossover_rate) {
            auto const cut = 1 + uniform_index(rng, dim - 1);
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(cut), a.end(),
                             b.begin() + static_cast<std::ptrdiff_t>(cut));
        }
        mutate(a);
        mutate(b);
        next.push_back(std::move(a));
        if (next.size() < n) { next.push_back(std::move(b)); }
    }
    return next;
}

void replace_worst(std::vector<LabelVector>& population, std::vector<ScoredLabels>& scores, LabelVector const& elite,
                   ScoredLabels const& elite_score)
{
    if (population.empty()) { return; }
    std::size_t worst = 0;
    for (std::size_t i = 1; i < scores.size(); ++i) {
        if (better(scores[worst], scores[i])) { worst = i; }
    }
    population[worst] = elite;
    scores[worst] = elite_score;
}

std::vector<LabelVector> ega_generation(std::vector<LabelVector> const& population,
                                        std::vector<ScoredLabels>& scores, LabelVector const& elite,
                                        ScoredLabels const& elite_score, LabelScorer const& score,
                                        EgaParams const& params, Rng& rng)
{
    auto next = ega_offspring(population, scores, params, rng);
    std::vector<ScoredLabels> next_scores;
    next_scores.reserve(next.size());
    for (auto const& genes : next) { next_scores.push_back(score(genes)); }
    replace_worst(next, next_scores, elite, elite_score);
    scores = std::move(next_scores);
    return next;
}

DecompositionResult lmm_decompose(Problem const& problem, LmmParams const& params, EvaluationBudget& budget, Rng& rng)
{
    if (params.pop_size == 0) { throw std::invalid_argument("lmm: population size must be positive"); }
    if (params.sample_count == 0) { throw std::invalid_argument("lmm: need at least one sample"); }
    if (params.gene_length == 0 || params.gene_length > 30) { throw std::invalid_argument("lmm: gene length out of range"); }

    auto const dim = problem.dim();
    auto const used_before = budget.used(Phase::Decomposition);
    auto const& lo = problem.lower();
    auto const& hi = problem.upper();

    DecompositionResult result;
    result.grouping = Grouping::singletons(dim);
    auto finish = [&]() {
        result.fes_consumed = budget.used(Phase::Decomposition) - used_before;
        return result;
    };

    std::vector<LinkageSample> samples;
    try {
        for (std::size_t k = 0; k < params.sample_count; ++k) {
            Vector base(dim);
            for (std::size_t i = 0; i < dim; ++i) { base[i] = uniform(rng, lo[i], hi[i]); }
            samples.push_back(make_linkage_sample(problem, std::move(base), budget, params.step_fraction,
                                                  Phase::Optimization));
            result.evaluated_points.push_back({samples.back().base, samples.back().base_value});
        }
    } catch (BudgetExhausted const&) {
        result.budget_exhausted = true;
        return finish();
    }

    if (dim < 2) {
        result.detected_fully_separable = true;
        return finish();
    }

    Vector const weights(problem.objectives(), 1.0 / static_cast<double>(problem.objectives()));
    std::map<LabelVector, ScoredLabels> cache;
    std::vector<GroupValueCache> group_values(samples.size());
    auto score = [&](LabelVector const& labels) -> ScoredLabels {
        Grouping const g(labels);
        auto key = g.canonical_labels();
        if (auto it = cache.find(key); it != cache.end()) { return it->second; }
        ScoredLabels s{std::numeric_limits<double>::infinity(), g.group_count()};
        if (g.group_count() >= 2) { s.measure = linkage_measure(problem, samples, g, weights, budget, &group_values); }
        cache.emplace(std::move(key), s);
        return s;
    };

    // Fully separable check: costs nothing beyond the samples.
    LabelVector elite = Grouping::singletons(dim).labels();
    auto elite_score = score(elite);
    result.measure_history.push_back(elite_score.measure);
    if (elite_score.measure < params.separable_threshold) {
        result.detected_fully_separable = true;
        return finish();
    }

    EgaParams ega;
    ega.label_count = std::size_t{1} << params.gene_length;
    ega.crossover_rate = params.crossover_rate;
    ega.mutation_rate = params.mutation_rate;

    auto promote = [&](std::vector<LabelVector> const& pop, std::vector<ScoredLabels> const& scores) {
        for (std::size_t i = 0; i < pop.size(); ++i) {
            if (better(scores[i], elite_score)) {
                elite = pop[i];
                elite_score = scores[i];
            }
        }
        result.grouping = Grouping(elite);
        result.measure_history.push_back(elite_score.measure);
    };

    try {
        std::vector<LabelVector> population(params.pop_size, LabelVector(dim));
        for (auto& genes : population) {
            for (auto& g : genes) { g = static_cast<int>(uniform_index(rng, ega.label_count)); }
        }
        std::vector<ScoredLabels> scores;
        scores.reserve(population.size());
        for (auto const& genes : population) { scores.push_back(score(genes)); }
        promote(population, scores);

        for (std::size_t t = 0; t < params.generations; ++t) {
            population = ega_generation(population, scores, elite, elite_score, score, ega, rng);
            promote(population, scores);
        }
    } catch (BudgetExhausted const&) {
        result.budget_exhausted = true;
    }
    result.grouping = Grouping(elite);
    return finish();
}

} // namespace ccmo
