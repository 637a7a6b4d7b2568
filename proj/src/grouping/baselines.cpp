// Reference groupers: random, pairwise nonlinearity (DG) and pairwise
// monotonicity (LIMD).

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ccmo/grouping.hpp"
#include "ccmo/problems.hpp"
#include "ccmo/random.hpp"

namespace ccmo {
namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t i)
    {
        while (parent_[i] != i) {
            parent_[i] = parent_[parent_[i]];
            i = parent_[i];
        }
        return i;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b) { parent_[std::max(a, b)] = std::min(a, b); }
    }

    Grouping grouping()
    {
        LabelVector labels(parent_.size());
        for (std::size_t i = 0; i < parent_.size(); ++i) { labels[i] = static_cast<int>(find(i)); }
        return Grouping(std::move(labels));
    }

private:
    std::vector<std::size_t> parent_;
};

Vector box_centre(Problem const& problem)
{
    Vector c(problem.dim());
    for (std::size_t i = 0; i < c.size(); ++i) { c[i] = 0.5 * (problem.lower()[i] + problem.upper()[i]); }
    return c;
}

Vector signed_steps(Problem const& problem, Vector const& base, double fraction)
{
    Vector step(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        auto const s = fraction * (problem.upper()[i] - problem.lower()[i]);
        step[i] = base[i] + s > problem.upper()[i] ? -s : s;
    }
    return step;
}

/// Evaluates the base, every single perturbation and (lazily) every pair,
/// calling `visit(i, j, f_s, f_i, f_j, f_ij)` for each pair i < j.
template <typename Visit>
void for_each_pair(Problem const& problem, Vector const& base, double fraction, EvaluationBudget& budget, Visit visit)
{
    auto const dim = problem.dim();
    auto const step = signed_steps(problem, base, fraction);
    auto const f_s = evaluate(problem, base, budget, Phase::Decomposition);
    std::vector<ObjectiveVector> f_single;
    f_single.reserve(dim);
    Vector x = base;
    for (std::size_t i = 0; i < dim; ++i) {
        x[i] = base[i] + step[i];
        f_single.push_back(evaluate(problem, x, budget, Phase::Decomposition));
        x[i] = base[i];
    }
    for (std::size_t i = 0; i < dim; ++i) {
        x[i] = base[i] + step[i];
        for (std::size_t j = i + 1; j < dim; ++j) {
            x[j] = base[j] + step[j];
            auto const f_ij = evaluate(problem, x, budget, Phase::Decomposition);
            x[j] = base[j];
            visit(i, j, f_s, f_single[i], f_single[j], f_ij);
        }
        x[i] = base[i];
    }
}

} // namespace

Grouping random_grouping(std::size_t dim, std::size_t groups, Rng& rng)
{
    if (groups == 0 || groups > dim) { throw std::invalid_argument("random_grouping: need 1 <= m <= D"); }
    LabelVector labels(dim);
    for (std::size_t i = 0; i < dim; ++i) { labels[i] = static_cast<int>(i % groups); }
    // Fisher-Yates with the project's draw helper.
    for (std::size_t i = dim; i > 1; --i) { std::swap(labels[i - 1], labels[uniform_index(rng, i)]); }
    return Grouping(std::move(labels));
}

DecompositionResult dg_decompose(Problem const& problem, double epsilon, EvaluationBudget& budget, double step_fraction)
{
    auto const used_before = budget.used(Phase::Decomposition);
    auto const m = problem.objectives();
    DisjointSets sets(problem.dim());
    DecompositionResult result;
    try {
        for_each_pair(problem, box_centre(problem), step_fraction, budget,
                      [&](std::size_t i, std::size_t j, auto const& fs, auto const& fi, auto const& fj, auto const& fij) {
                          for (std::size_t k = 0; k < m; ++k) {
                              auto const residual = (fij[k] - fs[k]) - ((fi[k] - fs[k]) + (fj[k] - fs[k]));
                              if (std::abs(residual) > epsilon) {
                                  sets.unite(i, j);
                                  break;
                              }
                          }
                      });
    } catch (BudgetExhausted const&) {
        result.budget_exhausted = true;
    }
    result.grouping = sets.grouping();
    result.detected_fully_separable = result.grouping.group_count() == problem.dim();
    result.fes_consumed = budget.used(Phase::Decomposition) - used_before;
    return result;
}

DecompositionResult limd_decompose(Problem const& problem, EvaluationBudget& budget, Rng& rng,
                                   std::size_t sample_count, double step_fraction)
{
    auto const used_before = budget.used(Phase::Decomposition);
    auto const dim = problem.dim();
    auto const m = problem.objectives();
    DisjointSets sets(dim);
    DecompositionResult result;

    auto monotone = [](double s, double a, double b, double ab) {
        return (s < a && a < ab && s < b && b < ab) || (s > a && a > ab && s > b && b > ab);
    };
    try {
        for (std::size_t k = 0; k < sample_count; ++k) {
            Vector base(dim);
            for (std::size_t i = 0; i < dim; ++i) { base[i] = uniform(rng, problem.lower()[i], problem.upper()[i]); }
            for_each_pair(problem, base, step_fraction, budget,
                          [&](std::size_t i, std::size_t j, auto const& fs, auto const& fi, auto const& fj,
                              auto const& fij) {
                              for (std::size_t o = 0; o < m; ++o) {
                                  // An objective that ignores x_i or x_j says nothing about their linkage.
                                  if (fi[o] == fs[o] || fj[o] == fs[o]) { continue; }
                                  if (!monotone(fs[o], fi[o], fj[o], fij[o])) {
                                      sets.unite(i, j);
                                      break;
                                  }
                              }
                          });
        }
    } catch (BudgetExhausted const&) {
        result.budget_exhausted = true;
    }
    result.grouping = sets.grouping();
    result.detected_fully_separable = result.grouping.group_count() == dim;
    result.fes_consumed = budget.used(Phase::Decomposition) - used_before;
    return result;
}

} // namespace ccmo
