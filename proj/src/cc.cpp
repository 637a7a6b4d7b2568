#include "ccmo/cc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ccmo/problems.hpp"
#include "ccmo/random.hpp"

namespace ccmo {

Vector assemble(std::span<double const> sub, std::span<std::size_t const> group, std::span<double const> context)
{
    if (sub.size() != group.size()) { throw std::invalid_argument("assemble: one value per group index"); }
    Vector out(context.begin(), context.end());
    std::vector<bool> seen(context.size(), false);
    for (std::size_t k = 0; k < group.size(); ++k) {
        auto const i = group[k];
        if (i >= context.size()) { throw std::invalid_argument("assemble: index outside the context"); }
        if (seen[i]) { throw std::invalid_argument("assemble: index repeated within the group"); }
        seen[i] = true;
        out[i] = sub[k];
    }
    return out;
}

ParetoArchive::ParetoArchive(std::size_t capacity) : capacity_(capacity)
{
    if (capacity == 0) { throw std::invalid_argument("archive: capacity must be positive"); }
}

Front ParetoArchive::front() const
{
    Front out;
    out.reserve(entries_.size());
    for (auto const& e : entries_) { out.push_back(e.f); }
    return out;
}

void ParetoArchive::update(std::span<ArchiveEntry const> candidates)
{
    if (candidates.empty()) { return; }
    std::vector<ArchiveEntry> pool = entries_;
    pool.insert(pool.end(), candidates.begin(), candidates.end());

    Front objectives;
    objectives.reserve(pool.size());
    for (auto const& e : pool) { objectives.push_back(e.f); }
    auto const keep = quick_search(objectives);

    std::vector<ArchiveEntry> next;
    Front next_f;
    for (auto i : keep) {
        if (std::find(next_f.begin(), next_f.end(), pool[i].f) != next_f.end()) { continue; }
        next_f.push_back(pool[i].f);
        next.push_back(std::move(pool[i]));
    }

    if (next.size() > capacity_) {
        auto const crowding = crowding_distance(next_f);
        std::vector<std::size_t> order(next.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return crowding[a] > crowding[b]; });
        order.resize(capacity_);
        std::sort(order.begin(), order.end());
        std::vector<ArchiveEntry> cut;
        cut.reserve(capacity_);
        for (auto i : order) { cut.push_back(std::move(next[i])); }
        next = std::move(cut);
    }
    entries_ = std::move(next);
}

void ParetoArchive::update(Population const& candidates)
{
    std::vector<ArchiveEntry> entries;
    entries.reserve(candidates.size());
    for (auto const& ind : candidates) { entries.push_back({ind.x, ind.objectives}); }
    update(entries);
}

namespace {

struct HybridSampler {
    Problem const& problem;
    CcParams const& params;
    EvaluationBudget& budget;
    Rng& rng;
    std::size_t samples_drawn = 0;
    std::size_t least_squares_used = 0;

    Population operator()(Group const& group, Population const& parents, GenerationOutcome const& outcome)
    {
        auto const count = std::max<std::size_t>(1, params.pop_size / 10);
        if (!budget.try_charge(Phase::Optimization, static_cast<std::int64_t>(count))) { return {}; }

        auto const n = group.size();
        Vector lo(n);
        Vector hi(n);
        Vector sigma(n);
        for (std::size_t k = 0; k < n; ++k) {
            lo[k] = problem.lower()[group[k]];
            hi[k] = problem.upper()[group[k]];
            sigma[k] = params.sigma_fraction * (hi[k] - lo[k]);
        }
        auto project = [&](Vector const& x) {
            Vector out(n);
            for (std::size_t k = 0; k < n; ++k) { out[k] = x[group[k]]; }
            return out;
        };

        Front objectives;
        objectives.reserve(outcome.offspring.size());
        for (auto const& child : outcome.offspring) { objectives.push_back(child.objectives); }
        auto const pf = quick_search(objectives);

        std::vector<Vector> draws;
        if (params.estimator == EstimatorMethod::LeastSquares) {
            std::vector<MovePair> pairs;
            for (std::size_t c = 0; c < outcome.offspring.size(); ++c) {
                auto const& loser = parents[outcome.tournament_loser[c]];
                if (!dominates(outcome.offspring[c].objectives, loser.objectives)) { continue; }
                auto p = project(loser.x);
                auto o = project(outcome.offspring[c].x);
                double d2 = 0.0;
                for (std::size_t k = 0; k < n; ++k) { d2 += (o[k] - p[k]) * (o[k] - p[k]); }
                if (std::sqrt(d2) < 1e-12) { continue; }
                pairs.push_back(MovePair::make(std::move(p), std::move(o)));
            }
            auto const estimate = try_estimate_point_least_squares(pairs);
            if (!estimate.condition_flag) {
                ++least_squares_used;
                draws = gaussian_samples(estimate.point, sigma, count, lo, hi, rng);
            }
        }
        if (draws.empty()) {
            std::vector<Vector> front;
            front.reserve(pf.size());
            for (auto i : pf) { front.push_back(project(outcome.offspring[i].x)); }
            draws = egs(front, count, sigma, lo, hi, rng);
        }

        Population out;
        out.reserve(count);
        for (std::size_t k = 0; k < draws.size(); ++k) {
            auto const& context = outcome.offspring[pf[k % pf.size()]].x;
            Individual ind{assemble(draws[k], group, context), {}, 0, 0.0};
            ind.objectives = problem.evaluate(ind.x);
            out.push_back(std::move(ind));
        }
        samples_drawn += out.size();
        return out;
    }
};

} // namespace

CcResult cc_optimize(Problem const& problem, GroupingSchedule const& schedule, CcParams const& params,
                     EvaluationBudget& budget, Rng& rng, std::span<EvaluatedPoint const> seeded,
                     GenerationObserver const& observer)
{
    if (params.pop_size < 2) { throw std::invalid_argument("cc: population size must be at least 2"); }
    if (!schedule) { throw std::invalid_argument("cc: no grouping schedule"); }
    auto const dim = problem.dim();

    CcResult result{ParetoArchive(params.archive_capacity), {}, 0, 0, 0, false};
    auto& context = result.context;
    context.provenance.assign(dim, -1);

    // All s random vectors are drawn whatever is seeded, so every method sees
    // the same generator state afterwards.
    std::vector<Vector> initial(params.pop_size, Vector(dim));
    for (auto& x : initial) {
        for (std::size_t i = 0; i < dim; ++i) { x[i] = uniform(rng, problem.lower()[i], problem.upper()[i]); }
    }
    for (std::size_t k = 0; k < initial.size(); ++k) {
        if (k < seeded.size()) {
            if (seeded[k].x.size() != dim) { throw std::invalid_argument("cc: seeded point has wrong dimension"); }
            context.members.push_back(Individual{seeded[k].x, seeded[k].f, 0, 0.0});
            continue;
        }
        if (!budget.try_charge(Phase::Optimization)) {
            result.budget_exhausted = true;
            break;
        }
        Individual ind{std::move(initial[k]), {}, 0, 0.0};
        ind.objectives = problem.evaluate(ind.x);
        context.members.push_back(std::move(ind));
    }
    result.archive.update(context.members);
    if (result.budget_exhausted || context.members.size() < 2) {
        result.budget_exhausted = true;
        return result;
    }

    HybridSampler sampler{problem, params, budget, rng};
    auto const generation_cost = static_cast<std::int64_t>(
        params.pop_size + (params.hybrid ? std::max<std::size_t>(1, params.pop_size / 10) : 0));

    for (std::size_t pass = 0; params.passes == 0 || pass < params.passes; ++pass) {
        auto const grouping = schedule(pass, rng);
        if (grouping.dim() != dim) { throw std::invalid_argument("cc: grouping dimension differs from the problem"); }
        auto const& groups = grouping.groups();
        for (std::size_t g = 0; g < groups.size(); ++g) {
            std::size_t gens = params.generations;
            if (params.passes == 0) {
                gens = std::max<std::size_t>(gens, 1);
            } else if (gens == 0) {
                auto const visits_left =
                    static_cast<std::int64_t>((params.passes - pass - 1) * groups.size() + (groups.size() - g));
                gens = static_cast<std::size_t>(std::max<std::int64_t>(
                    1, budget.remaining() / (visits_left * generation_cost)));
            }

            OffspringHook hook;
            if (params.hybrid) {
                hook = [&, g](Population const& parents, GenerationOutcome const& outcome) {
                    return sampler(groups[g], parents, outcome);
                };
            }
            for (std::size_t t = 0; t < gens; ++t) {
                auto const outcome =
                    nsga2_generation(context.members, problem, groups[g], params.variation, budget, rng, hook);
                if (outcome.truncated) {
                    result.budget_exhausted = true;
                    break;
                }
                ++result.generations;
                for (auto i : groups[g]) { context.provenance[i] = static_cast<int>(g); }
                result.archive.update(outcome.offspring);
                result.archive.update(outcome.extra);
                if (observer) { observer(GenerationReport{pass, g, t, result.archive, budget, context}); }
            }
            if (result.budget_exhausted) { break; }
        }
        if (result.budget_exhausted) { break; }
    }
    result.egs_samples = sampler.samples_drawn;
    result.least_squares_used = sampler.least_squares_used;
    return result;
}

CcResult cc_optimize(Problem const& problem, Grouping const& grouping, CcParams const& params,
                     EvaluationBudget& budget, Rng& rng, std::span<EvaluatedPoint const> seeded,
                     GenerationObserver const& observer)
{
    auto schedule = [&grouping](std::size_t, Rng&) { return grouping; };
    return cc_optimize(problem, GroupingSchedule(schedule), params, budget, rng, seeded, observer);
}

CcResult run_nsga2(Problem const& problem, CcParams const& params, EvaluationBudget& budget, Rng& rng,
                   GenerationObserver const& observer)
{
    return cc_optimize(problem, Grouping::single_group(problem.dim()), params, budget, rng, {}, observer);
}

} // namespace ccmo
