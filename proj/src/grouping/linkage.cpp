#include <cmath>
#include <map>
#include <stdexcept>

#include "ccmo/grouping.hpp"
#include "ccmo/problems.hpp"

namespace ccmo {

Grouping::Grouping(LabelVector labels) : labels_(std::move(labels))
{
    std::map<int, std::size_t> slot;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        auto [it, inserted] = slot.try_emplace(labels_[i], groups_.size());
        if (inserted) { groups_.emplace_back(); }
        groups_[it->second].push_back(i);
    }
}

Grouping Grouping::singletons(std::size_t dim)
{
    LabelVector labels(dim);
    for (std::size_t i = 0; i < dim; ++i) { labels[i] = static_cast<int>(i); }
    return Grouping(std::move(labels));
}

Grouping Grouping::single_group(std::size_t dim) { return Grouping(LabelVector(dim, 0)); }

Grouping Grouping::from_groups(std::size_t dim, std::vector<Group> const& groups)
{
    LabelVector labels(dim, -1);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        for (auto i : groups[g]) {
            if (i >= dim) { throw std::invalid_argument("grouping: variable index out of range"); }
            if (labels[i] != -1) { throw std::invalid_argument("grouping: variable in more than one group"); }
            labels[i] = static_cast<int>(g);
        }
    }
    for (auto l : labels) {
        if (l == -1) { throw std::invalid_argument("grouping: some variable belongs to no group"); }
    }
    return Grouping(std::move(labels));
}

LabelVector Grouping::canonical_labels() const
{
    LabelVector out(labels_.size());
    for (std::size_t g = 0; g < groups_.size(); ++g) {
        for (auto i : groups_[g]) { out[i] = static_cast<int>(g); }
    }
    return out;
}

Vector perturb(std::span<double const> s, std::span<std::size_t const> indices, std::span<double const> delta,
               std::span<double const> lower, std::span<double const> upper)
{
    Vector out(s.begin(), s.end());
    for (auto i : indices) {
        if (i >= s.size()) { throw std::invalid_argument("perturb: index out of range"); }
        auto const d = delta[i];
        if (d == 0.0) { throw std::invalid_argument("perturb: zero perturbation"); }
        auto v = s[i] + d;
        if (v > upper[i] || v < lower[i]) { v = s[i] - d; }
        if (v > upper[i] || v < lower[i]) { throw std::invalid_argument("perturb: step larger than the variable range"); }
        out[i] = v;
    }
    return out;
}

Vector perturb(std::span<double const> s, std::span<std::size_t const> indices, double delta,
               std::span<double const> lower, std::span<double const> upper)
{
    Vector const d(s.size(), delta);
    return perturb(s, indices, d, lower, upper);
}

LinkageSample make_linkage_sample(Problem const& problem, Vector base, EvaluationBudget& budget, double step_fraction,
                                  Phase base_phase)
{
    auto const dim = problem.dim();
    if (base.size() != dim) { throw std::invalid_argument("linkage sample: base has wrong dimension"); }
    auto const& lo = problem.lower();
    auto const& hi = problem.upper();

    LinkageSample sample;
    sample.step.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        auto const step = step_fraction * (hi[i] - lo[i]);
        sample.step[i] = base[i] + step > hi[i] ? -step : step;
    }
    sample.base = std::move(base);
    sample.base_value = evaluate(problem, sample.base, budget, base_phase);

    sample.single_value.reserve(dim);
    Vector x = sample.base;
    for (std::size_t i = 0; i < dim; ++i) {
        x[i] = sample.base[i] + sample.step[i];
        sample.single_value.push_back(evaluate(problem, x, budget, Phase::Decomposition));
        x[i] = sample.base[i];
    }
    for (std::size_t i = 0; i < dim; ++i) { x[i] = sample.base[i] + sample.step[i]; }
    sample.joint_value = evaluate(problem, x, budget, Phase::Decomposition);
    return sample;
}

std::vector<ObjectiveVector> group_deltas(Problem const& problem, LinkageSample const& sample,
                                          Grouping const& grouping, EvaluationBudget& budget, GroupValueCache* cache)
{
    if (grouping.dim() != problem.dim()) { throw std::invalid_argument("group_deltas: grouping dimension mismatch"); }
    auto const m = problem.objectives();
    std::vector<ObjectiveVector> deltas;
    deltas.reserve(grouping.group_count());
    Vector x = sample.base;
    for (auto const& group : grouping.groups()) {
        ObjectiveVector value;
        GroupValueCache::const_iterator hit;
        if (group.size() == 1) {
            value = sample.single_value[group.front()];
        } else if (cache && (hit = cache->find(group)) != cache->end()) {
            value = hit->second;
        } else {
            for (auto i : group) { x[i] = sample.base[i] + sample.step[i]; }
            value = evaluate(problem, x, budget, Phase::Decomposition);
            for (auto i : group) { x[i] = sample.base[i]; }
            if (cache) { cache->emplace(group, value); }
        }
        for (std::size_t j = 0; j < m; ++j) { value[j] -= sample.base_value[j]; }
        deltas.push_back(std::move(value));
    }
    return deltas;
}

ObjectiveVector linkage_residual(Problem const& problem, LinkageSample const& sample, Grouping const& grouping,
                                 EvaluationBudget& budget, GroupValueCache* cache)
{
    if (grouping.group_count() < 2) { throw std::invalid_argument("linkage_residual: needs at least two groups"); }
    auto const deltas = group_deltas(problem, sample, grouping, budget, cache);
    auto const m = problem.objectives();
    ObjectiveVector residual(m);
    for (std::size_t j = 0; j < m; ++j) {
        auto r = sample.joint_value[j] - sample.base_value[j];
        for (auto const& d : deltas) { r -= d[j]; }
        residual[j] = std::abs(r);
    }
    return residual;
}

double linkage_measure(Problem const& problem, std::span<LinkageSample const> samples, Grouping const& grouping,
                       std::span<double const> weights, EvaluationBudget& budget,
                       std::vector<GroupValueCache>* caches)
{
    if (samples.empty()) { throw std::invalid_argument("linkage_measure: no samples"); }
    if (caches && caches->size() != samples.size()) { caches->resize(samples.size()); }
    if (weights.size() != problem.objectives()) { throw std::invalid_argument("linkage_measure: one weight per objective"); }
    double weight_sum = 0.0;
    for (auto w : weights) {
        if (w < 0.0) { throw std::invalid_argument("linkage_measure: negative weight"); }
        weight_sum += w;
    }
    if (std::abs(weight_sum - 1.0) > 1e-9) { throw std::invalid_argument("linkage_measure: weights must sum to 1"); }

    auto const groups = static_cast<double>(grouping.group_count());
    double total = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        auto* cache = caches ? &(*caches)[k] : nullptr;
        auto const residual = linkage_residual(problem, samples[k], grouping, budget, cache);
        for (std::size_t j = 0; j < residual.size(); ++j) { total += weights[j] * residual[j] / groups; }
    }
    return total;
}

} // namespace ccmo
