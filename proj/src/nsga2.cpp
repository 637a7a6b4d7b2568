#include "ccmo/nsga2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ccmo/problems.hpp"
#include "ccmo/random.hpp"

namespace ccmo {

int dominate(std::span<double const> a, std::span<double const> b)
{
    if (a.size() != b.size()) { throw std::invalid_argument("dominate: objective vectors differ in length"); }
    std::size_t a_no_worse = 0;
    std::size_t b_no_worse = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] <= b[k]) { ++a_no_worse; }
        if (b[k] <= a[k]) { ++b_no_worse; }
    }
    auto const m = a.size();
    if (a_no_worse == m && b_no_worse != m) { return -1; }
    if (b_no_worse == m && a_no_worse != m) { return 1; }
    return 0;
}

std::vector<std::size_t> quick_search(std::span<ObjectiveVector const> objectives, QuickSearchStats* stats)
{
    auto const n = objectives.size();
    std::vector<char> alive(n, 1);
    std::size_t comparisons = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!alive[i]) { continue; }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!alive[j]) { continue; }
            ++comparisons;
            auto const d = dominate(objectives[i], objectives[j]);
            if (d == 1) {
                alive[i] = 0;
                break;
            }
            if (d == -1) { alive[j] = 0; }
        }
    }
    if (stats != nullptr) { stats->comparisons = comparisons; }

    std::vector<std::size_t> front;
    for (std::size_t i = 0; i < n; ++i) {
        if (alive[i]) { front.push_back(i); }
    }
    return front;
}

std::vector<std::vector<std::size_t>> fast_nondominated_sort(std::span<ObjectiveVector const> objectives)
{
    auto const n = objectives.size();
    std::vector<std::vector<std::size_t>> dominated_by(n);
    std::vector<std::size_t> domination_count(n, 0);
    std::vector<std::vector<std::size_t>> fronts;

    std::vector<std::size_t> current;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            auto const d = dominate(objectives[p], objectives[q]);
            if (d == -1) {
                dominated_by[p].push_back(q);
                ++domination_count[q];
            } else if (d == 1) {
                dominated_by[q].push_back(p);
                ++domination_count[p];
            }
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (domination_count[p] == 0) { current.push_back(p); }
    }
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (auto p : current) {
            for (auto q : dominated_by[p]) {
                if (--domination_count[q] == 0) { next.push_back(q); }
            }
        }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

namespace {
std::vector<ObjectiveVector> objectives_of(Population const& population)
{
    std::vector<ObjectiveVector> out;
    out.reserve(population.size());
    for (auto const& ind : population) { out.push_back(ind.objectives); }
    return out;
}
} // namespace

std::vector<std::vector<std::size_t>> fast_nondominated_sort(Population& population)
{
    auto fronts = fast_nondominated_sort(objectives_of(population));
    for (std::size_t f = 0; f < fronts.size(); ++f) {
        for (auto i : fronts[f]) { population[i].rank = f + 1; }
    }
    return fronts;
}

std::vector<double> crowding_distance(std::span<ObjectiveVector const> front)
{
    auto const n = front.size();
    std::vector<double> distance(n, 0.0);
    if (n == 0) { return distance; }
    constexpr auto inf = std::numeric_limits<double>::infinity();
    if (n <= 2) {
        std::fill(distance.begin(), distance.end(), inf);
        return distance;
    }
    auto const m = front.front().size();
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < m; ++k) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return front[a][k] < front[b][k]; });
        distance[order.front()] = inf;
        distance[order.back()] = inf;
        auto const range = front[order.back()][k] - front[order.front()][k];
        if (!(range > 0.0)) { continue; }
        for (std::size_t r = 1; r + 1 < n; ++r) {
            distance[order[r]] += (front[order[r + 1]][k] - front[order[r - 1]][k]) / range;
        }
    }
    return distance;
}

Population environmental_selection(Population pool, std::size_t size)
{
    auto const fronts = fast_nondominated_sort(pool);
    Population next;
    next.reserve(std::min(size, pool.size()));
    for (auto const& front : fronts) {
        if (next.size() >= size) { break; }
        std::vector<ObjectiveVector> objs;
        objs.reserve(front.size());
        for (auto i : front) { objs.push_back(pool[i].objectives); }
        auto const crowd = crowding_distance(objs);
        for (std::size_t r = 0; r < front.size(); ++r) { pool[front[r]].crowding = crowd[r]; }

        if (next.size() + front.size() <= size) {
            for (auto i : front) { next.push_back(std::move(pool[i])); }
            continue;
        }
        std::vector<std::size_t> order(front.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return crowd[a] > crowd[b]; });
        for (std::size_t r = 0; next.size() < size; ++r) { next.push_back(std::move(pool[front[order[r]]])); }
    }
    return next;
}

std::pair<std::size_t, std::size_t> binary_tournament(Population const& population, Rng& rng)
{
    auto const n = population.size();
    if (n == 0) { throw std::invalid_argument("tournament on an empty population"); }
    if (n == 1) { return {0, 0}; }
    auto a = uniform_index(rng, n);
    auto b = uniform_index(rng, n - 1);
    if (b >= a) { ++b; }
    auto const& ia = population[a];
    auto const& ib = population[b];
    bool a_wins = false;
    if (ia.rank != ib.rank) {
        a_wins = ia.rank < ib.rank;
    } else if (ia.crowding != ib.crowding) {
        a_wins = ia.crowding > ib.crowding;
    } else {
        a_wins = uniform01(rng) < 0.5;
    }
    return a_wins ? std::pair{a, b} : std::pair{b, a};
}

void simulated_binary_crossover(Vector& a, Vector& b, std::span<std::size_t const> active, Vector const& lower,
                                Vector const& upper, double eta, Rng& rng)
{
    auto const exponent = 1.0 / (eta + 1.0);
    auto spread = [&](double beta, double u) {
        auto const alpha = 2.0 - std::pow(beta, -(eta + 1.0));
        return u <= 1.0 / alpha ? std::pow(u * alpha, exponent) : std::pow(1.0 / (2.0 - u * alpha), exponent);
    };
    for (auto i : active) {
        if (uniform01(rng) > 0.5) { continue; }
        if (std::abs(a[i] - b[i]) <= 1e-14) { continue; }
        auto const lo = lower[i];
        auto const hi = upper[i];
        auto const y1 = std::min(a[i], b[i]);
        auto const y2 = std::max(a[i], b[i]);
        auto const u = uniform01(rng);

        auto c1 = 0.5 * ((y1 + y2) - spread(1.0 + 2.0 * (y1 - lo) / (y2 - y1), u) * (y2 - y1));
        auto c2 = 0.5 * ((y1 + y2) + spread(1.0 + 2.0 * (hi - y2) / (y2 - y1), u) * (y2 - y1));
        c1 = std::clamp(c1, lo, hi);
        c2 = std::clamp(c2, lo, hi);
        if (uniform01(rng) <= 0.5) {
            a[i] = c2;
            b[i] = c1;
        } else {
            a[i] = c1;
            b[i] = c2;
        }
    }
}

void polynomial_mutation(Vector& x, std::span<std::size_t const> active, Vector const& lower, Vector const& upper,
                         double eta, double per_variable, Rng& rng)
{
    auto const power = 1.0 / (eta + 1.0);
    for (auto i : active) {
        if (uniform01(rng) >= per_variable) { continue; }
        auto const lo = lower[i];
        auto const hi = upper[i];
        auto const range = hi - lo;
        auto const y = x[i];
        auto const u = uniform01(rng);
        double deltaq = 0.0;
        if (u <= 0.5) {
            auto const xy = 1.0 - (y - lo) / range;
            auto const val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta + 1.0);
            deltaq = std::pow(val, power) - 1.0;
        } else {
            auto const xy = 1.0 - (hi - y) / range;
            auto const val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta + 1.0);
            deltaq = 1.0 - std::pow(val, power);
        }
        x[i] = std::clamp(y + deltaq * range, lo, hi);
    }
}

GenerationOutcome nsga2_generation(Population& population, Problem const& problem,
                                   std::span<std::size_t const> active, VariationParams const& params,
                                   EvaluationBudget& budget, Rng& rng, OffspringHook const& hook)
{
    auto const size = population.size();
    if (size == 0) { throw std::invalid_argument("nsga2_generation: empty population"); }

    GenerationOutcome outcome;
    if (!budget.try_charge(Phase::Optimization, static_cast<std::int64_t>(size))) {
        outcome.truncated = true;
        return outcome;
    }

    if (std::any_of(population.begin(), population.end(), [](auto const& ind) { return ind.rank == 0; })) {
        population = environmental_selection(std::move(population), size);
    }

    auto const per_variable = active.empty() ? 0.0 : 1.0 / static_cast<double>(active.size());
    auto const& lower = problem.lower();
    auto const& upper = problem.upper();
    outcome.offspring.reserve(size);
    while (outcome.offspring.size() < size) {
        auto const [w1, l1] = binary_tournament(population, rng);
        auto const [w2, l2] = binary_tournament(population, rng);
        Vector c1 = population[w1].x;
        Vector c2 = population[w2].x;
        if (uniform01(rng) < params.crossover_rate) {
            simulated_binary_crossover(c1, c2, active, lower, upper, params.crossover_eta, rng);
        }
        if (uniform01(rng) < params.mutation_rate) {
            polynomial_mutation(c1, active, lower, upper, params.mutation_eta, per_variable, rng);
        }
        if (uniform01(rng) < params.mutation_rate) {
            polynomial_mutation(c2, active, lower, upper, params.mutation_eta, per_variable, rng);
        }
        outcome.offspring.push_back(Individual{std::move(c1), {}, 0, 0.0});
        outcome.tournament_loser.push_back(l1);
        if (outcome.offspring.size() < size) {
            outcome.offspring.push_back(Individual{std::move(c2), {}, 0, 0.0});
            outcome.tournament_loser.push_back(l2);
        }
    }
    for (auto& child : outcome.offspring) { child.objectives = problem.evaluate(child.x); }

    if (hook) { outcome.extra = hook(population, outcome); }

    Population pool = population;
    pool.insert(pool.end(), outcome.offspring.begin(), outcome.offspring.end());
    pool.insert(pool.end(), outcome.extra.begin(), outcome.extra.end());
    population = environmental_selection(std::move(pool), size);
    return outcome;
}

} // namespace ccmo
