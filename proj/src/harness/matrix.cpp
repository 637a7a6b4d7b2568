#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "ccmo/harness.hpp"
#include "ccmo/problems.hpp"

namespace ccmo {
namespace {

// Independent generators per purpose, all derived from the run seed.
enum class Stream : std::uint32_t { Optimization = 0, Decomposition = 1, Regrouping = 2 };

Rng make_rng(std::uint64_t seed, Stream stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    return Rng(seq);
}

std::size_t random_group_count(RunConfig const& config, std::size_t dim)
{
    return config.random_groups == 0 ? std::min<std::size_t>(10, dim) : config.random_groups;
}

template <typename Body>
void parallel_for(std::size_t count, std::size_t jobs, Body body)
{
    jobs = std::max<std::size_t>(1, std::min(jobs, count));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) { body(i); }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            for (auto i = next.fetch_add(1); i < count; i = next.fetch_add(1)) { body(i); }
        });
    }
}

} // namespace

DecompositionResult decompose(Problem const& problem, RunConfig const& config, GrouperId grouper,
                              EvaluationBudget& budget, std::uint64_t seed)
{
    auto rng = make_rng(seed, Stream::Decomposition);
    DecompositionResult result;
    switch (grouper) {
    case GrouperId::Lmm: {
        auto params = config.lmm;
        params.step_fraction = config.step_fraction;
        return lmm_decompose(problem, params, budget, rng);
    }
    case GrouperId::Dg: return dg_decompose(problem, config.dg_epsilon, budget, config.step_fraction);
    case GrouperId::Limd: return limd_decompose(problem, budget, rng, config.limd_samples, config.step_fraction);
    case GrouperId::Random:
        result.grouping = random_grouping(problem.dim(), random_group_count(config, problem.dim()), rng);
        break;
    case GrouperId::None: result.grouping = Grouping::single_group(problem.dim()); break;
    }
    return result;
}

RunRow run_single(Problem const& problem, RunConfig const& config, MethodSpec const& method, std::uint64_t seed)
{
    RunRow row;
    row.method = method;
    row.seed = seed;
    auto const start = std::chrono::steady_clock::now();
    EvaluationBudget budget(config.budget);
    try {
        auto const dec = decompose(problem, config, method.grouper, budget, seed);
        row.fully_separable = dec.detected_fully_separable;
        row.group_count = dec.grouping.group_count();

        auto params = config.optimizer;
        params.hybrid = method.hybrid;
        auto rng = make_rng(seed, Stream::Optimization);
        auto regroup_rng = make_rng(seed, Stream::Regrouping);
        auto const groups = random_group_count(config, problem.dim());
        bool const dynamic = method.grouper == GrouperId::Random && config.random_dynamic;
        GroupingSchedule schedule = [&](std::size_t pass, Rng&) {
            if (dynamic && pass > 0) { return random_grouping(problem.dim(), groups, regroup_rng); }
            return dec.grouping;
        };
        auto const result = cc_optimize(problem, schedule, params, budget, rng, dec.evaluated_points);
        row.archive = result.archive.entries();
        row.archive_size = row.archive.size();
    } catch (std::exception const& e) {
        row.error = e.what();
    }
    row.fes_decomp = budget.used(Phase::Decomposition);
    row.fes_opt = budget.used(Phase::Optimization);
    if (config.record_wallclock) {
        row.wallclock_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                               .count();
    }
    return row;
}

MatrixResult run_matrix(RunConfig const& config)
{
    validate(config);
    auto const problem = make_problem(config.problem, config.dim, config.objectives);

    MatrixResult out;
    out.problem = problem.name();
    out.dim = problem.dim();
    out.objectives = problem.objectives();
    out.hv_exact = problem.objectives() <= 3;
    out.rows.resize(config.methods.size() * config.seeds.size());

    parallel_for(out.rows.size(), config.jobs, [&](std::size_t i) {
        auto const& method = config.methods[i / config.seeds.size()];
        auto const seed = config.seeds[i % config.seeds.size()];
        out.rows[i] = run_single(problem, config, method, seed);
    });

    std::vector<Front> fronts;
    for (auto const& row : out.rows) {
        Front f;
        for (auto const& e : row.archive) { f.push_back(e.f); }
        fronts.push_back(std::move(f));
    }
    bool const any = std::any_of(fronts.begin(), fronts.end(), [](auto const& f) { return !f.empty(); });
    if (!any) { return out; }
    out.reference_point = default_reference_point(fronts);

    Front reference_set;
    if (problem.has_front_sampler()) { reference_set = problem.sample_true_front(config.reference_set_size); }
    out.reference_set_size = reference_set.size();

    parallel_for(out.rows.size(), config.jobs, [&](std::size_t i) {
        auto& row = out.rows[i];
        if (!row.error.empty()) {
            row.hv = row.igd = std::numeric_limits<double>::quiet_NaN();
            return;
        }
        auto const hv = hypervolume(fronts[i], out.reference_point, config.hv);
        row.hv = hv.value;
        row.hv_stderr = hv.stderr_;
        row.igd = reference_set.empty() || fronts[i].empty() ? std::numeric_limits<double>::quiet_NaN()
                                                             : igd(fronts[i], reference_set);
    });
    return out;
}

} // namespace ccmo
