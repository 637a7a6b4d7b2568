// Command-line front end: decompose, optimize, matrix, indicators.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccmo/harness.hpp"
#include "ccmo/problems.hpp"

namespace {

using namespace ccmo;

struct Overrides {
    std::optional<std::string> config;
    std::optional<std::string> problem;
    std::optional<std::size_t> dim;
    std::optional<std::size_t> objectives;
    std::optional<std::string> grouper;
    std::optional<std::string> hybrid;
    std::optional<std::string> methods;
    std::optional<std::size_t> gene_length;
    std::optional<std::size_t> lmm_pop;
    std::optional<std::size_t> lmm_gens;
    std::optional<std::size_t> samples;
    std::optional<std::size_t> random_groups;
    bool dynamic = false;
    std::optional<double> crossover_rate;
    std::optional<double> mutation_rate;
    std::optional<std::size_t> pop_size;
    std::optional<double> sigma_frac;
    std::optional<std::string> estimator;
    std::optional<std::size_t> passes;
    std::optional<std::int64_t> budget;
    std::optional<std::string> seeds;
    std::optional<std::size_t> jobs;
    std::optional<std::string> out;
    bool no_wallclock = false;
    bool dump_solutions = false;
};

void add_problem_flags(CLI::App* app, Overrides& o)
{
    app->add_option("--problem", o.problem, "Benchmark name, e.g. ZDT1, DTLZ2, WFG4");
    app->add_option("--dim", o.dim, "Number of decision variables");
    app->add_option("--objectives", o.objectives, "Number of objectives (DTLZ/WFG only)");
}

void add_grouper_flags(CLI::App* app, Overrides& o)
{
    app->add_option("--grouper", o.grouper, "lmm, dg, limd, random or none");
    app->add_option("--gene-length", o.gene_length, "LMM label bits");
    app->add_option("--lmm-pop", o.lmm_pop, "LMM GA population");
    app->add_option("--lmm-gens", o.lmm_gens, "LMM GA generations");
    app->add_option("--samples", o.samples, "LMM linkage samples");
    app->add_option("--random-groups", o.random_groups, "Group count for random grouping (default min(10, D))");
    app->add_flag("--dynamic", o.dynamic, "Fresh random grouping on every pass");
}

void add_optimizer_flags(CLI::App* app, Overrides& o)
{
    app->add_option("--hybrid", o.hybrid, "Gaussian sampling around the convergence point")
        ->check(CLI::IsMember({"on", "off"}));
    app->add_option("--crossover-rate", o.crossover_rate);
    app->add_option("--mutation-rate", o.mutation_rate, "Probability that an offspring is mutated");
    app->add_option("--pop-size", o.pop_size);
    app->add_option("--sigma-frac", o.sigma_frac, "Sampling deviation as a fraction of each range");
    app->add_option("--estimator", o.estimator)->check(CLI::IsMember({"average", "least-squares"}));
    app->add_option("--passes", o.passes, "Passes over all groups, 0 = until the budget runs out");
    app->add_option("--budget", o.budget, "Total fitness evaluations");
    app->add_option("--jobs", o.jobs, "Concurrent runs");
    app->add_option("--out", o.out, "Output directory");
    app->add_flag("--no-wallclock", o.no_wallclock, "Write 0 in wallclock_ms so reruns are byte-identical");
    app->add_flag("--dump-solutions", o.dump_solutions, "Also write full solutions as JSON");
}

// Builds a JSON document from the config file (if any) and the flags, then
// parses it so flags go through the same validation as files.
RunConfig build_config(Overrides const& o, std::optional<std::uint64_t> single_seed = std::nullopt)
{
    nlohmann::json doc = nlohmann::json::object();
    if (o.config) {
        std::ifstream in(*o.config);
        if (!in) { throw ConfigError(*o.config + ": cannot open"); }
        try {
            doc = nlohmann::json::parse(in);
        } catch (nlohmann::json::parse_error const& e) {
            throw ConfigError(*o.config + ": not valid JSON (" + e.what() + ")");
        }
    }
    auto section = [&](char const* key) -> nlohmann::json& {
        if (!doc.contains(key)) { doc[key] = nlohmann::json::object(); }
        return doc[key];
    };
    if (o.problem) { doc["problem"] = *o.problem; }
    if (o.dim) { doc["dim"] = *o.dim; }
    if (o.objectives) { doc["objectives"] = *o.objectives; }
    if (o.budget) { doc["budget"] = *o.budget; }
    if (single_seed) {
        doc["seeds"] = {*single_seed};
    } else if (o.seeds) {
        doc["seeds"] = *o.seeds;
    }
    if (o.methods) {
        doc.erase("grouper");
        doc.erase("hybrid");
        auto list = nlohmann::json::array();
        std::string text = *o.methods;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto const comma = text.find(',', start);
            list.push_back(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
            if (comma == std::string::npos) { break; }
            start = comma + 1;
        }
        doc["methods"] = list;
    }
    if (o.grouper) {
        doc.erase("methods");
        doc["grouper"] = *o.grouper;
    }
    if (o.hybrid) {
        doc.erase("methods");
        doc["hybrid"] = *o.hybrid == "on";
    }
    if (o.gene_length) { section("lmm")["gene_length"] = *o.gene_length; }
    if (o.lmm_pop) { section("lmm")["pop_size"] = *o.lmm_pop; }
    if (o.lmm_gens) { section("lmm")["generations"] = *o.lmm_gens; }
    if (o.samples) { section("lmm")["samples"] = *o.samples; }
    if (o.random_groups) { section("random")["groups"] = *o.random_groups; }
    if (o.dynamic) { section("random")["dynamic"] = true; }
    if (o.crossover_rate) { section("optimizer")["crossover_rate"] = *o.crossover_rate; }
    if (o.mutation_rate) { section("optimizer")["mutation_rate"] = *o.mutation_rate; }
    if (o.pop_size) { section("optimizer")["pop_size"] = *o.pop_size; }
    if (o.sigma_frac) { section("optimizer")["sigma_fraction"] = *o.sigma_frac; }
    if (o.estimator) { section("optimizer")["estimator"] = *o.estimator; }
    if (o.passes) { section("optimizer")["passes"] = *o.passes; }
    if (o.out) { section("output")["dir"] = *o.out; }
    if (o.no_wallclock) { section("output")["wallclock"] = false; }
    if (o.dump_solutions) { section("output")["dump_solutions"] = true; }
    if (o.jobs) { doc["jobs"] = *o.jobs; }
    return parse_config(doc.dump());
}

void print_aggregate(MatrixResult const& result)
{
    std::cout << aggregate_csv(result);
    for (auto const& row : result.rows) {
        if (!row.error.empty()) {
            std::cerr << row.method.label() << " seed " << row.seed << ": " << row.error << "\n";
        }
    }
}

int run_decompose(Overrides const& o, std::uint64_t seed, std::optional<std::string> const& json_out)
{
    auto overrides = o;
    if (!overrides.budget) { overrides.budget = std::int64_t{1} << 40; }
    auto const config = build_config(overrides, seed);
    auto const problem = make_problem(config.problem, config.dim, config.objectives);
    EvaluationBudget budget(config.budget);
    auto const result = decompose(problem, config, config.methods.front().grouper, budget, seed);
    auto const text = grouping_json(problem.name(), result);
    if (json_out) {
        std::ofstream out(*json_out);
        if (!out) { throw std::runtime_error(*json_out + ": cannot write"); }
        out << text;
    } else {
        std::cout << text;
    }
    std::cerr << "groups " << result.grouping.group_count() << ", decomposition evaluations "
              << budget.used(Phase::Decomposition) << ", sample base points " << budget.used(Phase::Optimization)
              << (result.budget_exhausted ? ", budget exhausted" : "") << "\n";
    return 0;
}

int run_indicators(std::vector<std::string> const& files, Overrides const& o, std::size_t ref_size)
{
    if (!o.problem || !o.dim) { throw ConfigError("indicators: --problem and --dim are required"); }
    auto const problem = make_problem(*o.problem, *o.dim, o.objectives);
    std::vector<std::tuple<std::string, std::uint64_t, Front>> sets;
    std::vector<Front> fronts;
    for (auto const& file : files) {
        for (auto& [seed, front] : read_archive_csv(file)) {
            fronts.push_back(front);
            sets.emplace_back(file, seed, std::move(front));
        }
    }
    auto const r = default_reference_point(fronts);
    auto const reference = problem.sample_true_front(ref_size);
    std::cout << "file,seed,hv,igd";
    if (problem.objectives() > 3) { std::cout << ",hv_stderr"; }
    std::cout << "\n";
    for (auto const& [file, seed, front] : sets) {
        auto const ind = compute_indicators(front, r, reference);
        std::cout << file << "," << seed << "," << format_number(ind.hv) << "," << format_number(ind.igd);
        if (problem.objectives() > 3) { std::cout << "," << format_number(ind.hv_stderr); }
        std::cout << "\n";
    }
    std::cerr << "reference point";
    for (auto v : r) { std::cerr << " " << format_number(v); }
    std::cerr << "; reference set " << reference.size() << " points\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cooperative coevolution for large-scale multi-objective optimization"};
    app.require_subcommand(1);

    Overrides o;
    std::uint64_t seed = 1;
    std::optional<std::string> grouping_out;
    std::vector<std::string> archives;
    std::size_t ref_size = 1000;

    auto* dec = app.add_subcommand("decompose", "Group the variables and print the grouping as JSON");
    dec->add_option("--config", o.config, "JSON run configuration");
    add_problem_flags(dec, o);
    add_grouper_flags(dec, o);
    dec->add_option("--seed", seed);
    dec->add_option("--budget", o.budget, "Evaluation cap for the grouper");
    dec->add_option("--out", grouping_out, "Write the JSON here instead of stdout");

    auto* opt = app.add_subcommand("optimize", "One decomposition and optimization run");
    opt->add_option("--config", o.config, "JSON run configuration");
    add_problem_flags(opt, o);
    add_grouper_flags(opt, o);
    add_optimizer_flags(opt, o);
    opt->add_option("--seed", seed);

    auto* mat = app.add_subcommand("matrix", "Every method over every seed, with shared indicators");
    mat->add_option("--config", o.config, "JSON run configuration");
    add_problem_flags(mat, o);
    add_grouper_flags(mat, o);
    add_optimizer_flags(mat, o);
    mat->add_option("--methods", o.methods, "Comma list such as random,lmm,lmm+h");
    mat->add_option("--seeds", o.seeds, "Range 1..10 or list 1,2,3");

    auto* ind = app.add_subcommand("indicators", "HV and IGD of archive CSV files");
    add_problem_flags(ind, o);
    ind->add_option("archives", archives, "Archive CSV files")->required();
    ind->add_option("--reference-size", ref_size, "Points sampled on the true front");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dec->parsed()) { return run_decompose(o, seed, grouping_out); }
        if (ind->parsed()) { return run_indicators(archives, o, ref_size); }
        auto const config = opt->parsed() ? build_config(o, seed) : build_config(o);
        auto const result = run_matrix(config);
        emit_reports(result, config.out_dir, config.dump_solutions);
        print_aggregate(result);
        std::cerr << "reports written to " << config.out_dir.string() << "\n";
        return 0;
    } catch (ConfigError const& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
