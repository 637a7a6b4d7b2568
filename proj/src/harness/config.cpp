#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ccmo/harness.hpp"
#include "ccmo/problems.hpp"

namespace ccmo {
namespace {

using nlohmann::json;

std::string join(std::vector<std::string> const& names)
{
    std::string out;
    for (auto const& n : names) {
        if (!out.empty()) { out += ", "; }
        out += n;
    }
    return out;
}

[[noreturn]] void fail(std::string const& path, std::string const& what) { throw ConfigError(path + ": " + what); }

void reject_unknown(json const& obj, std::string const& path, std::set<std::string> const& known)
{
    for (auto const& [key, value] : obj.items()) {
        if (!known.contains(key)) { fail(path + "." + key, "unknown key"); }
    }
}

json const* child(json const& obj, std::string const& key) { return obj.contains(key) ? &obj.at(key) : nullptr; }

std::int64_t get_int(json const& v, std::string const& path, std::int64_t lo, std::int64_t hi)
{
    if (!v.is_number_integer()) { fail(path, "expected an integer"); }
    auto const x = v.get<std::int64_t>();
    if (x < lo || x > hi) { fail(path, "out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]"); }
    return x;
}

double get_real(json const& v, std::string const& path, double lo, double hi)
{
    if (!v.is_number()) { fail(path, "expected a number"); }
    auto const x = v.get<double>();
    if (!(x >= lo && x <= hi)) { fail(path, "out of range [" + format_number(lo) + ", " + format_number(hi) + "]"); }
    return x;
}

bool get_bool(json const& v, std::string const& path)
{
    if (!v.is_boolean()) { fail(path, "expected true or false"); }
    return v.get<bool>();
}

std::string get_string(json const& v, std::string const& path)
{
    if (!v.is_string()) { fail(path, "expected a string"); }
    return v.get<std::string>();
}

json const& require_object(json const& v, std::string const& path)
{
    if (!v.is_object()) { fail(path, "expected an object"); }
    return v;
}

template <typename T>
void read_size(json const& obj, std::string const& path, char const* key, T& out, std::int64_t lo, std::int64_t hi)
{
    if (auto const* v = child(obj, key)) { out = static_cast<T>(get_int(*v, path + "." + key, lo, hi)); }
}

void read_real(json const& obj, std::string const& path, char const* key, double& out, double lo, double hi)
{
    if (auto const* v = child(obj, key)) { out = get_real(*v, path + "." + key, lo, hi); }
}

void read_bool(json const& obj, std::string const& path, char const* key, bool& out)
{
    if (auto const* v = child(obj, key)) { out = get_bool(*v, path + "." + key); }
}

constexpr std::int64_t big = std::int64_t{1} << 40;

} // namespace

std::vector<std::string> const& grouper_names()
{
    static std::vector<std::string> const names{"lmm", "dg", "limd", "random", "none"};
    return names;
}

std::string_view to_string(GrouperId id) noexcept
{
    switch (id) {
    case GrouperId::Lmm: return "lmm";
    case GrouperId::Dg: return "dg";
    case GrouperId::Limd: return "limd";
    case GrouperId::Random: return "random";
    case GrouperId::None: return "none";
    }
    return "?";
}

GrouperId parse_grouper(std::string_view text, std::string const& path)
{
    static constexpr GrouperId ids[] = {GrouperId::Lmm, GrouperId::Dg, GrouperId::Limd, GrouperId::Random,
                                        GrouperId::None};
    for (auto id : ids) {
        if (to_string(id) == text) { return id; }
    }
    fail(path, "unknown grouper '" + std::string(text) + "' (valid: " + join(grouper_names()) + ")");
}

std::string MethodSpec::label() const { return std::string(to_string(grouper)) + (hybrid ? "+h" : ""); }

MethodSpec MethodSpec::parse(std::string_view text)
{
    MethodSpec m;
    if (text.size() > 2 && text.substr(text.size() - 2) == "+h") {
        m.hybrid = true;
        text.remove_suffix(2);
    }
    m.grouper = parse_grouper(text, "method");
    return m;
}

std::vector<std::uint64_t> parse_seed_list(std::string_view text)
{
    auto number = [&](std::string_view s) {
        std::uint64_t v = 0;
        auto const [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
            fail("seeds", "cannot read '" + std::string(s) + "' as a seed");
        }
        return v;
    };
    std::vector<std::uint64_t> out;
    if (auto const dots = text.find(".."); dots != std::string_view::npos) {
        auto const a = number(text.substr(0, dots));
        auto const b = number(text.substr(dots + 2));
        if (b < a) { fail("seeds", "empty range"); }
        if (b - a >= 100000) { fail("seeds", "range too long"); }
        for (auto s = a; s <= b; ++s) { out.push_back(s); }
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        auto const comma = text.find(',', start);
        auto const piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(number(piece));
        if (comma == std::string_view::npos) { break; }
        start = comma + 1;
    }
    return out;
}

RunConfig parse_config(std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (json::parse_error const& e) {
        throw ConfigError(std::string("$: not valid JSON (") + e.what() + ")");
    }
    require_object(doc, "$");
    reject_unknown(doc, "$",
                   {"problem", "dim", "objectives", "budget", "seeds", "grouper", "hybrid", "methods", "lmm", "random",
                    "dg", "limd", "step_fraction", "optimizer", "indicators", "output", "jobs"});

    RunConfig c;
    auto const* problem = child(doc, "problem");
    if (!problem) { fail("$.problem", "required"); }
    c.problem = get_string(*problem, "$.problem");

    auto const* dim = child(doc, "dim");
    if (!dim) { fail("$.dim", "required"); }
    c.dim = static_cast<std::size_t>(get_int(*dim, "$.dim", 1, 1'000'000));

    if (auto const* v = child(doc, "objectives")) { c.objectives = get_int(*v, "$.objectives", 1, 64); }

    auto const* budget = child(doc, "budget");
    if (!budget) { fail("$.budget", "required"); }
    c.budget = get_int(*budget, "$.budget", 1, big);

    auto const* seeds = child(doc, "seeds");
    if (!seeds) { fail("$.seeds", "required"); }
    if (seeds->is_string()) {
        try {
            c.seeds = parse_seed_list(seeds->get<std::string>());
        } catch (ConfigError const& e) {
            fail("$.seeds", e.what());
        }
    } else if (seeds->is_array()) {
        for (std::size_t i = 0; i < seeds->size(); ++i) {
            c.seeds.push_back(static_cast<std::uint64_t>(
                get_int(seeds->at(i), "$.seeds[" + std::to_string(i) + "]", 0, std::numeric_limits<std::int64_t>::max())));
        }
    } else {
        fail("$.seeds", "expected an array of integers or a range string such as \"1..10\"");
    }
    if (c.seeds.empty()) { fail("$.seeds", "must not be empty"); }

    MethodSpec single;
    if (auto const* v = child(doc, "grouper")) { single.grouper = parse_grouper(get_string(*v, "$.grouper"), "$.grouper"); }
    if (auto const* v = child(doc, "hybrid")) { single.hybrid = get_bool(*v, "$.hybrid"); }
    if (auto const* v = child(doc, "methods")) {
        if (child(doc, "grouper") || child(doc, "hybrid")) { fail("$.methods", "give either methods or grouper/hybrid"); }
        if (!v->is_array() || v->empty()) { fail("$.methods", "expected a non-empty array"); }
        for (std::size_t i = 0; i < v->size(); ++i) {
            auto const path = "$.methods[" + std::to_string(i) + "]";
            auto const text = get_string(v->at(i), path);
            MethodSpec m;
            try {
                m = MethodSpec::parse(text);
            } catch (ConfigError const& e) {
                fail(path, e.what());
            }
            if (std::find(c.methods.begin(), c.methods.end(), m) != c.methods.end()) { fail(path, "duplicate method"); }
            c.methods.push_back(m);
        }
    } else {
        c.methods.push_back(single);
    }

    if (auto const* v = child(doc, "lmm")) {
        auto const& o = require_object(*v, "$.lmm");
        reject_unknown(o, "$.lmm",
                       {"pop_size", "generations", "gene_length", "samples", "threshold", "crossover_rate",
                        "mutation_rate"});
        read_size(o, "$.lmm", "pop_size", c.lmm.pop_size, 1, 100000);
        read_size(o, "$.lmm", "generations", c.lmm.generations, 0, 100000);
        read_size(o, "$.lmm", "gene_length", c.lmm.gene_length, 1, 30);
        read_size(o, "$.lmm", "samples", c.lmm.sample_count, 1, 1000);
        read_real(o, "$.lmm", "threshold", c.lmm.separable_threshold, 0.0, 1e300);
        read_real(o, "$.lmm", "crossover_rate", c.lmm.crossover_rate, 0.0, 1.0);
        read_real(o, "$.lmm", "mutation_rate", c.lmm.mutation_rate, 0.0, 1.0);
    }
    if (auto const* v = child(doc, "random")) {
        auto const& o = require_object(*v, "$.random");
        reject_unknown(o, "$.random", {"groups", "dynamic"});
        read_size(o, "$.random", "groups", c.random_groups, 0, 1'000'000);
        read_bool(o, "$.random", "dynamic", c.random_dynamic);
    }
    if (auto const* v = child(doc, "dg")) {
        auto const& o = require_object(*v, "$.dg");
        reject_unknown(o, "$.dg", {"epsilon"});
        read_real(o, "$.dg", "epsilon", c.dg_epsilon, 0.0, 1e300);
    }
    if (auto const* v = child(doc, "limd")) {
        auto const& o = require_object(*v, "$.limd");
        reject_unknown(o, "$.limd", {"samples"});
        read_size(o, "$.limd", "samples", c.limd_samples, 1, 1000);
    }
    if (auto const* v = child(doc, "step_fraction")) { c.step_fraction = get_real(*v, "$.step_fraction", 1e-12, 1.0); }

    if (auto const* v = child(doc, "optimizer")) {
        auto const& o = require_object(*v, "$.optimizer");
        reject_unknown(o, "$.optimizer",
                       {"pop_size", "crossover_rate", "mutation_rate", "crossover_eta", "mutation_eta", "sigma_fraction",
                        "estimator", "passes", "generations", "archive_capacity"});
        read_size(o, "$.optimizer", "pop_size", c.optimizer.pop_size, 2, 100000);
        read_real(o, "$.optimizer", "crossover_rate", c.optimizer.variation.crossover_rate, 0.0, 1.0);
        read_real(o, "$.optimizer", "mutation_rate", c.optimizer.variation.mutation_rate, 0.0, 1.0);
        read_real(o, "$.optimizer", "crossover_eta", c.optimizer.variation.crossover_eta, 0.0, 1e6);
        read_real(o, "$.optimizer", "mutation_eta", c.optimizer.variation.mutation_eta, 0.0, 1e6);
        read_real(o, "$.optimizer", "sigma_fraction", c.optimizer.sigma_fraction, 0.0, 10.0);
        if (auto const* e = child(o, "estimator")) {
            auto const s = get_string(*e, "$.optimizer.estimator");
            if (s == "average") {
                c.optimizer.estimator = EstimatorMethod::PfAverage;
            } else if (s == "least-squares") {
                c.optimizer.estimator = EstimatorMethod::LeastSquares;
            } else {
                fail("$.optimizer.estimator", "unknown estimator '" + s + "' (valid: average, least-squares)");
            }
        }
        read_size(o, "$.optimizer", "passes", c.optimizer.passes, 0, 1'000'000);
        read_size(o, "$.optimizer", "generations", c.optimizer.generations, 0, 1'000'000);
        read_size(o, "$.optimizer", "archive_capacity", c.optimizer.archive_capacity, 1, 1'000'000);
    }
    if (auto const* v = child(doc, "indicators")) {
        auto const& o = require_object(*v, "$.indicators");
        reject_unknown(o, "$.indicators", {"reference_set_size", "mc_samples", "mc_seed"});
        read_size(o, "$.indicators", "reference_set_size", c.reference_set_size, 2, 1'000'000);
        read_size(o, "$.indicators", "mc_samples", c.hv.mc_samples, 1, big);
        read_size(o, "$.indicators", "mc_seed", c.hv.mc_seed, 0, std::numeric_limits<std::int64_t>::max());
    }
    if (auto const* v = child(doc, "output")) {
        auto const& o = require_object(*v, "$.output");
        reject_unknown(o, "$.output", {"dir", "wallclock", "dump_solutions"});
        if (auto const* d = child(o, "dir")) { c.out_dir = get_string(*d, "$.output.dir"); }
        read_bool(o, "$.output", "wallclock", c.record_wallclock);
        read_bool(o, "$.output", "dump_solutions", c.dump_solutions);
    }
    read_size(doc, "$", "jobs", c.jobs, 1, 1024);

    validate(c);
    return c;
}

RunConfig load_config(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in) { throw ConfigError(path.string() + ": cannot open"); }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

void validate(RunConfig const& c)
{
    if (c.seeds.empty()) { fail("$.seeds", "must not be empty"); }
    if (c.budget <= 0) { fail("$.budget", "must be positive"); }
    if (c.methods.empty()) { fail("$.methods", "must not be empty"); }
    if (c.optimizer.pop_size < 2) { fail("$.optimizer.pop_size", "must be at least 2"); }
    try {
        (void)make_problem(c.problem, c.dim, c.objectives);
    } catch (std::invalid_argument const& e) {
        fail("$.problem", e.what());
    }
    for (auto const& m : c.methods) {
        if (m.grouper == GrouperId::Random && c.random_groups != 0 && c.random_groups > c.dim) {
            fail("$.random.groups", "more groups than variables");
        }
    }
}

} // namespace ccmo
