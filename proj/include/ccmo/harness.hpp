#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ccmo/cc.hpp"
#include "ccmo/grouping.hpp"
#include "ccmo/indicators.hpp"
#include "ccmo/types.hpp"

namespace ccmo {

class Problem;

enum class GrouperId { Lmm, Dg, Limd, Random, None };

std::string_view to_string(GrouperId id) noexcept;
/// Throws ConfigError listing the valid ids.
GrouperId parse_grouper(std::string_view text, std::string const& path = "grouper");
std::vector<std::string> const& grouper_names();

struct MethodSpec {
    GrouperId grouper = GrouperId::Lmm;
    bool hybrid = false;

    /// "lmm", "lmm+h", "random", "none+h", ...
    [[nodiscard]] std::string label() const;
    static MethodSpec parse(std::string_view text);
    friend bool operator==(MethodSpec const&, MethodSpec const&) = default;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string problem;
    std::size_t dim = 0;
    std::optional<std::size_t> objectives;
    std::int64_t budget = 0;
    std::vector<std::uint64_t> seeds;
    std::vector<MethodSpec> methods; // at least one

    LmmParams lmm;
    std::size_t random_groups = 0; // 0 means min(10, D)
    bool random_dynamic = false;
    double dg_epsilon = 0.01;
    std::size_t limd_samples = 2;
    double step_fraction = default_step_fraction;

    CcParams optimizer;

    std::size_t reference_set_size = 1000;
    HypervolumeOptions hv;

    std::filesystem::path out_dir = "out";
    bool record_wallclock = true;
    bool dump_solutions = false;
    std::size_t jobs = 1;
};

/// Parses and validates a JSON document. Missing optional keys take their
/// defaults; unknown keys, bad types and out-of-range values raise
/// ConfigError naming the offending path, e.g. "$.lmm.gene_length".
RunConfig parse_config(std::string_view json_text);
RunConfig load_config(std::filesystem::path const& path);

/// Checks the cross-field constraints (problem exists, dim feasible, ...).
void validate(RunConfig const& config);

/// "1..10", "3,5,9" or a single number.
std::vector<std::uint64_t> parse_seed_list(std::string_view text);

struct RunRow {
    MethodSpec method;
    std::uint64_t seed = 0;
    std::int64_t fes_decomp = 0;
    std::int64_t fes_opt = 0;
    double hv = 0.0;
    double hv_stderr = 0.0;
    double igd = 0.0;
    std::int64_t wallclock_ms = 0;
    std::size_t archive_size = 0;
    bool fully_separable = false;
    std::size_t group_count = 0;
    std::string error; // empty on success
    std::vector<ArchiveEntry> archive;
};

/// Decomposition for one method and seed. The grouper draws from its own
/// stream so that the optimizer's generator is identical across methods.
DecompositionResult decompose(Problem const& problem, RunConfig const& config, GrouperId grouper,
                              EvaluationBudget& budget, std::uint64_t seed);

/// One (method, seed) cell without indicators.
RunRow run_single(Problem const& problem, RunConfig const& config, MethodSpec const& method, std::uint64_t seed);

struct MatrixResult {
    std::string problem;
    std::size_t dim = 0;
    std::size_t objectives = 0;
    ObjectiveVector reference_point;
    std::size_t reference_set_size = 0;
    bool hv_exact = true;
    std::vector<RunRow> rows; // ordered by method, then seed
};

/// Every method over every seed, up to config.jobs cells at a time. HV uses
/// one reference point built from all archives, IGD one sampled true front.
/// A failing cell is recorded in its row and the matrix carries on.
MatrixResult run_matrix(RunConfig const& config);

struct Aggregate {
    MethodSpec method;
    std::size_t runs = 0;
    double hv_mean = 0.0, hv_median = 0.0, hv_std = 0.0;
    double igd_mean = 0.0, igd_median = 0.0, igd_std = 0.0;
};

/// Per method over its successful rows; std is the sample deviation.
std::vector<Aggregate> aggregate(MatrixResult const& result);

double mean(std::vector<double> const& v);
double median(std::vector<double> v);
double sample_std(std::vector<double> const& v);

/// Shortest text that reads back to the same double.
std::string format_number(double v);

/// Writes runs.csv, aggregate.csv and archive_<method>.csv (plus
/// solutions_<method>.json when asked) into `dir`.
void emit_reports(MatrixResult const& result, std::filesystem::path const& dir, bool dump_solutions = false);

std::string runs_csv(MatrixResult const& result);
std::string aggregate_csv(MatrixResult const& result);
std::string archive_csv(MatrixResult const& result, MethodSpec const& method);

/// {"problem", "dim", "groups", "fes", "fully_separable"}
std::string grouping_json(std::string const& problem, DecompositionResult const& result);

/// Rows of "f1,...,fM", optionally with a leading "seed" column; returns one
/// front per seed (a single front keyed 0 when there is no seed column).
std::vector<std::pair<std::uint64_t, Front>> read_archive_csv(std::filesystem::path const& path);

} // namespace ccmo
