#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "ccmo/harness.hpp"
#include "ccmo/problems.hpp"

using namespace ccmo;

namespace {

std::string slurp(std::filesystem::path const& p)
{
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines(std::string const& text)
{
    std::vector<std::string> out;
    std::stringstream s(text);
    for (std::string line; std::getline(s, line);) { out.push_back(line); }
    return out;
}

std::string config_error(std::string const& json)
{
    try {
        (void)parse_config(json);
    } catch (ConfigError const& e) {
        return e.what();
    }
    return {};
}

std::filesystem::path scratch(std::string const& name)
{
    auto const dir = std::filesystem::temp_directory_path() / ("ccmo_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST(Config, MinimalDocumentTakesDefaults)
{
    auto const c = parse_config(R"({"problem": "ZDT1", "dim": 30, "budget": 1000, "seeds": [1, 2]})");
    EXPECT_EQ(c.problem, "ZDT1");
    EXPECT_EQ(c.dim, 30u);
    EXPECT_FALSE(c.objectives.has_value());
    EXPECT_EQ(c.seeds, (std::vector<std::uint64_t>{1, 2}));
    ASSERT_EQ(c.methods.size(), 1u);
    EXPECT_EQ(c.methods[0].grouper, GrouperId::Lmm);
    EXPECT_FALSE(c.methods[0].hybrid);
    EXPECT_EQ(c.optimizer.pop_size, 50u);
    EXPECT_EQ(c.jobs, 1u);
    EXPECT_TRUE(c.record_wallclock);
}

TEST(Config, ErrorsNameTheField)
{
    auto e = config_error(R"({"problem": "ZDT1", "dim": -5, "budget": 1000, "seeds": [1]})");
    EXPECT_NE(e.find("$.dim"), std::string::npos) << e;
    e = config_error(R"({"problem": "ZDT1", "dim": 30, "budget": 1000, "seeds": [1], "grouper": "dg2"})");
    EXPECT_NE(e.find("$.grouper"), std::string::npos) << e;
    for (auto name : {"lmm", "dg", "limd", "random", "none"}) { EXPECT_NE(e.find(name), std::string::npos) << e; }
    e = config_error(R"({"problem": "ZDT1", "dim": 30, "budget": 1000, "seeds": [1], "lmm": {"gene_lenght": 3}})");
    EXPECT_NE(e.find("$.lmm.gene_lenght"), std::string::npos) << e;
    e = config_error(R"({"problem": "WFG9", "dim": 30, "budget": 1000, "seeds": [1]})");
    EXPECT_NE(e.find("$.problem"), std::string::npos) << e;
    e = config_error(R"({"problem": "ZDT1", "dim": 30, "budget": 1000, "seeds": [1], "methods": ["lmm"], "hybrid": true})");
    EXPECT_NE(e.find("$.methods"), std::string::npos) << e;
    e = config_error(R"({"problem": "ZDT1", "dim": 4, "budget": 1000, "seeds": [1], "grouper": "random", "random": {"groups": 5}})");
    EXPECT_NE(e.find("$.random.groups"), std::string::npos) << e;
    EXPECT_NE(config_error("{"), "");
}

TEST(Config, SeedLists)
{
    EXPECT_EQ(parse_seed_list("1..4"), (std::vector<std::uint64_t>{1, 2, 3, 4}));
    EXPECT_EQ(parse_seed_list("3,5,9"), (std::vector<std::uint64_t>{3, 5, 9}));
    EXPECT_EQ(parse_seed_list("7"), (std::vector<std::uint64_t>{7}));
    EXPECT_THROW(parse_seed_list("5..2"), ConfigError);
    EXPECT_THROW(parse_seed_list("x"), ConfigError);
    auto const c = parse_config(R"({"problem": "ZDT1", "dim": 10, "budget": 100, "seeds": "1..10"})");
    EXPECT_EQ(c.seeds.size(), 10u);
}

TEST(Config, MethodLabels)
{
    EXPECT_EQ(MethodSpec::parse("lmm+h"), (MethodSpec{GrouperId::Lmm, true}));
    EXPECT_EQ(MethodSpec::parse("random"), (MethodSpec{GrouperId::Random, false}));
    EXPECT_EQ((MethodSpec{GrouperId::None, true}).label(), "none+h");
    EXPECT_THROW(MethodSpec::parse("dg2"), ConfigError);
}

TEST(Matrix, RowsPerMethodAndSeed)
{
    auto config = parse_config(R"({"problem": "ZDT1", "dim": 10, "budget": 600, "seeds": "1..10",
                                    "methods": ["random", "lmm"], "optimizer": {"pop_size": 10},
                                    "output": {"wallclock": false}, "jobs": 4})");
    auto const res = run_matrix(config);
    ASSERT_EQ(res.rows.size(), 20u);
    for (std::size_t i = 0; i < 20; ++i) {
        EXPECT_EQ(res.rows[i].method.grouper, i < 10 ? GrouperId::Random : GrouperId::Lmm);
        EXPECT_EQ(res.rows[i].seed, i % 10 + 1);
        EXPECT_TRUE(res.rows[i].error.empty()) << res.rows[i].error;
        EXPECT_LE(res.rows[i].fes_decomp + res.rows[i].fes_opt, 600);
    }
    // ZDT1 is fully separable: singletons after 3 (D + 1) decomposition evaluations.
    for (std::size_t i = 10; i < 20; ++i) {
        EXPECT_TRUE(res.rows[i].fully_separable);
        EXPECT_EQ(res.rows[i].group_count, 10u);
        EXPECT_EQ(res.rows[i].fes_decomp, 33);
    }
}

TEST(Matrix, NoneMeansOneGroup)
{
    auto const config = parse_config(R"({"problem": "ZDT2", "dim": 12, "budget": 300, "seeds": [3],
                                          "grouper": "none", "optimizer": {"pop_size": 10}})");
    auto const p = make_problem("ZDT2", 12);
    EvaluationBudget budget(300);
    auto const dec = decompose(p, config, GrouperId::None, budget, 3);
    EXPECT_EQ(dec.grouping.group_count(), 1u);
    EXPECT_EQ(budget.used(), 0);
    auto const row = run_single(p, config, config.methods[0], 3);
    EXPECT_EQ(row.group_count, 1u);
    EXPECT_EQ(row.fes_decomp, 0);
}

TEST(Matrix, PairedSeedingGivesIdenticalInitialArchives)
{
    auto const config = parse_config(R"({"problem": "ZDT1", "dim": 10, "budget": 20, "seeds": [5],
                                          "methods": ["none", "random"], "optimizer": {"pop_size": 20}})");
    auto const p = make_problem("ZDT1", 10);
    auto const a = run_single(p, config, config.methods[0], 5);
    auto const b = run_single(p, config, config.methods[1], 5);
    ASSERT_EQ(a.archive.size(), b.archive.size());
    for (std::size_t i = 0; i < a.archive.size(); ++i) { EXPECT_EQ(a.archive[i].x, b.archive[i].x); }
}

TEST(Matrix, ErrorsAreRecordedNotThrown)
{
    // Budget too small for LMM's first sample.
    auto const config = parse_config(R"({"problem": "ZDT1", "dim": 10, "budget": 5, "seeds": [1],
                                          "grouper": "lmm", "optimizer": {"pop_size": 10}})");
    auto const res = run_matrix(config);
    ASSERT_EQ(res.rows.size(), 1u);
    EXPECT_LE(res.rows[0].fes_decomp + res.rows[0].fes_opt, 5);
}

TEST(Reports, CsvShapeAndRerunIdentity)
{
    auto config = parse_config(R"({"problem": "ZDT1", "dim": 8, "budget": 400, "seeds": [1, 2, 3],
                                    "methods": ["lmm", "lmm+h", "dg"], "optimizer": {"pop_size": 10},
                                    "output": {"wallclock": false}, "jobs": 3})");
    auto const d1 = scratch("reports1");
    auto const d2 = scratch("reports2");
    emit_reports(run_matrix(config), d1);
    emit_reports(run_matrix(config), d2);

    auto const runs = lines(slurp(d1 / "runs.csv"));
    ASSERT_EQ(runs.size(), 1u + 9u);
    EXPECT_EQ(runs[0], "problem,dim,objectives,grouper,hybrid,seed,fes_decomp,fes_opt,hv,igd,wallclock_ms,"
                       "archive_size,fully_separable");
    EXPECT_EQ(runs[1].rfind("ZDT1,8,2,lmm,false,1,", 0), 0u) << runs[1];
    auto const agg = lines(slurp(d1 / "aggregate.csv"));
    ASSERT_EQ(agg.size(), 4u);
    EXPECT_EQ(agg[0], "grouper,hybrid,runs,hv_mean,hv_median,hv_std,igd_mean,igd_median,igd_std");
    EXPECT_FALSE(std::filesystem::exists(d1 / "errors.csv"));

    for (auto const& entry : std::filesystem::directory_iterator(d1)) {
        auto const name = entry.path().filename();
        EXPECT_EQ(slurp(entry.path()), slurp(d2 / name)) << name;
    }
    auto const archives = read_archive_csv(d1 / "archive_lmm+h.csv");
    EXPECT_EQ(archives.size(), 3u);
}

TEST(Reports, AggregateMatchesRows)
{
    auto config = parse_config(R"({"problem": "ZDT3", "dim": 6, "budget": 300, "seeds": "1..5",
                                    "methods": ["random", "none"], "optimizer": {"pop_size": 10}})");
    auto const res = run_matrix(config);
    auto const agg = aggregate(res);
    ASSERT_EQ(agg.size(), 2u);
    for (std::size_t m = 0; m < 2; ++m) {
        std::vector<double> hv;
        std::vector<double> ig;
        for (auto const& row : res.rows) {
            if (row.method == agg[m].method) {
                hv.push_back(row.hv);
                ig.push_back(row.igd);
            }
        }
        ASSERT_EQ(hv.size(), 5u);
        double s = 0.0;
        for (auto v : hv) { s += v; }
        EXPECT_NEAR(agg[m].hv_mean, s / 5.0, 1e-12);
        double sq = 0.0;
        for (auto v : hv) { sq += (v - s / 5.0) * (v - s / 5.0); }
        EXPECT_NEAR(agg[m].hv_std, std::sqrt(sq / 4.0), 1e-12);
        std::sort(ig.begin(), ig.end());
        EXPECT_NEAR(agg[m].igd_median, ig[2], 1e-12);
    }
}

TEST(Reports, Statistics)
{
    EXPECT_EQ(mean({1, 2, 3, 6}), 3.0);
    EXPECT_EQ(median({4, 1, 3}), 3.0);
    EXPECT_EQ(median({4, 1, 3, 2}), 2.5);
    EXPECT_NEAR(sample_std({2, 4, 4, 4, 5, 5, 7, 9}), std::sqrt(32.0 / 7.0), 1e-15);
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 12345.678, -2.5}) { EXPECT_EQ(std::stod(format_number(v)), v); }
}

TEST(Reports, StderrColumnAboveThreeObjectives)
{
    auto config = parse_config(R"({"problem": "DTLZ2", "dim": 8, "objectives": 4, "budget": 200, "seeds": [1],
                                    "grouper": "none", "optimizer": {"pop_size": 10},
                                    "indicators": {"mc_samples": 2000}})");
    auto const res = run_matrix(config);
    EXPECT_FALSE(res.hv_exact);
    auto const csv = lines(runs_csv(res));
    EXPECT_NE(csv[0].find(",hv_stderr"), std::string::npos);
}

TEST(Reports, ArchiveCsvRoundTrip)
{
    auto const dir = scratch("archive");
    {
        std::ofstream out(dir / "plain.csv");
        out << "f1,f2\n0.5,1\n1,0.25\n";
    }
    auto const plain = read_archive_csv(dir / "plain.csv");
    ASSERT_EQ(plain.size(), 1u);
    EXPECT_EQ(plain[0].second, (Front{{0.5, 1}, {1, 0.25}}));

    auto config = parse_config(R"({"problem": "ZDT1", "dim": 6, "budget": 200, "seeds": [4, 9],
                                    "grouper": "none", "optimizer": {"pop_size": 10}})");
    auto const res = run_matrix(config);
    {
        std::ofstream out(dir / "arch.csv");
        out << archive_csv(res, config.methods[0]);
    }
    auto const back = read_archive_csv(dir / "arch.csv");
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back[0].first, 4u);
    Front f;
    for (auto const& e : res.rows[0].archive) { f.push_back(e.f); }
    EXPECT_EQ(back[0].second, f);
}
