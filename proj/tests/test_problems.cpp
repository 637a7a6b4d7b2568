#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "ccmo/budget.hpp"
#include "ccmo/problems.hpp"
#include "oracles.hpp"

using namespace ccmo;

namespace {

Vector random_point(Problem const& p, std::mt19937_64& gen)
{
    Vector x(p.dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = std::uniform_real_distribution<double>(p.lower()[i], p.upper()[i])(gen);
    }
    return x;
}

std::size_t dim_for(std::string const& name) { return name.rfind("WFG", 0) == 0 ? 24 : 30; }

} // namespace

TEST(Problems, Zdt1HighDimensionalBounds)
{
    auto const p = make_problem("ZDT1", 500, 2);
    EXPECT_EQ(p.dim(), 500u);
    EXPECT_EQ(p.objectives(), 2u);
    for (std::size_t i = 0; i < 500; ++i) {
        EXPECT_EQ(p.lower()[i], 0.0);
        EXPECT_EQ(p.upper()[i], 1.0);
    }
}

TEST(Problems, Dtlz2TwelveVariablesThreeObjectives)
{
    auto const p = make_problem("DTLZ2", 12, 3);
    EXPECT_EQ(p.objectives(), 3u);
    // k = D - M + 1 = 10 distance variables: moving any of x3..x12 away from
    // 0.5 changes g, moving x1 or x2 does not.
    Vector x(12, 0.5);
    auto const base = p.evaluate(x);
    double norm = 0.0;
    for (auto v : base) { norm += v * v; }
    EXPECT_NEAR(norm, 1.0, 1e-12);
    for (std::size_t i = 2; i < 12; ++i) {
        auto y = x;
        y[i] = 0.9;
        auto const f = p.evaluate(y);
        double n2 = 0.0;
        for (auto v : f) { n2 += v * v; }
        EXPECT_GT(n2, 1.0 + 1e-6) << i;
    }
}

TEST(Problems, UnknownAndExcludedNames)
{
    EXPECT_THROW(make_problem("WFG9", 500, 2), std::invalid_argument);
    EXPECT_THROW(make_problem("WFG6", 24, 2), std::invalid_argument);
    EXPECT_THROW(make_problem("WFG8", 24, 2), std::invalid_argument);
    EXPECT_THROW(make_problem("ZDT5", 30), std::invalid_argument);
    EXPECT_THROW(make_problem("nope", 10), std::invalid_argument);
    try {
        make_problem("WFG9", 500, 2);
    } catch (std::invalid_argument const& e) {
        EXPECT_NE(std::string(e.what()).find("ZDT1"), std::string::npos) << "error should list known names";
    }
}

TEST(Problems, InfeasibleShapes)
{
    EXPECT_THROW(make_problem("ZDT1", 30, 3), std::invalid_argument);
    EXPECT_THROW(make_problem("DTLZ2", 3, 3), std::invalid_argument);
    EXPECT_THROW(make_problem("WFG1", 2, 2), std::invalid_argument);
    EXPECT_THROW(make_problem("ZDT1", 0), std::invalid_argument);
}

TEST(Problems, Zdt1WorkedPoints)
{
    auto const p = make_problem("ZDT1", 30);
    Vector x(30, 0.0);
    auto f = p.evaluate(x);
    EXPECT_DOUBLE_EQ(f[0], 0.0);
    EXPECT_DOUBLE_EQ(f[1], 1.0);
    x[0] = 1.0;
    f = p.evaluate(x);
    EXPECT_DOUBLE_EQ(f[0], 1.0);
    EXPECT_DOUBLE_EQ(f[1], 0.0);
}

TEST(Problems, Dtlz2Pole)
{
    auto const p = make_problem("DTLZ2", 12, 3);
    Vector x(12, 0.5);
    x[0] = 0.0;
    x[1] = 0.0;
    auto const f = p.evaluate(x);
    EXPECT_NEAR(f[0], 1.0, 1e-15);
    EXPECT_NEAR(f[1], 0.0, 1e-15);
    EXPECT_NEAR(f[2], 0.0, 1e-15);
}

TEST(Problems, DimensionMismatchIsAnError)
{
    auto const p = make_problem("ZDT1", 10);
    Vector x(9, 0.0);
    EXPECT_THROW((void)p.evaluate(x), std::invalid_argument);
}

TEST(Problems, EvaluationChargesTheBudget)
{
    auto const p = make_problem("ZDT2", 10);
    EvaluationBudget budget(2);
    Vector x(10, 0.25);
    (void)evaluate(p, x, budget, Phase::Optimization);
    (void)evaluate(p, x, budget, Phase::Decomposition);
    EXPECT_EQ(budget.used(Phase::Optimization), 1);
    EXPECT_EQ(budget.used(Phase::Decomposition), 1);
    EXPECT_THROW((void)evaluate(p, x, budget, Phase::Optimization), BudgetExhausted);
    EXPECT_EQ(budget.used(), 2);
}

TEST(Problems, EveryProblemIsFiniteAndDeterministic)
{
    std::mt19937_64 gen(7);
    for (auto const& name : problem_names()) {
        auto const p = make_problem(name, dim_for(name));
        for (int trial = 0; trial < 50; ++trial) {
            auto const x = random_point(p, gen);
            auto const f = p.evaluate(x);
            ASSERT_EQ(f.size(), p.objectives()) << name;
            for (auto v : f) { ASSERT_TRUE(std::isfinite(v)) << name; }
            EXPECT_EQ(f, p.evaluate(x)) << name;
        }
        // Corners too.
        EXPECT_NO_THROW((void)p.evaluate(p.lower())) << name;
        EXPECT_NO_THROW((void)p.evaluate(p.upper())) << name;
    }
}

TEST(Problems, Zdt1FrontThreePoints)
{
    auto const front = make_problem("ZDT1", 30).sample_true_front(3);
    ASSERT_EQ(front.size(), 3u);
    EXPECT_EQ(front[0], (ObjectiveVector{0.0, 1.0}));
    EXPECT_NEAR(front[1][0], 0.25, 1e-15);
    EXPECT_NEAR(front[1][1], 0.5, 1e-15);
    EXPECT_EQ(front[2], (ObjectiveVector{1.0, 0.0}));
}

TEST(Problems, Zdt2FrontEndpoints)
{
    auto const front = make_problem("ZDT2", 30).sample_true_front(2);
    ASSERT_EQ(front.size(), 2u);
    EXPECT_EQ(front[0], (ObjectiveVector{0.0, 1.0}));
    EXPECT_EQ(front[1], (ObjectiveVector{1.0, 0.0}));
}

TEST(Problems, Dtlz2FrontOnUnitSphere)
{
    for (std::size_t n : {2u, 10u, 91u, 1000u}) {
        auto const front = make_problem("DTLZ2", 12, 3).sample_true_front(n);
        EXPECT_EQ(front.size(), n);
        for (auto const& f : front) {
            double norm = 0.0;
            for (auto v : f) { norm += v * v; }
            EXPECT_NEAR(std::sqrt(norm), 1.0, 1e-12);
        }
    }
}

TEST(Problems, SampledFrontsAreMutuallyNondominated)
{
    for (auto const& name : problem_names()) {
        auto const p = make_problem(name, dim_for(name));
        ASSERT_TRUE(p.has_front_sampler()) << name;
        for (std::size_t n : {2u, 50u, 1000u}) {
            auto const front = p.sample_true_front(n);
            EXPECT_EQ(front.size(), n) << name;
            EXPECT_EQ(oracle::nondominated(front).size(), front.size()) << name << " n=" << n;
        }
    }
    EXPECT_THROW((void)make_problem("ZDT1", 30).sample_true_front(1), std::invalid_argument);
}

TEST(Problems, Zdt1TailZeroLiesOnTheFront)
{
    auto const p = make_problem("ZDT1", 40);
    std::mt19937_64 gen(3);
    for (int t = 0; t < 200; ++t) {
        Vector x(40, 0.0);
        x[0] = std::uniform_real_distribution<double>(0.0, 1.0)(gen);
        auto const f = p.evaluate(x);
        EXPECT_NEAR(f[1], 1.0 - std::sqrt(f[0]), 1e-12);
    }
}

TEST(Problems, FrontPointsAreAttainable)
{
    // Invert the parameterization and evaluate the preimage.
    for (std::string name : {"ZDT1", "ZDT2", "ZDT3", "ZDT4"}) {
        auto const p = make_problem(name, 20);
        for (auto const& f : p.sample_true_front(40)) {
            Vector x(20, 0.0);
            x[0] = f[0];
            auto const g = p.evaluate(x);
            EXPECT_NEAR(g[0], f[0], 1e-12) << name;
            EXPECT_NEAR(g[1], f[1], 1e-12) << name;
        }
    }
    {
        auto const p = make_problem("DTLZ2", 12, 3);
        for (auto const& f : p.sample_true_front(60)) {
            // f = (cos a cos b, cos a sin b, sin a) with a = x1 pi/2, b = x2 pi/2
            auto const a = std::asin(std::clamp(f[2], -1.0, 1.0));
            auto const b = std::atan2(f[1], f[0]);
            Vector x(12, 0.5);
            x[0] = a / (std::numbers::pi / 2);
            x[1] = b / (std::numbers::pi / 2);
            auto const g = p.evaluate(x);
            for (int k = 0; k < 3; ++k) { EXPECT_NEAR(g[k], f[k], 1e-9); }
        }
    }
    {
        auto const p = make_problem("DTLZ1", 12, 3);
        for (auto const& f : p.sample_true_front(60)) {
            double sum = 0.0;
            for (auto v : f) { sum += v; }
            EXPECT_NEAR(sum, 0.5, 1e-12);
        }
    }
}

TEST(Problems, Wfg4OptimalDistanceGivesScaledSphere)
{
    // Distance variables at 0.35 * upper bound put WFG4 on its front:
    // sum (f_m / 2m)^2 = 1.
    auto const p = make_problem("WFG4", 24, 2);
    std::mt19937_64 gen(11);
    for (int t = 0; t < 50; ++t) {
        Vector x(24);
        for (std::size_t i = 0; i < 24; ++i) {
            x[i] = i < 2 ? std::uniform_real_distribution<double>(0.0, p.upper()[i])(gen) : 0.35 * p.upper()[i];
        }
        auto const f = p.evaluate(x);
        EXPECT_NEAR(std::pow(f[0] / 2.0, 2) + std::pow(f[1] / 4.0, 2), 1.0, 1e-9);
    }
}

TEST(Problems, DeclaredSeparability)
{
    EXPECT_EQ(make_problem("ZDT1", 10).declared_separability(), Separability::Separable);
    EXPECT_EQ(make_problem("WFG2", 24).declared_separability(), Separability::PartiallySeparable);
}
