#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ccmo/indicators.hpp"
#include "oracles.hpp"

using namespace ccmo;

TEST(Hypervolume, SingleBox)
{
    Front a{{1, 1}};
    EXPECT_DOUBLE_EQ(hypervolume(a, {2, 2}).value, 1.0);
}

TEST(Hypervolume, TwoOverlappingBoxes)
{
    Front a{{1, 2}, {2, 1}};
    EXPECT_EQ(hypervolume(a, {3, 3}).value, 3.0);
}

TEST(Hypervolume, DominatedPointAddsNothing)
{
    Front a{{1, 1}, {1.5, 1.5}};
    EXPECT_DOUBLE_EQ(hypervolume(a, {2, 2}).value, 1.0);
}

TEST(Hypervolume, PointsOutsideTheReferenceBoxAreDropped)
{
    Front a{{3, 0}, {2, 2}};
    EXPECT_EQ(hypervolume(a, {2, 2}).value, 0.0);
    EXPECT_EQ(hypervolume(Front{}, {2, 2}).value, 0.0);
    Front bad{{1, 1, 1}};
    EXPECT_THROW(hypervolume(bad, {2, 2}), std::invalid_argument);
}

TEST(Hypervolume, ThreeObjectiveBoxes)
{
    Front a{{0, 0, 0}};
    EXPECT_DOUBLE_EQ(hypervolume(a, {1, 2, 3}).value, 6.0);
    // Boxes of volume 4 and 2 sharing a unit cube.
    Front b{{0, 0, 1}, {1, 1, 0}};
    EXPECT_DOUBLE_EQ(hypervolume(b, {2, 2, 2}).value, 5.0);
}

TEST(Hypervolume, MatchesMonteCarloOracle)
{
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::size_t m : {2u, 3u}) {
        for (int instance = 0; instance < 10; ++instance) {
            Front a(1 + instance * 3, ObjectiveVector(m));
            for (auto& p : a) {
                for (auto& v : p) { v = u(gen); }
            }
            ObjectiveVector r(m, 1.1);
            auto const exact = hypervolume(a, r).value;
            auto const mc = oracle::mc_hypervolume(a, r, ObjectiveVector(m, 0.0), 200000, 100 + instance);
            EXPECT_NEAR(exact, mc.value, 4.0 * mc.stderr_ + 1e-12);
        }
    }
}

TEST(Hypervolume, Monotonicity)
{
    std::mt19937_64 gen(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        auto const m = 2 + trial % 2;
        Front a(8, ObjectiveVector(m));
        for (auto& p : a) {
            for (auto& v : p) { v = u(gen); }
        }
        ObjectiveVector r(m, 1.5);
        auto const base = hypervolume(a, r).value;
        auto worse = a;
        ObjectiveVector w = a[0];
        for (auto& v : w) { v += 0.1; }
        worse.push_back(w);
        EXPECT_NEAR(hypervolume(worse, r).value, base, 1e-12);
        auto better = a;
        ObjectiveVector b = a[0];
        for (auto& v : b) { v -= 0.05; }
        better.push_back(b);
        EXPECT_GE(hypervolume(better, r).value, base - 1e-12);
    }
}

TEST(Hypervolume, ScalesWithThePowerOfM)
{
    std::mt19937_64 gen(13);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::size_t m : {2u, 3u}) {
        Front a(12, ObjectiveVector(m));
        for (auto& p : a) {
            for (auto& v : p) { v = u(gen); }
        }
        ObjectiveVector r(m, 1.2);
        auto const c = 2.5;
        auto scaled = a;
        for (auto& p : scaled) {
            for (auto& v : p) { v *= c; }
        }
        auto rs = r;
        for (auto& v : rs) { v *= c; }
        EXPECT_NEAR(hypervolume(scaled, rs).value, std::pow(c, static_cast<double>(m)) * hypervolume(a, r).value,
                    1e-12);
    }
}

TEST(Hypervolume, MonteCarloAboveThreeObjectives)
{
    Front a{{0.5, 0.5, 0.5, 0.5}};
    HypervolumeOptions opt;
    opt.mc_samples = 20000;
    auto const hv = hypervolume(a, {1, 1, 1, 1}, opt);
    EXPECT_FALSE(hv.exact);
    EXPECT_EQ(hv.samples, 20000u);
    EXPECT_EQ(hv.seed, opt.mc_seed);
    // A single point fills its whole box.
    EXPECT_DOUBLE_EQ(hv.value, 0.0625);
    EXPECT_EQ(hv.stderr_, 0.0);
    Front b{{0.2, 0.6, 0.5, 0.5}, {0.6, 0.2, 0.5, 0.5}};
    auto const hb = hypervolume(b, {1, 1, 1, 1}, opt);
    // Exact: 0.25 * (0.8*0.4 + 0.4*0.8 - 0.4*0.4)
    EXPECT_NEAR(hb.value, 0.25 * 0.48, 4.0 * hb.stderr_);
}

TEST(Igd, Examples)
{
    Front r{{0, 0}, {1, 1}};
    EXPECT_EQ(igd(r, r), 0.0);
    Front a{{0, 0}};
    EXPECT_NEAR(igd(a, r), std::sqrt(2.0) / 2.0, 1e-12);
    Front b{{0, 1}, {1, 0}};
    Front c{{0.5, 0.5}};
    EXPECT_NEAR(igd(b, c), std::sqrt(0.5), 1e-12);
    EXPECT_THROW(igd(Front{}, r), std::invalid_argument);
    EXPECT_THROW(igd(r, Front{}), std::invalid_argument);
}

TEST(Igd, PermutationAndScale)
{
    std::mt19937_64 gen(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Front a(20, ObjectiveVector(3));
    Front r(30, ObjectiveVector(3));
    for (auto* set : {&a, &r}) {
        for (auto& p : *set) {
            for (auto& v : p) { v = u(gen); }
        }
    }
    auto const base = igd(a, r);
    EXPECT_EQ(igd(r, r), 0.0);
    auto ap = a;
    auto rp = r;
    std::shuffle(ap.begin(), ap.end(), gen);
    std::shuffle(rp.begin(), rp.end(), gen);
    EXPECT_NEAR(igd(ap, rp), base, 1e-12);
    for (auto* set : {&ap, &rp}) {
        for (auto& p : *set) {
            for (auto& v : p) { v *= 3.0; }
        }
    }
    EXPECT_NEAR(igd(ap, rp), 3.0 * base, 1e-12);
}

TEST(ReferencePoint, Examples)
{
    std::vector<Front> sets{{{1, 1}}, {{2, 0.5}}};
    auto r = default_reference_point(sets);
    EXPECT_NEAR(r[0], 2.2, 1e-15);
    EXPECT_NEAR(r[1], 1.1, 1e-15);
    std::vector<Front> zero{{{0, 0}}};
    EXPECT_EQ(default_reference_point(zero), (ObjectiveVector{0.1, 0.1}));
    std::vector<Front> one{{{1, 2}, {3, 1}}};
    r = default_reference_point(one);
    EXPECT_NEAR(r[0], 3.3, 1e-15);
    EXPECT_NEAR(r[1], 2.2, 1e-15);
    std::vector<Front> empty{{}, {}};
    EXPECT_THROW(default_reference_point(empty), std::invalid_argument);
}

TEST(Indicators, Combined)
{
    Front a{{1, 2}, {2, 1}};
    auto const res = compute_indicators(a, {3, 3}, a);
    EXPECT_EQ(res.hv, 3.0);
    EXPECT_EQ(res.igd, 0.0);
    EXPECT_EQ(res.reference_set_size, 2u);
}
