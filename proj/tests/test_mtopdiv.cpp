#include <gtest/gtest.h>

#include <cmath>

#include "mtopdiv/errors.hpp"
#include "mtopdiv/mtopdiv.hpp"
#include "mtopdiv/parallel.hpp"
#include "mtopdiv/synth.hpp"
#include "test_support.hpp"

namespace mtd {
namespace {

using testing::random_cloud;

MTopDivConfig small_config(std::size_t b_p, std::size_t b_q, std::size_t runs, std::uint64_t seed = 1) {
    MTopDivConfig cfg;
    cfg.b_p = b_p;
    cfg.b_q = b_q;
    cfg.n_runs = runs;
    cfg.seed = seed;
    return cfg;
}

TEST(SummarizeTest, MeanAndStandardError) {
    const auto r = summarize("PQ", {1.0, 2.0, 3.0, 6.0});
    EXPECT_EQ(r.mean, 3.0);
    // Sample variance 14/3, divided by 4 runs.
    EXPECT_NEAR(r.std_error, std::sqrt(14.0 / 3.0) / 2.0, 1e-15);
    EXPECT_EQ(summarize("PQ", {5.0}).std_error, 0.0);
}

TEST(MTopDivTest, IdenticalFullCloudsScoreZero) {
    Rng rng(1);
    const auto x = random_cloud(rng, 30, 3);
    const auto r = mtop_div(x, x, small_config(30, 30, 1));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].mean, 0.0);
}

TEST(MTopDivTest, MembraneFixture) {
    const PointCloud p{{1.5, 1.0}, {2.5, 1.0}};
    const PointCloud q{{0.0, 0.0}, {4.0, 0.0}};
    const auto r = mtop_div(p, q, small_config(2, 2, 1));
    EXPECT_NEAR(r[0].mean, std::sqrt(7.25) - std::sqrt(3.25), 1e-12);
}

TEST(MTopDivTest, DeterministicAndIndependentOfThreadCount) {
    Rng rng(2);
    const auto x = random_cloud(rng, 80, 2);
    const auto y = random_cloud(rng, 120, 2);
    auto cfg = small_config(20, 60, 6, 99);
    set_thread_count(1);
    const auto serial = mtop_div(x, y, cfg);
    set_thread_count(4);
    const auto parallel = mtop_div(x, y, cfg);
    set_thread_count(1);
    EXPECT_EQ(serial[0].per_run, parallel[0].per_run);
    EXPECT_EQ(mtop_div(x, y, cfg)[0].per_run, serial[0].per_run);
    cfg.seed = 100;
    EXPECT_NE(mtop_div(x, y, cfg)[0].per_run, serial[0].per_run);
}

TEST(MTopDivTest, DirectionsSwapTheClouds) {
    Rng rng(3);
    const auto x = random_cloud(rng, 40, 2);
    const auto y = random_cloud(rng, 40, 2);
    auto cfg = small_config(15, 30, 3, 5);
    cfg.direction = Direction::both;
    const auto both = mtop_div(x, y, cfg);
    ASSERT_EQ(both.size(), 2u);
    EXPECT_EQ(both[0].direction, "PQ");
    EXPECT_EQ(both[1].direction, "QP");
    cfg.direction = Direction::pq;
    EXPECT_EQ(mtop_div(y, x, cfg)[0].per_run, both[1].per_run);
    cfg.direction = Direction::qp;
    EXPECT_EQ(mtop_div(x, y, cfg)[0].per_run, both[1].per_run);
}

TEST(MTopDivTest, PreconditionErrors) {
    Rng rng(4);
    const auto x = random_cloud(rng, 10, 2);
    EXPECT_THROW(mtop_div(x, x, small_config(11, 5, 1)), InvalidInput);
    EXPECT_THROW(mtop_div(x, x, small_config(5, 11, 1)), InvalidInput);
    EXPECT_THROW(mtop_div(x, x, small_config(0, 5, 1)), InvalidInput);
    EXPECT_THROW(mtop_div(x, x, small_config(5, 5, 0)), InvalidInput);
    EXPECT_THROW(mtop_div(x, random_cloud(rng, 10, 3), small_config(5, 5, 1)), InvalidInput);
    auto cfg = small_config(5, 0, 1);
    cfg.hom_dim = 0;  // Q empty keeps the essential class
    EXPECT_THROW(mtop_div(x, x, cfg), InvalidInput);
    EXPECT_THROW(parse_direction("sideways"), InvalidInput);
}

TEST(MTopDivTest, TranslatingBothCloudsLeavesScoresUnchanged) {
    Rng rng(5);
    const auto x = random_cloud(rng, 50, 2);
    const auto y = random_cloud(rng, 50, 2);
    const auto cfg = small_config(20, 40, 4, 8);
    const std::vector<double> shift{0.25, -0.5};
    const auto base = mtop_div(x, y, cfg)[0].per_run;
    const auto moved = mtop_div(translate(x, shift), translate(y, shift), cfg)[0].per_run;
    ASSERT_EQ(base.size(), moved.size());
    for (std::size_t i = 0; i < base.size(); ++i) EXPECT_NEAR(base[i], moved[i], 1e-9);
    EXPECT_NE(mtop_div(translate(x, shift), y, cfg)[0].per_run, base);
}

TEST(RltTest, Examples) {
    const auto empty = rlt({}, 1.0);
    EXPECT_EQ(empty.at(0), 1.0);
    EXPECT_EQ(emd_to_empty(empty), 0.0);

    const auto pair = rlt({{0.0, 1.0}, {0.0, 1.0}}, 2.0);
    EXPECT_EQ(pair.at(2), 0.5);
    EXPECT_EQ(pair.at(0), 0.5);
    EXPECT_EQ(pair.at(1), 0.0);
    EXPECT_EQ(emd_to_empty(pair), 1.0);

    const auto staggered = rlt({{0.0, 1.0}, {0.5, 2.0}}, 2.0);
    EXPECT_EQ(staggered.at(2), 0.25);
    EXPECT_EQ(staggered.at(1), 0.75);
    EXPECT_EQ(staggered.at(0), 0.0);
}

TEST(RltTest, Errors) {
    EXPECT_THROW(rlt({{0.0, 3.0}}, 2.0), InvalidInput);
    EXPECT_THROW(rlt({{0.0, kInfinity}}, 2.0), InvalidInput);
    EXPECT_THROW(rlt({}, 0.0), InvalidInput);
}

TEST(RltTest, EmdIdentityOnRandomBarcodes) {
    Rng rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Interval> intervals;
        const std::size_t m = rng.uniform_index(25);
        for (std::size_t i = 0; i < m; ++i) {
            const double b = std::round(rng.uniform() * 16.0) / 8.0;  // shared endpoints are common
            intervals.push_back({b, b + 0.125 + rng.uniform(), 1, false});
        }
        const auto h = rlt(intervals);
        double total = 0.0;
        for (const auto& [k, mass] : h.mass) {
            EXPECT_GE(mass, 0.0);
            total += mass;
        }
        EXPECT_NEAR(total, 1.0, 1e-12);
        const double sum = barcode_stat(intervals, {StatKind::sum}).value;
        EXPECT_NEAR(h.alpha_max * emd_to_empty(h), sum, 1e-9 * std::max(1.0, sum));
        // A larger alpha_max only adds mass at zero.
        const auto wide = rlt(intervals, 2.0 * h.alpha_max);
        EXPECT_NEAR(wide.alpha_max * emd_to_empty(wide), sum, 1e-9 * std::max(1.0, sum));
    }
}

TEST(RltTest, EmdIdentityOnCrossBarcodes) {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = random_cloud(rng, 10 + rng.uniform_index(20), 2);
        const auto q = random_cloud(rng, 10 + rng.uniform_index(20), 2);
        const auto b = cross_barcode(p, q, 1);
        for (std::size_t k = 0; k <= 1; ++k) {
            const auto h = rlt(b[k]);
            const double sum = barcode_stat(b[k], {StatKind::sum}).value;
            EXPECT_NEAR(h.alpha_max * emd_to_empty(h), sum, 1e-9 * std::max(1.0, sum));
        }
    }
}

}  // namespace
}  // namespace mtd
