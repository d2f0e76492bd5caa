#include <gtest/gtest.h>

#include <cmath>

#include "mtopdiv/errors.hpp"
#include "mtopdiv/persistence.hpp"
#include "mtopdiv/synth.hpp"

namespace mtd {
namespace {

GeneratorSpec ring_spec(std::size_t n, std::uint64_t seed) {
    GeneratorSpec s;
    s.kind = GeneratorKind::ring;
    s.n = n;
    s.center = {1.0, -2.0};
    s.radius = 3.0;
    s.seed = seed;
    return s;
}

TEST(SynthTest, RingPointsLieOnTheCircle) {
    const auto cloud = generate(ring_spec(500, 1));
    ASSERT_EQ(cloud.size(), 500u);
    ASSERT_EQ(cloud.dim(), 2u);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto r = cloud.row(i);
        EXPECT_NEAR(std::hypot(r[0] - 1.0, r[1] + 2.0), 3.0, 1e-12);
    }
}

TEST(SynthTest, DiskPointsAreInsideAndSpreadEvenly) {
    auto spec = ring_spec(4000, 2);
    spec.kind = GeneratorKind::disk;
    const auto cloud = generate(spec);
    std::size_t inner = 0;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto r = cloud.row(i);
        const double rho = std::hypot(r[0] - 1.0, r[1] + 2.0);
        EXPECT_LE(rho, 3.0);
        if (rho < 3.0 / std::sqrt(2.0)) ++inner;
    }
    // Half the area lies inside radius R / sqrt(2).
    EXPECT_NEAR(static_cast<double>(inner) / 4000.0, 0.5, 0.04);
}

TEST(SynthTest, SameSeedSameCloud) {
    EXPECT_EQ(generate(ring_spec(50, 7)), generate(ring_spec(50, 7)));
    EXPECT_NE(generate(ring_spec(50, 7)), generate(ring_spec(50, 8)));
    const auto a = generate(five_mode_layout(100, 3));
    const auto b = generate(five_mode_layout(100, 3));
    EXPECT_EQ(a, b);
}

TEST(SynthTest, MixtureSkipsZeroWeightModes) {
    auto spec = five_mode_layout(2000, 4);
    spec.weights = {0.5, 0.5, 0.0, 0.0, 0.0};
    const auto cloud = generate(spec);
    std::vector<std::size_t> counts(5, 0);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto r = cloud.row(i);
        std::size_t best = 0;
        double best_d = kInfinity;
        for (std::size_t c = 0; c < 5; ++c) {
            const double d = std::hypot(r[0] - spec.centers[c][0], r[1] - spec.centers[c][1]);
            if (d < best_d) {
                best_d = d;
                best = c;
            }
        }
        ++counts[best];
        EXPECT_LT(best_d, 0.5);
    }
    EXPECT_EQ(counts[2] + counts[3] + counts[4], 0u);
    EXPECT_NEAR(static_cast<double>(counts[0]) / 2000.0, 0.5, 0.05);
}

TEST(SynthTest, MixtureSampleMomentsMatchSigma) {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::gaussian_mixture;
    spec.n = 20000;
    spec.centers = {{0.0, 0.0, 0.0}};
    spec.sigma = 0.5;
    spec.seed = 5;
    const auto cloud = generate(spec);
    ASSERT_EQ(cloud.dim(), 3u);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double x : cloud.coords()) {
        sum += x;
        sum_sq += x * x;
    }
    const double m = static_cast<double>(cloud.coords().size());
    EXPECT_NEAR(sum / m, 0.0, 0.01);
    EXPECT_NEAR(std::sqrt(sum_sq / m), 0.5, 0.01);
}

TEST(SynthTest, InvalidSpecsThrow) {
    auto ring = ring_spec(10, 0);
    ring.radius = -1.0;
    EXPECT_THROW(generate(ring), InvalidInput);
    ring.radius = 1.0;
    ring.center = {0.0, 0.0, 0.0};
    EXPECT_THROW(generate(ring), InvalidInput);

    auto mix = five_mode_layout(10, 0);
    mix.weights = {0.5, 0.5, 0.5, 0.0, 0.0};
    EXPECT_THROW(generate(mix), InvalidInput);
    mix.weights = {1.0, 0.0};
    EXPECT_THROW(generate(mix), InvalidInput);
    mix.weights = {};
    mix.sigma = -0.1;
    EXPECT_THROW(generate(mix), InvalidInput);
    mix.sigma = 0.1;
    mix.centers = {};
    EXPECT_THROW(generate(mix), InvalidInput);
}

TEST(SynthTest, IsometricEmbeddingPreservesDistances) {
    const auto cloud = generate(ring_spec(40, 6));
    const auto embedded = isometric_embedding(cloud, 64, 9);
    ASSERT_EQ(embedded.dim(), 64u);
    const auto a = pairwise_distances(cloud);
    const auto b = pairwise_distances(embedded);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) EXPECT_NEAR(a(i, j), b(i, j), 1e-12);
    }
    EXPECT_THROW(isometric_embedding(cloud, 1, 0), InvalidInput);
}

}  // namespace
}  // namespace mtd
