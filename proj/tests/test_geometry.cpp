#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "mtopdiv/errors.hpp"
#include "mtopdiv/geometry.hpp"
#include "mtopdiv/parallel.hpp"
#include "test_support.hpp"

namespace mtd {
namespace {

using testing::random_cloud;

TEST(PointCloudTest, RejectsNonFiniteCoordinates) {
    EXPECT_THROW(PointCloud(1, 2, {0.0, std::nan("")}), InvalidInput);
    EXPECT_THROW(PointCloud(1, 2, {0.0, INFINITY}), InvalidInput);
    EXPECT_THROW(PointCloud(2, 2, {0.0, 1.0, 2.0}), InvalidInput);
    EXPECT_THROW(PointCloud(0, 0, {}), InvalidInput);
}

TEST(PairwiseDistancesTest, SinglePoint) {
    const auto m = pairwise_distances(PointCloud{{0.0, 0.0}});
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m(0, 0), 0.0);
}

TEST(PairwiseDistancesTest, ThreeFourFive) {
    const auto m = pairwise_distances(PointCloud{{0.0, 0.0}, {3.0, 4.0}});
    EXPECT_EQ(m(0, 1), 5.0);
    EXPECT_EQ(m(1, 0), 5.0);
    EXPECT_EQ(m(0, 0), 0.0);
}

TEST(PairwiseDistancesTest, RightIsoscelesMatchesScalarLoop) {
    const PointCloud cloud{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
    const auto m = pairwise_distances(cloud);
    EXPECT_EQ(m(0, 1), 1.0);
    EXPECT_EQ(m(0, 2), 1.0);
    EXPECT_EQ(m(1, 2), std::sqrt(2.0));
    EXPECT_EQ(m, reference::pairwise_distances(cloud));
}

TEST(PairwiseDistancesTest, EmptyCloudIsRejected) {
    EXPECT_THROW(pairwise_distances(PointCloud(2)), InvalidInput);
}

TEST(PairwiseDistancesTest, ParallelKernelIsBitwiseEqualToReference) {
    Rng rng(2024);
    for (std::size_t dim : {1u, 3u, 17u, 128u}) {
        const auto cloud = random_cloud(rng, 57, dim);
        const auto reference_matrix = reference::pairwise_distances(cloud);
        for (std::size_t threads : {1u, 2u, 4u}) {
            set_thread_count(threads);
            EXPECT_EQ(pairwise_distances(cloud), reference_matrix) << "dim " << dim << " threads " << threads;
        }
    }
    set_thread_count(1);
}

TEST(PairwiseDistancesTest, SymmetricWithZeroDiagonal) {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto cloud = random_cloud(rng, 1 + rng.uniform_index(30), 1 + rng.uniform_index(6));
        const auto m = pairwise_distances(cloud);
        for (std::size_t i = 0; i < m.size(); ++i) {
            EXPECT_EQ(m(i, i), 0.0);
            for (std::size_t j = 0; j < m.size(); ++j) EXPECT_EQ(m(i, j), m(j, i));
        }
    }
}

TEST(CrossDistancesTest, Examples) {
    const auto single = cross_distances(PointCloud{{0.0, 0.0}}, PointCloud{{0.0, 1.0}});
    EXPECT_EQ(single(0, 0), 1.0);

    const auto two = cross_distances(PointCloud{{0.0, 0.0}, {1.0, 0.0}}, PointCloud{{0.0, 1.0}});
    ASSERT_EQ(two.rows(), 2u);
    ASSERT_EQ(two.cols(), 1u);
    EXPECT_EQ(two(0, 0), 1.0);
    EXPECT_EQ(two(1, 0), std::sqrt(2.0));

    Rng rng(3);
    const auto p = random_cloud(rng, 12, 4);
    const auto self = cross_distances(p, p);
    for (std::size_t i = 0; i < p.size(); ++i) EXPECT_EQ(self(i, i), 0.0);
}

TEST(CrossDistancesTest, DimensionMismatch) {
    EXPECT_THROW(cross_distances(PointCloud{{0.0, 0.0}}, PointCloud{{0.0, 0.0, 0.0}}), InvalidInput);
}

TEST(CrossDistancesTest, ParallelKernelMatchesReference) {
    Rng rng(8);
    const auto p = random_cloud(rng, 40, 33);
    const auto q = random_cloud(rng, 71, 33);
    EXPECT_EQ(cross_distances(p, q), reference::cross_distances(p, q));
}

TEST(HausdorffTest, Examples) {
    const PointCloud p{{0.0, 0.0}, {2.0, 1.0}};
    EXPECT_EQ(hausdorff_distance(p, p), 0.0);
    EXPECT_EQ(hausdorff_distance(PointCloud{{0.0, 0.0}}, PointCloud{{3.0, 0.0}, {3.0, 4.0}}), 5.0);
    EXPECT_EQ(hausdorff_distance(PointCloud{{0.0, 0.0}, {10.0, 0.0}}, PointCloud{{0.0, 0.0}}), 10.0);
}

TEST(HausdorffTest, EmptyCloudIsRejected) {
    EXPECT_THROW(hausdorff_distance(PointCloud(2), PointCloud{{0.0, 0.0}}), InvalidInput);
}

TEST(HausdorffTest, SymmetricAndZeroOnlyForEqualSets) {
    Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = random_cloud(rng, 1 + rng.uniform_index(15), 3);
        const auto q = random_cloud(rng, 1 + rng.uniform_index(15), 3);
        EXPECT_EQ(hausdorff_distance(p, q), hausdorff_distance(q, p));
        EXPECT_GT(hausdorff_distance(p, q), 0.0);
        // Same set, different order and multiplicity.
        Rng shuffle(trial);
        const auto permuted = subsample(p, p.size(), shuffle);
        EXPECT_EQ(hausdorff_distance(p, concat(permuted, permuted)), 0.0);
    }
}

TEST(ReflectTest, Examples) {
    EXPECT_EQ(reflect(PointCloud{{1.0, 2.0}}, 1), (PointCloud{{1.0, -2.0}}));
    Rng rng(4);
    const auto x = random_cloud(rng, 20, 3);
    EXPECT_EQ(reflect(reflect(x, 2), 2), x);
    const PointCloud symmetric{{1.0, 1.0}, {1.0, -1.0}, {0.0, 0.0}};
    const auto mirrored = reflect(symmetric, 1);
    EXPECT_EQ(hausdorff_distance(symmetric, mirrored), 0.0);
    EXPECT_THROW(reflect(x, 3), InvalidInput);
}

TEST(ReflectTest, IsAnIsometry) {
    Rng rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = random_cloud(rng, 2 + rng.uniform_index(20), 4);
        const auto a = pairwise_distances(x);
        const auto b = pairwise_distances(reflect(x, rng.uniform_index(4)));
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < a.size(); ++j) EXPECT_NEAR(a(i, j), b(i, j), 1e-12);
        }
    }
}

TEST(SubsampleTest, FullSizeIsAPermutation) {
    Rng data(1);
    const auto x = random_cloud(data, 25, 2);
    Rng rng(99);
    const auto s = subsample(x, x.size(), rng);
    ASSERT_EQ(s.size(), x.size());
    std::vector<std::vector<double>> a, b;
    for (std::size_t i = 0; i < x.size(); ++i) {
        a.emplace_back(x.row(i).begin(), x.row(i).end());
        b.emplace_back(s.row(i).begin(), s.row(i).end());
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
}

TEST(SubsampleTest, SingleRowComesFromInput) {
    Rng data(2);
    const auto x = random_cloud(data, 10, 3);
    Rng rng(5);
    const auto s = subsample(x, 1, rng);
    ASSERT_EQ(s.size(), 1u);
    bool found = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        found |= std::equal(x.row(i).begin(), x.row(i).end(), s.row(0).begin());
    }
    EXPECT_TRUE(found);
}

TEST(SubsampleTest, DeterministicAndDistinct) {
    Rng data(3);
    const auto x = random_cloud(data, 200, 2);
    Rng a(77), b(77);
    const auto s1 = subsample(x, 50, a);
    const auto s2 = subsample(x, 50, b);
    EXPECT_EQ(s1, s2);
    // Without replacement: no repeated rows in a sample of distinct points.
    const auto m = pairwise_distances(s1);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) EXPECT_GT(m(i, j), 0.0);
    }
}

TEST(SubsampleTest, OversizedRequestIsRejected) {
    Rng rng(1);
    EXPECT_THROW(subsample(PointCloud{{0.0}}, 2, rng), InvalidInput);
}

}  // namespace
}  // namespace mtd
