#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "mtopdiv/errors.hpp"
#include "mtopdiv/filtration.hpp"
#include "mtopdiv/quotient.hpp"
#include "test_support.hpp"

namespace mtd {
namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

TEST(VrFiltrationTest, TwoPoints) {
    const auto f = vr_filtration(pairwise_distances(PointCloud{{0.0}, {1.0}}), 1);
    ASSERT_EQ(f.simplices.size(), 3u);
    EXPECT_EQ(f.simplices[0], (Simplex{{0}, 0.0}));
    EXPECT_EQ(f.simplices[1], (Simplex{{1}, 0.0}));
    EXPECT_EQ(f.simplices[2], (Simplex{{0, 1}, 1.0}));
}

TEST(VrFiltrationTest, EquilateralTriangle) {
    const DistanceMatrix w(3, {0, 1, 1, 1, 0, 1, 1, 1, 0});
    const auto f = vr_filtration(w, 2);
    ASSERT_EQ(f.simplices.size(), 7u);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(f.simplices[i].value, 0.0);
    for (int i = 3; i < 7; ++i) EXPECT_EQ(f.simplices[i].value, 1.0);
    EXPECT_EQ(f.simplices[6].vertices, (std::vector<Vertex>{0, 1, 2}));
}

TEST(VrFiltrationTest, QuotientFixtureTriangleValue) {
    const auto qm = quotient_of(PointCloud{{1.5, 1.0}, {2.5, 1.0}}, PointCloud{{0.0, 0.0}, {4.0, 0.0}});
    const auto f = vr_filtration(qm.matrix, 2);
    // p1 = 0, p2 = 1, q1 = 2.
    const auto it = std::find_if(f.simplices.begin(), f.simplices.end(),
                                 [](const Simplex& s) { return s.vertices == std::vector<Vertex>{0, 1, 2}; });
    ASSERT_NE(it, f.simplices.end());
    EXPECT_EQ(it->value, std::sqrt(7.25));
    // Edge weights {1, sqrt(3.25), sqrt(7.25)} by an explicit pair loop.
    double brute = 0.0;
    for (Vertex a : it->vertices) {
        for (Vertex b : it->vertices) brute = std::max(brute, qm.matrix(a, b));
    }
    EXPECT_EQ(brute, it->value);
}

TEST(VrFiltrationTest, Errors) {
    const auto w = pairwise_distances(PointCloud{{0.0}, {1.0}});
    EXPECT_THROW(vr_filtration(w, 2), InvalidInput);
    EXPECT_THROW(vr_filtration(w, 1, -0.5), InvalidInput);
}

TEST(SimplexValueTest, Examples) {
    const auto w = pairwise_distances(PointCloud{{0.0, 0.0}, {3.0, 0.0}, {3.0, 4.0}});
    const std::vector<Vertex> single{1}, edge{0, 2}, triangle{0, 1, 2}, dup{1, 1};
    EXPECT_EQ(simplex_value(single, w), 0.0);
    EXPECT_EQ(simplex_value(edge, w), w(0, 2));
    EXPECT_EQ(simplex_value(triangle, w), 5.0);
    EXPECT_THROW(simplex_value(dup, w), InvalidInput);
    const std::vector<Vertex> bad{0, 7};
    EXPECT_THROW(simplex_value(bad, w), InvalidInput);
}

TEST(VrFiltrationTest, FaceClosureAndOrder) {
    Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const auto cloud = testing::random_cloud(rng, 3 + rng.uniform_index(6), 2, trial % 2 == 0);
        const auto w = pairwise_distances(cloud);
        const auto f = vr_filtration(w, 2, trial % 3 == 0 ? std::optional<double>(0.8) : std::nullopt);
        std::map<std::vector<Vertex>, std::size_t> position;
        for (std::size_t i = 0; i < f.simplices.size(); ++i) {
            const auto& s = f.simplices[i];
            EXPECT_TRUE(std::is_sorted(s.vertices.begin(), s.vertices.end()));
            EXPECT_EQ(s.value, simplex_value(s.vertices, w));
            if (i > 0) EXPECT_TRUE(filtration_less(f.simplices[i - 1], s));
            position[s.vertices] = i;
        }
        for (std::size_t i = 0; i < f.simplices.size(); ++i) {
            const auto& s = f.simplices[i];
            if (s.dim() == 0) continue;
            for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
                auto face = s.vertices;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
                ASSERT_TRUE(position.contains(face));
                EXPECT_LT(position[face], i);
            }
        }
    }
}

TEST(VrFiltrationTest, FullFiltrationCounts) {
    Rng rng(2);
    for (std::size_t n = 1; n <= 9; ++n) {
        const auto w = pairwise_distances(testing::random_cloud(rng, n, 3));
        for (std::size_t d = 0; d < std::min<std::size_t>(n, 4); ++d) {
            std::size_t expected = 0;
            for (std::size_t k = 0; k <= d; ++k) expected += binomial(n, k + 1);
            EXPECT_EQ(vr_filtration(w, d).simplices.size(), expected) << "n=" << n << " d=" << d;
        }
    }
}

TEST(VrFiltrationTest, RaisingThresholdOnlyAddsSimplices) {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto w = pairwise_distances(testing::random_cloud(rng, 7, 2));
        const auto low = vr_filtration(w, 2, 0.6);
        const auto high = vr_filtration(w, 2, 1.2);
        std::vector<Simplex> filtered;
        for (const auto& s : high.simplices) {
            if (s.value <= 0.6) filtered.push_back(s);
        }
        EXPECT_EQ(filtered, low.simplices);
    }
}

TEST(VrFiltrationTest, QOnlySimplicesAppearAtZero) {
    Rng rng(4);
    const auto p = testing::random_cloud(rng, 3, 2);
    const auto q = testing::random_cloud(rng, 4, 2);
    const auto qm = quotient_of(p, q);
    for (const auto& s : vr_filtration(qm.matrix, 3).simplices) {
        const bool q_only = std::all_of(s.vertices.begin(), s.vertices.end(), [&](Vertex v) { return qm.is_q_vertex(v); });
        if (q_only) EXPECT_EQ(s.value, 0.0);
    }
}

}  // namespace
}  // namespace mtd
