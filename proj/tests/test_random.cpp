#include <gtest/gtest.h>

#include <set>

#include "mtopdiv/random.hpp"

namespace mtd {
namespace {

TEST(RngTest, SameSeedSameStream) {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(RngTest, SubstreamsAreIndependentOfParentState) {
    Rng parent(7);
    const Rng child_before = parent.substream(3);
    parent.next_u64();
    Rng child_after = parent.substream(3);
    Rng copy = child_before;
    EXPECT_EQ(copy.next_u64(), child_after.next_u64());
    EXPECT_NE(Rng(7).substream(3).next_u64(), Rng(7).substream(4).next_u64());
}

TEST(RngTest, UniformStaysInUnitInterval) {
    Rng rng(1);
    double lo = 1.0, hi = 0.0, sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        lo = std::min(lo, u);
        hi = std::max(hi, u);
        sum += u;
    }
    EXPECT_GE(lo, 0.0);
    EXPECT_LT(hi, 1.0);
    // Mean of U(0,1) has standard deviation 1/sqrt(12 n) ~ 0.0009.
    EXPECT_NEAR(sum / n, 0.5, 0.005);
}

TEST(RngTest, UniformIndexCoversRange) {
    Rng rng(9);
    std::vector<int> counts(7, 0);
    for (int i = 0; i < 70000; ++i) ++counts[rng.uniform_index(7)];
    for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(RngTest, NormalMoments) {
    Rng rng(11);
    const int n = 200000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        sum += z;
        sq += z * z;
    }
    EXPECT_NEAR(sum / n, 0.0, 0.01);
    EXPECT_NEAR(sq / n, 1.0, 0.02);
}

}  // namespace
}  // namespace mtd
