#include <gtest/gtest.h>

#include "cyclicgv/bounds.hpp"
#include "cyclicgv/errors.hpp"
#include "cyclicgv/random.hpp"

namespace cyclicgv {
namespace {

// Reference values computed with mpmath at 300-bit precision.
const Real kH_1_4("0.81127812445913286391");  // also 2 - (3/4) log2 3
const Real kH_1_3("0.9182958340544895147870722772811498420931");
const Real kH_2_5("0.9709505944546686389980760631207002706089");
const Real kH_1_10("0.4689955935892812212535893303833204600972");
const Real kTail_61_1_4("0.041087865284474767131");
const Real kTail_13_1_4("4.3819654784765811061448117638656774922");

Real abs_diff(const Real& a, const Real& b) { return abs(a - b); }

TEST(BinaryEntropy, Examples) {
  EXPECT_EQ(binary_entropy({0, 1}), 0);
  EXPECT_EQ(binary_entropy({1, 1}), 0);
  EXPECT_LT(abs_diff(binary_entropy({1, 2}), 1), Real("1e-45"));
  EXPECT_LT(abs_diff(binary_entropy({1, 4}), kH_1_4), Real("1e-12"));
  // Working precision well beyond double: agreement to 40 digits.
  EXPECT_LT(abs_diff(binary_entropy({1, 3}), kH_1_3), Real("1e-40"));
  EXPECT_LT(abs_diff(binary_entropy({2, 5}), kH_2_5), Real("1e-40"));
  EXPECT_LT(abs_diff(binary_entropy({1, 10}), kH_1_10), Real("1e-40"));
  const Real route = 2 - Real(3) / 4 * log(Real(3)) / log(Real(2));
  EXPECT_LT(abs_diff(binary_entropy({1, 4}), route), Real("1e-45"));
}

TEST(BinaryEntropy, DomainErrors) {
  EXPECT_THROW(binary_entropy({5, 4}), DomainError);
  EXPECT_THROW(binary_entropy({1, 0}), DomainError);
}

TEST(BinaryEntropy, SymmetryAndChordBound) {
  for (std::uint64_t q = 1; q <= 60; ++q) {
    for (std::uint64_t p = 0; p <= q; ++p) {
      ASSERT_LT(abs_diff(binary_entropy({p, q}), binary_entropy({q - p, q})), Real("1e-45"));
      if (2 * p <= q) ASSERT_GE(binary_entropy({p, q}), Real(2 * p) / Real(q));
    }
  }
}

TEST(BallVolume, Examples) {
  EXPECT_EQ(ball_volume(5, 0), 1);
  EXPECT_EQ(ball_volume(5, 2), 16);
  for (std::size_t n = 1; n <= 130; ++n) ASSERT_EQ(ball_volume(n, n), BigInt(1) << n);
  EXPECT_THROW(ball_volume(5, 6), DomainError);
}

TEST(BallVolume, IncrementIsBinomial) {
  for (std::size_t n = 1; n <= 80; ++n) {
    BigInt row = 1;  // C(n, 0)
    for (std::size_t r = 1; r <= n; ++r) {
      row = row * (n - r + 1) / r;
      ASSERT_EQ(ball_volume(n, r) - ball_volume(n, r - 1), row);
      ASSERT_EQ(binomial(n, r), row);
    }
  }
}

TEST(BallVolume, EntropyBoundExhaustive) {
  for (std::size_t n = 1; n <= 64; ++n) {
    for (std::size_t r = 0; 2 * r <= n; ++r) {
      ASSERT_LE(Real(ball_volume(n, r)), ball_entropy_bound(n, {r, n})) << n << " " << r;
    }
  }
}

TEST(TailBound, Examples) {
  EXPECT_LT(abs_diff(lemma1_bound(2, {0, 1}), Real("0.5")), Real("1e-45"));
  EXPECT_LT(abs_diff(lemma1_bound(61, {1, 4}), Real("0.0411")), Real("1e-3"));
  EXPECT_LT(abs_diff(lemma1_bound(61, {1, 4}), kTail_61_1_4), Real("1e-20"));
  EXPECT_LT(abs_diff(lemma1_bound(13, {1, 4}), kTail_13_1_4), Real("1e-30"));
  EXPECT_THROW(lemma1_bound(61, {1, 2}), DomainError);
  EXPECT_THROW(lemma1_bound(1, {1, 4}), DomainError);
}

TEST(TailBound, DecreasingPastTheKnee) {
  const DistanceThreshold d(1, 4);
  for (std::size_t n = 30; n < 400; ++n) ASSERT_LT(lemma1_bound(n + 1, d), lemma1_bound(n, d));
  // 1 - H(1/4) ~ 0.189 lies between 1/8 and 1/4: the bound decays faster than
  // 2^{-n/8} but never as fast as 2^{-n/4}.
  for (std::size_t n = 200; n <= 400; n += 10) {
    ASSERT_LT(lemma1_bound(n, d), pow(Real(2), -Real(n) / 8));
    ASSERT_GT(lemma1_bound(n, d), pow(Real(2), -Real(n) / 4));
  }
}

TEST(TailBound, LogFormAgrees) {
  SplitMix64 rng(17);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + rng() % 500;
    const std::uint64_t q = 2 + rng() % 50;
    const std::uint64_t p = rng() % ((q + 1) / 2);
    const DistanceThreshold d(p, q);
    if (!d.below_half()) continue;
    const Real lhs = log(lemma1_bound(n, d)) / log(Real(2));
    const Real rhs = 1 + log(Real(n - 1)) / log(Real(2)) + (binary_entropy(d) - 1) * Real(n);
    ASSERT_LT(abs_diff(lhs, rhs), Real("1e-9"));
  }
}

TEST(GvRate, Examples) {
  EXPECT_EQ(gv_rate({0, 1}), 1);
  EXPECT_LT(abs_diff(gv_rate({1, 4}), Real("0.18872187554086713609")), Real("1e-12"));
  EXPECT_THROW(gv_rate({1, 2}), DomainError);
  SplitMix64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const std::uint64_t q = 3 + rng() % 1000;
    const DistanceThreshold d(rng() % ((q + 1) / 2), q);
    ASSERT_LT(abs_diff(gv_rate(d) + binary_entropy(d), 1), Real("1e-45"));
  }
}

TEST(CodeRate, Examples) {
  for (std::size_t n : {1, 10, 64, 100}) {
    EXPECT_EQ(code_rate(BigInt(1) << n, n), 1);
    EXPECT_EQ(code_rate(1, n), 0);
  }
  EXPECT_EQ(code_rate(32, 10), Real("0.5"));
  EXPECT_THROW(code_rate(0, 5), DomainError);
  EXPECT_LT(abs_diff(code_rate(3, 1), log(Real(3)) / log(Real(2))), Real("1e-45"));
}

TEST(BoundReport, Fields) {
  const auto r = evaluate_bounds(61, {1, 4});
  EXPECT_EQ(r.strict_radius, 15);
  EXPECT_EQ(r.ball_volume, ball_volume(61, 15));
  EXPECT_LE(Real(r.ball_volume), r.ball_entropy_bound);
  EXPECT_GE(r.lemma1_bound, 0);
  EXPECT_GT(r.gv_rate, 0);
  EXPECT_LE(r.gv_rate, 1);
  EXPECT_EQ(to_decimal(r.lemma1_bound), "0.0410878652844748");
}

TEST(IsPrime, Small) {
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(61));
  EXPECT_FALSE(is_prime(91));
}

}  // namespace
}  // namespace cyclicgv
