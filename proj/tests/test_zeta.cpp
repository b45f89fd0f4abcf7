#include <gtest/gtest.h>

#include "eulersum/zeta.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"
#include "test_util.hpp"

using namespace eulersum;
using testutil::agrees_to;

TEST(RiemannZeta, MatchesReferenceDigits) {
  for (unsigned s = 2; s <= 13; ++s) {
    const SeriesValue z = riemann_zeta(s, 50);
    EXPECT_TRUE(agrees_to(z.value, ref::kZeta[s], 48)) << "s=" << s << " " << z.value_string();
    EXPECT_LE(testutil::distance(z.value, ref::kZeta[s]), z.error_bound);
    EXPECT_LE(z.error_bound, ten_to_minus(50));
    EXPECT_TRUE(z.rigorous);
    EXPECT_EQ(z.method, Method::euler_maclaurin);
  }
}

TEST(RiemannZeta, HigherPrecisionRequest) {
  const SeriesValue z = riemann_zeta(3, 58);
  EXPECT_TRUE(agrees_to(z.value, ref::kZeta[3], 57));
}

TEST(RiemannZeta, RejectsPole) {
  EXPECT_THROW(riemann_zeta(1), domain_error);
  EXPECT_THROW(riemann_zeta(0), domain_error);
}

TEST(Bernoulli, Examples) {
  EXPECT_EQ(bernoulli(0), 1);
  EXPECT_EQ(bernoulli(1), parse_rational("-1/2"));
  EXPECT_EQ(bernoulli(2), parse_rational("1/6"));
  EXPECT_EQ(bernoulli(3), 0);
  EXPECT_EQ(bernoulli(4), parse_rational("-1/30"));
  EXPECT_EQ(bernoulli(12), parse_rational("-691/2730"));
}

TEST(AdzSeries, DualityAndBoundary) {
  const BivariateSeries t = adz_series(12);
  WorkingPrecision scope(60);
  const BigFloat tol = ten_to_minus(45);
  for (unsigned i = 1; i < 12; ++i)
    for (unsigned j = 1; i + j <= 12; ++j)
      EXPECT_LE(abs(t.coefficient(i, j) - t.coefficient(j, i)), tol) << i << "," << j;
  for (unsigned n = 1; n <= 11; ++n) {
    EXPECT_TRUE(agrees_to(t.coefficient(1, n), ref::kZeta[n + 1], 45)) << "row 1, n=" << n;
    EXPECT_TRUE(agrees_to(t.coefficient(n, 1), ref::kZeta[n + 1], 45)) << "column 1, n=" << n;
  }
  EXPECT_TRUE(agrees_to(t.coefficient(2, 2), ref::kZeta31, 45));
  EXPECT_TRUE(agrees_to(t.coefficient(2, 1), ref::kZeta[3], 45));
  EXPECT_THROW(adz_series(1), domain_error);
}

TEST(MzvHeightOne, Examples) {
  EXPECT_TRUE(agrees_to(mzv_height_one(3, 1).value, ref::kZeta31, 45));
  EXPECT_TRUE(agrees_to(mzv_height_one(2, 3).value, ref::kZeta[5], 45));
  EXPECT_TRUE(agrees_to(mzv_height_one(4, 1).value, ref::kZeta41, 45));
  EXPECT_TRUE(agrees_to(mzv_height_one(5, 1).value, ref::kZeta51, 45));
  EXPECT_TRUE(agrees_to(mzv_height_one(7, 0).value, ref::kZeta[7], 45));
  EXPECT_THROW(mzv_height_one(1, 2), domain_error);
}

TEST(MzvHeightOne, ThreeOnesFormula) {
  // zeta(3, {1}_m) = ((m+2)/2) zeta(m+3) - 1/2 sum_{k=1}^m zeta(k+1) zeta(m+2-k)
  WorkingPrecision scope(70);
  for (unsigned m = 1; m <= 8; ++m) {
    BigFloat want = BigFloat(m + 2) / 2 * riemann_zeta(m + 3, 60).value;
    for (unsigned k = 1; k <= m; ++k)
      want -= riemann_zeta(k + 1, 60).value * riemann_zeta(m + 2 - k, 60).value / 2;
    const SeriesValue got = mzv_height_one(3, m);
    EXPECT_LE(abs(got.value - want), ten_to_minus(45)) << "m=" << m;
  }
}

TEST(MzvTruncated, MatchesEnumeratedPartialSums) {
  const SeriesValue a = mzv_truncated({2, 1}, 10);
  const SeriesValue b = mzsv_truncated({3, 1, 2}, 9);
  WorkingPrecision scope(60);
  EXPECT_LE(abs(a.value - to_bigfloat(oracle::mhn(10, {2, 1}))), ten_to_minus(48));
  EXPECT_LE(abs(b.value - to_bigfloat(oracle::mhsn(9, {3, 1, 2}))), ten_to_minus(48));
  EXPECT_EQ(a.method, Method::truncation);
  EXPECT_FALSE(a.rigorous);
}

TEST(MzvTruncated, TailEstimateCoversTrueTail) {
  // zeta(2,1) = zeta(3) and zeta*(2,1) = 2 zeta(3)
  for (std::uint64_t N : {10u, 100u, 1000u}) {
    const SeriesValue a = mzv_truncated({2, 1}, N);
    const SeriesValue b = mzsv_truncated({2, 1}, N);
    EXPECT_LE(testutil::distance(a.value, ref::kZeta[3]), a.error_bound) << N;
    EXPECT_LE(testutil::distance(b.value, ref::kTwoZeta3), b.error_bound) << N;
  }
}

TEST(MzvTruncated, RejectsDivergentIndex) {
  EXPECT_THROW(mzv_truncated({1, 2}, 10), domain_error);
  EXPECT_THROW(mzsv_truncated({1}, 10), domain_error);
}

TEST(LogPowerTail, BoundsIntegral) {
  WorkingPrecision scope(60);
  // k = 0: integral of x^{-2} over [N, inf) is 1/N
  EXPECT_GE(log_power_tail(100, 0, 2, BigFloat(0)), BigFloat(1) / 100);
  EXPECT_GE(log_power_tail(100, 1, 2, BigFloat(0)), (log(BigFloat(100)) + 1) / 100);
}
