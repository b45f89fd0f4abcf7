#include <gtest/gtest.h>

#include <random>

#include "eulersum/mhn.hpp"
#include "eulersum/symmetric.hpp"
#include "eulersum/verify.hpp"
#include "oracles.hpp"

using namespace eulersum;

namespace {

Rational Q(const char* s) { return parse_rational(s); }

WeightSequence ints(std::initializer_list<long> v) {
  WeightSequence w;
  for (long x : v) w.weights.emplace_back(x);
  return w;
}

}  // namespace

TEST(Stirling, Examples) {
  for (unsigned n = 0; n <= 8; ++n) EXPECT_EQ(stirling1(n, n), 1);
  EXPECT_EQ(stirling1(3, 0), 0);
  EXPECT_EQ(stirling1(0, 0), 1);
  EXPECT_EQ(stirling1(4, 3), 6);
  EXPECT_EQ(stirling1(2, 5), 0);
}

TEST(Stirling, MatchesRisingFactorialCoefficients) {
  for (unsigned n = 0; n <= 25; ++n)
    for (unsigned k = 0; k <= n + 1; ++k) EXPECT_EQ(stirling1(n, k), oracle::stirling1(n, k)) << n << "," << k;
}

TEST(Stirling, RowSumsToFactorial) {
  for (unsigned n = 0; n <= 20; ++n) {
    Integer sum;
    for (const auto& v : StirlingTable::shared().row(n)) sum += v;
    EXPECT_EQ(sum, factorial(n));
  }
}

TEST(Bell, Examples) {
  const std::vector<Rational> x{Q("3"), Q("5"), Q("7")};
  EXPECT_EQ(bell_complete(0, {}), 1);
  EXPECT_EQ(bell_complete(1, x), 3);
  EXPECT_EQ(bell_complete(2, x), 3 * 3 + 5);
  EXPECT_THROW(bell_complete(4, x), domain_error);
  EXPECT_EQ(bell_harmonic(1, 2), Q("3/2"));
  EXPECT_EQ(bell_harmonic(2, 2), Q("7/2"));
  EXPECT_EQ(bell_harmonic(3, 0), 0);
}

TEST(Bell, MatchesExponentialSeries) {
  std::mt19937_64 gen(3);
  for (unsigned k = 0; k <= 7; ++k) {
    const WeightSequence w = random_weights(k, gen());
    EXPECT_EQ(bell_complete(k, w.weights), oracle::bell(k, w.weights)) << "k=" << k;
  }
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned k = 0; k <= 5; ++k) EXPECT_EQ(bell_harmonic(k, n), oracle::bell_harmonic(k, n));
}

TEST(Elementary, Examples) {
  EXPECT_EQ(elementary_sum(0, ints({4, 5})), 1);
  EXPECT_EQ(elementary_sum(2, ints({1, 2, 3})), 11);
  EXPECT_EQ(elementary_sum(4, ints({1, 2, 3})), 0);
  EXPECT_EQ(complete_sum(1, ints({1, 2, 3})), 6);
  EXPECT_EQ(complete_sum(2, ints({1, 2})), 7);
  EXPECT_EQ(complete_sum(2, ints({})), 0);
}

TEST(Elementary, MatchesSubsetEnumeration) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const WeightSequence w = random_weights(seed % 7, seed);
    for (unsigned m = 0; m <= 5; ++m) {
      EXPECT_EQ(elementary_sum(m, w), oracle::elementary(m, w.weights));
      EXPECT_EQ(complete_sum(m, w), oracle::complete(m, w.weights));
    }
  }
}

TEST(Bbar, Examples) {
  WeightSequence halves;
  halves.weights = {Q("1/2"), Q("1/3")};
  EXPECT_EQ(bbar_recurrence(1, halves), Q("5/6"));
  EXPECT_EQ(bbar_recurrence(2, ints({1, 2, 3})), 11);
  EXPECT_EQ(bbar_recurrence(3, ints({1, 1, 1})), 1);
  EXPECT_THROW(bbar_recurrence(0, halves), domain_error);
}

TEST(Bbar, AgreesWithElementary) {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const WeightSequence w = random_weights(1 + seed % 6, seed);
    for (unsigned m = 1; m <= 6; ++m) EXPECT_EQ(bbar_recurrence(m, w), elementary_sum(m, w));
  }
}

TEST(BinomialViaStirling, Examples) {
  EXPECT_EQ(binomial_via_stirling(3, 2), 10);
  EXPECT_EQ(binomial_via_stirling(0, 5), 1);
  EXPECT_EQ(binomial_via_stirling(7, 0), 1);
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned r = 0; r <= 8; ++r) EXPECT_EQ(binomial_via_stirling(n, r), oracle::binomial(n + r, r));
}

TEST(StarOnes, BellIdentityAgainstOracle) {
  for (unsigned n = 0; n <= 7; ++n)
    for (unsigned m = 0; m <= 4; ++m)
      EXPECT_EQ(oracle::mhsn(n, oracle::ones(m)), bell_harmonic(m, n) / Rational(factorial(m)));
}

TEST(RandomWeights, Deterministic) {
  EXPECT_EQ(random_weights(0, 99).size(), 0u);
  const auto a = random_weights(5, 7), b = random_weights(5, 7);
  EXPECT_EQ(a.weights, b.weights);
  for (const auto& q : a.weights) {
    EXPECT_LE(abs(q.get_num()), 9);
    EXPECT_LE(q.get_den(), 9);
  }
  const auto d = random_weights(20, 3, true);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) EXPECT_NE(d[i], d[j]);
}

TEST(Convolution, SignedElementaryCompleteVanishes) {
  // with seed 1 and length 3, every m >= 1
  const WeightSequence w = random_weights(3, 1);
  for (unsigned m = 1; m <= 6; ++m) {
    Rational acc;
    for (unsigned i = 0; i <= m; ++i) {
      Rational t = elementary_sum(i, w) * complete_sum(m - i, w);
      acc += i % 2 ? Rational(-t) : t;
    }
    EXPECT_EQ(acc, 0);
  }
}
