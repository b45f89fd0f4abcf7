#include <gtest/gtest.h>

#include <random>

#include "eulersum/mhn.hpp"
#include "oracles.hpp"

using namespace eulersum;

namespace {

Rational Q(const char* s) { return parse_rational(s); }

std::vector<unsigned> random_parts(std::mt19937& gen, unsigned depth, unsigned max_part) {
  std::vector<unsigned> p(depth);
  for (auto& x : p) x = 1 + gen() % max_part;
  return p;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(Q("6/4")), "3/2");
  EXPECT_EQ(to_string(Q("-7")), "-7");
  EXPECT_THROW(parse_rational("1/0"), domain_error);
  EXPECT_THROW(parse_rational("abc"), domain_error);
  EXPECT_EQ(inverse_power(3, 2), Q("1/9"));
  EXPECT_EQ(inverse_power(5, 0), Q("1"));
  EXPECT_EQ(factorial(6), 720);
  EXPECT_EQ(binomial(7, 2), 21);
  EXPECT_EQ(to_string(Composition{2, 1}), "(2,1)");
}

TEST(Harmonic, Examples) {
  EXPECT_EQ(harmonic(0, 1), 0);
  EXPECT_EQ(harmonic(3, 1), Q("11/6"));
  EXPECT_EQ(harmonic(2, 2), Q("5/4"));
  EXPECT_THROW(harmonic(3, 0), domain_error);
}

TEST(Mhn, Examples) {
  EXPECT_EQ(mhn(5, {}), 1);
  EXPECT_EQ(mhn(1, {1, 1}), 0);
  EXPECT_EQ(mhn(2, {1, 1}), Q("1/2"));
  EXPECT_EQ(mhn(3, {1, 1}), 1);
  EXPECT_THROW(mhn(3, {1, 0}), domain_error);
}

TEST(Mhsn, Examples) {
  EXPECT_EQ(mhsn(0, {1}), 0);
  EXPECT_EQ(mhsn(2, {1, 1}), Q("7/4"));
  EXPECT_EQ(mhsn(2, {1}), Q("3/2"));
  EXPECT_EQ(mhsn(4, {}), 1);
  EXPECT_THROW(mhsn(3, {0}), domain_error);
}

TEST(MixedMhn, Examples) {
  const Composition s{2, 1, 1};
  EXPECT_EQ(mixed_mhn(6, {{}, s}), mhn(6, s));
  EXPECT_EQ(mixed_mhn(6, {s, {}}), mhsn(6, s));
  EXPECT_EQ(mixed_mhn(2, {{0, 1}, {}}), Q("5/2"));
}

TEST(ShiftedMhn, Examples) {
  EXPECT_EQ(shifted_mhn(5, 0, 3), 1);
  EXPECT_EQ(shifted_mhn(2, 1, 1), Q("5/6"));
  EXPECT_EQ(shifted_mhn(3, 2, 0), 1);
}

TEST(Mhn, MatchesEnumerationOracle) {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned n = gen() % 9;
    const unsigned depth = gen() % 4;
    const auto parts = random_parts(gen, depth, 3);
    const Composition s(parts);
    EXPECT_EQ(mhn(n, s), oracle::mhn(n, parts)) << "n=" << n << " s=" << to_string(s);
    EXPECT_EQ(mhsn(n, s), oracle::mhsn(n, parts)) << "n=" << n << " s=" << to_string(s);
  }
}

TEST(ShiftedPowerSum, MatchesEnumerationOracle) {
  for (unsigned n = 0; n <= 6; ++n)
    for (unsigned m = 1; m <= 3; ++m)
      for (unsigned p = 1; p <= 2; ++p)
        for (unsigned r = 0; r <= 3; ++r) {
          const std::vector<unsigned> s(m, p);
          EXPECT_EQ(shifted_power_sum(n, m, p, r, Link::strict), oracle::nested(n, s, false, r));
          EXPECT_EQ(shifted_power_sum(n, m, p, r, Link::weak), oracle::nested(n, s, true, r));
        }
}

TEST(NestedPrefixes, AgreeWithPointEvaluation) {
  const std::vector<unsigned> exps{2, 1, 1};
  const std::vector<Link> links{Link::weak, Link::strict};
  const auto pre = nested_power_prefixes(15, exps, links);
  ASSERT_EQ(pre.size(), 16u);
  for (unsigned n = 0; n <= 15; ++n) EXPECT_EQ(pre[n], nested_power_sum(n, exps, links));
  // the memo must not change answers
  clear_nested_sum_cache();
  EXPECT_EQ(pre[15], nested_power_sum(15, exps, links));
}

TEST(Mhn, StarExpandsOverStrict) {
  // zeta*_n(a, b) = zeta_n(a, b) + zeta_n(a + b)
  std::mt19937 gen(5);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned n = gen() % 20;
    const unsigned a = 1 + gen() % 3, b = 1 + gen() % 3;
    EXPECT_EQ(mhsn(n, {a, b}), mhn(n, {a, b}) + harmonic(n, a + b));
  }
}

TEST(Mhn, ShuffleWithDepthOne) {
  // H^(a) H^(b) = zeta(a,b) + zeta(b,a) + H^(a+b)
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned a = 1; a <= 3; ++a)
      for (unsigned b = 1; b <= 3; ++b)
        EXPECT_EQ(harmonic(n, a) * harmonic(n, b), mhn(n, {a, b}) + mhn(n, {b, a}) + harmonic(n, a + b));
}

TEST(Mhn, DepthBeyondLimitIsZero) {
  for (unsigned n = 0; n < 5; ++n) EXPECT_EQ(mhn(n, Composition::ones(n + 1)), 0);
}
