#include <gtest/gtest.h>

#include "eulersum/hyperharmonic.hpp"
#include "eulersum/mhn.hpp"
#include "oracles.hpp"

using namespace eulersum;

namespace {
Rational Q(const char* s) { return parse_rational(s); }
}  // namespace

TEST(Hyperharmonic, Examples) {
  EXPECT_EQ(hyperharmonic(3, 1), Q("11/6"));
  EXPECT_EQ(hyperharmonic(2, 2), Q("5/2"));
  EXPECT_EQ(hyperharmonic(1, 4), 1);
}

TEST(GenHyperharmonic, DirectExamples) {
  EXPECT_EQ(gen_hh_direct({2, 1, 2}), Q("1/2"));
  EXPECT_EQ(gen_hh_direct({2, 2, 1}), Q("5/2"));
  EXPECT_EQ(gen_hh_direct({1, 1, 3}), 0);
  EXPECT_THROW(gen_hh_direct({3, 2, 0}), domain_error);
}

TEST(GenHyperharmonic, RecurrenceExamples) {
  EXPECT_EQ(gen_hh_recurrence({2, 1, 2}), Q("1/2"));
  EXPECT_EQ(gen_hh_recurrence({5, 3, 0}), 21);
  EXPECT_EQ(gen_hh_recurrence({2, 2, 1}), Q("5/2"));
}

TEST(GenHyperharmonic, ClosedExamples) {
  EXPECT_EQ(gen_hh_closed(2, 1, 1), Q("5/2"));
  EXPECT_EQ(gen_hh_closed(3, 0, 2), 1);
  EXPECT_EQ(gen_hh_closed(1, 2, 1), 1);
}

TEST(GenHyperharmonic, StarExamples) {
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned m = 1; m <= 4; ++m) EXPECT_EQ(gen_hh_star(n, m, 1), hyperharmonic(n, m));
  EXPECT_EQ(gen_hh_star(2, 1, 2), Q("7/4"));
  EXPECT_EQ(gen_hh_star(1, 2, 2), 1);
}

TEST(GenHyperharmonic, AllRoutesMatchRepeatedPartialSums) {
  for (unsigned n = 1; n <= 9; ++n)
    for (unsigned m = 1; m <= 4; ++m)
      for (unsigned k = 1; k <= 4; ++k) {
        const Rational want = oracle::gen_hh(n, m, k);
        EXPECT_EQ(gen_hh_direct({n, m, k}), want) << n << " " << m << " " << k;
        EXPECT_EQ(gen_hh_recurrence({n, m, k}), want);
        EXPECT_EQ(gen_hh_closed(n, m - 1, k), want);
        EXPECT_EQ(gen_hh_stirling(n, m - 1, k), want);
      }
}

TEST(GenHyperharmonic, SequencesMatchPointValues) {
  const auto seq = gen_hh_direct_sequence(12, 3, 2);
  const auto star = gen_hh_star_sequence(12, 2, 3);
  ASSERT_EQ(seq.size(), 13u);
  EXPECT_EQ(seq[0], 0);
  for (unsigned n = 1; n <= 12; ++n) {
    EXPECT_EQ(seq[n], gen_hh_direct({n, 3, 2}));
    EXPECT_EQ(star[n], gen_hh_star(n, 2, 3));
  }
}

TEST(GenHyperharmonic, StarMatchesWeakEnumeration) {
  // H_n^(m)(k) with m = 1 is zeta*_n({1}_k)
  for (unsigned n = 1; n <= 7; ++n)
    for (unsigned k = 1; k <= 4; ++k) EXPECT_EQ(gen_hh_star(n, 1, k), oracle::mhsn(n, oracle::ones(k)));
}

TEST(GenHyperharmonic, BinomialTimesShiftedSum) {
  for (unsigned n = 1; n <= 8; ++n)
    for (unsigned r = 0; r <= 4; ++r)
      for (unsigned k = 1; k <= 3; ++k)
        EXPECT_EQ(gen_hh_direct({n, r + 1, k}), Rational(oracle::binomial(n + r, r)) * oracle::nested(n, oracle::ones(k), false, r));
}

TEST(HyperharmonicShape, Layout) {
  const NestedShape s = hyperharmonic_shape(3, 2, false);
  EXPECT_EQ(s.exponents, (std::vector<unsigned>{0, 0, 1, 1}));
  EXPECT_EQ(s.links, (std::vector<Link>{Link::weak, Link::weak, Link::strict}));
  EXPECT_THROW(hyperharmonic_shape(0, 1, false), domain_error);
}
