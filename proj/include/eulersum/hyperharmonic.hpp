#pragma once

// Hyperharmonic numbers h_n^(m), generalized hyperharmonic numbers h_n^(m)(k)
// and their star variant, each reachable by several independent routes:
//
//   direct      nested sum with m-1 weak zero-exponent levels, one weak 1,
//               then k-1 strict ones
//   recurrence  Newton-type recurrence on shifted power sums
//               H_{m+n-1}^(j) - H_{m-1}^(j), seeded with C(m+n-1, m-1)
//   closed      C(n+r, r) sum_{i+j=k} (-1)^i zeta*_r({1}_i) zeta_{n+r}({1}_j)
//               with m = r + 1
//   stirling    the closed form with C(n+r, r) expanded through Stirling
//               numbers of the first kind

#include <cstdint>
#include <vector>

#include "eulersum/nested_sum.hpp"
#include "eulersum/rational.hpp"

namespace eulersum {

struct HyperharmonicKey {
  std::uint64_t n = 1;  ///< upper summation limit, >= 1
  unsigned m = 1;       ///< order, >= 1
  unsigned k = 1;       ///< depth of the trailing strict block (0 allowed for the recurrence)
};

/// h_n^(m) = zeta*_n({0}_{m-1}, 1)
Rational hyperharmonic(std::uint64_t n, unsigned m);

/// h_n^(m)(k) from its nested-sum definition. Rejects k = 0.
Rational gen_hh_direct(const HyperharmonicKey& key);

/// h_n^(m)(k) from the recurrence; k = 0 gives C(m+n-1, m-1).
Rational gen_hh_recurrence(const HyperharmonicKey& key);

/// h_n^(r+1)(k) from the closed form in terms of star and plain harmonic sums.
Rational gen_hh_closed(std::uint64_t n, unsigned r, unsigned k);

/// h_n^(r+1)(k) = (1/r!) sum_l [r+1, l] n^{l-1} sum_{i+j=k} (-1)^i zeta*_r({1}_i) zeta_{n+r}({1}_j)
Rational gen_hh_stirling(std::uint64_t n, unsigned r, unsigned k);

/// H_n^(m)(k): the fully weak nested sum over ({0}_{m-1}, {1}_k).
Rational gen_hh_star(std::uint64_t n, unsigned m, unsigned k);

/// h_1^(m)(k), ..., h_N^(m)(k) by the direct route (index i holds h_i; index 0 is 0).
std::vector<Rational> gen_hh_direct_sequence(std::uint64_t N, unsigned m, unsigned k);

/// Same for the star variant.
std::vector<Rational> gen_hh_star_sequence(std::uint64_t N, unsigned m, unsigned k);

/// Exponents and links of the nested sum defining h_n^(m)(k), or H_n^(m)(k)
/// when `star` is set.
struct NestedShape {
  std::vector<unsigned> exponents;
  std::vector<Link> links;
};
NestedShape hyperharmonic_shape(unsigned m, unsigned k, bool star);

}  // namespace eulersum
