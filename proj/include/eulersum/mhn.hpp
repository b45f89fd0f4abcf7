#pragma once

// Exact multiple harmonic numbers and their star, mixed and shifted variants.
//
// All values are memoized per index sequence: the first request for a given
// index builds a nested-sum stream and records every prefix value, later
// requests with a larger upper limit extend the same stream. The cache is
// safe for concurrent use (shared lock for lookups, exclusive lock while
// extending).

#include <cstdint>
#include <vector>

#include "eulersum/nested_sum.hpp"
#include "eulersum/rational.hpp"

namespace eulersum {

/// H_n^(p) = sum_{j=1}^n 1/j^p. Rejects p = 0.
Rational harmonic(std::uint64_t n, unsigned p = 1);

/// zeta_n(s_1, ..., s_m): strictly decreasing indices n >= n_1 > ... > n_m >= 1.
/// Every part must be >= 1.
Rational mhn(std::uint64_t n, const Composition& s);

/// zeta*_n(s_1, ..., s_m): weakly decreasing indices. Every part must be >= 1.
Rational mhsn(std::uint64_t n, const Composition& s);

/// zeta_n(outer; inner): weak relations inside the outer block, strict
/// relations inside the inner block and at the junction. Zero exponents are
/// allowed and contribute a factor 1.
Rational mixed_mhn(std::uint64_t n, const MixedIndex& idx);

/// sum_{1 <= k_m < ... < k_1 <= n} 1 / ((k_1 + r) ... (k_m + r))
Rational shifted_mhn(std::uint64_t n, unsigned m, unsigned r);

/// Shifted nested sum with a common exponent p:
///   sum over n >= k_1 R ... R k_m >= 1 of prod 1/(k_i + r)^p
/// with R strict or weak.
Rational shifted_power_sum(std::uint64_t n, unsigned m, unsigned p, unsigned r, Link link);

/// General memoized nested sum with power weights 1/(k + shift)^{e_i}.
/// `links` has exponents.size() - 1 entries.
Rational nested_power_sum(std::uint64_t n, const std::vector<unsigned>& exponents, const std::vector<Link>& links,
                          std::uint64_t shift = 0);

/// Values for every upper limit 0..n of the same nested sum (index i holds
/// the value at upper limit i).
std::vector<Rational> nested_power_prefixes(std::uint64_t n, const std::vector<unsigned>& exponents,
                                            const std::vector<Link>& links, std::uint64_t shift = 0);

/// Drops every memoized table. Intended for tests and long-running tools.
void clear_nested_sum_cache();

}  // namespace eulersum
