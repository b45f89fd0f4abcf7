#pragma once

// Stirling numbers of the first kind, complete exponential Bell polynomials
// and the elementary/complete symmetric sums over a finite weight sequence.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "eulersum/rational.hpp"

namespace eulersum {

/// Finite sequence a_1, ..., a_n of rational weights (zero and negative values allowed).
struct WeightSequence {
  std::vector<Rational> weights;

  [[nodiscard]] std::size_t size() const noexcept { return weights.size(); }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return weights[i]; }

  /// a_{offset+1}, ..., a_{offset+count}
  [[nodiscard]] WeightSequence slice(std::size_t offset, std::size_t count) const;
};

/// Unsigned Stirling numbers of the first kind, grown row by row with
/// [n+1, k] = n [n, k] + [n, k-1]. Rows are cached process-wide; lookups are
/// safe from multiple threads.
class StirlingTable {
 public:
  static StirlingTable& shared();

  [[nodiscard]] Integer get(unsigned n, unsigned k);
  /// Row n as a vector of length n + 1.
  [[nodiscard]] std::vector<Integer> row(unsigned n);

 private:
  StirlingTable();
  ~StirlingTable();
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Integer stirling1(unsigned n, unsigned k);

/// Y_k(x_1, ..., x_k) through Y_k = sum_{i<k} C(k-1, i) Y_i x_{k-i}, Y_0 = 1.
/// Rejects x shorter than k.
Rational bell_complete(unsigned k, std::span<const Rational> x);

/// Y_k(H_n, 1! H_n^(2), 2! H_n^(3), ...)
Rational bell_harmonic(unsigned k, std::uint64_t n);

/// sum over k_m < ... < k_1 of a_{k_1} ... a_{k_m}; 1 for m = 0, 0 for m > n.
Rational elementary_sum(unsigned m, const WeightSequence& w);

/// sum over k_m <= ... <= k_1 of a_{k_1} ... a_{k_m}; 1 for m = 0.
Rational complete_sum(unsigned m, const WeightSequence& w);

/// Elementary sums e_0..e_m recovered from power sums p_1..p_m with
///   e_k = ((-1)^{k-1} / k) sum_{i<k} (-1)^i e_i p_{k-i},   e_0 = base.
/// A base other than 1 scales every term (used for hyperharmonic numbers).
std::vector<Rational> newton_elementary(std::span<const Rational> power_sums, unsigned m,
                                        const Rational& base = Rational(1));

/// e_m of the weights computed from their power sums via newton_elementary.
Rational bbar_recurrence(unsigned m, const WeightSequence& w);

/// (1/r!) sum_{l=1}^{r+1} [r+1, l] n^{l-1}, which equals C(n + r, r).
Integer binomial_via_stirling(unsigned long n, unsigned r);

}  // namespace eulersum
