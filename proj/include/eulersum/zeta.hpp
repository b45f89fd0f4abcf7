#pragma once

// Riemann zeta values, height-one multiple zeta values and truncated MZV /
// MZSV oracles.
//
// zeta(s) comes from Euler-Maclaurin summation with a proven remainder bound.
// Height-one values zeta(q, {1}_j) are read off the generating function
//
//   sum_{m,n>=1} zeta(m+1, {1}_{n-1}) x^m y^n
//       = 1 - exp( sum_{k>=2} zeta(k) (x^k + y^k - (x+y)^k) / k )
//
// expanded as a bivariate series truncated uniformly in total degree.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eulersum/bigfloat.hpp"
#include "eulersum/rational.hpp"

namespace eulersum {

enum class Method { euler_maclaurin, adz_reduction, truncation, closed_form };

std::string to_string(Method m);

/// Value of an infinite series together with its error bound.
struct SeriesValue {
  BigFloat value;
  BigFloat error_bound;
  Method method = Method::closed_form;
  /// True when the bound is proven (Euler-Maclaurin remainder and quantities
  /// derived from it); truncation tails are heuristic.
  bool rigorous = false;
  /// Requested significant digits.
  unsigned digits = kDefaultDigits;
  /// Exact partial sum, when the truncation was carried out in rationals.
  std::optional<Rational> exact;
  std::string note;

  /// "value ± bound (method)"
  [[nodiscard]] std::string render() const;
  [[nodiscard]] std::string value_string() const { return format_decimal(value, digits); }
};

/// zeta(s) for integer s >= 2 with error_bound <= 10^{-digits}.
SeriesValue riemann_zeta(unsigned s, unsigned digits = kDefaultDigits);

/// Exact Bernoulli number B_n (B_1 = -1/2).
Rational bernoulli(unsigned n);

/// Bivariate series truncated at total degree max_weight, with one error
/// bound per coefficient.
class BivariateSeries {
 public:
  explicit BivariateSeries(unsigned max_weight);

  [[nodiscard]] unsigned max_weight() const noexcept { return max_weight_; }
  [[nodiscard]] const BigFloat& coefficient(unsigned i, unsigned j) const { return coeffs_.at(index(i, j)); }
  BigFloat& coefficient(unsigned i, unsigned j) { return coeffs_.at(index(i, j)); }
  [[nodiscard]] const BigFloat& error_bound(unsigned i, unsigned j) const { return errors_.at(index(i, j)); }
  BigFloat& error_bound(unsigned i, unsigned j) { return errors_.at(index(i, j)); }

  unsigned digits = kDefaultDigits;

 private:
  [[nodiscard]] std::size_t index(unsigned i, unsigned j) const;
  unsigned max_weight_;
  std::vector<BigFloat> coeffs_;
  std::vector<BigFloat> errors_;
};

/// Table whose (m, n) coefficient is zeta(m+1, {1}_{n-1}) for m, n >= 1 and
/// m + n <= max_weight. Rejects max_weight < 2.
BivariateSeries adz_series(unsigned max_weight, unsigned digits = kDefaultDigits);

/// zeta(q, {1}_j) from the generating-function table. Rejects q <= 1.
SeriesValue mzv_height_one(unsigned q, unsigned j, unsigned digits = kDefaultDigits);

/// Partial sum zeta_N(s) with the heuristic tail estimate
/// 2/(d-1)! (log N)^{d-1} / ((s_1 - 1) N^{s_1 - 1}), d = depth. Rejects s_1 <= 1.
SeriesValue mzv_truncated(const Composition& s, std::uint64_t N, unsigned digits = kDefaultDigits);

/// Partial sum zeta*_N(s) with the heuristic tail estimate
/// 2 (log N + 1)^{d-1} / ((s_1 - 1) N^{s_1 - 1}). Rejects s_1 <= 1.
SeriesValue mzsv_truncated(const Composition& s, std::uint64_t N, unsigned digits = kDefaultDigits);

/// Upper bound for the integral of (log x + c)^k x^{-q} over [N, inf), q > 1.
/// Used for the tail estimates of the truncated Euler-type sums.
BigFloat log_power_tail(std::uint64_t N, unsigned k, unsigned q, const BigFloat& c);

}  // namespace eulersum
