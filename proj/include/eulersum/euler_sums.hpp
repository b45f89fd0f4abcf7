#pragma once

// Euler-type sums of generalized hyperharmonic numbers
//
//   S(k, m; p) = sum_{n>=1} h_n^(m)(k) / n^p            (p >= m + 1)
//   U_{m,r}(p) = sum_{n>=1} zeta_{n+r}({1}_m) / n^p     (p >= 2)
//   V_{m,r}(p) = sum_{n>=1} zeta*_{n+r}({1}_m) / n^p    (p >= 2)
//
// Each sum is available as a truncated partial sum (exact rationals for small
// N, compensated MPFR summation otherwise) and, for S and U, as a closed
// form: a rational linear combination of height-one multiple zeta values
// zeta(q, {1}_j) plus a rational constant.

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "eulersum/rational.hpp"
#include "eulersum/report.hpp"
#include "eulersum/zeta.hpp"

namespace eulersum {

struct EulerSumKey {
  unsigned k = 1;  ///< depth of the strict harmonic block, >= 1
  unsigned m = 1;  ///< hyperharmonic order m = r + 1, >= 1
  unsigned p = 2;  ///< exponent, >= m + 1
};

/// Partial sums with N at or below this limit are carried out exactly.
inline constexpr std::uint64_t kExactTermLimit = 2000;

/// Rational combination  constant + sum c_{q,j} zeta(q, {1}_j).
struct ZetaLinearForm {
  Rational constant;
  /// key (q, j) stands for zeta(q, {1}_j); j = 0 is the Riemann zeta value.
  std::map<std::pair<unsigned, unsigned>, Rational> terms;

  void add(unsigned q, unsigned j, const Rational& c);
  ZetaLinearForm& operator+=(const ZetaLinearForm& other);
  ZetaLinearForm& operator*=(const Rational& c);
  [[nodiscard]] unsigned max_weight() const;

  /// Evaluates with height-one values at `digits` precision; the error bound
  /// sums |c| times each value's bound plus rounding.
  [[nodiscard]] SeriesValue evaluate(unsigned digits = kDefaultDigits) const;
  /// e.g. "2*z(3) + -1 + 1*z(2)" rendered deterministically.
  [[nodiscard]] std::string render() const;
};

// -- truncated partial sums ------------------------------------------------

SeriesValue s_truncated(const EulerSumKey& key, std::uint64_t N, unsigned digits = kDefaultDigits,
                        std::uint64_t exact_limit = kExactTermLimit);
SeriesValue u_truncated(unsigned m, unsigned r, unsigned p, std::uint64_t N, unsigned digits = kDefaultDigits,
                        std::uint64_t exact_limit = kExactTermLimit);
SeriesValue v_truncated(unsigned m, unsigned r, unsigned p, std::uint64_t N, unsigned digits = kDefaultDigits,
                        std::uint64_t exact_limit = kExactTermLimit);

/// Exact prefix sums: element N holds sum_{n<=N} zeta_{n+r}({1}_m) / n^q.
std::vector<Rational> u_partial_sums(unsigned m, unsigned r, unsigned q, std::uint64_t N);

/// Exact prefix sums: element N holds sum_{n<=N} h_n^(m)(k) / n^p.
std::vector<Rational> s_partial_sums(const EulerSumKey& key, std::uint64_t N);

/// Right side of the S closed form restated with partial U sums:
/// element N holds (1/r!) sum_l [r+1,l] sum_{i+j=k} (-1)^i zeta*_r({1}_i)
/// sum_{n<=N} zeta_{n+r}({1}_j) / n^{p+1-l}.
std::vector<Rational> s_partial_sums_via_u(unsigned k, unsigned r, unsigned p, std::uint64_t N);

/// Split of V_{m,r}(p) partial sums: the star head sum_{n<=N} zeta*_n({1}_m)/n^p
/// and, for each j = 1..m, the correction over weakly ordered shifts
/// sum_{i_j <= ... <= i_1 <= r} sum_{n<=N} zeta*_n({1}_{m-j}) / (n^p prod (n + i_a)).
struct VDecomposition {
  SeriesValue star_head;
  std::vector<SeriesValue> corrections;  // corrections[j-1]
  SeriesValue total;                     // head + corrections
};
VDecomposition v_decomposition(unsigned m, unsigned r, unsigned p, std::uint64_t N, unsigned digits = kDefaultDigits,
                               std::uint64_t exact_limit = kExactTermLimit);

// -- closed forms ------------------------------------------------------------

/// U_{m,r}(p) as a linear form; m = 0 yields zeta(p). Rejects p <= 1.
ZetaLinearForm u_closed_form(unsigned m, unsigned r, unsigned p);

/// S(k, r+1; p) as a linear form. Rejects p < r + 2.
ZetaLinearForm s_closed_form(unsigned k, unsigned r, unsigned p);

SeriesValue u_closed(unsigned m, unsigned r, unsigned p, unsigned digits = kDefaultDigits);
SeriesValue s_closed(unsigned k, unsigned r, unsigned p, unsigned digits = kDefaultDigits);

// -- partial fractions ---------------------------------------------------

struct PartialFractionDecomposition {
  std::vector<Rational> poles;     ///< shifts a_j: the term is A_j / (n + a_j)
  std::vector<Rational> residues;  ///< A_j = prod_{i != j} (a_i - a_j)^{-1}

  /// sum_j A_j / (n + a_j)
  [[nodiscard]] Rational evaluate(const Rational& n) const;
};

/// Rejects repeated shifts.
PartialFractionDecomposition partial_fractions(std::span<const Rational> shifts);
PartialFractionDecomposition partial_fractions(std::span<const unsigned> shifts);

/// 1/(n^p (n+r)) = sum_{b=1}^{p-1} c_b / n^{p+1-b} + terminal / (n (n+r))
struct NpSplit {
  unsigned p = 2;
  unsigned r = 1;
  std::vector<Rational> coefficients;  ///< c_b = (-1)^{b-1} / r^b, index b-1
  Rational terminal;                   ///< (-1)^{p-1} / r^{p-1}

  /// Right side evaluated at n.
  [[nodiscard]] Rational recombine(const Rational& n) const;
};

/// Rejects r = 0 and p < 2.
NpSplit split_np(unsigned p, unsigned r);

// -- the truncated Stirling series ---------------------------------------

/// Closed right side (1/k){ zeta(p) + zeta*_k({1}_p) - zeta*_k({1}_{p-1})/k }
/// split into its zeta coefficient (1/k) and rational remainder.
Rational stirling_series_rational_part(unsigned p, unsigned k);

/// The same rational remainder written through Bell polynomials and divided
/// by (p-1)!: (1/k){ Y_p(k)/p - Y_{p-1}(k)/k } / (p-1)!.
Rational stirling_series_rational_part_bell(unsigned p, unsigned k);

/// Truncated (p-1)! sum_{n<=N} zeta_n({1}_{p-1}) / (n (n+k)) compared with
/// the closed right side; the report also records whether the two closed
/// right sides agree exactly.
VerificationReport lemma24_check(unsigned p, unsigned k, std::uint64_t N, unsigned digits = kDefaultDigits,
                                 double margin = 4.0);

}  // namespace eulersum
