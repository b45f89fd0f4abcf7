#pragma once

// Slow reference computations used only by the tests. Every routine here
// enumerates its definition directly and shares no code with the library
// beyond the Rational type.

#include <cstdint>
#include <functional>
#include <vector>

#include "eulersum/rational.hpp"

namespace oracle {

using eulersum::Integer;
using eulersum::Rational;

inline Rational inv_pow(std::uint64_t n, unsigned e) {
  Integer d = 1;
  for (unsigned i = 0; i < e; ++i) d *= static_cast<unsigned long>(n);
  return Rational(Integer(1), d);
}

// Sum over n >= n_1 R n_2 R ... R n_d >= 1 of prod 1/(n_i + shift)^{s_i}, R
// strict (weak == false) or weak, by recursion over the indices.
inline Rational nested(std::uint64_t n, const std::vector<unsigned>& s, bool weak, std::uint64_t shift = 0,
                       std::size_t level = 0) {
  if (level == s.size()) return 1;
  Rational acc;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const std::uint64_t next = weak ? k : k - 1;
    if (level + 1 < s.size() && next == 0) continue;
    acc += inv_pow(k + shift, s[level]) * nested(next, s, weak, shift, level + 1);
  }
  return acc;
}

inline Rational mhn(std::uint64_t n, const std::vector<unsigned>& s) { return nested(n, s, false); }
inline Rational mhsn(std::uint64_t n, const std::vector<unsigned>& s) { return nested(n, s, true); }
inline std::vector<unsigned> ones(unsigned m) { return std::vector<unsigned>(m, 1); }

// Unsigned Stirling numbers of the first kind read off the coefficients of
// the rising factorial x (x+1) ... (x+n-1).
inline Integer stirling1(unsigned n, unsigned k) {
  std::vector<Integer> poly{1};  // coefficient of x^i
  for (unsigned j = 0; j < n; ++j) {
    std::vector<Integer> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] += poly[i] * j;
    }
    poly = std::move(next);
  }
  return k < poly.size() ? poly[k] : Integer(0);
}

// h_n^(m)(k) by repeated partial summation of zeta_j({1}_k).
inline Rational gen_hh(std::uint64_t n, unsigned m, unsigned k) {
  std::vector<Rational> level(n + 1);
  for (std::uint64_t j = 1; j <= n; ++j) level[j] = mhn(j, ones(k));
  for (unsigned step = 1; step < m; ++step) {
    std::vector<Rational> next(n + 1);
    for (std::uint64_t j = 1; j <= n; ++j) next[j] = next[j - 1] + level[j];
    level = std::move(next);
  }
  return n == 0 ? Rational(0) : level[n];
}

// Y_k(x_1, ..., x_k) = k! [t^k] exp(sum_m x_m t^m / m!) via the exponential
// power series sum_j S^j / j!, S the argument series.
inline Rational bell(unsigned k, const std::vector<Rational>& x) {
  std::vector<Rational> arg(k + 1);
  Integer f = 1;
  for (unsigned m = 1; m <= k; ++m) {
    f *= m;
    arg[m] = x[m - 1] / Rational(f);
  }
  std::vector<Rational> power(k + 1), total(k + 1);
  power[0] = 1;
  total[0] = 1;
  Integer jf = 1;
  for (unsigned j = 1; j <= k; ++j) {
    std::vector<Rational> next(k + 1);
    for (unsigned a = 0; a <= k; ++a)
      for (unsigned b = 1; a + b <= k; ++b) next[a + b] += power[a] * arg[b];
    power = std::move(next);
    jf *= j;
    for (unsigned d = 0; d <= k; ++d) total[d] += power[d] / Rational(jf);
  }
  Integer kf = 1;
  for (unsigned i = 2; i <= k; ++i) kf *= i;
  return total[k] * Rational(kf);
}

inline Rational harmonic(std::uint64_t n, unsigned p) {
  Rational acc;
  for (std::uint64_t j = 1; j <= n; ++j) acc += inv_pow(j, p);
  return acc;
}

inline Rational bell_harmonic(unsigned k, std::uint64_t n) {
  std::vector<Rational> x;
  Integer f = 1;
  for (unsigned m = 1; m <= k; ++m) {
    x.push_back(Rational(f) * harmonic(n, m));
    f *= m;
  }
  return bell(k, x);
}

// e_m and h_m by subset / multiset enumeration.
inline Rational elementary(unsigned m, const std::vector<Rational>& w, std::size_t start = 0) {
  if (m == 0) return 1;
  Rational acc;
  for (std::size_t i = start; i < w.size(); ++i) acc += w[i] * elementary(m - 1, w, i + 1);
  return acc;
}

inline Rational complete(unsigned m, const std::vector<Rational>& w, std::size_t start = 0) {
  if (m == 0) return 1;
  Rational acc;
  for (std::size_t i = start; i < w.size(); ++i) acc += w[i] * complete(m - 1, w, i);
  return acc;
}

// sum_{n<=N} term(n)
inline Rational partial(std::uint64_t N, const std::function<Rational(std::uint64_t)>& term) {
  Rational acc;
  for (std::uint64_t n = 1; n <= N; ++n) acc += term(n);
  return acc;
}

inline Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

}  // namespace oracle
