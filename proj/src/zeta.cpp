#include "eulersum/zeta.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "eulersum/nested_sum.hpp"

namespace eulersum {
namespace mp = boost::multiprecision;

std::string to_string(Method m) {
  switch (m) {
    case Method::euler_maclaurin: return "euler-maclaurin";
    case Method::adz_reduction: return "adz-reduction";
    case Method::truncation: return "truncation";
    case Method::closed_form: return "closed-form";
  }
  return "unknown";
}

std::string SeriesValue::render() const {
  return value_string() + " ± " + format_bound(error_bound) + " (" + to_string(method) + ")";
}

// ---------------------------------------------------------------------------
// Bernoulli numbers

namespace {

class BernoulliCache {
 public:
  Rational get(unsigned n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    // B_m = -1/(m+1) sum_{k<m} C(m+1, k) B_k
    while (values_.size() <= n) {
      const unsigned m = static_cast<unsigned>(values_.size());
      Rational acc;
      for (unsigned k = 0; k < m; ++k)
        if (values_[k] != 0) acc += Rational(binomial(m + 1, k)) * values_[k];
      values_.push_back(-acc / (m + 1));
    }
    return values_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<Rational> values_{Rational(1)};
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

// (s)_j = s (s+1) ... (s+j-1)
Integer rising(unsigned s, unsigned j) {
  Integer r = 1;
  for (unsigned i = 0; i < j; ++i) r *= s + i;
  return r;
}

// Remainder bound of the Euler-Maclaurin expansion with M correction terms
// after the first N-1 terms:
//   |R| <= 4 |(s)_{2M}| / (2 pi)^{2M} * N^{1-s-2M} / (s + 2M - 1)
BigFloat em_remainder(unsigned s, unsigned N, unsigned M) {
  const BigFloat two_pi = 2 * mp::acos(BigFloat(-1));
  BigFloat b = 4 * to_bigfloat(rising(s, 2 * M));
  b /= mp::pow(two_pi, 2 * M);
  b *= mp::pow(BigFloat(N), 1 - static_cast<int>(s) - 2 * static_cast<int>(M));
  b /= s + 2 * M - 1;
  return b;
}

}  // namespace

Rational bernoulli(unsigned n) { return bernoulli_cache().get(n); }

SeriesValue riemann_zeta(unsigned s, unsigned digits) {
  if (s <= 1) throw domain_error("riemann_zeta: requires s >= 2 (the series diverges at s = 1)");
  if (digits == 0) throw domain_error("riemann_zeta: requires at least one digit");
  const unsigned work = digits + kGuardDigits;
  WorkingPrecision scope(work);

  const BigFloat target = ten_to_minus(digits + 2);
  unsigned N = 8;
  unsigned M = 4;
  BigFloat rem = em_remainder(s, N, M);
  while (rem > target) {
    N += 4;
    M += 3;
    rem = em_remainder(s, N, M);
  }

  BigFloat sum = 0;
  for (unsigned k = 1; k < N; ++k) sum += mp::pow(BigFloat(k), -static_cast<int>(s));
  const BigFloat n = N;
  const BigFloat n_pow = mp::pow(n, -static_cast<int>(s));  // N^{-s}
  sum += n * n_pow / (s - 1);
  sum += n_pow / 2;
  // sum_{k=1}^M B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}
  BigFloat npow = n_pow * n;  // N^{-s+1}
  const BigFloat inv_n2 = 1 / (n * n);
  for (unsigned k = 1; k <= M; ++k) {
    npow *= inv_n2;
    Rational c = bernoulli(2 * k) * make_rational(rising(s, 2 * k - 1), factorial(2 * k));
    sum += to_bigfloat(c) * npow;
  }

  SeriesValue out;
  out.value = sum;
  // Remainder plus a generous allowance for the roundings in N + M + 4 steps.
  out.error_bound = rem + BigFloat(N + M + 4) * 4 * ten_to_minus(work);
  out.method = Method::euler_maclaurin;
  out.rigorous = true;
  out.digits = digits;
  return out;
}

// ---------------------------------------------------------------------------
// Bivariate generating function

BivariateSeries::BivariateSeries(unsigned max_weight) : max_weight_(max_weight) {
  const std::size_t n = static_cast<std::size_t>(max_weight + 1) * (max_weight + 2) / 2;
  coeffs_.assign(n, BigFloat(0));
  errors_.assign(n, BigFloat(0));
}

std::size_t BivariateSeries::index(unsigned i, unsigned j) const {
  const unsigned d = i + j;
  if (d > max_weight_) throw std::out_of_range("BivariateSeries: total degree exceeds max_weight");
  return static_cast<std::size_t>(d) * (d + 1) / 2 + i;
}

BivariateSeries adz_series(unsigned max_weight, unsigned digits) {
  if (max_weight < 2) throw domain_error("adz_series: requires max_weight >= 2");
  const unsigned work = digits + kGuardDigits;
  WorkingPrecision scope(work);
  const BigFloat eps = ten_to_minus(work);

  // Homogeneous parts: arg[d][i] is the x^i y^{d-i} coefficient of the
  // exponent series, exp_[d][i] likewise for its exponential.
  const unsigned W = max_weight;
  std::vector<std::vector<BigFloat>> arg(W + 1), arg_err(W + 1);
  for (unsigned d = 0; d <= W; ++d) {
    arg[d].assign(d + 1, BigFloat(0));
    arg_err[d].assign(d + 1, BigFloat(0));
  }
  for (unsigned d = 2; d <= W; ++d) {
    SeriesValue z = riemann_zeta(d, work);
    for (unsigned i = 1; i < d; ++i) {
      const BigFloat c = to_bigfloat(make_rational(binomial(d, i), Integer(d)));
      arg[d][i] = -z.value * c;
      arg_err[d][i] = z.error_bound * c + abs(arg[d][i]) * eps;
    }
  }

  // d E_d = sum_{k=1}^d k A_k E_{d-k}
  std::vector<std::vector<BigFloat>> ex(W + 1), ex_err(W + 1);
  ex[0] = {BigFloat(1)};
  ex_err[0] = {BigFloat(0)};
  for (unsigned d = 1; d <= W; ++d) {
    std::vector<BigFloat> acc(d + 1, BigFloat(0)), err(d + 1, BigFloat(0)), mag(d + 1, BigFloat(0));
    for (unsigned k = 1; k <= d; ++k) {
      const auto& a = arg[k];
      const auto& ae = arg_err[k];
      const auto& e = ex[d - k];
      const auto& ee = ex_err[d - k];
      for (unsigned ia = 0; ia <= k; ++ia) {
        if (a[ia] == 0 && ae[ia] == 0) continue;
        for (unsigned ie = 0; ie <= d - k; ++ie) {
          acc[ia + ie] += k * a[ia] * e[ie];
          mag[ia + ie] += k * abs(a[ia] * e[ie]);
          err[ia + ie] += k * (abs(a[ia]) * ee[ie] + ae[ia] * (abs(e[ie]) + ee[ie]));
        }
      }
    }
    for (unsigned i = 0; i <= d; ++i) {
      acc[i] /= d;
      err[i] = err[i] / d + mag[i] * (d + 2) * eps;
    }
    ex[d] = std::move(acc);
    ex_err[d] = std::move(err);
  }

  BivariateSeries table(W);
  table.digits = digits;
  for (unsigned d = 1; d <= W; ++d) {
    for (unsigned i = 0; i <= d; ++i) {
      table.coefficient(i, d - i) = -ex[d][i];
      table.error_bound(i, d - i) = ex_err[d][i];
    }
  }
  return table;
}

namespace {

class HeightOneCache {
 public:
  std::shared_ptr<const BivariateSeries> table(unsigned weight, unsigned digits) {
    {
      std::shared_lock lock(mutex_);
      auto it = tables_.find(digits);
      if (it != tables_.end() && it->second->max_weight() >= weight) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto& slot = tables_[digits];
    if (!slot || slot->max_weight() < weight) {
      const unsigned w = std::max(weight, slot ? slot->max_weight() : 12U);
      slot = std::make_shared<const BivariateSeries>(adz_series(std::max(w, 12U), digits));
    }
    return slot;
  }

 private:
  std::shared_mutex mutex_;
  std::map<unsigned, std::shared_ptr<const BivariateSeries>> tables_;
};

HeightOneCache& height_one_cache() {
  static HeightOneCache cache;
  return cache;
}

}  // namespace

SeriesValue mzv_height_one(unsigned q, unsigned j, unsigned digits) {
  if (q <= 1) throw domain_error("mzv_height_one: requires q >= 2 (leading exponent must be >= 2 for convergence)");
  auto table = height_one_cache().table(q + j, digits);
  WorkingPrecision scope(digits + kGuardDigits);
  SeriesValue out;
  out.value = table->coefficient(q - 1, j + 1);
  out.error_bound = table->error_bound(q - 1, j + 1);
  out.method = Method::adz_reduction;
  out.rigorous = true;
  out.digits = digits;
  return out;
}

// ---------------------------------------------------------------------------
// Truncation oracles

BigFloat log_power_tail(std::uint64_t N, unsigned k, unsigned q, const BigFloat& c) {
  if (q <= 1) throw domain_error("log_power_tail: requires q >= 2");
  // I_k = N^{1-q} sum_{i=0}^k k!/(k-i)! L^{k-i} / (q-1)^{i+1},  L = log N + c
  const BigFloat L = mp::log(BigFloat(N)) + c;
  BigFloat sum = 0;
  BigFloat falling = 1;  // k!/(k-i)!
  for (unsigned i = 0; i <= k; ++i) {
    sum += falling * mp::pow(L, static_cast<int>(k - i)) / mp::pow(BigFloat(q - 1), static_cast<int>(i + 1));
    falling *= k - i;
  }
  return sum * mp::pow(BigFloat(N), 1 - static_cast<int>(q));
}

namespace {

SeriesValue truncated_nested(const Composition& s, std::uint64_t N, unsigned digits, Link link, const char* what) {
  if (s.empty() || s.parts.front() <= 1)
    throw domain_error(std::string(what) + ": requires s_1 >= 2 (divergent otherwise)");
  if (s.has_zero_part()) throw domain_error(std::string(what) + ": every part must be >= 1");
  if (N == 0) throw domain_error(std::string(what) + ": requires N >= 1");
  const unsigned work = digits + kGuardDigits;
  WorkingPrecision scope(work);
  auto stream = make_power_stream<BigFloat>(s.parts, link);
  stream.advance_to(N);

  const unsigned d = static_cast<unsigned>(s.depth());
  const unsigned s1 = s.parts.front();
  const BigFloat logN = mp::log(BigFloat(N));
  BigFloat tail;
  if (link == Link::strict) {
    tail = 2 * mp::pow(logN, static_cast<int>(d - 1)) / to_bigfloat(factorial(d - 1));
  } else {
    tail = 2 * mp::pow(logN + 1, static_cast<int>(d - 1));
  }
  tail /= (s1 - 1) * mp::pow(BigFloat(N), static_cast<int>(s1 - 1));

  SeriesValue out;
  out.value = stream.value();
  out.error_bound = tail + BigFloat(N) * (d + 2) * ten_to_minus(work);
  out.method = Method::truncation;
  out.rigorous = false;
  out.digits = digits;
  out.note = "heuristic tail estimate";
  return out;
}

}  // namespace

SeriesValue mzv_truncated(const Composition& s, std::uint64_t N, unsigned digits) {
  return truncated_nested(s, N, digits, Link::strict, "mzv_truncated");
}

SeriesValue mzsv_truncated(const Composition& s, std::uint64_t N, unsigned digits) {
  return truncated_nested(s, N, digits, Link::weak, "mzsv_truncated");
}

}  // namespace eulersum
