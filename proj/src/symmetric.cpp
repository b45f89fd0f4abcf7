#include "eulersum/symmetric.hpp"

#include <mutex>
#include <shared_mutex>

#include "eulersum/mhn.hpp"

namespace eulersum {

WeightSequence WeightSequence::slice(std::size_t offset, std::size_t count) const {
  if (offset + count > weights.size()) throw domain_error("WeightSequence::slice out of range");
  return {std::vector<Rational>(weights.begin() + static_cast<std::ptrdiff_t>(offset),
                                weights.begin() + static_cast<std::ptrdiff_t>(offset + count))};
}

struct StirlingTable::Impl {
  std::shared_mutex mutex;
  std::vector<std::vector<Integer>> rows{{Integer(1)}};  // [0 0] = 1

  void grow_to(unsigned n) {
    while (rows.size() <= n) {
      const auto& prev = rows.back();
      const unsigned m = static_cast<unsigned>(rows.size()) - 1;  // prev is row m
      std::vector<Integer> next(m + 2);
      for (unsigned k = 1; k <= m + 1; ++k) {
        Integer v = k <= m ? Integer(prev[k] * m) : Integer(0);
        v += prev[k - 1];
        next[k] = v;
      }
      rows.push_back(std::move(next));
    }
  }
};

StirlingTable::StirlingTable() : impl_(std::make_unique<Impl>()) {}
StirlingTable::~StirlingTable() = default;

StirlingTable& StirlingTable::shared() {
  static StirlingTable table;
  return table;
}

Integer StirlingTable::get(unsigned n, unsigned k) {
  if (k > n) return Integer(0);
  {
    std::shared_lock lock(impl_->mutex);
    if (impl_->rows.size() > n) return impl_->rows[n][k];
  }
  std::unique_lock lock(impl_->mutex);
  impl_->grow_to(n);
  return impl_->rows[n][k];
}

std::vector<Integer> StirlingTable::row(unsigned n) {
  std::unique_lock lock(impl_->mutex);
  impl_->grow_to(n);
  return impl_->rows[n];
}

Integer stirling1(unsigned n, unsigned k) { return StirlingTable::shared().get(n, k); }

Rational bell_complete(unsigned k, std::span<const Rational> x) {
  if (x.size() < k) throw domain_error("bell_complete: requires at least k arguments");
  std::vector<Rational> y(k + 1);
  y[0] = 1;
  for (unsigned j = 1; j <= k; ++j) {
    Rational acc;
    for (unsigned i = 0; i < j; ++i) acc += Rational(binomial(j - 1, i)) * y[i] * x[j - i - 1];
    y[j] = acc;
  }
  return y[k];
}

Rational bell_harmonic(unsigned k, std::uint64_t n) {
  std::vector<Rational> x;
  x.reserve(k);
  for (unsigned r = 1; r <= k; ++r) x.push_back(Rational(factorial(r - 1)) * harmonic(n, r));
  return bell_complete(k, x);
}

Rational elementary_sum(unsigned m, const WeightSequence& w) {
  if (m > w.size()) return Rational(0);
  // e[j] after processing a_1..a_i; descending j keeps the strict ordering.
  std::vector<Rational> e(m + 1);
  e[0] = 1;
  for (const Rational& a : w.weights)
    for (unsigned j = m; j >= 1; --j) e[j] += a * e[j - 1];
  return e[m];
}

Rational complete_sum(unsigned m, const WeightSequence& w) {
  if (m == 0) return Rational(1);
  // ascending j lets a_i be reused, giving the weak ordering.
  std::vector<Rational> h(m + 1);
  h[0] = 1;
  for (const Rational& a : w.weights)
    for (unsigned j = 1; j <= m; ++j) h[j] += a * h[j - 1];
  return h[m];
}

std::vector<Rational> newton_elementary(std::span<const Rational> power_sums, unsigned m, const Rational& base) {
  if (power_sums.size() < m) throw domain_error("newton_elementary: requires m power sums");
  std::vector<Rational> e(m + 1);
  e[0] = base;
  for (unsigned k = 1; k <= m; ++k) {
    Rational acc;
    for (unsigned i = 0; i < k; ++i) {
      Rational term = e[i] * power_sums[k - i - 1];
      if (i % 2) acc -= term;
      else acc += term;
    }
    acc /= k;
    e[k] = (k - 1) % 2 ? Rational(-acc) : acc;
  }
  return e;
}

Rational bbar_recurrence(unsigned m, const WeightSequence& w) {
  if (m == 0) throw domain_error("bbar_recurrence: requires m >= 1");
  std::vector<Rational> p(m);
  for (unsigned j = 1; j <= m; ++j) {
    Rational s;
    for (const Rational& a : w.weights) {
      Rational t = 1;
      for (unsigned e = 0; e < j; ++e) t *= a;
      s += t;
    }
    p[j - 1] = s;
  }
  return newton_elementary(p, m)[m];
}

Integer binomial_via_stirling(unsigned long n, unsigned r) {
  Integer acc;
  Integer npow = 1;
  for (unsigned l = 1; l <= r + 1; ++l) {
    acc += stirling1(r + 1, l) * npow;
    npow *= n;
  }
  Integer f = factorial(r);
  if (!mpz_divisible_p(acc.get_mpz_t(), f.get_mpz_t()))
    throw std::logic_error("binomial_via_stirling: sum not divisible by r!");
  return acc / f;
}

}  // namespace eulersum
