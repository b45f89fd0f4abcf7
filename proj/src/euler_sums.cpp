#include "eulersum/euler_sums.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "eulersum/hyperharmonic.hpp"
#include "eulersum/mhn.hpp"
#include "eulersum/nested_sum.hpp"
#include "eulersum/symmetric.hpp"

namespace eulersum {
namespace mp = boost::multiprecision;

// ---------------------------------------------------------------------------
// ZetaLinearForm

void ZetaLinearForm::add(unsigned q, unsigned j, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace({q, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

ZetaLinearForm& ZetaLinearForm::operator+=(const ZetaLinearForm& other) {
  constant += other.constant;
  for (const auto& [key, c] : other.terms) add(key.first, key.second, c);
  return *this;
}

ZetaLinearForm& ZetaLinearForm::operator*=(const Rational& c) {
  constant *= c;
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [key, v] : terms) v *= c;
  return *this;
}

unsigned ZetaLinearForm::max_weight() const {
  unsigned w = 0;
  for (const auto& [key, c] : terms) w = std::max(w, key.first + key.second);
  return w;
}

SeriesValue ZetaLinearForm::evaluate(unsigned digits) const {
  const unsigned work = digits + kGuardDigits;
  WorkingPrecision scope(work);
  BigFloat value = to_bigfloat(constant);
  BigFloat bound = 0;
  BigFloat magnitude = abs(value);
  for (const auto& [key, c] : terms) {
    SeriesValue z = mzv_height_one(key.first, key.second, digits + 5);
    const BigFloat cf = to_bigfloat(c);
    value += cf * z.value;
    bound += abs(cf) * z.error_bound;
    magnitude += abs(cf * z.value);
  }
  SeriesValue out;
  out.value = value;
  out.error_bound = bound + magnitude * (terms.size() + 2) * ten_to_minus(work);
  out.method = Method::closed_form;
  out.rigorous = true;
  out.digits = digits;
  return out;
}

std::string ZetaLinearForm::render() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& symbol) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (symbol.empty()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      os << symbol;
    }
  };
  if (constant != 0) emit(constant, "");
  for (const auto& [key, c] : terms) {
    std::string sym = "zeta(" + std::to_string(key.first);
    for (unsigned i = 0; i < key.second; ++i) sym += ",1";
    sym += ")";
    emit(c, sym);
  }
  if (first) os << '0';
  return os.str();
}

// ---------------------------------------------------------------------------
// Truncated sums

namespace {

template <class T>
struct Accumulator {
  T sum{0};
  void add(const T& x) { sum += x; }
  [[nodiscard]] T value() const { return sum; }
};

template <>
struct Accumulator<BigFloat> {
  CompensatedSum sum;
  void add(const BigFloat& x) { sum.add(x); }
  [[nodiscard]] BigFloat value() const { return sum.value(); }
};

template <class T>
T inv_pow(std::uint64_t n, unsigned p) {
  return NestedValueTraits<T>::inverse_power(n, p);
}

template <class T>
NestedSumStream<T> ones_stream(unsigned m, Link link) {
  return make_power_stream<T>(std::vector<unsigned>(m, 1), link);
}

// stream value of the sub-index {1}_q, where the stream covers {1}_m
template <class T>
const T& ones_level(const NestedSumStream<T>& s, unsigned m, unsigned q, const T& one) {
  return q == 0 ? one : s.level_value(m - q);
}

template <class T>
T u_sum(unsigned m, unsigned r, unsigned p, std::uint64_t N) {
  auto stream = ones_stream<T>(m, Link::strict);
  stream.advance_to(r);
  Accumulator<T> acc;
  for (std::uint64_t n = 1; n <= N; ++n) {
    stream.advance();
    acc.add(stream.value() * inv_pow<T>(n, p));
  }
  return acc.value();
}

template <class T>
T v_sum(unsigned m, unsigned r, unsigned p, std::uint64_t N) {
  auto stream = ones_stream<T>(m, Link::weak);
  stream.advance_to(r);
  Accumulator<T> acc;
  for (std::uint64_t n = 1; n <= N; ++n) {
    stream.advance();
    acc.add(stream.value() * inv_pow<T>(n, p));
  }
  return acc.value();
}

template <class T>
T s_sum(const EulerSumKey& key, std::uint64_t N) {
  NestedShape shape = hyperharmonic_shape(key.m, key.k, false);
  auto stream = make_power_stream<T>(shape.exponents, shape.links);
  Accumulator<T> acc;
  for (std::uint64_t n = 1; n <= N; ++n) {
    stream.advance();
    acc.add(stream.value() * inv_pow<T>(n, key.p));
  }
  return acc.value();
}

// head = sum_n zeta*_n({1}_m)/n^p, corrections[j-1] = sum_n zeta*_n({1}_{m-j}) h_j(x(n)) / n^p
// with x_i(n) = 1/(n+i), i = 1..r.
template <class T>
std::vector<T> v_parts(unsigned m, unsigned r, unsigned p, std::uint64_t N) {
  auto stream = ones_stream<T>(m, Link::weak);
  const T one = NestedValueTraits<T>::one();
  std::vector<Accumulator<T>> acc(m + 1);
  std::vector<T> h(m + 1);
  for (std::uint64_t n = 1; n <= N; ++n) {
    stream.advance();
    std::fill(h.begin(), h.end(), T(0));
    h[0] = one;
    for (unsigned i = 1; i <= r; ++i) {
      const T x = inv_pow<T>(n + i, 1);
      for (unsigned j = 1; j <= m; ++j) h[j] += x * h[j - 1];
    }
    const T np = inv_pow<T>(n, p);
    for (unsigned j = 0; j <= m; ++j) acc[j].add(ones_level(stream, m, m - j, one) * h[j] * np);
  }
  std::vector<T> out;
  out.reserve(m + 1);
  for (auto& a : acc) out.push_back(a.value());
  return out;
}

unsigned work_digits(unsigned digits) { return digits + kGuardDigits; }

SeriesValue make_truncated(std::uint64_t N, unsigned digits, bool exact, const Rational* exact_value,
                           const BigFloat* float_value, const BigFloat& tail, unsigned depth) {
  SeriesValue out;
  out.method = Method::truncation;
  out.rigorous = false;
  out.digits = digits;
  if (exact) {
    out.exact = *exact_value;
    out.value = to_bigfloat(*exact_value);
    out.error_bound = tail;
    out.note = "exact rational partial sum; heuristic tail estimate";
  } else {
    out.value = *float_value;
    out.error_bound = tail + BigFloat(N) * (depth + 4) * (1 + abs(out.value)) * ten_to_minus(work_digits(digits));
    out.note = "compensated floating summation; heuristic tail estimate";
  }
  return out;
}

BigFloat shift_slack(unsigned r, std::uint64_t N) { return 1 + BigFloat(r) / BigFloat(N); }

}  // namespace

SeriesValue u_truncated(unsigned m, unsigned r, unsigned p, std::uint64_t N, unsigned digits,
                        std::uint64_t exact_limit) {
  if (p <= 1) throw domain_error("U_truncated: requires p >= 2 (convergence)");
  if (N == 0) throw domain_error("U_truncated: requires N >= 1");
  WorkingPrecision scope(work_digits(digits));
  // zeta_{n+r}({1}_m) <= (log n + 1 + r/N)^m / m! for n > N
  const BigFloat tail = log_power_tail(N, m, p, shift_slack(r, N)) / to_bigfloat(factorial(m));
  if (N <= exact_limit) {
    const Rational v = u_sum<Rational>(m, r, p, N);
    return make_truncated(N, digits, true, &v, nullptr, tail, m);
  }
  const BigFloat v = u_sum<BigFloat>(m, r, p, N);
  return make_truncated(N, digits, false, nullptr, &v, tail, m);
}

SeriesValue v_truncated(unsigned m, unsigned r, unsigned p, std::uint64_t N, unsigned digits,
                        std::uint64_t exact_limit) {
  if (m == 0) throw domain_error("V_truncated: requires m >= 1");
  if (p <= 1) throw domain_error("V_truncated: requires p >= 2 (convergence)");
  if (N == 0) throw domain_error("V_truncated: requires N >= 1");
  WorkingPrecision scope(work_digits(digits));
  // zeta*_{n+r}({1}_m) <= (log n + 1 + r/N)^m
  const BigFloat tail = log_power_tail(N, m, p, shift_slack(r, N));
  if (N <= exact_limit) {
    const Rational v = v_sum<Rational>(m, r, p, N);
    return make_truncated(N, digits, true, &v, nullptr, tail, m);
  }
  const BigFloat v = v_sum<BigFloat>(m, r, p, N);
  return make_truncated(N, digits, false, nullptr, &v, tail, m);
}

SeriesValue s_truncated(const EulerSumKey& key, std::uint64_t N, unsigned digits, std::uint64_t exact_limit) {
  if (key.k == 0 || key.m == 0) throw domain_error("S_truncated: requires k >= 1 and m >= 1");
  if (key.p <= key.m) throw domain_error("S_truncated: requires p >= m+1 (convergence condition)");
  if (N == 0) throw domain_error("S_truncated: requires N >= 1");
  WorkingPrecision scope(work_digits(digits));
  // h_n^(r+1)(k) <= (n+r)^r / r! * (log(n+r) + 1)^k / k!
  const unsigned r = key.m - 1;
  const BigFloat slack = shift_slack(r, N);
  BigFloat tail = log_power_tail(N, key.k, key.p - r, slack) * mp::pow(slack, static_cast<int>(r));
  tail /= to_bigfloat(Integer(factorial(r) * factorial(key.k)));
  const unsigned depth = key.m + key.k - 1;
  if (N <= exact_limit) {
    const Rational v = s_sum<Rational>(key, N);
    return make_truncated(N, digits, true, &v, nullptr, tail, depth);
  }
  const BigFloat v = s_sum<BigFloat>(key, N);
  return make_truncated(N, digits, false, nullptr, &v, tail, depth);
}

std::vector<Rational> u_partial_sums(unsigned m, unsigned r, unsigned q, std::uint64_t N) {
  std::vector<Rational> out(N + 1);
  auto stream = ones_stream<Rational>(m, Link::strict);
  stream.advance_to(r);
  for (std::uint64_t n = 1; n <= N; ++n) {
    stream.advance();
    out[n] = out[n - 1] + stream.value() * inverse_power(n, q);
  }
  return out;
}

std::vector<Rational> s_partial_sums(const EulerSumKey& key, std::uint64_t N) {
  if (key.k == 0 || key.m == 0) throw domain_error("s_partial_sums: requires k >= 1 and m >= 1");
  const std::vector<Rational> h = gen_hh_direct_sequence(N, key.m, key.k);
  std::vector<Rational> out(N + 1);
  for (std::uint64_t n = 1; n <= N; ++n) out[n] = out[n - 1] + h[n] * inverse_power(n, key.p);
  return out;
}

std::vector<Rational> s_partial_sums_via_u(unsigned k, unsigned r, unsigned p, std::uint64_t N) {
  if (p < r + 2) throw domain_error("s_partial_sums_via_u: requires p >= r+2");
  std::vector<Rational> out(N + 1);
  const Rational inv_rfact(Integer(1), factorial(r));
  for (unsigned l = 1; l <= r + 1; ++l) {
    const Rational sl = Rational(stirling1(r + 1, l)) * inv_rfact;
    for (unsigned i = 0; i <= k; ++i) {
      Rational c = sl * mhsn(r, Composition::ones(i));
      if (i % 2) c = -c;
      if (c == 0) continue;
      const std::vector<Rational> u = u_partial_sums(k - i, r, p + 1 - l, N);
      for (std::uint64_t n = 0; n <= N; ++n) out[n] += c * u[n];
    }
  }
  return out;
}

VDecomposition v_decomposition(unsigned m, unsigned r, unsigned p, std::uint64_t N, unsigned digits,
                               std::uint64_t exact_limit) {
  if (m == 0) throw domain_error("V decomposition: requires m >= 1");
  if (p <= 1) throw domain_error("V decomposition: requires p >= 2 (convergence)");
  if (N == 0) throw domain_error("V decomposition: requires N >= 1");
  WorkingPrecision scope(work_digits(digits));
  const bool exact = N <= exact_limit;
  std::vector<Rational> exact_parts;
  std::vector<BigFloat> float_parts;
  if (exact) exact_parts = v_parts<Rational>(m, r, p, N);
  else float_parts = v_parts<BigFloat>(m, r, p, N);

  VDecomposition out;
  Rational exact_total;
  BigFloat float_total = 0;
  BigFloat total_tail = 0;
  for (unsigned j = 0; j <= m; ++j) {
    // zeta*_n({1}_{m-j}) h_j(x(n)) <= C(r+j-1, j) (log n + 1)^{m-j} / n^j
    BigFloat tail = log_power_tail(N, m - j, p + j, BigFloat(1));
    if (j > 0) tail *= to_bigfloat(binomial(r + j - 1, j));
    total_tail += tail;
    SeriesValue part = exact ? make_truncated(N, digits, true, &exact_parts[j], nullptr, tail, m)
                             : make_truncated(N, digits, false, nullptr, &float_parts[j], tail, m);
    if (exact) exact_total += exact_parts[j];
    else float_total += float_parts[j];
    if (j == 0) out.star_head = std::move(part);
    else out.corrections.push_back(std::move(part));
  }
  out.total = exact ? make_truncated(N, digits, true, &exact_total, nullptr, total_tail, m)
                    : make_truncated(N, digits, false, nullptr, &float_total, total_tail, m);
  return out;
}

// ---------------------------------------------------------------------------
// Closed forms

namespace {

// calls f(tuple) for every strictly decreasing i_1 > ... > i_j drawn from 1..r
void for_each_strict_tuple(unsigned r, unsigned j, const std::function<void(const std::vector<unsigned>&)>& f) {
  if (j > r) return;
  std::vector<unsigned> t(j);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned upper) {
    if (pos == j) {
      f(t);
      return;
    }
    for (unsigned v = upper; v >= j - pos; --v) {
      t[pos] = v;
      rec(pos + 1, v - 1);
      if (v == 0) break;
    }
  };
  rec(0, r);
}

// A_l = prod_{a != l} 1/(i_a - i_l)
Rational residue(const std::vector<unsigned>& tuple, std::size_t l) {
  Rational prod = 1;
  for (std::size_t a = 0; a < tuple.size(); ++a)
    if (a != l) prod /= static_cast<long>(tuple[a]) - static_cast<long>(tuple[l]);
  return prod;
}

}  // namespace

ZetaLinearForm u_closed_form(unsigned m, unsigned r, unsigned p) {
  if (p <= 1) throw domain_error("U_closed: requires p >= 2 (convergence)");
  ZetaLinearForm form;
  if (m == 0) {
    form.add(p, 0, 1);
    return form;
  }
  form.add(p, m, 1);
  form.add(p + 1, m - 1, 1);
  const Rational sign_p = (p - 1) % 2 ? Rational(-1) : Rational(1);

  for (unsigned j = 1; j <= m; ++j) {
    const unsigned q = m - j;
    for_each_strict_tuple(r, j, [&](const std::vector<unsigned>& tuple) {
      for (std::size_t l = 0; l < tuple.size(); ++l) {
        const unsigned c = tuple[l];
        const Rational A = residue(tuple, l);
        const Rational A_over_cp = A * inverse_power(c, p);
        if (q == 0) {
          // (-1)^{p-1} A H_c / c^p  +  sum_b (-1)^{b-1} A zeta(p+1-b) / c^b
          form.constant += sign_p * A_over_cp * harmonic(c);
          for (unsigned b = 1; b < p; ++b) {
            const Rational cb = (b - 1) % 2 ? Rational(-A * inverse_power(c, b)) : Rational(A * inverse_power(c, b));
            form.add(p + 1 - b, 0, cb);
          }
        } else {
          // (-1)^{p-1} A { zeta(q+1) + zeta*_c({1}_{q+1}) - zeta*_c({1}_q)/c } / c^p
          form.add(q + 1, 0, sign_p * A_over_cp);
          form.constant += sign_p * A_over_cp *
                           (mhsn(c, Composition::ones(q + 1)) - mhsn(c, Composition::ones(q)) / Rational(c));
          // sum_b (-1)^{b-1} A { zeta(p+1-b, {1}_q) + zeta(p+2-b, {1}_{q-1}) } / c^b
          for (unsigned b = 1; b < p; ++b) {
            const Rational cb = (b - 1) % 2 ? Rational(-A * inverse_power(c, b)) : Rational(A * inverse_power(c, b));
            form.add(p + 1 - b, q, cb);
            form.add(p + 2 - b, q - 1, cb);
          }
        }
      }
    });
  }
  return form;
}

ZetaLinearForm s_closed_form(unsigned k, unsigned r, unsigned p) {
  if (k == 0) throw domain_error("S_closed: requires k >= 1");
  if (p < r + 2) throw domain_error("S_closed: requires p >= r+2 (convergence condition p >= m+1)");
  ZetaLinearForm form;
  const Rational inv_rfact(Integer(1), factorial(r));
  for (unsigned l = 1; l <= r + 1; ++l) {
    const Rational sl = Rational(stirling1(r + 1, l)) * inv_rfact;
    for (unsigned i = 0; i <= k; ++i) {
      Rational c = sl * mhsn(r, Composition::ones(i));
      if (i % 2) c = -c;
      if (c == 0) continue;
      ZetaLinearForm u = u_closed_form(k - i, r, p + 1 - l);
      u *= c;
      form += u;
    }
  }
  return form;
}

SeriesValue u_closed(unsigned m, unsigned r, unsigned p, unsigned digits) {
  if (m == 0) throw domain_error("U_closed: requires m >= 1");
  SeriesValue v = u_closed_form(m, r, p).evaluate(digits);
  return v;
}

SeriesValue s_closed(unsigned k, unsigned r, unsigned p, unsigned digits) {
  return s_closed_form(k, r, p).evaluate(digits);
}

// ---------------------------------------------------------------------------
// Partial fractions

Rational PartialFractionDecomposition::evaluate(const Rational& n) const {
  Rational acc;
  for (std::size_t j = 0; j < poles.size(); ++j) {
    const Rational den = n + poles[j];
    if (den == 0) throw domain_error("partial fraction evaluated at a pole");
    acc += residues[j] / den;
  }
  return acc;
}

PartialFractionDecomposition partial_fractions(std::span<const Rational> shifts) {
  for (std::size_t i = 0; i < shifts.size(); ++i)
    for (std::size_t j = i + 1; j < shifts.size(); ++j)
      if (shifts[i] == shifts[j])
        throw domain_error("partial_fractions: repeated shift " + shifts[i].get_str() + " (poles must be simple)");
  PartialFractionDecomposition out;
  out.poles.assign(shifts.begin(), shifts.end());
  for (std::size_t l = 0; l < shifts.size(); ++l) {
    Rational prod = 1;
    for (std::size_t a = 0; a < shifts.size(); ++a)
      if (a != l) prod /= shifts[a] - shifts[l];
    out.residues.push_back(prod);
  }
  return out;
}

PartialFractionDecomposition partial_fractions(std::span<const unsigned> shifts) {
  std::vector<Rational> q;
  q.reserve(shifts.size());
  for (unsigned s : shifts) q.emplace_back(s);
  return partial_fractions(std::span<const Rational>(q));
}

Rational NpSplit::recombine(const Rational& n) const {
  if (n == 0 || n + r == 0) throw domain_error("NpSplit::recombine: n is a pole");
  Rational acc;
  std::vector<Rational> pows(p + 1);
  pows[0] = 1;
  for (unsigned e = 1; e <= p; ++e) pows[e] = pows[e - 1] * n;
  for (unsigned b = 1; b < p; ++b) acc += coefficients[b - 1] / pows[p + 1 - b];
  acc += terminal / (n * (n + r));
  return acc;
}

NpSplit split_np(unsigned p, unsigned r) {
  if (r == 0) throw domain_error("split_np: requires r >= 1");
  if (p < 2) throw domain_error("split_np: requires p >= 2");
  NpSplit out;
  out.p = p;
  out.r = r;
  for (unsigned b = 1; b < p; ++b) {
    Rational c = inverse_power(r, b);
    out.coefficients.push_back((b - 1) % 2 ? Rational(-c) : c);
  }
  Rational t = inverse_power(r, p - 1);
  out.terminal = (p - 1) % 2 ? Rational(-t) : t;
  return out;
}

// ---------------------------------------------------------------------------
// Stirling series

Rational stirling_series_rational_part(unsigned p, unsigned k) {
  if (p < 2 || k == 0) throw domain_error("stirling series: requires p >= 2 and k >= 1");
  const Rational kk(k);
  return (mhsn(k, Composition::ones(p)) - mhsn(k, Composition::ones(p - 1)) / kk) / kk;
}

Rational stirling_series_rational_part_bell(unsigned p, unsigned k) {
  if (p < 2 || k == 0) throw domain_error("stirling series: requires p >= 2 and k >= 1");
  const Rational kk(k);
  Rational v = (bell_harmonic(p, k) / Rational(p) - bell_harmonic(p - 1, k) / kk) / kk;
  return v / Rational(factorial(p - 1));
}

VerificationReport lemma24_check(unsigned p, unsigned k, std::uint64_t N, unsigned digits, double margin) {
  if (p <= 1) throw domain_error("lemma24_check: requires p >= 2");
  if (k == 0) throw domain_error("lemma24_check: requires k >= 1");
  if (N == 0) throw domain_error("lemma24_check: requires N >= 1");
  const unsigned work = digits + kGuardDigits;
  WorkingPrecision scope(work);
  const unsigned q = p - 1;
  const Integer qfact = factorial(q);

  // left: (p-1)! sum_{n<=N} zeta_n({1}_{p-1}) / (n (n+k)), with [n+1, p] / n! = zeta_n({1}_{p-1})
  SeriesValue lhs;
  {
    auto term_weight = [k](std::uint64_t n) { return Rational(Integer(1), Integer(n) * Integer(n + k)); };
    // (p-1)! zeta_n({1}_{p-1}) <= (log n + 1)^{p-1}
    const BigFloat tail = log_power_tail(N, q, 2, BigFloat(1));
    if (N <= kExactTermLimit) {
      auto stream = ones_stream<Rational>(q, Link::strict);
      Rational acc;
      for (std::uint64_t n = 1; n <= N; ++n) {
        stream.advance();
        acc += stream.value() * term_weight(n);
      }
      acc *= Rational(qfact);
      lhs = make_truncated(N, digits, true, &acc, nullptr, tail, q);
    } else {
      auto stream = ones_stream<BigFloat>(q, Link::strict);
      CompensatedSum acc;
      for (std::uint64_t n = 1; n <= N; ++n) {
        stream.advance();
        acc.add(stream.value() / (BigFloat(n) * BigFloat(n + k)));
      }
      BigFloat v = acc.value() * to_bigfloat(qfact);
      lhs = make_truncated(N, digits, false, nullptr, &v, tail, q);
    }
  }

  // right: (1/k){ (p-1)! zeta(p) + Y_p(k)/p - Y_{p-1}(k)/k }
  const Rational bell_part = stirling_series_rational_part_bell(p, k) * Rational(qfact);
  const Rational star_part = stirling_series_rational_part(p, k) * Rational(qfact);
  const bool equivalent = bell_part == star_part;
  SeriesValue z = riemann_zeta(p, digits + 5);
  SeriesValue rhs;
  rhs.value = to_bigfloat(make_rational(qfact, Integer(k))) * z.value + to_bigfloat(bell_part);
  rhs.error_bound = to_bigfloat(make_rational(qfact, Integer(k))) * z.error_bound + 4 * ten_to_minus(work);
  rhs.method = Method::closed_form;
  rhs.rigorous = true;
  rhs.digits = digits;

  IdentityCase c{IdentityId::stirling_series_closed,
                 {{"p", Rational(p)}, {"k", Rational(k)}, {"N", Rational(static_cast<unsigned long>(N))}},
                 CheckMode::numeric};
  VerificationReport rep = compare_numeric(c, lhs, rhs, margin);
  if (!equivalent) {
    rep.pass = false;
    rep.note = "Bell and star-harmonic closed right sides differ: " + bell_part.get_str() + " vs " + star_part.get_str();
  } else {
    rep.note = "Bell and star-harmonic closed right sides agree exactly";
  }
  return rep;
}

}  // namespace eulersum
