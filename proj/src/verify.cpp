#include "eulersum/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

#include "json.hpp"

#include "eulersum/euler_sums.hpp"
#include "eulersum/hyperharmonic.hpp"
#include "eulersum/mhn.hpp"
#include "eulersum/zeta.hpp"

namespace eulersum {

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::exact: return "exact";
    case Suite::numeric: return "numeric";
    case Suite::all: return "all";
  }
  return "all";
}

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "exact") return Suite::exact;
  if (name == "numeric") return Suite::numeric;
  if (name == "all") return Suite::all;
  return std::nullopt;
}

void GridLimits::validate() const {
  if (n > kMaxN) throw domain_error("grid limit n must be <= " + std::to_string(kMaxN));
  if (depth > kMaxDepth) throw domain_error("grid limit depth must be <= " + std::to_string(kMaxDepth));
  if (r > kMaxR) throw domain_error("grid limit r must be <= " + std::to_string(kMaxR));
  if (N < kMinTruncation || N > kMaxTruncation)
    throw domain_error("grid limit N must lie in [" + std::to_string(kMinTruncation) + ", " +
                       std::to_string(kMaxTruncation) + "]");
  if (partial_N < 1 || partial_N > kMaxPartial)
    throw domain_error("grid limit partial_N must lie in [1, " + std::to_string(kMaxPartial) + "]");
}

WeightSequence random_weights(std::size_t len, std::uint64_t seed, bool distinct) {
  // 19 numerators x 9 denominators, fewer distinct values after reduction
  if (distinct && len > 55) throw domain_error("random_weights: too many distinct values requested");
  std::mt19937_64 gen(seed);
  WeightSequence w;
  std::set<Rational> seen;
  while (w.weights.size() < len) {
    const long num = static_cast<long>(gen() % 19) - 9;
    const unsigned long den = gen() % 9 + 1;
    Rational q = make_rational(num, den);
    if (distinct && !seen.insert(q).second) continue;
    w.weights.push_back(std::move(q));
  }
  return w;
}

namespace {

using Clock = std::chrono::steady_clock;
using Params = std::vector<std::pair<std::string, Rational>>;

Rational R(std::uint64_t v) { return Rational(static_cast<unsigned long>(v)); }

class Runner {
 public:
  explicit Runner(const SuiteOptions& o) : opt(o) {}

  void run(IdentityId id, Params params, CheckMode mode, const std::function<VerificationReport(const IdentityCase&)>& f) {
    IdentityCase c{id, std::move(params), mode};
    const auto t0 = Clock::now();
    VerificationReport rep;
    try {
      rep = f(c);
    } catch (const std::exception& e) {
      rep = VerificationReport{};
      rep.identity = c;
      rep.pass = false;
      rep.note = std::string("error: ") + e.what();
    }
    rep.identity.params = c.params;
    rep.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0);
    out.push_back(std::move(rep));
  }

  const SuiteOptions& opt;
  std::vector<VerificationReport> out;
};

unsigned lim(unsigned family_default, unsigned limit) { return std::min(family_default, limit); }

// sum_{i+j=m} (-1)^i a_i b_j
Rational signed_convolution(unsigned m, const std::function<Rational(unsigned)>& a,
                            const std::function<Rational(unsigned)>& b) {
  Rational acc;
  for (unsigned i = 0; i <= m; ++i) {
    Rational t = a(i) * b(m - i);
    if (i % 2) acc -= t;
    else acc += t;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// exact families

void stirling_as_harmonic(Runner& run) {
  const unsigned nmax = lim(30, run.opt.grid.n);
  for (unsigned n = 1; n <= nmax; ++n)
    for (unsigned k = 1; k <= n; ++k)
      run.run(IdentityId::stirling_as_harmonic, {{"n", R(n)}, {"k", R(k)}}, CheckMode::exact, [=](const IdentityCase& c) {
        const Rational lhs(stirling1(n, k));
        const Rational rhs = Rational(factorial(n - 1)) * mhn(n - 1, Composition::ones(k - 1));
        return compare_exact(c, lhs, rhs);
      });
}

void hyperharmonic_routes(Runner& run) {
  const unsigned nmax = lim(10, run.opt.grid.n);
  const unsigned dmax = lim(5, run.opt.grid.depth);
  for (unsigned n = 1; n <= nmax; ++n)
    for (unsigned m = 1; m <= dmax; ++m)
      for (unsigned k = 1; k <= dmax; ++k)
        run.run(IdentityId::hyperharmonic_routes, {{"n", R(n)}, {"m", R(m)}, {"k", R(k)}}, CheckMode::exact,
                [=](const IdentityCase& c) {
                  const Rational direct = gen_hh_direct({n, m, k});
                  const Rational rec = gen_hh_recurrence({n, m, k});
                  const Rational closed = gen_hh_closed(n, m - 1, k);
                  VerificationReport rep = compare_exact(c, direct, rec);
                  if (closed != direct) {
                    rep.pass = false;
                    rep.note = "closed form gives " + closed.get_str();
                  } else {
                    rep.note = "direct, recurrence and closed form agree";
                  }
                  return rep;
                });
}

void star_ones_bell(Runner& run) {
  const unsigned nmax = lim(20, run.opt.grid.n);
  const unsigned dmax = lim(6, run.opt.grid.depth);
  for (unsigned n = 0; n <= nmax; ++n)
    for (unsigned m = 0; m <= dmax; ++m)
      run.run(IdentityId::star_ones_bell, {{"n", R(n)}, {"m", R(m)}}, CheckMode::exact, [=](const IdentityCase& c) {
        const Rational lhs = mhsn(n, Composition::ones(m));
        const Rational rhs = bell_harmonic(m, n) / Rational(factorial(m));
        return compare_exact(c, lhs, rhs);
      });
}

void elementary_complete_convolution(Runner& run) {
  const unsigned lmax = lim(8, run.opt.grid.depth + 2);
  const unsigned dmax = lim(6, run.opt.grid.depth);
  for (unsigned len = 0; len <= lmax; ++len)
    for (unsigned variant = 0; variant < 3; ++variant) {
      const std::uint64_t seed = run.opt.seed * 1000 + len * 10 + variant;
      for (unsigned m = 1; m <= dmax; ++m)
        run.run(IdentityId::elementary_complete_convolution,
                {{"length", R(len)}, {"m", R(m)}, {"seed", R(seed)}}, CheckMode::exact, [=](const IdentityCase& c) {
                  const WeightSequence w = random_weights(len, seed);
                  const Rational lhs = signed_convolution(
                      m, [&](unsigned i) { return elementary_sum(i, w); }, [&](unsigned j) { return complete_sum(j, w); });
                  return compare_exact(c, lhs, Rational(0));
                });
    }
}

void shifted_ones_convolution(Runner& run) {
  const unsigned nmax = lim(12, run.opt.grid.n);
  const unsigned dmax = lim(6, run.opt.grid.depth);
  const unsigned rmax = lim(6, run.opt.grid.r);
  for (unsigned n = 1; n <= nmax; ++n)
    for (unsigned m = 1; m <= dmax; ++m)
      for (unsigned r = 0; r <= rmax; ++r)
        run.run(IdentityId::shifted_ones_convolution, {{"n", R(n)}, {"m", R(m)}, {"r", R(r)}}, CheckMode::exact,
                [=](const IdentityCase& c) {
                  const Rational lhs = shifted_mhn(n, m, r);
                  const Rational rhs = signed_convolution(
                      m, [&](unsigned i) { return mhsn(r, Composition::ones(i)); },
                      [&](unsigned j) { return mhn(n + r, Composition::ones(j)); });
                  return compare_exact(c, lhs, rhs);
                });
}

void shifted_power(Runner& run, Link link) {
  const IdentityId id = link == Link::strict ? IdentityId::shifted_power_strict : IdentityId::shifted_power_weak;
  const unsigned nmax = lim(8, run.opt.grid.n);
  const unsigned dmax = lim(4, run.opt.grid.depth);
  const unsigned rmax = lim(4, run.opt.grid.r);
  for (unsigned p = 1; p <= 3; ++p)
    for (unsigned n = 1; n <= nmax; ++n)
      for (unsigned m = 1; m <= dmax; ++m)
        for (unsigned r = 0; r <= rmax; ++r)
          run.run(id, {{"p", R(p)}, {"n", R(n)}, {"m", R(m)}, {"r", R(r)}}, CheckMode::exact,
                  [=](const IdentityCase&) { return check_thm_2_7(Rational(p), n, m, r, link); });
}

void shifted_power_real(Runner& run, Link link) {
  const IdentityId id = link == Link::strict ? IdentityId::shifted_power_strict : IdentityId::shifted_power_weak;
  const unsigned nmax = lim(4, run.opt.grid.n);
  const unsigned dmax = lim(3, run.opt.grid.depth);
  const unsigned rmax = lim(2, run.opt.grid.r);
  const Rational p(3, 2);
  for (unsigned n = 1; n <= nmax; ++n)
    for (unsigned m = 1; m <= dmax; ++m)
      for (unsigned r = 0; r <= rmax; ++r)
        run.run(id, {{"p", p}, {"n", R(n)}, {"m", R(m)}, {"r", R(r)}}, CheckMode::numeric,
                [=](const IdentityCase&) { return check_thm_2_7(p, n, m, r, link); });
}

void hyperharmonic_closed_shifted(Runner& run) {
  const unsigned nmax = lim(10, run.opt.grid.n);
  const unsigned dmax = lim(5, run.opt.grid.depth);
  const unsigned rmax = lim(4, run.opt.grid.r);
  for (unsigned n = 1; n <= nmax; ++n)
    for (unsigned r = 0; r <= rmax; ++r)
      for (unsigned k = 1; k <= dmax; ++k)
        run.run(IdentityId::hyperharmonic_closed_shifted, {{"n", R(n)}, {"r", R(r)}, {"k", R(k)}}, CheckMode::exact,
                [=](const IdentityCase& c) {
                  const Rational lhs = gen_hh_direct({n, r + 1, k});
                  const Rational rhs = gen_hh_closed(n, r, k);
                  const Rational shifted = Rational(binomial(n + r, r)) * shifted_mhn(n, k, r);
                  VerificationReport rep = compare_exact(c, lhs, rhs);
                  if (shifted != lhs) {
                    rep.pass = false;
                    rep.note = "binomial times shifted sum gives " + shifted.get_str();
                  }
                  return rep;
                });
}

void bell_star_rhs_equivalence(Runner& run) {
  const unsigned pmax = lim(6, run.opt.grid.depth);
  const unsigned kmax = lim(10, run.opt.grid.n);
  for (unsigned p = 2; p <= pmax; ++p)
    for (unsigned k = 1; k <= kmax; ++k)
      run.run(IdentityId::bell_star_rhs_equivalence, {{"p", R(p)}, {"k", R(k)}}, CheckMode::exact,
              [=](const IdentityCase& c) {
                return compare_exact(c, stirling_series_rational_part_bell(p, k), stirling_series_rational_part(p, k));
              });
}

void binomial_stirling(Runner& run) {
  const unsigned nmax = lim(10, run.opt.grid.n);
  const unsigned rmax = lim(10, run.opt.grid.r + 4);
  for (unsigned n = 0; n <= nmax; ++n)
    for (unsigned r = 0; r <= rmax; ++r)
      run.run(IdentityId::binomial_stirling, {{"n", R(n)}, {"r", R(r)}}, CheckMode::exact, [=](const IdentityCase& c) {
        return compare_exact(c, Rational(binomial(n + r, r)), Rational(binomial_via_stirling(n, r)));
      });
}

void hyperharmonic_stirling(Runner& run) {
  const unsigned nmax = lim(10, run.opt.grid.n);
  const unsigned kmax = lim(4, run.opt.grid.depth);
  const unsigned rmax = lim(4, run.opt.grid.r);
  for (unsigned n = 1; n <= nmax; ++n)
    for (unsigned k = 1; k <= kmax; ++k)
      for (unsigned r = 0; r <= rmax; ++r)
        run.run(IdentityId::hyperharmonic_stirling, {{"n", R(n)}, {"k", R(k)}, {"r", R(r)}}, CheckMode::exact,
                [=](const IdentityCase& c) {
                  return compare_exact(c, gen_hh_direct({n, r + 1, k}), gen_hh_stirling(n, r, k));
                });
}

void s_partial_sum_family(Runner& run) {
  const std::uint64_t N = std::min<std::uint64_t>(200, run.opt.grid.partial_N);
  const unsigned kmax = lim(4, run.opt.grid.depth);
  const unsigned rmax = lim(3, run.opt.grid.r);
  for (unsigned k = 1; k <= kmax; ++k)
    for (unsigned r = 0; r <= rmax; ++r)
      for (unsigned p = r + 2; p <= 6; ++p)
        run.run(IdentityId::s_partial_sums, {{"k", R(k)}, {"r", R(r)}, {"p", R(p)}, {"N", R(N)}}, CheckMode::exact,
                [=](const IdentityCase& c) {
                  const auto lhs = s_partial_sums({k, r + 1, p}, N);
                  const auto rhs = s_partial_sums_via_u(k, r, p, N);
                  VerificationReport rep = compare_exact(c, lhs[N], rhs[N]);
                  for (std::uint64_t n = 1; n <= N; ++n) {
                    if (lhs[n] != rhs[n]) {
                      rep.pass = false;
                      rep.note = "prefix " + std::to_string(n) + " differs";
                      return rep;
                    }
                  }
                  rep.note = "all " + std::to_string(N) + " prefixes agree";
                  return rep;
                });
}

// line 1: zeta_{n+r}({1}_m) = zeta_n({1}_m) + sum_{k=1}^r zeta_{n+k-1}({1}_{m-1}) / (n+k)
// line 2: zeta_{n+r}({1}_m) = zeta_n({1}_m) + sum_j e_j(1/(n+1), ..., 1/(n+r)) zeta_n({1}_{m-j})
// both summed against 1/n^p up to N
void u_shift_expansion(Runner& run) {
  const std::uint64_t N = std::min<std::uint64_t>(200, run.opt.grid.partial_N);
  const unsigned mmax = lim(4, run.opt.grid.depth);
  const unsigned rmax = lim(4, run.opt.grid.r);
  for (unsigned line = 1; line <= 2; ++line)
    for (unsigned m = 1; m <= mmax; ++m)
      for (unsigned r = 0; r <= rmax; ++r)
        for (unsigned p = 2; p <= 4; ++p)
          run.run(IdentityId::u_shift_expansion,
                  {{"line", R(line)}, {"m", R(m)}, {"r", R(r)}, {"p", R(p)}, {"N", R(N)}}, CheckMode::exact,
                  [=](const IdentityCase& c) {
                    const Rational lhs = u_partial_sums(m, r, p, N)[N];
                    Rational rhs = u_partial_sums(m, 0, p, N)[N];
                    if (line == 1) {
                      for (unsigned k = 1; k <= r; ++k) {
                        auto stream = make_power_stream<Rational>(std::vector<unsigned>(m - 1, 1), Link::strict);
                        stream.advance_to(k - 1);
                        for (std::uint64_t n = 1; n <= N; ++n) {
                          stream.advance();
                          rhs += stream.value() * inverse_power(n, p) / Rational(static_cast<unsigned long>(n + k));
                        }
                      }
                    } else {
                      auto stream = make_power_stream<Rational>(std::vector<unsigned>(m, 1), Link::strict);
                      for (std::uint64_t n = 1; n <= N; ++n) {
                        stream.advance();
                        WeightSequence w;
                        for (unsigned i = 1; i <= r; ++i) w.weights.push_back(inverse_power(n + i, 1));
                        const Rational np = inverse_power(n, p);
                        for (unsigned j = 1; j <= m; ++j) {
                          const Rational inner = j == m ? Rational(1) : stream.level_value(j);
                          rhs += elementary_sum(j, w) * inner * np;
                        }
                      }
                    }
                    return compare_exact(c, lhs, rhs);
                  });
}

void np_split_family(Runner& run) {
  const unsigned pmax = lim(6, run.opt.grid.depth);
  const unsigned rmax = lim(6, run.opt.grid.r);
  for (unsigned p = 2; p <= pmax; ++p)
    for (unsigned r = 1; r <= rmax; ++r) {
      const NpSplit split = split_np(p, r);
      for (unsigned n = 1; n <= p + 3; ++n)
        run.run(IdentityId::np_split, {{"p", R(p)}, {"r", R(r)}, {"n", R(n)}}, CheckMode::exact,
                [=](const IdentityCase& c) {
                  const Rational lhs = inverse_power(n, p) / Rational(n + r);
                  return compare_exact(c, lhs, split.recombine(Rational(n)));
                });
    }
}

// ---------------------------------------------------------------------------
// numeric families

void u_closed_vs_truncated(Runner& run) {
  const unsigned mmax = lim(3, run.opt.grid.depth);
  const unsigned rmax = lim(3, run.opt.grid.r);
  const std::uint64_t N = run.opt.grid.N;
  for (unsigned m = 1; m <= mmax; ++m)
    for (unsigned r = 0; r <= rmax; ++r)
      for (unsigned p = 2; p <= 5; ++p)
        run.run(IdentityId::u_closed_vs_truncated, {{"m", R(m)}, {"r", R(r)}, {"p", R(p)}, {"N", R(N)}},
                CheckMode::numeric, [&, m, r, p](const IdentityCase& c) {
                  SeriesValue closed = u_closed(m, r, p, run.opt.digits);
                  SeriesValue trunc = u_truncated(m, r, p, N, run.opt.digits);
                  VerificationReport rep = compare_numeric(c, closed, trunc, run.opt.margin);
                  rep.note = trunc.note;
                  return rep;
                });
}

void stirling_series_family(Runner& run) {
  const unsigned pmax = lim(4, run.opt.grid.depth);
  const unsigned kmax = lim(5, run.opt.grid.n);
  for (unsigned p = 2; p <= pmax; ++p)
    for (unsigned k = 1; k <= kmax; ++k)
      run.run(IdentityId::stirling_series_closed, {{"p", R(p)}, {"k", R(k)}, {"N", R(run.opt.grid.N)}},
              CheckMode::numeric,
              [&, p, k](const IdentityCase&) { return lemma24_check(p, k, run.opt.grid.N, run.opt.digits, run.opt.margin); });
}

void s_closed_vs_truncated(Runner& run) {
  const EulerSumKey grid[] = {{1, 1, 2}, {1, 1, 3}, {2, 1, 3}, {1, 2, 3}, {2, 2, 4}, {3, 1, 4}};
  const std::uint64_t N = run.opt.grid.N;
  for (const auto& key : grid) {
    if (key.k > run.opt.grid.depth || key.m - 1 > run.opt.grid.r) continue;
    run.run(IdentityId::s_closed_vs_truncated, {{"k", R(key.k)}, {"m", R(key.m)}, {"p", R(key.p)}, {"N", R(N)}},
            CheckMode::numeric, [&, key](const IdentityCase& c) {
              SeriesValue closed = s_closed(key.k, key.m - 1, key.p, run.opt.digits);
              SeriesValue trunc = s_truncated(key, N, run.opt.digits);
              VerificationReport rep = compare_numeric(c, closed, trunc, run.opt.margin);
              rep.note = trunc.note;
              return rep;
            });
  }
}

SeriesValue table_entry(const BivariateSeries& t, unsigned i, unsigned j) {
  SeriesValue v;
  v.value = t.coefficient(i, j);
  v.error_bound = t.error_bound(i, j);
  v.method = Method::adz_reduction;
  v.rigorous = true;
  v.digits = t.digits;
  return v;
}

void adz_families(Runner& run) {
  constexpr unsigned kWeight = 12;
  const unsigned digits = run.opt.digits;
  std::shared_ptr<BivariateSeries> table;
  auto get_table = [&]() -> const BivariateSeries& {
    if (!table) table = std::make_shared<BivariateSeries>(adz_series(kWeight, digits));
    return *table;
  };
  auto tolerance = [digits]() {
    WorkingPrecision scope(digits + kGuardDigits);
    return ten_to_minus(digits > 5 ? digits - 5 : 0);
  };
  for (unsigned i = 1; i < kWeight; ++i)
    for (unsigned j = i + 1; i + j <= kWeight; ++j)
      run.run(IdentityId::adz_duality, {{"i", R(i)}, {"j", R(j)}, {"max_weight", R(kWeight)}}, CheckMode::numeric,
              [&, i, j](const IdentityCase& c) {
                const auto& t = get_table();
                return compare_numeric(c, table_entry(t, i, j), table_entry(t, j, i), run.opt.margin, tolerance());
              });
  for (unsigned side = 0; side < 2; ++side)
    for (unsigned n = 1; n < kWeight; ++n)
      run.run(IdentityId::adz_boundary_rows, {{"side", R(side)}, {"n", R(n)}, {"max_weight", R(kWeight)}},
              CheckMode::numeric, [&, side, n](const IdentityCase& c) {
                const auto& t = get_table();
                SeriesValue entry = side == 0 ? table_entry(t, 1, n) : table_entry(t, n, 1);
                return compare_numeric(c, entry, riemann_zeta(n + 1, digits), run.opt.margin, tolerance());
              });
}

}  // namespace

// ---------------------------------------------------------------------------

VerificationReport check_thm_2_7(const Rational& p, unsigned n, unsigned m, unsigned r, Link link) {
  if (p <= 0) throw domain_error("check_thm_2_7: requires p > 0");
  if (m == 0) throw domain_error("check_thm_2_7: requires m >= 1");
  const IdentityId id = link == Link::strict ? IdentityId::shifted_power_strict : IdentityId::shifted_power_weak;
  const Link dual = link == Link::strict ? Link::weak : Link::strict;
  IdentityCase c{id, {{"p", p}, {"n", R(n)}, {"m", R(m)}, {"r", R(r)}}, CheckMode::exact};

  if (p.get_den() == 1) {
    const unsigned e = static_cast<unsigned>(p.get_num().get_ui());
    const Composition s = Composition::repeat(e, m);
    auto sum_r = [&](unsigned i) {
      const Composition si = Composition::repeat(e, i);
      return dual == Link::weak ? mhsn(r, si) : mhn(r, si);
    };
    auto sum_nr = [&](unsigned j) {
      const Composition sj = Composition::repeat(e, j);
      return link == Link::strict ? mhn(n + r, sj) : mhsn(n + r, sj);
    };
    (void)s;
    return compare_exact(c, shifted_power_sum(n, m, e, r, link), signed_convolution(m, sum_r, sum_nr));
  }

  constexpr unsigned kDigits = 50;
  WorkingPrecision scope(kDigits + kGuardDigits);
  const BigFloat pf = to_bigfloat(p);
  auto stream_for = [&](Link l, std::uint64_t shift) {
    std::vector<NestedWeight<BigFloat>> w(m, real_power_weight(pf, shift));
    return NestedSumStream<BigFloat>(std::move(w), std::vector<Link>(m - 1, l));
  };
  auto lhs_stream = stream_for(link, r);
  lhs_stream.advance_to(n);
  auto r_stream = stream_for(dual, 0);
  r_stream.advance_to(r);
  auto nr_stream = stream_for(link, 0);
  nr_stream.advance_to(n + r);
  auto level = [&](const NestedSumStream<BigFloat>& s, unsigned depth) {
    return depth == 0 ? BigFloat(1) : s.level_value(m - depth);
  };
  BigFloat rhs = 0;
  for (unsigned i = 0; i <= m; ++i) {
    BigFloat t = level(r_stream, i) * level(nr_stream, m - i);
    if (i % 2) rhs -= t;
    else rhs += t;
  }
  SeriesValue a;
  a.value = lhs_stream.value();
  a.error_bound = ten_to_minus(kDigits + 5);
  a.method = Method::truncation;
  a.digits = kDigits;
  SeriesValue b = a;
  b.value = rhs;
  b.method = Method::closed_form;
  c.mode = CheckMode::numeric;
  VerificationReport rep = compare_numeric(c, a, b, 1.0, ten_to_minus(40));
  rep.note = "real exponent, direct summation at 50 digits";
  return rep;
}

std::vector<VerificationReport> run_suite(const SuiteOptions& options) {
  options.grid.validate();
  if (!(options.margin > 0)) throw domain_error("margin must be > 0");
  if (options.digits < 15) throw domain_error("precision must be >= 15 digits");
  Runner run(options);
  const bool exact = options.suite != Suite::numeric;
  const bool numeric = options.suite != Suite::exact;
  if (exact) {
    stirling_as_harmonic(run);
    hyperharmonic_routes(run);
    star_ones_bell(run);
    elementary_complete_convolution(run);
    shifted_ones_convolution(run);
    shifted_power(run, Link::strict);
    shifted_power(run, Link::weak);
    hyperharmonic_closed_shifted(run);
    bell_star_rhs_equivalence(run);
    binomial_stirling(run);
    hyperharmonic_stirling(run);
    s_partial_sum_family(run);
    u_shift_expansion(run);
    np_split_family(run);
  }
  if (numeric) {
    shifted_power_real(run, Link::strict);
    shifted_power_real(run, Link::weak);
    u_closed_vs_truncated(run);
    stirling_series_family(run);
    adz_families(run);
    s_closed_vs_truncated(run);
  }
  std::stable_sort(run.out.begin(), run.out.end(), report_order);
  return std::move(run.out);
}

namespace {

bool in_suite(IdentityId id, Suite suite) {
  if (suite == Suite::all) return true;
  switch (id) {
    case IdentityId::u_closed_vs_truncated:
    case IdentityId::stirling_series_closed:
    case IdentityId::adz_duality:
    case IdentityId::adz_boundary_rows:
    case IdentityId::s_closed_vs_truncated:
      return suite == Suite::numeric;
    case IdentityId::shifted_power_strict:
    case IdentityId::shifted_power_weak:
      return true;
    default:
      return suite == Suite::exact;
  }
}

}  // namespace

std::vector<IdentityId> missing_identities(const std::vector<VerificationReport>& reports, Suite suite) {
  std::vector<IdentityId> missing;
  for (IdentityId id : kAllIdentities) {
    if (!in_suite(id, suite)) continue;
    const bool found =
        std::any_of(reports.begin(), reports.end(), [id](const VerificationReport& r) { return r.identity.id == id; });
    if (!found) missing.push_back(id);
  }
  return missing;
}

RunSummary summarize(const std::vector<VerificationReport>& reports, Suite suite) {
  RunSummary s;
  s.total = reports.size();
  for (const auto& r : reports) (r.pass ? s.passed : s.failed)++;
  s.missing = missing_identities(reports, suite);
  return s;
}

std::string run_id(const SuiteOptions& o) {
  // FNV-1a over the canonical input string
  char margin[32];
  std::snprintf(margin, sizeof margin, "%.17g", o.margin);
  const std::string key = std::string(to_string(o.suite)) + "|" + std::to_string(o.seed) + "|" +
                          std::to_string(o.digits) + "|" + margin + "|" + std::to_string(o.grid.n) + "|" +
                          std::to_string(o.grid.depth) + "|" + std::to_string(o.grid.r) + "|" +
                          std::to_string(o.grid.N) + "|" + std::to_string(o.grid.partial_N);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : key) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string serialize_run(const SuiteOptions& o, const std::vector<VerificationReport>& reports) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["run_id"] = run_id(o);
  doc["seed"] = o.seed;
  doc["precision"] = o.digits;
  doc["margin"] = o.margin;
  doc["suite"] = std::string(to_string(o.suite));
  doc["grid"] = {{"n", o.grid.n}, {"depth", o.grid.depth}, {"r", o.grid.r}, {"N", o.grid.N},
                 {"partial_N", o.grid.partial_N}};
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json params = ordered_json::object();
    for (const auto& [name, v] : r.identity.params) params[name] = v.get_str();
    ordered_json j;
    j["identity"] = std::string(identity_label(r.identity.id));
    j["mode"] = std::string(to_string(r.identity.mode));
    j["params"] = params;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["digits"] = r.digits;
    j["discrepancy"] = r.discrepancy;
    j["exact_zero"] = r.exact_zero;
    j["error_bound"] = r.error_bound;
    j["tolerance"] = r.tolerance;
    j["verdict"] = r.pass ? "pass" : "fail";
    if (!r.note.empty()) j["note"] = r.note;
    if (o.timings) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
    arr.push_back(std::move(j));
  }
  doc["reports"] = std::move(arr);
  const RunSummary s = summarize(reports, o.suite);
  ordered_json missing = ordered_json::array();
  for (IdentityId id : s.missing) missing.push_back(std::string(identity_label(id)));
  doc["summary"] = {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}, {"missing", missing}};
  return doc.dump(2) + "\n";
}

}  // namespace eulersum
