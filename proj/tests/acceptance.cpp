// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion holds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eulersum/euler_sums.hpp"
#include "eulersum/verify.hpp"
#include "eulersum/zeta.hpp"
#include "reference_values.hpp"
#include "test_util.hpp"

using namespace eulersum;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void verdict(int n, bool ok, const std::string& what, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << " (" << detail << ")" << std::endl;
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double seconds(std::chrono::nanoseconds ns) { return std::chrono::duration<double>(ns).count(); }

struct Tally {
  std::size_t total = 0, passed = 0;
  bool exact_zero = true;
  std::chrono::nanoseconds elapsed{0};
  std::string first_failure;

  void add(const VerificationReport& r) {
    ++total;
    if (r.pass) {
      ++passed;
    } else if (first_failure.empty()) {
      std::ostringstream s;
      s << identity_label(r.identity.id);
      for (const auto& [k, v] : r.identity.params) s << " " << k << "=" << v.get_str();
      s << " discrepancy " << r.discrepancy << " tolerance " << r.tolerance;
      first_failure = s.str();
    }
    exact_zero = exact_zero && r.exact_zero;
    elapsed += r.elapsed;
  }
  [[nodiscard]] bool ok() const { return total > 0 && passed == total; }
  [[nodiscard]] std::string describe() const {
    std::ostringstream s;
    s << passed << "/" << total << " cases";
    if (!first_failure.empty()) s << "; first failure: " << first_failure;
    return s.str();
  }
};

Tally tally(const std::vector<VerificationReport>& reports, const std::set<IdentityId>& ids,
            std::optional<CheckMode> mode = std::nullopt) {
  Tally t;
  for (const auto& r : reports)
    if (ids.count(r.identity.id) && (!mode || r.identity.mode == *mode)) t.add(r);
  return t;
}

std::map<IdentityId, std::size_t> counts(const std::vector<VerificationReport>& reports) {
  std::map<IdentityId, std::size_t> c;
  for (const auto& r : reports) ++c[r.identity.id];
  return c;
}

}  // namespace

int main() {
  // 1: exact identity families
  std::vector<VerificationReport> exact_reports;
  {
    SuiteOptions o;
    o.suite = Suite::exact;
    const auto t0 = Clock::now();
    exact_reports = run_suite(o);
    const double secs = seconds_since(t0);
    const std::set<IdentityId> families{
        IdentityId::stirling_as_harmonic,       IdentityId::hyperharmonic_routes,
        IdentityId::hyperharmonic_closed_shifted, IdentityId::star_ones_bell,
        IdentityId::elementary_complete_convolution, IdentityId::shifted_ones_convolution,
        IdentityId::shifted_power_strict,       IdentityId::shifted_power_weak,
        IdentityId::binomial_stirling,          IdentityId::hyperharmonic_stirling,
        IdentityId::np_split};
    const Tally t = tally(exact_reports, families, CheckMode::exact);
    const auto c = counts(exact_reports);
    bool every_family = true;
    for (IdentityId id : families) every_family = every_family && c.count(id) && c.at(id) > 0;
    std::ostringstream d;
    d << t.describe() << ", " << families.size() << " families, " << secs << " s";
    verdict(1, t.ok() && t.exact_zero && every_family && secs < 120, "exact identity suite, zero discrepancy, < 2 min",
            d.str());
  }

  // 2: partial-sum form of the S closed form
  {
    const Tally t = tally(exact_reports, {IdentityId::s_partial_sums});
    // k 1..4, r 0..3, p r+2..6
    const std::size_t expected = 4 * (5 + 4 + 3 + 2);
    verdict(2, t.ok() && t.exact_zero && t.total == expected, "exact partial-sum S identity, N <= 200",
            t.describe() + ", expected " + std::to_string(expected));
  }

  // 3: known values
  {
    const SeriesValue s = s_closed(1, 0, 2, 50);
    const SeriesValue z = mzv_height_one(3, 1, 50);
    const SeriesValue u = u_closed(1, 1, 2, 50);
    const bool a = testutil::agrees_to(s.value, ref::kTwoZeta3, 40);
    const bool b = testutil::agrees_to(z.value, ref::kZeta31, 40);
    const bool c = testutil::agrees_to(u.value, ref::kU112, 40);
    std::ostringstream d;
    d << "S(1,0,2) " << (a ? "ok" : "off") << ", zeta(3,1) " << (b ? "ok" : "off") << ", U(1,1,2) "
      << (c ? "ok" : "off") << " at 40 digits";
    verdict(3, a && b && c, "known values to >= 40 digits", d.str());
  }

  // the full run feeds criteria 4-7 and is compared byte for byte in 8
  SuiteOptions full;
  full.suite = Suite::all;
  full.seed = 42;
  const auto t_full = Clock::now();
  const std::vector<VerificationReport> run_a = run_suite(full);
  const double full_secs = seconds_since(t_full);

  // 4: ADZ duality and boundary rows
  {
    const unsigned digits = 50;
    const auto t0 = Clock::now();
    const BivariateSeries t = adz_series(12, digits);
    WorkingPrecision scope(digits + kGuardDigits);
    const BigFloat tol = ten_to_minus(digits - 5);
    BigFloat worst_dual = 0, worst_row = 0;
    for (unsigned i = 1; i < 12; ++i)
      for (unsigned j = 1; i + j <= 12; ++j) worst_dual = std::max<BigFloat>(worst_dual, abs(t.coefficient(i, j) - t.coefficient(j, i)));
    for (unsigned n = 1; n <= 11; ++n) {
      const BigFloat z = riemann_zeta(n + 1, digits).value;
      worst_row = std::max<BigFloat>(worst_row, abs(t.coefficient(1, n) - z));
      worst_row = std::max<BigFloat>(worst_row, abs(t.coefficient(n, 1) - z));
    }
    const double secs = seconds_since(t0);
    const Tally h = tally(run_a, {IdentityId::adz_duality, IdentityId::adz_boundary_rows});
    std::ostringstream d;
    d << "max duality gap " << format_bound(worst_dual) << ", max boundary gap " << format_bound(worst_row)
      << ", tolerance " << format_bound(tol) << ", " << secs << " s; harness " << h.describe();
    verdict(4, worst_dual <= tol && worst_row <= tol && secs < 10 && h.ok(), "ADZ table duality and boundary rows",
            d.str());
  }

  // 5: U closed vs truncated at N = 10^6
  {
    const Tally t = tally(run_a, {IdentityId::u_closed_vs_truncated});
    std::ostringstream d;
    d << t.describe() << ", " << seconds(t.elapsed) << " s";
    verdict(5, t.ok() && t.total == 48 && seconds(t.elapsed) < 600, "U closed vs truncated within 4x tail bound",
            d.str());
  }

  // 6: truncated Stirling series and the exact right-side equivalence
  {
    const Tally num = tally(run_a, {IdentityId::stirling_series_closed});
    const Tally ex = tally(run_a, {IdentityId::bell_star_rhs_equivalence});
    verdict(6, num.ok() && num.total == 15 && ex.ok() && ex.exact_zero && ex.total == 50,
            "truncated Stirling series within 4x bound; closed right sides agree exactly",
            "numeric " + num.describe() + "; exact " + ex.describe());
  }

  // 7: S closed vs truncated on the six tuples
  {
    const Tally t = tally(run_a, {IdentityId::s_closed_vs_truncated});
    verdict(7, t.ok() && t.total == 6, "S closed vs truncated within 4x tail bound", t.describe());
  }

  // 8: determinism
  {
    const std::string a = serialize_run(full, run_a);
    const std::string b = serialize_run(full, run_suite(full));
    std::ostringstream d;
    d << a.size() << " bytes, first run " << full_secs << " s";
    verdict(8, a == b, "two 'verify --suite all --seed 42' runs give byte-identical JSON", d.str());
  }

  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criteria failed" : "acceptance: all criteria pass")
            << std::endl;
  return failures ? 1 : 0;
}
