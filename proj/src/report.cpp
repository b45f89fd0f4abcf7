#include "eulersum/report.hpp"

#include <algorithm>

namespace eulersum {

namespace {

struct LabelEntry {
  IdentityId id;
  std::string_view label;
};

constexpr LabelEntry kLabels[] = {
    {IdentityId::stirling_as_harmonic, "EQ_2_1"},
    {IdentityId::hyperharmonic_routes, "EQ_2_2"},
    {IdentityId::star_ones_bell, "EQ_2_6"},
    {IdentityId::elementary_complete_convolution, "EQ_2_7"},
    {IdentityId::shifted_ones_convolution, "EQ_2_8"},
    {IdentityId::shifted_power_strict, "EQ_2_12"},
    {IdentityId::shifted_power_weak, "EQ_2_13"},
    {IdentityId::hyperharmonic_closed_shifted, "EQ_2_14"},
    {IdentityId::bell_star_rhs_equivalence, "EQ_2_4"},
    {IdentityId::binomial_stirling, "EQ_3_1"},
    {IdentityId::hyperharmonic_stirling, "EQ_3_2"},
    {IdentityId::s_partial_sums, "THM_1_1_PARTIAL"},
    {IdentityId::u_shift_expansion, "EQ_4_1"},
    {IdentityId::np_split, "EQ_4_5"},
    {IdentityId::u_closed_vs_truncated, "THM_1_2_NUMERIC"},
    {IdentityId::stirling_series_closed, "EQ_4_6"},
    {IdentityId::adz_duality, "EQ_5_1_DUALITY"},
    {IdentityId::adz_boundary_rows, "EQ_5_1_ROWS"},
    {IdentityId::s_closed_vs_truncated, "THM_1_1_NUMERIC"},
};

}  // namespace

std::string_view identity_label(IdentityId id) {
  for (const auto& e : kLabels)
    if (e.id == id) return e.label;
  return "UNKNOWN";
}

std::optional<IdentityId> parse_identity_label(std::string_view label) {
  for (const auto& e : kLabels)
    if (e.label == label) return e.id;
  return std::nullopt;
}

std::string_view to_string(CheckMode mode) { return mode == CheckMode::exact ? "exact" : "numeric"; }

bool report_order(const VerificationReport& a, const VerificationReport& b) {
  const auto& x = a.identity;
  const auto& y = b.identity;
  if (x.id != y.id) return static_cast<int>(x.id) < static_cast<int>(y.id);
  if (x.mode != y.mode) return x.mode < y.mode;
  const std::size_t n = std::min(x.params.size(), y.params.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x.params[i].first != y.params[i].first) return x.params[i].first < y.params[i].first;
    if (x.params[i].second != y.params[i].second) return x.params[i].second < y.params[i].second;
  }
  return x.params.size() < y.params.size();
}

VerificationReport compare_exact(const IdentityCase& c, const Rational& lhs, const Rational& rhs) {
  VerificationReport r;
  r.identity = c;
  r.identity.mode = CheckMode::exact;
  r.lhs = lhs.get_str();
  r.rhs = rhs.get_str();
  const Rational d = lhs - rhs;
  r.discrepancy = d.get_str();
  r.exact_zero = d == 0;
  r.error_bound = "0";
  r.tolerance = "0";
  r.digits = 0;
  r.pass = r.exact_zero;
  return r;
}

VerificationReport compare_numeric(const IdentityCase& c, const SeriesValue& lhs, const SeriesValue& rhs,
                                   double margin, std::optional<BigFloat> fixed_tolerance) {
  const unsigned digits = std::min(lhs.digits, rhs.digits);
  WorkingPrecision scope(std::max(lhs.digits, rhs.digits) + kGuardDigits);
  VerificationReport r;
  r.identity = c;
  r.identity.mode = CheckMode::numeric;
  r.digits = digits;
  r.lhs = format_decimal(lhs.value, digits);
  r.rhs = format_decimal(rhs.value, digits);
  const BigFloat d = abs(lhs.value - rhs.value);
  const BigFloat bound = lhs.error_bound + rhs.error_bound;
  const BigFloat tol = fixed_tolerance ? *fixed_tolerance : BigFloat(margin) * bound;
  r.discrepancy = format_bound(d);
  r.exact_zero = d == 0;
  r.error_bound = format_bound(bound);
  r.tolerance = format_bound(tol);
  r.pass = d <= tol;
  return r;
}

}  // namespace eulersum
