#pragma once

// Identity catalog and verification report records.

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulersum/rational.hpp"
#include "eulersum/zeta.hpp"

namespace eulersum {

/// One checker per identity. The serialized labels (identity_label) form the
/// report's stable wire vocabulary.
enum class IdentityId {
  stirling_as_harmonic,          // [n k] = (n-1)! zeta_{n-1}({1}_{k-1})
  hyperharmonic_routes,          // direct = recurrence = closed form
  star_ones_bell,                // zeta*_n({1}_m) = Y_m(n) / m!
  elementary_complete_convolution,
  shifted_ones_convolution,      // shifted zeta_n({1}_m | r+1) as star/plain convolution
  shifted_power_strict,
  shifted_power_weak,
  hyperharmonic_closed_shifted,  // h_n^(r+1)(m) = C(n+r, r) zeta_n({1}_m | r+1) = closed form
  bell_star_rhs_equivalence,     // Bell and star-MHN closed right sides agree exactly
  binomial_stirling,
  hyperharmonic_stirling,
  s_partial_sums,                // exact partial-sum form of the S closed form
  u_shift_expansion,             // exact partial-sum expansion of U over shifts
  np_split,                      // 1/(n^p (n+r)) partial fractions
  u_closed_vs_truncated,
  stirling_series_closed,        // truncated sum of zeta_n({1}_{p-1})/(n(n+k)) vs closed form
  adz_duality,
  adz_boundary_rows,
  s_closed_vs_truncated,
};

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::stirling_as_harmonic,
    IdentityId::hyperharmonic_routes,
    IdentityId::star_ones_bell,
    IdentityId::elementary_complete_convolution,
    IdentityId::shifted_ones_convolution,
    IdentityId::shifted_power_strict,
    IdentityId::shifted_power_weak,
    IdentityId::hyperharmonic_closed_shifted,
    IdentityId::bell_star_rhs_equivalence,
    IdentityId::binomial_stirling,
    IdentityId::hyperharmonic_stirling,
    IdentityId::s_partial_sums,
    IdentityId::u_shift_expansion,
    IdentityId::np_split,
    IdentityId::u_closed_vs_truncated,
    IdentityId::stirling_series_closed,
    IdentityId::adz_duality,
    IdentityId::adz_boundary_rows,
    IdentityId::s_closed_vs_truncated,
};

std::string_view identity_label(IdentityId id);
std::optional<IdentityId> parse_identity_label(std::string_view label);

enum class CheckMode { exact, numeric };
std::string_view to_string(CheckMode mode);

struct IdentityCase {
  IdentityId id = IdentityId::stirling_as_harmonic;
  /// Parameters in canonical order.
  std::vector<std::pair<std::string, Rational>> params;
  CheckMode mode = CheckMode::exact;
};

struct VerificationReport {
  IdentityCase identity;
  std::string lhs;
  std::string rhs;
  /// "0" when both sides agree exactly.
  std::string discrepancy;
  bool exact_zero = false;
  /// Combined error bound of both sides (numeric mode only).
  std::string error_bound;
  /// Threshold the discrepancy was held to: 0 in exact mode, margin x bound
  /// or a fixed precision target in numeric mode.
  std::string tolerance;
  /// Significant digits of the float renderings (0 in exact mode).
  unsigned digits = 0;
  bool pass = false;
  std::string note;
  std::chrono::nanoseconds elapsed{0};
};

/// Canonical report order: identity, then parameters.
bool report_order(const VerificationReport& a, const VerificationReport& b);

/// Exact comparison; passes iff lhs == rhs.
VerificationReport compare_exact(const IdentityCase& c, const Rational& lhs, const Rational& rhs);

/// Numeric comparison: passes iff |lhs - rhs| <= margin * (lhs bound + rhs bound),
/// or <= fixed_tolerance when one is given.
VerificationReport compare_numeric(const IdentityCase& c, const SeriesValue& lhs, const SeriesValue& rhs,
                                   double margin, std::optional<BigFloat> fixed_tolerance = std::nullopt);

}  // namespace eulersum
