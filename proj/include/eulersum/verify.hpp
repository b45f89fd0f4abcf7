#pragma once

// Verification harness: every identity checker, its default parameter grid,
// and the JSON run document.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulersum/nested_sum.hpp"
#include "eulersum/report.hpp"
#include "eulersum/symmetric.hpp"

namespace eulersum {

enum class Suite { exact, numeric, all };
std::string_view to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view name);

/// Upper limits applied on top of each family's default grid. The defaults
/// are also the documented maxima except for N.
struct GridLimits {
  unsigned n = 30;                 ///< finite upper limit n
  unsigned depth = 6;              ///< nesting depth (m, k)
  unsigned r = 6;                  ///< shift r
  std::uint64_t N = 1000000;       ///< truncation limit of the numeric families
  std::uint64_t partial_N = 200;   ///< limit of the exact partial-sum families

  static constexpr unsigned kMaxN = 30;
  static constexpr unsigned kMaxDepth = 6;
  static constexpr unsigned kMaxR = 6;
  static constexpr std::uint64_t kMaxTruncation = 1000000;
  static constexpr std::uint64_t kMinTruncation = 10;
  static constexpr std::uint64_t kMaxPartial = 200;

  /// Throws domain_error naming the first limit out of range.
  void validate() const;
};

struct SuiteOptions {
  Suite suite = Suite::all;
  GridLimits grid;
  std::uint64_t seed = 42;
  double margin = 4.0;
  unsigned digits = kDefaultDigits;
  /// Include per-case elapsed time in the serialized report (breaks byte
  /// identity between runs).
  bool timings = false;
};

/// Runs every checker of the suite over its grid. A throwing case becomes a
/// failed report; the run always completes. Reports come back in canonical order.
std::vector<VerificationReport> run_suite(const SuiteOptions& options);

/// Identities without any executed case in `reports`.
std::vector<IdentityId> missing_identities(const std::vector<VerificationReport>& reports, Suite suite);

/// Shifted power sums against their star/plain convolutions at exponent p.
/// Integer p is checked exactly; other p > 0 numerically at 50 digits against
/// a fixed tolerance of 1e-40. `link` selects the strict or the weak display.
VerificationReport check_thm_2_7(const Rational& p, unsigned n, unsigned m, unsigned r, Link link);

/// Deterministic rationals a/b, a in [-9, 9], b in [1, 9]. With `distinct`
/// no value repeats (len must then be at most the number of such values).
WeightSequence random_weights(std::size_t len, std::uint64_t seed, bool distinct = false);

struct RunSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<IdentityId> missing;
  [[nodiscard]] bool ok() const { return failed == 0 && missing.empty(); }
};
RunSummary summarize(const std::vector<VerificationReport>& reports, Suite suite);

/// Hex digest of the run inputs.
std::string run_id(const SuiteOptions& options);

/// One JSON document per run (pretty-printed, trailing newline).
std::string serialize_run(const SuiteOptions& options, const std::vector<VerificationReport>& reports);

}  // namespace eulersum
