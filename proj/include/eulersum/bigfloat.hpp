#pragma once

// MPFR-backed high-precision floats.
//
// Boost's mpfr_float takes its precision for new values from a process-wide
// default, so every routine that creates floats opens a WorkingPrecision
// scope first. Scopes nest and restore the previous default on exit.

#include <cstdint>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "eulersum/nested_sum.hpp"
#include "eulersum/rational.hpp"

namespace eulersum {

using BigFloat = boost::multiprecision::mpfr_float;

/// Guard digits carried on top of the requested precision.
inline constexpr unsigned kGuardDigits = 10;
inline constexpr unsigned kDefaultDigits = 50;

class WorkingPrecision {
 public:
  explicit WorkingPrecision(unsigned digits10) : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits10);
  }
  ~WorkingPrecision() { BigFloat::default_precision(saved_); }
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

 private:
  unsigned saved_;
};

BigFloat to_bigfloat(const Rational& q);
BigFloat to_bigfloat(const Integer& z);

/// 10^{-digits}
BigFloat ten_to_minus(unsigned digits);

/// Decimal rendering with `digits` significant digits.
std::string format_decimal(const BigFloat& x, unsigned digits);
/// Short scientific rendering (for error bounds).
std::string format_bound(const BigFloat& x);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(const BigFloat& x);
  [[nodiscard]] BigFloat value() const { return sum_ + compensation_; }

 private:
  BigFloat sum_{0};
  BigFloat compensation_{0};
  BigFloat t_;
};

template <>
struct NestedValueTraits<BigFloat> {
  static BigFloat one() { return BigFloat(1); }
  static BigFloat inverse_power(std::uint64_t x, unsigned e) {
    BigFloat inv = BigFloat(1) / BigFloat(x);
    BigFloat r = inv;
    for (unsigned i = 1; i < e; ++i) r *= inv;
    return r;
  }
};

/// w(n) = (n + shift)^{-p} for a real exponent p.
NestedWeight<BigFloat> real_power_weight(const BigFloat& p, std::uint64_t shift = 0);

}  // namespace eulersum
