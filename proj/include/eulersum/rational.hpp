#pragma once

// Exact integer/rational value types and the index-sequence types shared by
// every finite-sum routine in the library.

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace eulersum {

using Integer = mpz_class;
/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (gmpxx canonicalizes after every arithmetic operation).
using Rational = mpq_class;

/// Raised when an argument violates a documented precondition. The message
/// names the violated condition.
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, unsigned long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

/// "num/den" (or "num" when the denominator is 1).
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "a", "-a" or "a/b" into a canonical rational.
Rational parse_rational(const std::string& text);

/// 1 / x^e, exact. e = 0 yields 1.
Rational inverse_power(std::uint64_t x, unsigned e);

Integer factorial(unsigned n);
Integer binomial(unsigned long n, unsigned long k);

/// Exponent vector (s_1, ..., s_m) of a nested harmonic sum. Depth 0 is the
/// empty index, whose nested sum is 1 by convention.
struct Composition {
  std::vector<unsigned> parts;

  Composition() = default;
  Composition(std::initializer_list<unsigned> init) : parts(init) {}
  explicit Composition(std::vector<unsigned> p) : parts(std::move(p)) {}

  [[nodiscard]] std::size_t depth() const noexcept { return parts.size(); }
  [[nodiscard]] bool empty() const noexcept { return parts.empty(); }
  [[nodiscard]] unsigned weight() const noexcept {
    unsigned w = 0;
    for (unsigned s : parts) w += s;
    return w;
  }
  [[nodiscard]] bool has_zero_part() const noexcept {
    for (unsigned s : parts)
      if (s == 0) return true;
    return false;
  }

  /// {value}_count
  static Composition repeat(unsigned value, std::size_t count) {
    return Composition(std::vector<unsigned>(count, value));
  }
  static Composition ones(std::size_t count) { return repeat(1, count); }

  Composition& append(const Composition& tail) {
    parts.insert(parts.end(), tail.parts.begin(), tail.parts.end());
    return *this;
  }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

std::string to_string(const Composition& s);

/// Index of a mixed nested sum: a weakly ordered outer block followed by a
/// strictly ordered inner block, joined by a strict inequality.
struct MixedIndex {
  Composition outer;
  Composition inner;
};

}  // namespace eulersum
