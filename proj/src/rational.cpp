#include "eulersum/rational.hpp"

#include <sstream>

namespace eulersum {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw domain_error("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw domain_error("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

Rational inverse_power(std::uint64_t x, unsigned e) {
  if (e == 0) return Rational(1);
  if (x == 0) throw domain_error("inverse_power: division by zero");
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), x, e);
  Rational q(Integer(1), den);
  return q;  // 1/den is already in lowest terms
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

std::string to_string(const Composition& s) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    if (i) os << ',';
    os << s.parts[i];
  }
  os << ')';
  return os.str();
}

}  // namespace eulersum
