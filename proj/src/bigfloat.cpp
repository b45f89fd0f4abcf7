#include "eulersum/bigfloat.hpp"

#include <sstream>

namespace eulersum {

BigFloat to_bigfloat(const Rational& q) {
  BigFloat x;
  mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return x;
}

BigFloat to_bigfloat(const Integer& z) {
  BigFloat x;
  mpfr_set_z(x.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return x;
}

BigFloat ten_to_minus(unsigned digits) { return boost::multiprecision::pow(BigFloat(10), -static_cast<int>(digits)); }

std::string format_decimal(const BigFloat& x, unsigned digits) {
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::fmtflags(0));
}

std::string format_bound(const BigFloat& x) {
  if (x == 0) return "0";
  return x.str(3, std::ios_base::scientific);
}

void CompensatedSum::add(const BigFloat& x) {
  t_ = sum_ + x;
  if (abs(sum_) >= abs(x))
    compensation_ += (sum_ - t_) + x;
  else
    compensation_ += (x - t_) + sum_;
  std::swap(sum_, t_);
}

NestedWeight<BigFloat> real_power_weight(const BigFloat& p, std::uint64_t shift) {
  return {[p, shift](std::uint64_t n) { return boost::multiprecision::pow(BigFloat(n + shift), -p); }, false};
}

}  // namespace eulersum
