#include "eulersum/hyperharmonic.hpp"

#include "eulersum/mhn.hpp"
#include "eulersum/symmetric.hpp"

namespace eulersum {
namespace {

void require_key(std::uint64_t n, unsigned m, const char* what) {
  if (n == 0) throw domain_error(std::string(what) + ": requires n >= 1");
  if (m == 0) throw domain_error(std::string(what) + ": requires order m >= 1");
}

// sum_{i+j=k} (-1)^i zeta*_r({1}_i) zeta_{n+r}({1}_j)
Rational star_plain_convolution(std::uint64_t n, unsigned r, unsigned k) {
  Rational acc;
  for (unsigned i = 0; i <= k; ++i) {
    Rational term = mhsn(r, Composition::ones(i)) * mhn(n + r, Composition::ones(k - i));
    if (i % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

}  // namespace

NestedShape hyperharmonic_shape(unsigned m, unsigned k, bool star) {
  if (m == 0 || k == 0) throw domain_error("hyperharmonic_shape: requires m, k >= 1");
  NestedShape shape;
  shape.exponents.assign(m - 1, 0);
  shape.exponents.insert(shape.exponents.end(), k, 1);
  for (std::size_t i = 0; i + 1 < shape.exponents.size(); ++i)
    shape.links.push_back(star || i + 1 < m ? Link::weak : Link::strict);
  return shape;
}

Rational hyperharmonic(std::uint64_t n, unsigned m) {
  require_key(n, m, "hyperharmonic");
  Composition outer = Composition::repeat(0, m - 1);
  outer.parts.push_back(1);
  return mixed_mhn(n, {outer, {}});
}

Rational gen_hh_direct(const HyperharmonicKey& key) {
  require_key(key.n, key.m, "gen_hh_direct");
  if (key.k == 0) throw domain_error("gen_hh_direct: requires k >= 1 (k = 0 is only a convention of the recurrence)");
  Composition outer = Composition::repeat(0, key.m - 1);
  outer.parts.push_back(1);
  return mixed_mhn(key.n, {outer, Composition::ones(key.k - 1)});
}

Rational gen_hh_recurrence(const HyperharmonicKey& key) {
  require_key(key.n, key.m, "gen_hh_recurrence");
  const std::uint64_t top = key.m + key.n - 1;
  const Rational base(binomial(top, key.m - 1));
  if (key.k == 0) return base;
  std::vector<Rational> power_sums;
  power_sums.reserve(key.k);
  for (unsigned j = 1; j <= key.k; ++j) power_sums.push_back(harmonic(top, j) - harmonic(key.m - 1, j));
  return newton_elementary(power_sums, key.k, base)[key.k];
}

Rational gen_hh_closed(std::uint64_t n, unsigned r, unsigned k) {
  if (n == 0) throw domain_error("gen_hh_closed: requires n >= 1");
  return Rational(binomial(n + r, r)) * star_plain_convolution(n, r, k);
}

Rational gen_hh_stirling(std::uint64_t n, unsigned r, unsigned k) {
  if (n == 0) throw domain_error("gen_hh_stirling: requires n >= 1");
  Integer poly;
  Integer npow = 1;
  for (unsigned l = 1; l <= r + 1; ++l) {
    poly += stirling1(r + 1, l) * npow;
    npow *= static_cast<unsigned long>(n);
  }
  return make_rational(poly, factorial(r)) * star_plain_convolution(n, r, k);
}

Rational gen_hh_star(std::uint64_t n, unsigned m, unsigned k) {
  require_key(n, m, "gen_hh_star");
  if (k == 0) throw domain_error("gen_hh_star: requires k >= 1");
  Composition outer = Composition::repeat(0, m - 1);
  outer.append(Composition::ones(k));
  return mixed_mhn(n, {outer, {}});
}

std::vector<Rational> gen_hh_direct_sequence(std::uint64_t N, unsigned m, unsigned k) {
  if (m == 0 || k == 0) throw domain_error("gen_hh_direct_sequence: requires m, k >= 1");
  NestedShape shape = hyperharmonic_shape(m, k, false);
  return nested_power_prefixes(N, shape.exponents, shape.links);
}

std::vector<Rational> gen_hh_star_sequence(std::uint64_t N, unsigned m, unsigned k) {
  if (m == 0 || k == 0) throw domain_error("gen_hh_star_sequence: requires m, k >= 1");
  NestedShape shape = hyperharmonic_shape(m, k, true);
  return nested_power_prefixes(N, shape.exponents, shape.links);
}

}  // namespace eulersum
