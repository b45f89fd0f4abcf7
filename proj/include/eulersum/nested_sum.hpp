#pragma once

// Streaming evaluation of nested sums
//
//   F(x) = sum_{x >= n_1 R_1 n_2 R_2 ... R_{d-1} n_d >= 1} w_1(n_1) ... w_d(n_d)
//
// where each relation R_i is either ">=" (weak) or ">" (strict). Advancing the
// upper limit by one costs O(d) arithmetic operations, so the whole prefix
// sequence F(0), F(1), ..., F(N) is produced in O(N d).
//
// The stream is generic in the value type: exact rationals for the finite
// identities and MPFR floats for large truncation limits.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eulersum/rational.hpp"

namespace eulersum {

enum class Link { strict, weak };

template <class T>
struct NestedValueTraits;

template <>
struct NestedValueTraits<Rational> {
  static Rational one() { return Rational(1); }
  static Rational inverse_power(std::uint64_t x, unsigned e) { return eulersum::inverse_power(x, e); }
};

template <class T>
struct NestedWeight {
  std::function<T(std::uint64_t)> fn;
  bool unit = false;  // w(n) == 1, skip the multiplication
};

/// w(n) = 1 / (n + shift)^exponent
template <class T>
NestedWeight<T> power_weight(unsigned exponent, std::uint64_t shift = 0) {
  if (exponent == 0) return {nullptr, true};
  return {[exponent, shift](std::uint64_t n) { return NestedValueTraits<T>::inverse_power(n + shift, exponent); },
          false};
}

template <class T>
class NestedSumStream {
 public:
  /// links[i] relates level i to level i + 1, so links.size() + 1 == weights.size()
  /// (or both empty for the empty index).
  NestedSumStream(std::vector<NestedWeight<T>> weights, std::vector<Link> links)
      : weights_(std::move(weights)), links_(std::move(links)), one_(NestedValueTraits<T>::one()) {
    if (!weights_.empty() && links_.size() + 1 != weights_.size())
      throw std::invalid_argument("nested sum: link count must be depth - 1");
    if (weights_.empty() && !links_.empty()) throw std::invalid_argument("nested sum: links without levels");
    cur_.assign(weights_.size(), T(0));
  }

  [[nodiscard]] std::size_t depth() const noexcept { return weights_.size(); }
  [[nodiscard]] std::uint64_t position() const noexcept { return x_; }

  /// F(position()); the empty nested sum is 1.
  [[nodiscard]] const T& value() const noexcept { return weights_.empty() ? one_ : cur_.front(); }

  /// Value of level `i` (the sum over n_i, ..., n_d) at the current position.
  [[nodiscard]] const T& level_value(std::size_t i) const { return cur_.at(i); }

  void advance() {
    ++x_;
    const std::size_t d = weights_.size();
    if (d == 0) return;
    // Walk from the innermost level outwards. `old_next` keeps level i+1 at x-1
    // for strict links; weak links read the already-updated level i+1 at x.
    T old_next;
    T scratch;
    for (std::size_t j = d; j-- > 0;) {
      const NestedWeight<T>& w = weights_[j];
      if (j + 1 == d) {
        scratch = cur_[j] + (w.unit ? one_ : w.fn(x_));
      } else {
        const T& inner = links_[j] == Link::weak ? cur_[j + 1] : old_next;
        if (w.unit)
          scratch = cur_[j] + inner;
        else
          scratch = cur_[j] + w.fn(x_) * inner;
      }
      std::swap(scratch, cur_[j]);
      std::swap(scratch, old_next);
    }
  }

  void advance_to(std::uint64_t x) {
    while (x_ < x) advance();
  }

 private:
  std::vector<NestedWeight<T>> weights_;
  std::vector<Link> links_;
  std::vector<T> cur_;
  std::uint64_t x_ = 0;
  T one_;
};

/// Builds the weights/links for a power-weight nested sum over `exponents`
/// with the given relation between every pair of neighbours.
template <class T>
NestedSumStream<T> make_power_stream(const std::vector<unsigned>& exponents, const std::vector<Link>& links,
                                     std::uint64_t shift = 0) {
  std::vector<NestedWeight<T>> w;
  w.reserve(exponents.size());
  for (unsigned e : exponents) w.push_back(power_weight<T>(e, shift));
  return NestedSumStream<T>(std::move(w), links);
}

template <class T>
NestedSumStream<T> make_power_stream(const std::vector<unsigned>& exponents, Link link, std::uint64_t shift = 0) {
  std::vector<Link> links(exponents.empty() ? 0 : exponents.size() - 1, link);
  return make_power_stream<T>(exponents, links, shift);
}

}  // namespace eulersum
