#include "eulersum/mhn.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace eulersum {
namespace {

// Prefix histories beyond this limit are computed on the fly instead of
// memoized: the rationals grow to tens of thousands of digits.
constexpr std::uint64_t kMemoLimit = 4096;

struct CacheKey {
  std::vector<unsigned> exponents;
  std::vector<Link> links;
  std::uint64_t shift;

  friend bool operator<(const CacheKey& a, const CacheKey& b) {
    return std::tie(a.exponents, a.links, a.shift) < std::tie(b.exponents, b.links, b.shift);
  }
};

struct Table {
  explicit Table(const CacheKey& key) : stream(make_power_stream<Rational>(key.exponents, key.links, key.shift)) {
    history.push_back(stream.value());
  }
  NestedSumStream<Rational> stream;
  std::vector<Rational> history;  // history[x] = value at upper limit x

  void extend_to(std::uint64_t n) {
    while (history.size() <= n) {
      stream.advance();
      history.push_back(stream.value());
    }
  }
};

class NestedSumCache {
 public:
  Rational value(const CacheKey& key, std::uint64_t n) {
    if (n > kMemoLimit) {
      auto stream = make_power_stream<Rational>(key.exponents, key.links, key.shift);
      stream.advance_to(n);
      return stream.value();
    }
    {
      std::shared_lock lock(mutex_);
      auto it = tables_.find(key);
      if (it != tables_.end() && it->second->history.size() > n) return it->second->history[n];
    }
    std::unique_lock lock(mutex_);
    Table& t = table_for(key);
    t.extend_to(n);
    return t.history[n];
  }

  std::vector<Rational> prefixes(const CacheKey& key, std::uint64_t n) {
    if (n > kMemoLimit) {
      auto stream = make_power_stream<Rational>(key.exponents, key.links, key.shift);
      std::vector<Rational> out;
      out.reserve(n + 1);
      out.push_back(stream.value());
      for (std::uint64_t x = 1; x <= n; ++x) {
        stream.advance();
        out.push_back(stream.value());
      }
      return out;
    }
    std::unique_lock lock(mutex_);
    Table& t = table_for(key);
    t.extend_to(n);
    return {t.history.begin(), t.history.begin() + static_cast<std::ptrdiff_t>(n + 1)};
  }

  void clear() {
    std::unique_lock lock(mutex_);
    tables_.clear();
  }

 private:
  Table& table_for(const CacheKey& key) {
    auto it = tables_.find(key);
    if (it == tables_.end()) it = tables_.emplace(key, std::make_unique<Table>(key)).first;
    return *it->second;
  }

  std::shared_mutex mutex_;
  std::map<CacheKey, std::unique_ptr<Table>> tables_;
};

NestedSumCache& cache() {
  static NestedSumCache instance;
  return instance;
}

void require_positive_parts(const Composition& s, const char* what) {
  if (s.has_zero_part())
    throw domain_error(std::string(what) + ": every part must be >= 1 (zero exponents are only valid in mixed sums)");
}

std::vector<Link> uniform_links(std::size_t depth, Link link) {
  return std::vector<Link>(depth == 0 ? 0 : depth - 1, link);
}

}  // namespace

Rational harmonic(std::uint64_t n, unsigned p) {
  if (p == 0) throw domain_error("harmonic: requires p >= 1");
  return cache().value({{p}, {}, 0}, n);
}

Rational mhn(std::uint64_t n, const Composition& s) {
  require_positive_parts(s, "mhn");
  if (n < s.depth()) return Rational(0);
  return cache().value({s.parts, uniform_links(s.depth(), Link::strict), 0}, n);
}

Rational mhsn(std::uint64_t n, const Composition& s) {
  require_positive_parts(s, "mhsn");
  return cache().value({s.parts, uniform_links(s.depth(), Link::weak), 0}, n);
}

Rational mixed_mhn(std::uint64_t n, const MixedIndex& idx) {
  std::vector<unsigned> exps = idx.outer.parts;
  exps.insert(exps.end(), idx.inner.parts.begin(), idx.inner.parts.end());
  std::vector<Link> links;
  const std::size_t d = exps.size();
  for (std::size_t i = 0; i + 1 < d; ++i)
    links.push_back(i + 1 < idx.outer.depth() ? Link::weak : Link::strict);
  return cache().value({std::move(exps), std::move(links), 0}, n);
}

Rational shifted_mhn(std::uint64_t n, unsigned m, unsigned r) { return shifted_power_sum(n, m, 1, r, Link::strict); }

Rational shifted_power_sum(std::uint64_t n, unsigned m, unsigned p, unsigned r, Link link) {
  if (m == 0) return Rational(1);
  if (link == Link::strict && n < m) return Rational(0);
  return cache().value({std::vector<unsigned>(m, p), uniform_links(m, link), r}, n);
}

Rational nested_power_sum(std::uint64_t n, const std::vector<unsigned>& exponents, const std::vector<Link>& links,
                          std::uint64_t shift) {
  if (!exponents.empty() && links.size() + 1 != exponents.size())
    throw domain_error("nested_power_sum: links must have depth - 1 entries");
  return cache().value({exponents, links, shift}, n);
}

std::vector<Rational> nested_power_prefixes(std::uint64_t n, const std::vector<unsigned>& exponents,
                                            const std::vector<Link>& links, std::uint64_t shift) {
  if (!exponents.empty() && links.size() + 1 != exponents.size())
    throw domain_error("nested_power_prefixes: links must have depth - 1 entries");
  return cache().prefixes({exponents, links, shift}, n);
}

void clear_nested_sum_cache() { cache().clear(); }

}  // namespace eulersum
