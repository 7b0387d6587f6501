#include "desing/bernoulli.hpp"

#include <mutex>

namespace desing {

BernoulliCache::BernoulliCache() { table_.emplace_back(1); }

std::size_t BernoulliCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void BernoulliCache::extend_to(std::size_t n) {
  std::unique_lock lock(mutex_);
  while (table_.size() <= n) {
    const std::size_t m = table_.size();
    if (m >= 3 && m % 2 == 1) {
      table_.emplace_back(0);
      continue;
    }
    // (m+1) B_m = -sum_{k<m} C(m+1, k) B_k
    BigRational acc;
    for (std::size_t k = 0; k < m; ++k) {
      if (table_[k].is_zero()) continue;
      acc += BigRational(binomial(static_cast<long>(m + 1), static_cast<long>(k))) * table_[k];
    }
    table_.push_back(-acc / BigRational(static_cast<long>(m + 1)));
  }
}

BigRational BernoulliCache::get(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < table_.size()) return table_[n];
  }
  extend_to(n);
  std::shared_lock lock(mutex_);
  return table_[n];
}

std::vector<BigRational> BernoulliCache::table(std::size_t n) {
  extend_to(n);
  std::shared_lock lock(mutex_);
  return {table_.begin(), table_.begin() + static_cast<std::ptrdiff_t>(n + 1)};
}

BernoulliCache& BernoulliCache::global() {
  static BernoulliCache cache;
  return cache;
}

BigRational bernoulli_number(std::size_t n) { return BernoulliCache::global().get(n); }

BigRational bernoulli_polynomial(std::size_t n, const BigRational& x) {
  const auto b = BernoulliCache::global().table(n);
  // Horner in x over the coefficients C(n,k) B_{n-k} of x^k.
  BigRational acc;
  for (std::size_t k = n + 1; k-- > 0;) {
    acc = acc * x +
          BigRational(binomial(static_cast<long>(n), static_cast<long>(k))) * b[n - k];
  }
  return acc;
}

BigRational pochhammer(const BigRational& s, unsigned k) {
  BigRational r(1);
  for (unsigned i = 0; i < k; ++i) r *= s + BigRational(static_cast<long>(i));
  return r;
}

}  // namespace desing
