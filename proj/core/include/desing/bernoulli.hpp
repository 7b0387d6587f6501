#pragma once

#include <complex>
#include <cstddef>
#include <shared_mutex>
#include <vector>

#include "desing/rational.hpp"

namespace desing {

// Convention: t / (e^t - 1) = sum_n B_n t^n / n!, hence B_1 = -1/2.
// Every formula in this library assumes this sign of B_1.

/// Grow-only table of Bernoulli numbers B_0, B_1, ... computed from the
/// recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0. Concurrent readers are
/// allowed; extension takes an exclusive lock.
class BernoulliCache {
 public:
  BernoulliCache();

  /// B_n; extends the table as needed.
  BigRational get(std::size_t n);

  /// Snapshot of B_0..B_n.
  std::vector<BigRational> table(std::size_t n);

  std::size_t size() const;

  /// The process-wide instance used by bernoulli_number().
  static BernoulliCache& global();

 private:
  void extend_to(std::size_t n);

  mutable std::shared_mutex mutex_;
  std::vector<BigRational> table_;
};

/// B_n under the t/(e^t - 1) convention.
BigRational bernoulli_number(std::size_t n);

/// B_n(x) = sum_k C(n, k) B_k x^{n-k}.
BigRational bernoulli_polynomial(std::size_t n, const BigRational& x);

/// Rising factorial (s)_k = s (s+1) ... (s+k-1); (s)_0 = 1.
template <typename T>
std::complex<T> pochhammer(std::complex<T> s, unsigned k) {
  std::complex<T> r{1};
  for (unsigned i = 0; i < k; ++i) r *= s + static_cast<T>(i);
  return r;
}

/// Exact rising factorial for rational arguments.
BigRational pochhammer(const BigRational& s, unsigned k);

}  // namespace desing
