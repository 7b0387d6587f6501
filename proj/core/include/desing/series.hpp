#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "desing/cyclotomic.hpp"
#include "desing/errors.hpp"
#include "desing/polynomial.hpp"
#include "desing/rational.hpp"

namespace desing {

/// Exponent vector (e_1, ..., e_r) of a monomial t_1^{e_1} ... t_r^{e_r}.
using Exponent = std::vector<int>;

/// Polynomial in the parameter c with rational coefficients.
using PolyInC = RationalPolynomial;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Multivariate power series in t_1..t_r truncated at total degree D.
/// Sparse: an absent exponent means a zero coefficient. The scalar type
/// needs +=, *, multiplication by BigRational and is_zero().
template <typename Scalar>
class TruncatedSeries {
 public:
  using Terms = std::map<Exponent, Scalar>;

  TruncatedSeries(std::size_t nvars, int max_degree) : nvars_(nvars), degree_(max_degree) {
    if (nvars == 0) throw DomainError("a series needs at least one variable");
    if (max_degree < 0) throw DomainError("truncation degree must be non-negative");
  }

  static TruncatedSeries constant(std::size_t nvars, int max_degree, Scalar value) {
    TruncatedSeries s(nvars, max_degree);
    s.add_term(Exponent(nvars, 0), std::move(value));
    return s;
  }

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] int max_degree() const { return degree_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  /// Coefficient of t^e, or nullptr when it is zero.
  [[nodiscard]] const Scalar* find(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? nullptr : &it->second;
  }

  /// Coefficient of t^e, returning `zero` when absent.
  [[nodiscard]] Scalar coefficient(const Exponent& e, const Scalar& zero) const {
    const Scalar* p = find(e);
    return p ? *p : zero;
  }

  /// Adds value * t^e; monomials above the truncation degree are dropped.
  void add_term(const Exponent& e, Scalar value) {
    if (e.size() != nvars_) throw MismatchError("exponent arity does not match the series");
    if (total_degree(e) > degree_ || value.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, std::move(value));
    } else {
      it->second += value;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    require_compatible(o);
    for (const auto& [e, v] : o.terms_) add_term(e, v);
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_compatible(b);
    TruncatedSeries r(a.nvars_, a.degree_);
    Exponent e(a.nvars_);
    for (const auto& [ea, va] : a.terms_) {
      const int da = total_degree(ea);
      for (const auto& [eb, vb] : b.terms_) {
        if (da + total_degree(eb) > a.degree_) continue;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, va * vb);
      }
    }
    return r;
  }

  TruncatedSeries& operator*=(const BigRational& k) {
    if (k.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v = v * k;
    return *this;
  }

  /// Applies f to every coefficient, producing a series over another ring.
  template <typename F>
  [[nodiscard]] auto map(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Scalar&>()))>;
    TruncatedSeries<Out> r(nvars_, degree_);
    for (const auto& [e, v] : terms_) r.add_term(e, f(v));
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const TruncatedSeries& o) const {
    if (nvars_ != o.nvars_ || degree_ != o.degree_)
      throw MismatchError("series differ in arity or truncation degree");
  }

  std::size_t nvars_;
  int degree_;
  Terms terms_;
};

/// f(w_1 t_1 + ... + w_r t_r) truncated at total degree D, where
/// f = sum_n f[n] y^n is given through degree D (missing entries are zero).
template <typename Scalar>
TruncatedSeries<Scalar> compose_linear(const std::vector<Scalar>& f, const std::vector<BigRational>& weights,
                                       int max_degree) {
  TruncatedSeries<Scalar> out(weights.size(), max_degree);
  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < weights.size(); ++k)
    if (!weights[k].is_zero()) active.push_back(k);

  Exponent e(weights.size(), 0);
  // Enumerates exponent vectors on the active variables with |e| = n;
  // each contributes f_n * n!/prod(e_k!) * prod(w_k^e_k).
  std::function<void(std::size_t, int, const Scalar&, const BigRational&)> rec =
      [&](std::size_t idx, int remaining, const Scalar& fn, const BigRational& weight) {
        if (idx + 1 == active.size()) {
          e[active[idx]] = remaining;
          std::vector<int> parts;
          for (std::size_t k : active) parts.push_back(e[k]);
          out.add_term(e, fn * (weight * weights[active[idx]].pow(remaining) * BigRational(multinomial(parts))));
          e[active[idx]] = 0;
          return;
        }
        for (int p = 0; p <= remaining; ++p) {
          e[active[idx]] = p;
          rec(idx + 1, remaining - p, fn, weight * weights[active[idx]].pow(p));
        }
        e[active[idx]] = 0;
      };

  for (int n = 0; n <= max_degree && n < static_cast<int>(f.size()); ++n) {
    if (f[static_cast<std::size_t>(n)].is_zero()) continue;
    if (active.empty()) {
      if (n == 0) out.add_term(e, f[0]);
      continue;
    }
    rec(0, n, f[static_cast<std::size_t>(n)], BigRational(1));
  }
  return out;
}

/// Expansion of prod_j 1 / (1 - xi_j exp(gamma_j (t_j + ... + t_r))). The
/// coefficient of prod t_j^{n_j} / n_j! is the twisted multiple Bernoulli
/// number; roots are lifted to a common cyclotomic order.
TruncatedSeries<CycloElement> build_H_r(const std::vector<RootOfUnity>& xis,
                                        const std::vector<BigRational>& gammas, int max_degree);

/// Expansion of prod_j sum_{m>=1} (1 - c^m) B_m y_j^{m-1} / m!,
/// y_j = gamma_j (t_j + ... + t_r), with c kept symbolic.
TruncatedSeries<PolyInC> build_tilde_H(const std::vector<BigRational>& gammas, int max_degree);

/// prod_j E(gamma_j (t_j + ... + t_r)) with E(y) = sum_{n>=0} B_{n+1} y^n / n!.
TruncatedSeries<BigRational> build_E_product(const std::vector<BigRational>& gammas, int max_degree);

/// (-1)^r tilde_H / (c-1)^r evaluated at c = 1; the division is exact.
TruncatedSeries<BigRational> tilde_H_limit(const TruncatedSeries<PolyInC>& tilde_h);

/// tilde_H with the symbol c replaced by a concrete rational.
TruncatedSeries<BigRational> substitute_c(const TruncatedSeries<PolyInC>& tilde_h, const BigRational& c);

/// Least common multiple of the orders of the given roots.
long common_order(const std::vector<RootOfUnity>& xis);

}  // namespace desing
