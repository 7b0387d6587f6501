#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "desing/rational.hpp"

namespace desing {

/// Dense univariate polynomial with rational coefficients, stored
/// low-degree first without trailing zeros (the zero polynomial is empty).
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  RationalPolynomial(BigRational constant);  // NOLINT(google-explicit-constructor)
  RationalPolynomial(long constant) : RationalPolynomial(BigRational(constant)) {}  // NOLINT
  explicit RationalPolynomial(std::vector<BigRational> coeffs);

  /// x^k
  static RationalPolynomial monomial(std::size_t k, BigRational coeff = BigRational(1));

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<BigRational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k (zero beyond the degree).
  [[nodiscard]] BigRational coeff(std::size_t k) const;
  [[nodiscard]] const BigRational& leading() const { return coeffs_.back(); }

  [[nodiscard]] BigRational evaluate(const BigRational& x) const;
  [[nodiscard]] RationalPolynomial derivative() const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const BigRational& k);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const BigRational& k) { return a *= k; }
  friend RationalPolynomial operator*(const BigRational& k, RationalPolynomial a) { return a *= k; }
  friend RationalPolynomial operator-(RationalPolynomial a);

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// Euclidean division: returns (quotient, remainder). Throws on a zero divisor.
  [[nodiscard]] std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& d) const;

  /// Exact division; throws DomainError when the remainder is nonzero.
  [[nodiscard]] RationalPolynomial divide_exact(const RationalPolynomial& d) const;

  [[nodiscard]] std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  RationalPolynomial gcd;
  RationalPolynomial s;
  RationalPolynomial t;
};
ExtendedGcd extended_gcd(const RationalPolynomial& a, const RationalPolynomial& b);

}  // namespace desing
