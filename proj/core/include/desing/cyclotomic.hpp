#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "desing/polynomial.hpp"
#include "desing/rational.hpp"

namespace desing {

/// Euler's totient.
long euler_phi(long c);

/// The c-th cyclotomic polynomial Phi_c, obtained by dividing x^c - 1 by
/// Phi_d for every proper divisor d of c. Results are cached process-wide.
const RationalPolynomial& cyclotomic_polynomial(long c);

/// xi = zeta_c^a = exp(2 pi i a / c) with 0 <= a < c.
struct RootOfUnity {
  long c = 1;
  long a = 0;

  RootOfUnity() = default;
  RootOfUnity(long order, long exponent);

  [[nodiscard]] bool trivial() const { return a == 0; }
  [[nodiscard]] RootOfUnity inverse() const { return {c, c - a}; }
  /// The same root written with exponent over the multiple order c * k.
  [[nodiscard]] RootOfUnity lifted(long new_order) const;

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// All nontrivial c-th roots of unity, a = 1..c-1.
std::vector<RootOfUnity> nontrivial_roots(long c);

/// Element of Q(zeta_c), stored as coefficients of 1, zeta_c, ...,
/// zeta_c^{phi(c)-1}: the unique representative modulo Phi_c.
class CycloElement {
 public:
  /// Zero of Q(zeta_c).
  explicit CycloElement(long c = 1);
  CycloElement(long c, const BigRational& q);
  CycloElement(long c, long q) : CycloElement(c, BigRational(q)) {}
  /// Reduces an arbitrary polynomial in zeta_c.
  CycloElement(long c, const RationalPolynomial& p);

  static CycloElement root(const RootOfUnity& xi);
  static CycloElement from_coeffs(long c, std::vector<BigRational> coeffs);

  [[nodiscard]] long order() const { return c_; }
  [[nodiscard]] const std::vector<BigRational>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_rational() const;
  /// Throws DomainError if the element is not rational.
  [[nodiscard]] BigRational to_rational() const;
  [[nodiscard]] RationalPolynomial as_polynomial() const { return RationalPolynomial(coeffs_); }

  [[nodiscard]] CycloElement inverse() const;
  [[nodiscard]] CycloElement pow(long e) const;

  /// Galois automorphism zeta_c -> zeta_c^b, gcd(b, c) = 1.
  [[nodiscard]] CycloElement galois(long b) const;

  CycloElement& operator+=(const CycloElement& o);
  CycloElement& operator-=(const CycloElement& o);
  CycloElement& operator*=(const CycloElement& o);
  CycloElement& operator/=(const CycloElement& o);
  CycloElement& operator*=(const BigRational& k);

  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
  friend CycloElement operator*(CycloElement a, const CycloElement& b) { return a *= b; }
  friend CycloElement operator/(CycloElement a, const CycloElement& b) { return a /= b; }
  friend CycloElement operator*(CycloElement a, const BigRational& k) { return a *= k; }
  friend CycloElement operator*(const BigRational& k, CycloElement a) { return a *= k; }
  friend CycloElement operator-(CycloElement a);

  friend bool operator==(const CycloElement&, const CycloElement&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  void require_same_order(const CycloElement& o) const;

  long c_;
  std::vector<BigRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycloElement& x);

/// Twisted Bernoulli numbers: 1 / (1 - xi e^t) = sum_{n>=0} Bt_n(xi) t^n / n!
/// for xi != 1. Uses Bt_0 = 1/(1-xi), Bt_n = xi/(1-xi) sum_{k<n} C(n,k) Bt_k.
CycloElement twisted_bernoulli(std::size_t n, const RootOfUnity& xi);
/// Bt_0(xi) .. Bt_nmax(xi) in one pass.
std::vector<CycloElement> twisted_bernoulli_table(std::size_t nmax, const RootOfUnity& xi);

/// Frobenius-Euler numbers: (1 - lambda) / (e^t - lambda) = sum H_n(lambda) t^n / n!.
/// Throws DomainError at lambda = 1.
CycloElement frobenius_euler(std::size_t n, const CycloElement& lambda);
std::vector<CycloElement> frobenius_euler_table(std::size_t nmax, const CycloElement& lambda);

/// Li_{-k}(xi) = (z d/dz)^k [z / (1 - z)] at z = xi, evaluated exactly.
CycloElement negative_polylog(std::size_t k, const RootOfUnity& xi);

/// sum over nontrivial c-th roots xi of Bt_n(xi); throws Error if the sum
/// fails to be rational.
BigRational root_sum_twisted(std::size_t n, long c);

}  // namespace desing
