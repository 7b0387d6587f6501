#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "desing/rational.hpp"

namespace desing {

/// Finitely supported Laurent polynomial with integer coefficients in a
/// fixed number of variables. Exponents may be negative.
class LaurentPolynomial {
 public:
  using Monomial = std::vector<int>;
  using Terms = std::map<Monomial, BigInt>;

  explicit LaurentPolynomial(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPolynomial constant(std::size_t nvars, const BigInt& value);
  /// coeff * x_var^power
  static LaurentPolynomial variable(std::size_t nvars, std::size_t var, int power = 1,
                                    const BigInt& coeff = BigInt(1));

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] BigInt coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const BigInt& coeff);

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const BigInt& k);

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Human-readable form using the given variable names.
  [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_;
  Terms terms_;
};

}  // namespace desing
