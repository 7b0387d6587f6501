#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "desing/laurent.hpp"
#include "desing/rational.hpp"

namespace desing {

/// One integer coefficient a_{l,m} of prod u_j^{l_j} v_j^{m_j}.
struct CoeffTerm {
  BigInt a;
  std::vector<int> l;  // u-exponents, non-negative
  std::vector<int> m;  // v-exponents, sum zero

  friend bool operator==(const CoeffTerm&, const CoeffTerm&) = default;
};

/// The coefficients a_{l,m}, one entry per monomial, ordered
/// lexicographically by (m, l).
class CoeffTable {
 public:
  CoeffTable(std::size_t r, std::vector<CoeffTerm> terms);

  /// Reads a Laurent polynomial in u_1..u_r, v_1..v_r (variables 0..r-1
  /// are u, r..2r-1 are v).
  static CoeffTable from_uv(std::size_t r, const LaurentPolynomial& uv);

  [[nodiscard]] std::size_t rank() const { return r_; }
  [[nodiscard]] const std::vector<CoeffTerm>& terms() const { return terms_; }
  [[nodiscard]] LaurentPolynomial to_uv() const;

  friend bool operator==(const CoeffTable&, const CoeffTable&) = default;

 private:
  std::size_t r_;
  std::vector<CoeffTerm> terms_;
};

/// Variable layout for the u/v ring of rank r.
inline std::size_t u_var(std::size_t j) { return j; }
inline std::size_t v_var(std::size_t r, std::size_t j) { return r + j; }
std::vector<std::string> uv_names(std::size_t r);

/// prod_{j=1}^{r} (1 - (u_j v_j + ... + u_r v_r)(v_j^{-1} - v_{j-1}^{-1})),
/// the j = 1 factor having no v_0 term.
LaurentPolynomial generating_G(std::size_t r);
CoeffTable expand_G(std::size_t r);

/// The same table built through the subset sum over J, K with the
/// coefficients b_{J,l} of prod_{j in J} (t_j + ... + t_r).
CoeffTable expand_H(std::size_t r);

/// True iff every term has sum_j m_j = 0.
bool weight_check(const CoeffTable& table);

/// One shifted zeta-function with its polynomial coefficient in s_1..s_r:
/// poly(s) * zeta_r(s_1 + m_1, ..., s_r + m_r; (1); (gamma_j)).
struct ShiftGroup {
  std::vector<int> shift;
  LaurentPolynomial poly;
};

/// sum a_{l,m} prod (s_j)_{l_j} zeta_r(s + m; (1); (gamma_j)).
class ShiftedCombination {
 public:
  explicit ShiftedCombination(CoeffTable table);

  [[nodiscard]] std::size_t rank() const { return table_.rank(); }
  [[nodiscard]] const CoeffTable& table() const { return table_; }

  /// Terms grouped by shift, Pochhammer products expanded as polynomials
  /// in s_1..s_r. Groups appear in decreasing lexicographic shift order,
  /// starting from the unshifted zeta-function.
  [[nodiscard]] const std::vector<ShiftGroup>& groups() const { return groups_; }

  /// LaTeX rendering of the grouped combination.
  [[nodiscard]] std::string to_tex() const;

 private:
  CoeffTable table_;
  std::vector<ShiftGroup> groups_;
};

ShiftedCombination combination(std::size_t r);

/// (s_var)_k as a polynomial in s_1..s_r.
LaurentPolynomial pochhammer_polynomial(std::size_t r, std::size_t var, int k);

/// Evaluates a polynomial (non-negative exponents) at complex points.
template <typename T>
std::complex<T> evaluate(const LaurentPolynomial& p, const std::vector<std::complex<T>>& x) {
  std::complex<T> acc{0};
  for (const auto& [m, c] : p.terms()) {
    std::complex<T> term{static_cast<T>(c.get_d())};
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] >= 0) {
        for (int e = 0; e < m[i]; ++e) term *= x[i];
      } else {
        for (int e = 0; e < -m[i]; ++e) term /= x[i];
      }
    }
    acc += term;
  }
  return acc;
}

}  // namespace desing
