#pragma once

#include <cstddef>
#include <vector>

#include "desing/cyclotomic.hpp"
#include "desing/rational.hpp"

namespace desing {

/// Non-negative multi-index (n_1, ..., n_r), r >= 1.
class MultiIndex {
 public:
  MultiIndex(std::initializer_list<int> entries);
  explicit MultiIndex(std::vector<int> entries);

  [[nodiscard]] std::size_t rank() const { return entries_.size(); }
  [[nodiscard]] const std::vector<int>& entries() const { return entries_; }
  [[nodiscard]] int operator[](std::size_t j) const { return entries_[j]; }
  [[nodiscard]] int weight() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> entries_;
};

/// Upper-triangular matrix nu_{jl}, 1 <= j <= l <= r, of non-negative
/// integers. Column l sums to k_l.
class NuMatrix {
 public:
  explicit NuMatrix(std::size_t r) : r_(r), cells_(r * (r + 1) / 2, 0) {}

  [[nodiscard]] std::size_t rank() const { return r_; }
  /// 0-based (row, col) with row <= col.
  [[nodiscard]] int at(std::size_t row, std::size_t col) const { return cells_[index(row, col)]; }
  int& at(std::size_t row, std::size_t col) { return cells_[index(row, col)]; }
  [[nodiscard]] int row_sum(std::size_t row) const;
  [[nodiscard]] int column_sum(std::size_t col) const;

 private:
  [[nodiscard]] std::size_t index(std::size_t row, std::size_t col) const { return col * (col + 1) / 2 + row; }
  std::size_t r_;
  std::vector<int> cells_;
};

/// Calls visit(nu) for every NuMatrix with column sums k_1..k_r, column by
/// column (column l runs over the compositions of k_l into l parts).
template <typename Visitor>
void for_each_nu_matrix(const MultiIndex& k, Visitor&& visit);

/// Twisted multiple Bernoulli number B((n_j); (xi_j); (gamma_j)): prod n_j!
/// times the coefficient of prod t_j^{n_j} in the expansion of
/// prod_j 1/(1 - xi_j exp(gamma_j (t_j + ... + t_r))).
CycloElement twisted_multiple_bernoulli(const MultiIndex& n, const std::vector<RootOfUnity>& xis,
                                        const std::vector<BigRational>& gammas);

/// r = 2 convolution form:
/// sum_{j=0}^{l} C(l,j) Bt_{k+j}(xi_1) Bt_{l-j}(xi_2) gamma_1^{k+j} gamma_2^{l-j}.
CycloElement double_twisted_closed(int k, int l, const RootOfUnity& xi1, const RootOfUnity& xi2,
                                   const BigRational& gamma1, const BigRational& gamma2);

/// Value at (-n_1, ..., -n_r) of the twisted multiple zeta-function
/// sum prod xi_j^{m_j} (m_1 gamma_1 + ... + m_j gamma_j)^{-s_j}:
/// (-1)^{r + |n|} B((n_j); (xi_j^{-1}); (gamma_j)).
CycloElement lerch_special_value(const MultiIndex& n, const std::vector<RootOfUnity>& xis,
                                 const std::vector<BigRational>& gammas);

/// zeta^des_r((-k_j); (gamma_j)) by summing over all NuMatrix fillings:
/// prod (-1)^{k_l} k_l! * sum prod_j B_{1+row_j} gamma_j^{row_j} / prod_{d<=j} nu_{dj}!.
BigRational desing_value_exact(const MultiIndex& k, const std::vector<BigRational>& gammas);

/// r = 2 closed form:
/// (-1)^{k+l} sum_{nu=0}^{l} C(l,nu) B_{k+nu+1} B_{l-nu+1} gamma_1^{k+nu} gamma_2^{l-nu}.
BigRational desing_value_r2_closed(int k, int l, const BigRational& gamma1, const BigRational& gamma2);

/// r = 3 triple-sum form over (nu, rho, kappa). The gamma exponents are
/// k+nu+kappa, l-kappa+rho and m-nu-rho (no extra +1 on each).
BigRational desing_value_r3_closed(int k, int l, int m, const std::vector<BigRational>& gammas);

/// Reads zeta^des_r((-k_j)) off the limit generating function
/// prod_j E(gamma_j (t_j + ... + t_r)): (-1)^{|k|} (prod k_j!) [t^k].
/// Independent of the NuMatrix enumeration.
BigRational desing_value_oracle(const MultiIndex& k, const std::vector<BigRational>& gammas);

// ---------------------------------------------------------------------------

template <typename Visitor>
void for_each_nu_matrix(const MultiIndex& k, Visitor&& visit) {
  const std::size_t r = k.rank();
  NuMatrix nu(r);
  // fill(col, row, remaining): distribute `remaining` over rows row..col of column col.
  auto fill = [&](auto&& self, std::size_t col, std::size_t row, int remaining) -> void {
    if (col == r) {
      visit(static_cast<const NuMatrix&>(nu));
      return;
    }
    if (row == col) {
      nu.at(row, col) = remaining;
      self(self, col + 1, 0, col + 1 < r ? k[col + 1] : 0);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      nu.at(row, col) = v;
      self(self, col, row + 1, remaining - v);
    }
  };
  fill(fill, 0, 0, k[0]);
}

}  // namespace desing
