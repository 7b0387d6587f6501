#include "desing/special_values.hpp"

#include <numeric>

#include "desing/bernoulli.hpp"
#include "desing/errors.hpp"
#include "desing/series.hpp"

namespace desing {

MultiIndex::MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("multi-index must have rank >= 1");
  for (int e : entries_)
    if (e < 0) throw DomainError("multi-index entries must be non-negative");
}

int MultiIndex::weight() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

int NuMatrix::row_sum(std::size_t row) const {
  int s = 0;
  for (std::size_t col = row; col < r_; ++col) s += at(row, col);
  return s;
}

int NuMatrix::column_sum(std::size_t col) const {
  int s = 0;
  for (std::size_t row = 0; row <= col; ++row) s += at(row, col);
  return s;
}

namespace {

void require_rank(const MultiIndex& n, std::size_t count, const char* what) {
  if (n.rank() != count) throw MismatchError(std::string("need one ") + what + " per index entry");
}

BigRational sign_pow(int e) { return (e % 2 == 0) ? BigRational(1) : BigRational(-1); }

BigRational factorial_product(const MultiIndex& n) {
  BigInt p = 1;
  for (int e : n.entries()) p *= factorial(e);
  return BigRational(p);
}

}  // namespace

CycloElement twisted_multiple_bernoulli(const MultiIndex& n, const std::vector<RootOfUnity>& xis,
                                        const std::vector<BigRational>& gammas) {
  require_rank(n, xis.size(), "root");
  require_rank(n, gammas.size(), "gamma");
  const auto series = build_H_r(xis, gammas, n.weight());
  const long c = common_order(xis);
  return series.coefficient(n.entries(), CycloElement(c)) * factorial_product(n);
}

CycloElement double_twisted_closed(int k, int l, const RootOfUnity& xi1, const RootOfUnity& xi2,
                                   const BigRational& gamma1, const BigRational& gamma2) {
  if (k < 0 || l < 0) throw DomainError("indices must be non-negative");
  if (xi1.trivial() || xi2.trivial()) throw TrivialRootError();
  const long c = std::lcm(xi1.c, xi2.c);
  const auto b1 = twisted_bernoulli_table(static_cast<std::size_t>(k + l), xi1.lifted(c));
  const auto b2 = twisted_bernoulli_table(static_cast<std::size_t>(l), xi2.lifted(c));
  CycloElement acc(c);
  for (int j = 0; j <= l; ++j) {
    const BigRational scalar = BigRational(binomial(l, j)) * gamma1.pow(k + j) * gamma2.pow(l - j);
    acc += b1[static_cast<std::size_t>(k + j)] * b2[static_cast<std::size_t>(l - j)] * scalar;
  }
  return acc;
}

CycloElement lerch_special_value(const MultiIndex& n, const std::vector<RootOfUnity>& xis,
                                 const std::vector<BigRational>& gammas) {
  std::vector<RootOfUnity> inverted;
  inverted.reserve(xis.size());
  for (const auto& xi : xis) {
    if (xi.trivial()) throw TrivialRootError();
    inverted.push_back(xi.inverse());
  }
  return twisted_multiple_bernoulli(n, inverted, gammas) *
         sign_pow(static_cast<int>(n.rank()) + n.weight());
}

BigRational desing_value_exact(const MultiIndex& k, const std::vector<BigRational>& gammas) {
  require_rank(k, gammas.size(), "gamma");
  const std::size_t r = k.rank();
  const int total = k.weight();
  const auto bern = BernoulliCache::global().table(static_cast<std::size_t>(total + 1));
  // weight[j][n] = B_{n+1} gamma_j^n
  std::vector<std::vector<BigRational>> weight(r);
  for (std::size_t j = 0; j < r; ++j) {
    BigRational g(1);
    for (int n = 0; n <= total; ++n, g *= gammas[j]) weight[j].push_back(bern[static_cast<std::size_t>(n + 1)] * g);
  }
  std::vector<BigInt> fact(static_cast<std::size_t>(total + 1));
  for (int i = 0; i <= total; ++i) fact[static_cast<std::size_t>(i)] = factorial(i);

  BigRational sum;
  BigRational term;
  BigInt denom;
  for_each_nu_matrix(k, [&](const NuMatrix& nu) {
    term = 1;
    denom = 1;
    for (std::size_t j = 0; j < r; ++j) {
      const BigRational& w = weight[j][static_cast<std::size_t>(nu.row_sum(j))];
      if (w.is_zero()) return;
      term *= w;
      for (std::size_t d = 0; d <= j; ++d) {
        const int v = nu.at(d, j);
        if (v > 1) denom *= fact[static_cast<std::size_t>(v)];
      }
    }
    sum += term / BigRational(denom);
  });
  return sum * factorial_product(k) * sign_pow(total);
}

BigRational desing_value_r2_closed(int k, int l, const BigRational& gamma1, const BigRational& gamma2) {
  if (k < 0 || l < 0) throw DomainError("indices must be non-negative");
  BigRational acc;
  for (int nu = 0; nu <= l; ++nu) {
    acc += BigRational(binomial(l, nu)) * bernoulli_number(static_cast<std::size_t>(k + nu + 1)) *
           bernoulli_number(static_cast<std::size_t>(l - nu + 1)) * gamma1.pow(k + nu) * gamma2.pow(l - nu);
  }
  return acc * sign_pow(k + l);
}

BigRational desing_value_r3_closed(int k, int l, int m, const std::vector<BigRational>& gammas) {
  if (k < 0 || l < 0 || m < 0) throw DomainError("indices must be non-negative");
  if (gammas.size() != 3) throw MismatchError("r = 3 form needs three gammas");
  auto B = [](int n) { return bernoulli_number(static_cast<std::size_t>(n)); };
  BigRational acc;
  for (int nu = 0; nu <= m; ++nu) {
    for (int rho = 0; rho <= m - nu; ++rho) {
      const BigRational trinomial(multinomial({nu, rho, m - nu - rho}));
      for (int kappa = 0; kappa <= l; ++kappa) {
        acc += BigRational(binomial(l, kappa)) * trinomial * B(k + nu + kappa + 1) * B(l - kappa + rho + 1) *
               B(m - nu - rho + 1) * gammas[0].pow(k + nu + kappa) * gammas[1].pow(l - kappa + rho) *
               gammas[2].pow(m - nu - rho);
      }
    }
  }
  return acc * sign_pow(k + l + m);
}

BigRational desing_value_oracle(const MultiIndex& k, const std::vector<BigRational>& gammas) {
  require_rank(k, gammas.size(), "gamma");
  const auto series = build_E_product(gammas, k.weight());
  return series.coefficient(k.entries(), BigRational()) * factorial_product(k) * sign_pow(k.weight());
}

}  // namespace desing
