#include "desing/series.hpp"

#include <numeric>

#include "desing/bernoulli.hpp"

namespace desing {

namespace {

// Weights (0, ..., 0, gamma_j, ..., gamma_j) for y_j = gamma_j (t_j + ... + t_r).
std::vector<BigRational> tail_weights(std::size_t r, std::size_t j, const BigRational& gamma) {
  std::vector<BigRational> w(r);
  for (std::size_t k = j; k < r; ++k) w[k] = gamma;
  return w;
}

template <typename Scalar, typename Factor>
TruncatedSeries<Scalar> product_of_factors(std::size_t r, int max_degree, const Scalar& one, Factor&& factor) {
  auto acc = TruncatedSeries<Scalar>::constant(r, max_degree, one);
  for (std::size_t j = 0; j < r; ++j) acc = acc * factor(j);
  return acc;
}

}  // namespace

long common_order(const std::vector<RootOfUnity>& xis) {
  long c = 1;
  for (const auto& xi : xis) c = std::lcm(c, xi.c);
  return c;
}

TruncatedSeries<CycloElement> build_H_r(const std::vector<RootOfUnity>& xis,
                                        const std::vector<BigRational>& gammas, int max_degree) {
  if (xis.empty() || xis.size() != gammas.size()) throw MismatchError("need one gamma per root, r >= 1");
  for (const auto& xi : xis)
    if (xi.trivial()) throw TrivialRootError();
  const std::size_t r = xis.size();
  const long c = common_order(xis);

  return product_of_factors(r, max_degree, CycloElement(c, BigRational(1)), [&](std::size_t j) {
    // 1/(1 - xi e^y) = sum_n Bt_n(xi) y^n / n!
    auto table = twisted_bernoulli_table(static_cast<std::size_t>(max_degree), xis[j].lifted(c));
    std::vector<CycloElement> f;
    f.reserve(table.size());
    for (std::size_t n = 0; n < table.size(); ++n)
      f.push_back(table[n] * BigRational(BigInt(1), factorial(static_cast<long>(n))));
    return compose_linear(f, tail_weights(r, j, gammas[j]), max_degree);
  });
}

TruncatedSeries<PolyInC> build_tilde_H(const std::vector<BigRational>& gammas, int max_degree) {
  if (gammas.empty()) throw DomainError("r must be >= 1");
  const std::size_t r = gammas.size();
  // n-th coefficient: (1 - c^{n+1}) B_{n+1} / (n+1)!
  std::vector<PolyInC> f;
  for (int n = 0; n <= max_degree; ++n) {
    const BigRational scale =
        bernoulli_number(static_cast<std::size_t>(n + 1)) * BigRational(BigInt(1), factorial(n + 1));
    f.push_back((PolyInC(1) - PolyInC::monomial(static_cast<std::size_t>(n + 1))) * scale);
  }
  return product_of_factors(r, max_degree, PolyInC(1), [&](std::size_t j) {
    return compose_linear(f, tail_weights(r, j, gammas[j]), max_degree);
  });
}

TruncatedSeries<BigRational> build_E_product(const std::vector<BigRational>& gammas, int max_degree) {
  if (gammas.empty()) throw DomainError("r must be >= 1");
  const std::size_t r = gammas.size();
  std::vector<BigRational> f;
  for (int n = 0; n <= max_degree; ++n)
    f.push_back(bernoulli_number(static_cast<std::size_t>(n + 1)) * BigRational(BigInt(1), factorial(n)));
  return product_of_factors(r, max_degree, BigRational(1), [&](std::size_t j) {
    return compose_linear(f, tail_weights(r, j, gammas[j]), max_degree);
  });
}

TruncatedSeries<BigRational> tilde_H_limit(const TruncatedSeries<PolyInC>& tilde_h) {
  const std::size_t r = tilde_h.nvars();
  PolyInC divisor(1);
  const PolyInC c_minus_one({BigRational(-1), BigRational(1)});
  for (std::size_t j = 0; j < r; ++j) divisor *= c_minus_one;
  const BigRational sign = (r % 2 == 0) ? BigRational(1) : BigRational(-1);
  return tilde_h.map([&](const PolyInC& p) { return p.divide_exact(divisor).evaluate(BigRational(1)) * sign; });
}

TruncatedSeries<BigRational> substitute_c(const TruncatedSeries<PolyInC>& tilde_h, const BigRational& c) {
  return tilde_h.map([&](const PolyInC& p) { return p.evaluate(c); });
}

}  // namespace desing
