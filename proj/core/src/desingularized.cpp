#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "desing/desing_coeffs.hpp"
#include "desing/numeric.hpp"

namespace desing {

namespace {

constexpr double kNearSingular = 1e-6;
constexpr int kGridSize = 7;

template <typename T>
std::vector<T> epsilon_grid(T eps0) {
  std::vector<T> grid;
  for (int k = 0; k < kGridSize; ++k) grid.push_back(std::ldexp(eps0, -k));
  return grid;
}

template <typename T>
std::string describe(std::complex<T> s1, std::complex<T> s2) {
  std::ostringstream os;
  os << "(" << static_cast<double>(s1.real()) << (s1.imag() < 0 ? "" : "+") << static_cast<double>(s1.imag())
     << "i, " << static_cast<double>(s2.real()) << (s2.imag() < 0 ? "" : "+")
     << static_cast<double>(s2.imag()) << "i)";
  return os.str();
}

const ShiftedCombination& rank2_combination() {
  static const ShiftedCombination comb = combination(2);
  return comb;
}

template <typename T>
BasicEvalResult<T> evaluate_combination(std::complex<T> s1, std::complex<T> s2, std::complex<T> g1,
                                        std::complex<T> g2) {
  using C = std::complex<T>;
  C value{0};
  T err = 0;
  T worst = -1;
  std::string worst_term;
  const std::vector<C> s{s1, s2};
  for (const auto& group : rank2_combination().groups()) {
    const C coeff = evaluate<T>(group.poly, s);
    const C a1 = s1 + static_cast<T>(group.shift[0]);
    const C a2 = s2 + static_cast<T>(group.shift[1]);
    const auto z = double_zeta<T>(a1, a2, g1, g2);
    value += coeff * z.value;
    const T e = std::abs(coeff) * z.err_estimate;
    err += e;
    if (e > worst) {
      worst = e;
      worst_term = describe(a1, a2);
    }
  }
  return {value, err, Method::euler_maclaurin};
}

template <typename T>
bool near_singular(std::complex<T> s1, std::complex<T> s2) {
  for (const auto& group : rank2_combination().groups()) {
    const auto a1 = std::complex<double>(s1 + static_cast<T>(group.shift[0]));
    const auto a2 = std::complex<double>(s2 + static_cast<T>(group.shift[1]));
    if (singularity_distance(a1, a2).distance < kNearSingular) return true;
  }
  return false;
}

template <typename T, typename F>
BasicEvalResult<T> extrapolate(F&& f, T eps0) {
  const auto grid = epsilon_grid(eps0);
  std::vector<std::complex<T>> values;
  T noise = 0;
  for (T e : grid) {
    const auto r = f(e);
    values.push_back(r.value);
    noise = std::max(noise, r.err_estimate);
  }
  const auto ex = neville_to_zero(grid, values);
  return {ex.value, ex.correction + ex.amplification * noise, Method::extrapolated};
}

}  // namespace

template <typename T>
Extrapolation<T> neville_to_zero(const std::vector<T>& x, const std::vector<std::complex<T>>& f) {
  const std::size_t n = x.size();
  if (n == 0 || f.size() != n) throw DomainError("neville_to_zero needs matching, non-empty samples");
  std::vector<std::complex<T>> p(f);
  Extrapolation<T> out;
  for (std::size_t m = 1; m < n; ++m) {
    const auto left = p[0];
    const auto right = p[1];
    for (std::size_t i = 0; i + m < n; ++i)
      p[i] = (x[i + m] * p[i] - x[i] * p[i + 1]) / (x[i + m] - x[i]);
    if (m == n - 1) out.correction = std::max(std::abs(p[0] - left), std::abs(p[0] - right));
  }
  out.value = p[0];
  for (std::size_t i = 0; i < n; ++i) {
    T w = 1;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) w *= x[j] / (x[j] - x[i]);
    out.amplification += std::abs(w);
  }
  return out;
}

template <typename T>
BasicEvalResult<T> desing1(std::complex<T> s, T tol) {
  using C = std::complex<T>;
  auto direct = [](C z) {
    const auto r = riemann_zeta<T>(z);
    const C factor = T(1) - z;
    return BasicEvalResult<T>{factor * r.value, std::abs(factor) * r.err_estimate, r.method};
  };
  BasicEvalResult<T> out;
  if (std::abs(s - T(1)) < kNearSingular)
    out = extrapolate<T>([&](T e) { return direct(s + e); }, T(1) / 64);
  else
    out = direct(s);
  if (out.err_estimate > tol)
    throw ToleranceError("desing1: error estimate exceeds tolerance", static_cast<double>(out.err_estimate));
  return out;
}

template <typename T>
BasicEvalResult<T> desing2(std::complex<T> s1, std::complex<T> s2, std::complex<T> gamma1,
                           std::complex<T> gamma2, T tol, T eps0) {
  BasicEvalResult<T> out;
  if (near_singular(s1, s2)) {
    const T phi = std::numbers::phi_v<T>;
    out = extrapolate<T>(
        [&](T e) { return evaluate_combination<T>(s1 + e, s2 + e / phi, gamma1, gamma2); }, eps0);
  } else {
    out = evaluate_combination<T>(s1, s2, gamma1, gamma2);
  }
  if (out.err_estimate > tol)
    throw ToleranceError("desing2: error estimate " + std::to_string(static_cast<double>(out.err_estimate)) +
                             " exceeds tolerance at " + describe(s1, s2),
                         static_cast<double>(out.err_estimate));
  return out;
}

template Extrapolation<double> neville_to_zero(const std::vector<double>&,
                                               const std::vector<std::complex<double>>&);
template Extrapolation<long double> neville_to_zero(const std::vector<long double>&,
                                                    const std::vector<std::complex<long double>>&);
template BasicEvalResult<double> desing1(std::complex<double>, double);
template BasicEvalResult<long double> desing1(std::complex<long double>, long double);
template BasicEvalResult<double> desing2(std::complex<double>, std::complex<double>, std::complex<double>,
                                         std::complex<double>, double, double);
template BasicEvalResult<long double> desing2(std::complex<long double>, std::complex<long double>,
                                              std::complex<long double>, std::complex<long double>,
                                              long double, long double);

}  // namespace desing
