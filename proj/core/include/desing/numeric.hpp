#pragma once

#include <complex>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "desing/errors.hpp"

namespace desing {

enum class Method { direct_sum, euler_maclaurin, polynomial_reduction, extrapolated };

std::string_view method_name(Method m);
Method parse_method(std::string_view name);

template <typename T>
struct BasicEvalResult {
  std::complex<T> value;
  T err_estimate{0};  // >= 0
  Method method{Method::euler_maclaurin};
};

using EvalResult = BasicEvalResult<double>;

/// Nearest singular hyperplane of zeta_2: s2 = 1 or s1 + s2 = b with
/// b in {2, 1, 0, -2, -4, ...}.
struct SingularityReport {
  std::string hyperplane;
  double distance = 0;
};

class SingularityError : public DomainError {
 public:
  explicit SingularityError(SingularityReport report);
  [[nodiscard]] const SingularityReport& report() const { return report_; }

 private:
  SingularityReport report_;
};

/// A numerical evaluation could not reach the requested tolerance.
class ToleranceError : public Error {
 public:
  ToleranceError(const std::string& what, double achieved);
  [[nodiscard]] double achieved() const { return achieved_; }

 private:
  double achieved_;
};

template <typename T>
constexpr T default_tolerance() {
  return 8 * std::numeric_limits<T>::epsilon();
}

inline constexpr int kDefaultSingularDepth = 40;

/// Hurwitz zeta sum_{n>=0} (a+n)^{-s}, continued to s != 1 by
/// Euler-Maclaurin. Requires Re a > 0. tol bounds the first omitted
/// correction relative to the value.
template <typename T>
BasicEvalResult<T> hurwitz_zeta(std::complex<T> s, std::complex<T> a, T tol = default_tolerance<T>());

template <typename T>
BasicEvalResult<T> riemann_zeta(std::complex<T> s, T tol = default_tolerance<T>());

SingularityReport singularity_distance(std::complex<double> s1, std::complex<double> s2,
                                       int depth = kDefaultSingularDepth);

enum class DoubleZetaPath { automatic, euler_maclaurin, polynomial_reduction, direct_sum };

/// zeta_2(s1, s2; gamma1, gamma2) = sum_{m1,m2 >= 1} (m1 g1)^{-s1} (m1 g1 + m2 g2)^{-s2}.
/// Throws SingularityError within 1e-9 of a singular hyperplane.
/// Requires Re g_j > 0 and Re(g1/g2) > 0.
template <typename T>
BasicEvalResult<T> double_zeta(std::complex<T> s1, std::complex<T> s2, std::complex<T> gamma1,
                               std::complex<T> gamma2, T tol = default_tolerance<T>(),
                               DoubleZetaPath path = DoubleZetaPath::automatic);

/// (1 - s) zeta(s), extended to s = 1 by its limit -1.
template <typename T>
BasicEvalResult<T> desing1(std::complex<T> s, T tol = T(1e-8));

/// The desingularized double zeta-function as the finite combination of
/// shifted zeta_2 values. Points on or near singular hyperplanes of any
/// term are evaluated by extrapolation along a generic line. Throws
/// ToleranceError when err_estimate exceeds tol. eps0 is the largest
/// step of the extrapolation grid eps0 * 2^{-k}, k = 0..6.
template <typename T>
BasicEvalResult<T> desing2(std::complex<T> s1, std::complex<T> s2, std::complex<T> gamma1 = T(1),
                           std::complex<T> gamma2 = T(1), T tol = T(1e-8), T eps0 = T(1) / 64);

template <typename T>
struct Extrapolation {
  std::complex<T> value;
  T correction{0};    // |last two diagonal entries' difference|
  T amplification{0};  // sum of |Lagrange weights| at 0
};

/// Polynomial extrapolation of f(x_i) to x = 0 (Neville's scheme).
template <typename T>
Extrapolation<T> neville_to_zero(const std::vector<T>& x, const std::vector<std::complex<T>>& f);

}  // namespace desing
