#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

#include "desing/bernoulli.hpp"
#include "desing/numeric.hpp"

namespace desing {

namespace {

constexpr int kMaxCorrections = 100;

// B_{2k} / (2k)! for k = 0..kMaxCorrections.
template <typename T>
const std::vector<T>& even_bernoulli_scaled() {
  static const std::vector<T> table = [] {
    std::vector<T> out;
    BigInt fact = 1;
    for (int k = 0; k <= kMaxCorrections; ++k) {
      if (k > 0) fact *= BigInt((2 * k - 1) * (2 * k));
      const BigRational q = bernoulli_number(static_cast<std::size_t>(2 * k)) / BigRational(fact);
      out.push_back(static_cast<T>(q.to_long_double()));
    }
    return out;
  }();
  return table;
}

template <typename T>
bool is_nonpositive_integer(std::complex<T> s) {
  return s.imag() == 0 && s.real() <= 0 && s.real() == std::floor(s.real());
}

template <typename T>
struct Attempt {
  bool converged = false;
  BasicEvalResult<T> result;
};

template <typename T>
Attempt<T> euler_maclaurin(std::complex<T> s, std::complex<T> a, long N, T tol, bool terminating) {
  using C = std::complex<T>;
  const T eps = std::numeric_limits<T>::epsilon();
  const auto& b2k = even_bernoulli_scaled<T>();

  C sum{0};
  T magnitude = 0;
  for (long n = 0; n < N; ++n) {
    const C t = std::exp(-s * std::log(a + static_cast<T>(n)));
    sum += t;
    magnitude += std::abs(t);
  }
  const C x = a + static_cast<T>(N);
  const C xs = std::exp(-s * std::log(x));
  const C integral = x * xs / (s - T(1));
  sum += integral + xs / T(2);
  magnitude += std::abs(integral) + std::abs(xs);

  // q = (s)_{2k-1} x^{-(2k-1)}
  C q = s / x;
  T previous = std::numeric_limits<T>::infinity();
  T omitted = 0;
  bool done = false;
  for (int k = 1; k <= kMaxCorrections; ++k) {
    const C term = b2k[static_cast<std::size_t>(k)] * q * xs;
    const T size = std::abs(term);
    if (terminating) {
      if (q == C(0)) {
        done = true;
        break;
      }
    } else {
      if (size <= tol * std::abs(sum)) {
        omitted = size;
        done = true;
        break;
      }
      if (size > previous) break;
    }
    sum += term;
    magnitude += size;
    previous = size;
    q *= (s + T(2 * k - 1)) * (s + T(2 * k)) / (x * x);
  }
  Attempt<T> out;
  out.converged = done;
  out.result = {sum, omitted + eps * magnitude, Method::euler_maclaurin};
  return out;
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::direct_sum: return "direct_sum";
    case Method::euler_maclaurin: return "euler_maclaurin";
    case Method::polynomial_reduction: return "polynomial_reduction";
    case Method::extrapolated: return "extrapolated";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::direct_sum, Method::euler_maclaurin, Method::polynomial_reduction,
                   Method::extrapolated})
    if (method_name(m) == name) return m;
  throw ParseError("unknown method tag: " + std::string(name));
}

SingularityError::SingularityError(SingularityReport report)
    : DomainError("point lies on singular hyperplane " + report.hyperplane + " (distance " +
                  std::to_string(report.distance) + ")"),
      report_(std::move(report)) {}

ToleranceError::ToleranceError(const std::string& what, double achieved)
    : Error(what), achieved_(achieved) {}

template <typename T>
BasicEvalResult<T> hurwitz_zeta(std::complex<T> s, std::complex<T> a, T tol) {
  if (!(a.real() > 0)) throw DomainError("hurwitz_zeta requires Re a > 0");
  if (s == std::complex<T>(1)) throw SingularityError({"s=1", 0.0});
  tol = std::max(tol, std::numeric_limits<T>::epsilon());

  const bool terminating = is_nonpositive_integer(s);
  long N = 0;
  if (!terminating) {
    const T target = std::max(T(7), std::abs(s) / 3);
    N = std::max(0L, static_cast<long>(std::ceil(target - a.real())));
  }
  for (int attempt = 0; attempt < 16; ++attempt) {
    auto run = euler_maclaurin(s, a, N, tol, terminating);
    if (run.converged) return run.result;
    N = 2 * N + 8;
  }
  throw ToleranceError("hurwitz_zeta: Euler-Maclaurin corrections did not converge", 1.0);
}

template <typename T>
BasicEvalResult<T> riemann_zeta(std::complex<T> s, T tol) {
  return hurwitz_zeta<T>(s, std::complex<T>(1), tol);
}

template BasicEvalResult<double> hurwitz_zeta(std::complex<double>, std::complex<double>, double);
template BasicEvalResult<long double> hurwitz_zeta(std::complex<long double>, std::complex<long double>,
                                                   long double);
template BasicEvalResult<double> riemann_zeta(std::complex<double>, double);
template BasicEvalResult<long double> riemann_zeta(std::complex<long double>, long double);

}  // namespace desing
