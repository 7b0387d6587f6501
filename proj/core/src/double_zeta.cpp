#include <algorithm>
#include <cmath>
#include <numbers>

#include "desing/bernoulli.hpp"
#include "desing/numeric.hpp"

namespace desing {

namespace {

constexpr double kSingularGuard = 1e-9;
constexpr long kDirectSumCap = 3000;

template <typename T>
bool is_nonpositive_integer(std::complex<T> s) {
  return s.imag() == 0 && s.real() <= 0 && s.real() == std::floor(s.real());
}

template <typename T>
std::complex<T> cpow(std::complex<T> z, std::complex<T> s) {
  return std::exp(s * std::log(z));
}

// zeta(s2, 1 + m beta) = (-1/(n+1)) B_{n+1}(1 + m beta) for s2 = -n, expanded
// in powers of m; each power contributes a Riemann zeta value.
template <typename T>
BasicEvalResult<T> polynomial_reduction(std::complex<T> s1, long n, std::complex<T> g1, std::complex<T> g2,
                                        T tol) {
  using C = std::complex<T>;
  const C beta = g1 / g2;
  const C pre = -std::pow(g2, static_cast<int>(n)) * cpow(g1, -s1) / static_cast<T>(n + 1);
  C sum{0};
  T err = 0;
  T magnitude = 0;
  C beta_pow{1};
  for (long i = 0; i <= n + 1; ++i, beta_pow *= beta) {
    const long j = n + 1 - i;
    // B_j(1) = B_j except B_1(1) = +1/2.
    BigRational bj = bernoulli_number(static_cast<std::size_t>(j));
    if (j == 1) bj = -bj;
    if (bj.is_zero()) continue;
    const T coeff = static_cast<T>((BigRational(binomial(n + 1, i)) * bj).to_long_double());
    const auto z = riemann_zeta<T>(s1 - static_cast<T>(i), tol);
    const C term = coeff * beta_pow * z.value;
    sum += term;
    magnitude += std::abs(term);
    err += std::abs(coeff * beta_pow) * z.err_estimate;
  }
  const T scale = std::abs(pre);
  return {pre * sum, scale * (err + std::numeric_limits<T>::epsilon() * magnitude),
          Method::polynomial_reduction};
}

// Head: m <= M through the Hurwitz kernel. Tail: asymptotic expansion of
// zeta(s2, 1 + m beta) in powers of m beta, summed over m > M in closed form.
template <typename T>
BasicEvalResult<T> euler_maclaurin_path(std::complex<T> s1, std::complex<T> s2, std::complex<T> g1,
                                        std::complex<T> g2, T tol) {
  using C = std::complex<T>;
  const T eps = std::numeric_limits<T>::epsilon();
  const C beta = g1 / g2;
  const C w = s1 + s2;
  const C pre = cpow(g1, -s1) * cpow(g2, -s2);
  const T target = std::max(T(6), std::abs(s2) / 3 + 2);
  long M = std::max(3L, static_cast<long>(std::ceil(target / std::abs(beta))));
  const T inner_tol = std::max(tol / 16, eps);

  static const std::vector<T> b2k = [] {
    std::vector<T> out;
    BigInt fact = 1;
    for (int k = 0; k <= 60; ++k) {
      if (k > 0) fact *= BigInt((2 * k - 1) * (2 * k));
      out.push_back(static_cast<T>(
          (bernoulli_number(static_cast<std::size_t>(2 * k)) / BigRational(fact)).to_long_double()));
    }
    return out;
  }();

  for (int attempt = 0; attempt < 8; ++attempt, M *= 2) {
    C head{0};
    T head_err = 0;
    T magnitude = 0;
    const C g2s = cpow(g2, -s2);
    for (long m = 1; m <= M; ++m) {
      const T mm = static_cast<T>(m);
      const C outer = cpow(mm * g1, -s1) * g2s;
      const auto h = hurwitz_zeta<T>(s2, T(1) + mm * beta, inner_tol);
      head += outer * h.value;
      head_err += std::abs(outer) * h.err_estimate;
      magnitude += std::abs(outer * h.value);
    }

    const C tail_at(static_cast<T>(M + 1));
    auto zeta_tail = [&](C arg, T& err) {
      const auto z = hurwitz_zeta<T>(arg, tail_at, inner_tol);
      err += z.err_estimate;
      return z;
    };
    T tail_err = 0;
    C tail{0};
    {
      T e0 = 0, e1 = 0;
      const C c0 = cpow(beta, T(1) - s2) / (s2 - T(1));
      const C c1 = -cpow(beta, -s2) / T(2);
      const auto z0 = zeta_tail(w - T(1), e0);
      const auto z1 = zeta_tail(w, e1);
      tail = c0 * z0.value + c1 * z1.value;
      tail_err += std::abs(c0) * e0 + std::abs(c1) * e1;
      magnitude += std::abs(pre) * (std::abs(c0 * z0.value) + std::abs(c1 * z1.value));
    }
    // c_k = B_{2k}/(2k)! (s2)_{2k-1} beta^{1-s2-2k}
    C poch = s2;
    C beta_pow = cpow(beta, -s2) / beta;  // beta^{-s2-1}
    const C inv_beta2 = T(1) / (beta * beta);
    T previous = std::numeric_limits<T>::infinity();
    bool converged = false;
    T omitted = 0;
    for (int k = 1; k < static_cast<int>(b2k.size()); ++k) {
      const C ck = b2k[static_cast<std::size_t>(k)] * poch * beta_pow;
      if (ck == C(0)) {
        converged = true;
        break;
      }
      T ek = 0;
      const auto zk = zeta_tail(w + T(2 * k - 1), ek);
      const C term = ck * zk.value;
      const T size = std::abs(pre * term);
      const T total = std::abs(head + pre * (tail + term));
      if (size <= tol * total) {
        omitted = size;
        converged = true;
        break;
      }
      // Divergence is judged on the asymptotic series in x = (M+1) beta;
      // the zeta factor is not monotone near its pole.
      const T proxy = std::abs(ck) * std::pow(static_cast<T>(M + 1), -static_cast<T>(2 * k));
      if (proxy > previous) break;
      previous = proxy;
      tail += term;
      tail_err += std::abs(ck) * ek;
      magnitude += size;
      poch *= (s2 + T(2 * k - 1)) * (s2 + T(2 * k));
      beta_pow *= inv_beta2;
    }
    if (!converged) continue;
    const C value = head + pre * tail;
    const T err = head_err + std::abs(pre) * tail_err + omitted + eps * magnitude;
    return {value, err, Method::euler_maclaurin};
  }
  throw ToleranceError("double_zeta: tail expansion did not converge", 1.0);
}

// Triangle m1 + m2 <= N with the bound
// e^{(|t1|+|t2|) pi/2} (Re g1)^{-sigma1} zeta(sigma1) g^{-sigma2} N^{1-sigma2} / (sigma2 - 1),
// g = min(Re g1, Re g2).
template <typename T>
BasicEvalResult<T> direct_sum(std::complex<T> s1, std::complex<T> s2, std::complex<T> g1, std::complex<T> g2,
                              T tol) {
  using C = std::complex<T>;
  const T sigma1 = s1.real();
  const T sigma2 = s2.real();
  if (!(sigma1 > 1 && sigma2 > 1)) throw DomainError("direct_sum requires Re s1 > 1 and Re s2 > 1");
  const T g = std::min(g1.real(), g2.real());
  const T zeta1 = riemann_zeta<T>(C(sigma1)).value.real();
  const T constant = std::exp((std::abs(s1.imag()) + std::abs(s2.imag())) * std::numbers::pi_v<T> / 2) *
                     std::pow(g1.real(), -sigma1) * zeta1 * std::pow(g, -sigma2) / (sigma2 - 1);
  // clamp before the cast: the unclamped cutoff can exceed the range of long
  const T wanted = std::ceil(std::pow(constant / tol, 1 / (sigma2 - 1)));
  const long N = static_cast<long>(std::clamp(wanted, T(2), static_cast<T>(kDirectSumCap)));
  const T bound = constant * std::pow(static_cast<T>(N), 1 - sigma2);

  C sum{0};
  T magnitude = 0;
  for (long m1 = 1; m1 < N; ++m1) {
    const C a = static_cast<T>(m1) * g1;
    C row{0};
    for (long m2 = 1; m1 + m2 <= N; ++m2) {
      const C t = cpow(a + static_cast<T>(m2) * g2, -s2);
      row += t;
      magnitude += std::abs(t);
    }
    const C outer = cpow(a, -s1);
    sum += outer * row;
  }
  const T rounding = std::numeric_limits<T>::epsilon() * std::sqrt(static_cast<T>(N)) * magnitude;
  return {sum, bound + rounding, Method::direct_sum};
}

}  // namespace

SingularityReport singularity_distance(std::complex<double> s1, std::complex<double> s2, int depth) {
  // Ties go to the first candidate: s1+s2=2, then s2=1, then the rest.
  SingularityReport best{"s1+s2=2", std::abs(s1 + s2 - 2.0) / std::numbers::sqrt2};
  auto consider = [&](int b) {
    const double d = std::abs(s1 + s2 - static_cast<double>(b)) / std::numbers::sqrt2;
    if (d < best.distance) best = {"s1+s2=" + std::to_string(b), d};
  };
  if (const double d = std::abs(s2 - 1.0); d < best.distance) best = {"s2=1", d};
  consider(1);
  for (int b = 0; b >= -depth; b -= 2) consider(b);
  return best;
}

template <typename T>
BasicEvalResult<T> double_zeta(std::complex<T> s1, std::complex<T> s2, std::complex<T> gamma1,
                               std::complex<T> gamma2, T tol, DoubleZetaPath path) {
  if (!(gamma1.real() > 0 && gamma2.real() > 0)) throw DomainError("double_zeta requires Re gamma_j > 0");
  if (!((gamma1 / gamma2).real() > 0)) throw DomainError("double_zeta requires Re(gamma1/gamma2) > 0");
  const auto report = singularity_distance(std::complex<double>(s1), std::complex<double>(s2));
  if (report.distance <= kSingularGuard) throw SingularityError(report);
  tol = std::max(tol, std::numeric_limits<T>::epsilon());

  if (path == DoubleZetaPath::automatic)
    path = is_nonpositive_integer(s2) ? DoubleZetaPath::polynomial_reduction : DoubleZetaPath::euler_maclaurin;
  switch (path) {
    case DoubleZetaPath::polynomial_reduction:
      if (!is_nonpositive_integer(s2))
        throw DomainError("polynomial_reduction requires s2 to be a non-positive integer");
      return polynomial_reduction(s1, static_cast<long>(-s2.real()), gamma1, gamma2, tol);
    case DoubleZetaPath::direct_sum:
      return direct_sum(s1, s2, gamma1, gamma2, tol);
    default:
      return euler_maclaurin_path(s1, s2, gamma1, gamma2, tol);
  }
}

template BasicEvalResult<double> double_zeta(std::complex<double>, std::complex<double>, std::complex<double>,
                                             std::complex<double>, double, DoubleZetaPath);
template BasicEvalResult<long double> double_zeta(std::complex<long double>, std::complex<long double>,
                                                  std::complex<long double>, std::complex<long double>,
                                                  long double, DoubleZetaPath);

}  // namespace desing
