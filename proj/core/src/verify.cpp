#include "desing/verify.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "desing/bernoulli.hpp"
#include "desing/cyclotomic.hpp"
#include "desing/desing_coeffs.hpp"
#include "desing/errors.hpp"
#include "desing/numeric.hpp"
#include "desing/series.hpp"
#include "desing/special_values.hpp"

namespace desing {

namespace {

using Poly = LaurentPolynomial;
using cd = std::complex<double>;

struct Outcome {
  double deviation = 0;
  std::string detail;
  bool ok() const { return deviation == 0; }
};

// Numeric checks pass when deviation <= tolerance.
struct NumericOutcome {
  double deviation = 0;
  double tolerance = 0;
  std::string detail;
};

struct Check {
  int id;
  std::string name;
  bool exact;
  double time_limit;
  std::function<CheckResult()> run;
};

// Builders for printed expansions in u_1..u_r, v_1..v_r.
struct UV {
  std::size_t r;
  [[nodiscard]] Poly k(long c) const { return Poly::constant(2 * r, c); }
  [[nodiscard]] Poly u(std::size_t j) const { return Poly::variable(2 * r, j - 1); }
  [[nodiscard]] Poly v(std::size_t j, int p) const { return Poly::variable(2 * r, r + j - 1, p); }
};

// Builders for grouped coefficients in s_1..s_r.
struct S {
  std::size_t r;
  [[nodiscard]] Poly k(long c) const { return Poly::constant(r, c); }
  [[nodiscard]] Poly s(std::size_t j) const { return Poly::variable(r, j - 1); }
};

Poly printed_G2() {
  const UV x{2};
  return (x.k(1) - x.u(1)) * (x.k(1) - x.u(2)) +
         (x.u(2) * x.u(2) - x.u(1) * x.u(2)) * x.v(1, -1) * x.v(2, 1) -
         x.u(2) * x.u(2) * x.v(1, -2) * x.v(2, 2);
}

Poly printed_G3() {
  const UV x{3};
  auto u = [&](std::size_t j) { return x.u(j); };
  auto v = [&](std::size_t j, int p) { return x.v(j, p); };
  const Poly one = x.k(1);
  Poly g = x.k(0);
  g -= (u(1) - one) * (u(2) - one) * (u(3) - one);
  g += (u(1) - one) * (u(2) - u(3)) * u(3) * v(2, -1) * v(3, 1);
  g += (u(1) - one) * u(3) * u(3) * v(2, -2) * v(3, 2);
  g += (u(1) - u(2)) * u(2) * (u(3) - one) * v(1, -1) * v(2, 1);
  g += u(3) * (x.k(0) - u(1) + x.k(2) * u(2) - u(1) * u(2) + u(2) * u(2) + u(1) * u(3) - x.k(2) * u(2) * u(3)) *
       v(1, -1) * v(3, 1);
  g -= u(3) * u(3) * (x.k(-1) + u(1) - x.k(2) * u(2) + u(3)) * v(1, -1) * v(2, -1) * v(3, 2);
  g += u(3) * u(3) * u(3) * v(1, -1) * v(2, -2) * v(3, 3);
  g += u(2) * u(2) * (u(3) - one) * v(1, -2) * v(2, 2);
  g -= u(2) * (x.k(2) + u(2) - x.k(2) * u(3)) * u(3) * v(1, -2) * v(2, 1) * v(3, 1);
  g += u(3) * u(3) * (x.k(-1) - x.k(2) * u(2) + u(3)) * v(1, -2) * v(3, 2);
  g -= u(3) * u(3) * u(3) * v(1, -2) * v(2, -1) * v(3, 3);
  return g;
}

std::map<std::vector<int>, Poly> printed_groups2() {
  const S x{2};
  auto s = [&](std::size_t j) { return x.s(j); };
  const Poly one = x.k(1);
  return {
      {{0, 0}, (s(1) - one) * (s(2) - one)},
      {{-1, 1}, s(2) * (s(2) + one - s(1))},
      {{-2, 2}, x.k(-1) * s(2) * (s(2) + one)},
  };
}

std::map<std::vector<int>, Poly> printed_groups3() {
  const S x{3};
  auto s = [&](std::size_t j) { return x.s(j); };
  auto c = [&](long v) { return x.k(v); };
  const Poly one = c(1);
  return {
      {{0, 0, 0}, c(-1) * (s(1) - one) * (s(2) - one) * (s(3) - one)},
      {{0, -1, 1}, (s(1) - one) * (c(-1) + s(2) - s(3)) * s(3)},
      {{0, -2, 2}, (s(1) - one) * s(3) * (s(3) + one)},
      {{-1, 1, 0}, (c(-1) + s(1) - s(2)) * s(2) * (s(3) - one)},
      {{-1, 0, 1}, s(3) * (s(2) - s(1) * s(2) + s(2) * s(2) + s(1) * s(3) - c(2) * s(2) * s(3))},
      {{-1, -1, 2}, c(-1) * s(3) * (s(3) + one) * (one + s(1) - c(2) * s(2) + s(3))},
      {{-1, -2, 3}, s(3) * (s(3) + one) * (s(3) + c(2))},
      {{-2, 2, 0}, s(2) * (s(2) + one) * (s(3) - one)},
      {{-2, 1, 1}, c(-1) * s(2) * (one + s(2) - c(2) * s(3)) * s(3)},
      {{-2, 0, 2}, s(3) * (s(3) + one) * (one - c(2) * s(2) + s(3))},
      {{-2, -1, 3}, c(-1) * s(3) * (s(3) + one) * (s(3) + c(2))},
  };
}

std::size_t group_mismatches(std::size_t r, const std::map<std::vector<int>, Poly>& expected) {
  const auto comb = combination(r);
  std::size_t bad = 0;
  std::map<std::vector<int>, Poly> got;
  for (const auto& g : comb.groups()) got.emplace(g.shift, g.poly);
  for (const auto& [shift, poly] : expected) {
    auto it = got.find(shift);
    if (it == got.end() || !(it->second == poly)) ++bad;
  }
  for (const auto& [shift, poly] : got)
    if (!expected.contains(shift)) ++bad;
  return bad;
}

const std::vector<std::vector<BigRational>>& gamma_samples2() {
  static const std::vector<std::vector<BigRational>> g = {
      {1, 1}, {BigRational(1, 2), 3}, {2, BigRational(1, 3)}};
  return g;
}

const std::vector<std::vector<BigRational>>& gamma_samples3() {
  static const std::vector<std::vector<BigRational>> g = {
      {1, 1, 1}, {BigRational(1, 2), 3, 2}, {2, BigRational(1, 3), BigRational(3, 5)}};
  return g;
}

Outcome check_coeff_tables() {
  std::size_t bad = 0;
  std::ostringstream os;
  const CoeffTable ref1(1, {{BigInt(1), {0}, {0}}, {BigInt(-1), {1}, {0}}});
  if (!(expand_G(1) == ref1)) ++bad, os << "r=1 table; ";
  if (!(expand_G(2) == CoeffTable::from_uv(2, printed_G2()))) ++bad, os << "r=2 table; ";
  if (!(expand_G(3) == CoeffTable::from_uv(3, printed_G3()))) ++bad, os << "r=3 table; ";
  if (auto b = group_mismatches(2, printed_groups2())) bad += b, os << "r=2 groups: " << b << "; ";
  if (auto b = group_mismatches(3, printed_groups3())) bad += b, os << "r=3 groups: " << b << "; ";
  return {static_cast<double>(bad), bad ? os.str() : "r=1,2,3 tables and groupings match"};
}

Outcome check_H_equals_G() {
  std::size_t bad = 0;
  for (std::size_t r = 1; r <= 5; ++r)
    if (!(expand_H(r) == expand_G(r)) || !weight_check(expand_G(r))) ++bad;
  return {static_cast<double>(bad), "r = 1..5"};
}

Outcome check_root_sum() {
  std::size_t bad = 0;
  for (long c = 2; c <= 6; ++c)
    for (std::size_t n = 0; n <= 12; ++n) {
      const BigRational lhs =
          (BigRational(1) - BigRational(c).pow(static_cast<long>(n + 1))) * bernoulli_number(n + 1) /
          BigRational(static_cast<long>(n + 1));
      if (!(root_sum_twisted(n, c) == lhs)) ++bad;
    }
  return {static_cast<double>(bad), "c = 2..6, n <= 12"};
}

Outcome check_eur_exp1() {
  constexpr int kMax = 5;
  std::size_t bad = 0;
  std::size_t total = 0;
  for (long c : {2L, 3L, 4L})
    for (const auto& xi1 : nontrivial_roots(c))
      for (const auto& xi2 : nontrivial_roots(c))
        for (const auto& g : gamma_samples2()) {
          const auto series = build_H_r({xi1, xi2}, g, 2 * kMax);
          for (int k = 0; k <= kMax; ++k)
            for (int l = 0; l <= kMax; ++l) {
              const auto coeff = series.coefficient({k, l}, CycloElement(c));
              const CycloElement via_series = coeff * BigRational(factorial(k) * factorial(l));
              ++total;
              if (!(via_series == double_twisted_closed(k, l, xi1, xi2, g[0], g[1]))) ++bad;
            }
        }
  return {static_cast<double>(bad), std::to_string(total) + " coefficients"};
}

Outcome check_eur_exp2() {
  constexpr int kMax = 4;
  std::size_t bad = 0;
  for (long c : {2L, 3L})
    for (const auto& g : gamma_samples2())
      for (int k = 0; k <= kMax; ++k)
        for (int l = 0; l <= kMax; ++l) {
          CycloElement sum(c);
          for (const auto& xi1 : nontrivial_roots(c))
            for (const auto& xi2 : nontrivial_roots(c))
              sum += twisted_multiple_bernoulli(MultiIndex{k, l}, {xi1, xi2}, g);
          BigRational rhs = 0;
          for (int j = 0; j <= l; ++j) {
            const long a = k + j + 1;
            const long b = l - j + 1;
            rhs += BigRational(binomial(l, j)) * (BigRational(1) - BigRational(c).pow(a)) *
                   (BigRational(1) - BigRational(c).pow(b)) *
                   bernoulli_number(static_cast<std::size_t>(a)) / BigRational(a) *
                   bernoulli_number(static_cast<std::size_t>(b)) / BigRational(b) * g[0].pow(k + j) *
                   g[1].pow(l - j);
          }
          if (!sum.is_rational() || !(sum.to_rational() == rhs)) ++bad;
        }
  return {static_cast<double>(bad), "c = 2, 3; k, l <= 4"};
}

Outcome check_cont_values() {
  constexpr int kMax = 4;
  std::size_t bad = 0;
  std::size_t r3_printed_exponent_failures = 0;
  // r = 1, 2
  for (const auto& g : gamma_samples2()) {
    const auto e1 = build_E_product({g[0]}, kMax);
    const auto e2 = build_E_product(g, 2 * kMax);
    for (int k = 0; k <= kMax; ++k) {
      const BigRational o1 = BigRational(k % 2 ? -1 : 1) * BigRational(factorial(k)) *
                             e1.coefficient({k}, BigRational(0));
      if (!(desing_value_exact(MultiIndex{k}, {g[0]}) == o1)) ++bad;
      for (int l = 0; l <= kMax; ++l) {
        const BigRational o2 = BigRational((k + l) % 2 ? -1 : 1) * BigRational(factorial(k) * factorial(l)) *
                               e2.coefficient({k, l}, BigRational(0));
        if (!(desing_value_exact(MultiIndex{k, l}, g) == o2)) ++bad;
        if (!(desing_value_r2_closed(k, l, g[0], g[1]) == o2)) ++bad;
      }
    }
  }
  // r = 3, including the triple-sum form
  for (const auto& g : gamma_samples3()) {
    const auto e3 = build_E_product(g, 3 * kMax);
    for (int k = 0; k <= kMax; ++k)
      for (int l = 0; l <= kMax; ++l)
        for (int m = 0; m <= kMax; ++m) {
          const BigRational o3 = BigRational((k + l + m) % 2 ? -1 : 1) *
                                 BigRational(factorial(k) * factorial(l) * factorial(m)) *
                                 e3.coefficient({k, l, m}, BigRational(0));
          if (!(desing_value_exact(MultiIndex{k, l, m}, g) == o3)) ++bad;
          if (!(desing_value_r3_closed(k, l, m, g) == o3)) ++bad;
          // The printed exponents carry an extra +1 each: the value picks up
          // gamma_1 gamma_2 gamma_3, visible whenever that product is not 1.
          const BigRational prod = g[0] * g[1] * g[2];
          if (!(desing_value_r3_closed(k, l, m, g) * prod == o3)) ++r3_printed_exponent_failures;
        }
  }
  std::ostringstream os;
  os << "r <= 3, k_j <= 4; printed r=3 exponents (+1) disagree at " << r3_printed_exponent_failures
     << " points, exponents without +1 agree";
  return {static_cast<double>(bad), os.str()};
}

Outcome check_desing_values() {
  std::size_t bad = 0;
  for (int k = 0; k <= 12; ++k) {
    const BigRational expected = BigRational(k % 2 ? -1 : 1) * bernoulli_number(static_cast<std::size_t>(k + 1));
    if (!(desing_value_exact(MultiIndex{k}, {1}) == expected)) ++bad;
  }
  if (!(desing_value_exact(MultiIndex{0, 2}, {1, 1}) == BigRational(1, 18))) ++bad;
  return {static_cast<double>(bad), "r=1 k <= 12; (0,-2) -> 1/18"};
}

double zeta_real(double s) { return riemann_zeta<double>(cd(s)).value.real(); }

cd bernoulli_poly_complex(std::size_t n, cd a) {
  cd acc{0};
  for (std::size_t k = 0; k <= n; ++k)
    acc = acc * a + static_cast<double>(BigRational(binomial(static_cast<long>(n), static_cast<long>(k))).to_double() *
                                        bernoulli_number(k).to_double());
  return acc;
}

NumericOutcome check_hurwitz() {
  double worst = std::abs(hurwitz_zeta<double>(cd(2), cd(1)).value - std::numbers::pi * std::numbers::pi / 6);
  const std::vector<cd> samples{cd(1), cd(0.5), cd(1.5), cd(2, 0.5), cd(1.0 / 3, 2)};
  for (int n = 0; n <= 8; ++n)
    for (cd a : samples) {
      // B_{n+1}(a) = sum_k C(n+1,k) B_k a^{n+1-k}, Horner in a
      const cd expected = -bernoulli_poly_complex(static_cast<std::size_t>(n + 1), a) / static_cast<double>(n + 1);
      const cd got = hurwitz_zeta<double>(cd(-n), a).value;
      worst = std::max(worst, std::abs(got - expected));
    }
  return {worst, 1e-12, "zeta(2,1) and zeta(-n,a), n <= 8, 5 samples of a"};
}

NumericOutcome check_exam_table() {
  struct Point {
    double s1, s2, target;
  };
  const double z2 = zeta_real(2), z3 = zeta_real(3), z4 = zeta_real(4);
  const std::vector<Point> points{
      {-1, 1, 0.125},
      {-1, 4, z3 - z4},
      {3, -3, 0.75 - z3 / 15},
      {4, -3, 0.5 + z2 / 2 - z4 / 10},
      {1, 1, 0.5},
      {2, 1, -z2 + 2 * z3},
      {3, 1, 2 * z3 - 1.25 * z4},
  };
  double worst = 0;
  std::ostringstream os;
  for (const auto& p : points) {
    const auto r = desing2<double>(cd(p.s1), cd(p.s2), 1.0, 1.0, 1e-6);
    const double d = std::abs(r.value - p.target);
    worst = std::max(worst, d);
  }
  os << points.size() << " points";
  return {worst, 1e-6, os.str()};
}

NumericOutcome check_cancellation() {
  double worst = 0;
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l) {
      const auto r = desing2<double>(cd(-k), cd(-l), 1.0, 1.0, 1e-6);
      const double expected = desing_value_r2_closed(k, l, 1, 1).to_double();
      worst = std::max(worst, std::abs(r.value - expected));
    }
  return {worst, 1e-6, "0 <= k, l <= 3"};
}

// sum_{m1 + m2 <= N} m1^{-a} (m1 + m2)^{-b} with tail bound
// sum_{n > N} (sum_{m1 < n} m1^{-a}) n^{-b}.
std::pair<double, double> brute_double_zeta(double a, double b, long N) {
  double sum = 0;
  for (long m1 = 1; m1 < N; ++m1) {
    double row = 0;
    for (long n = N; n > m1; --n) row += std::pow(static_cast<double>(n), -b);
    sum += std::pow(static_cast<double>(m1), -a) * row;
  }
  const double lnN = std::log(static_cast<double>(N));
  const double inner = a > 1 ? zeta_real(a) : 1 + lnN;
  const double bound = inner * std::pow(static_cast<double>(N), 1 - b) *
                       (1 / (b - 1) + (a > 1 ? 0 : 1 / ((b - 1) * (b - 1))));
  return {sum, bound};
}

NumericOutcome check_regular_point() {
  const double s1 = 3, s2 = 4;
  constexpr long N = 3000;
  const auto [z0, e0] = brute_double_zeta(s1, s2, N);
  const auto [z1, e1] = brute_double_zeta(s1 - 1, s2 + 1, N);
  const auto [z2, e2] = brute_double_zeta(s1 - 2, s2 + 2, N);
  const double brute = (s1 - 1) * (s2 - 1) * z0 + s2 * (s2 + 1 - s1) * z1 - s2 * (s2 + 1) * z2;
  const double bound = std::abs((s1 - 1) * (s2 - 1)) * e0 + std::abs(s2 * (s2 + 1 - s1)) * e1 +
                       std::abs(s2 * (s2 + 1)) * e2;
  const auto r = desing2<double>(cd(s1), cd(s2), 1.0, 1.0, 1e-8);
  std::ostringstream os;
  os << "(3,4): brute-force tail bound " << bound;
  return {std::abs(r.value - brute), 1e-8, os.str()};
}

CheckResult timed(const Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = c.run();
  } catch (const std::exception& e) {
    r.passed = false;
    r.worst_deviation = std::numeric_limits<double>::infinity();
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.id = c.id;
  r.name = c.name;
  r.time_limit = c.time_limit;
  if (c.time_limit > 0 && r.seconds > c.time_limit) {
    r.passed = false;
    r.detail += " (time limit exceeded)";
  }
  return r;
}

CheckResult from_exact(const Outcome& o) {
  CheckResult r;
  r.passed = o.ok();
  r.worst_deviation = o.deviation;
  r.detail = o.detail;
  return r;
}

CheckResult from_numeric(const NumericOutcome& o) {
  CheckResult r;
  r.passed = o.deviation <= o.tolerance;
  r.worst_deviation = o.deviation;
  r.detail = o.detail;
  return r;
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks{
      {1, "coefficient tables r=1,2,3", true, 1.0, [] { return from_exact(check_coeff_tables()); }},
      {2, "H = G for r=1..5", true, 10.0, [] { return from_exact(check_H_equals_G()); }},
      {3, "root-sum identity", true, 5.0, [] { return from_exact(check_root_sum()); }},
      {4, "double twisted Bernoulli closed form", true, 0, [] { return from_exact(check_eur_exp1()); }},
      {5, "root-pair sums vs Bernoulli convolution", true, 0, [] { return from_exact(check_eur_exp2()); }},
      {6, "desingularized values vs generating function", true, 0,
       [] { return from_exact(check_cont_values()); }},
      {7, "desingularized values at r=1 and (0,-2)", true, 0, [] { return from_exact(check_desing_values()); }},
      {8, "Hurwitz kernel", false, 0, [] { return from_numeric(check_hurwitz()); }},
      {9, "desing2 example table", false, 60.0, [] { return from_numeric(check_exam_table()); }},
      {10, "cancellation at non-positive integers", false, 0, [] { return from_numeric(check_cancellation()); }},
      {11, "regular point vs brute-force sums", false, 0, [] { return from_numeric(check_regular_point()); }},
  };
  return checks;
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "exact") return Suite::exact;
  if (name == "numeric") return Suite::numeric;
  throw ParseError("unknown suite: " + std::string(name));
}

std::vector<CheckResult> run_suite(Suite suite) {
  std::vector<CheckResult> out;
  for (const auto& c : all_checks()) {
    if (suite == Suite::exact && !c.exact) continue;
    if (suite == Suite::numeric && c.exact) continue;
    out.push_back(timed(c));
  }
  return out;
}

std::string format_result(const CheckResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << "  worst=" << r.worst_deviation
     << "  time=" << r.seconds << "s";
  if (r.time_limit > 0) os << " (limit " << r.time_limit << "s)";
  if (!r.detail.empty()) os << "  " << r.detail;
  return os.str();
}

}  // namespace desing
