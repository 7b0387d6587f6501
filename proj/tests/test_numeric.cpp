#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "desing/numeric.hpp"
#include "desing/special_values.hpp"
#include "oracles.hpp"

using namespace desing;
using cd = std::complex<double>;

namespace {

constexpr double kPi2over6 = std::numbers::pi * std::numbers::pi / 6;
const double kZeta4 = std::pow(std::numbers::pi, 4) / 90;

double zeta(double s) { return riemann_zeta<double>(cd(s)).value.real(); }

}  // namespace

TEST(Hurwitz, Examples) {
  EXPECT_NEAR(hurwitz_zeta<double>(2, 1).value.real(), kPi2over6, 1e-14);
  EXPECT_NEAR(hurwitz_zeta<double>(-3, 1).value.real(), 1.0 / 120, 1e-15);
  const cd a(0.7, 1.3);
  EXPECT_LT(std::abs(hurwitz_zeta<double>(0, a).value - (0.5 - a)), 1e-14);
}

TEST(Hurwitz, BernoulliPolynomialValues) {
  const std::vector<cd> as{cd(1), cd(0.5), cd(1.5), cd(2, 0.5), cd(0.25, -3)};
  for (int n = 0; n <= 8; ++n)
    for (cd a : as) {
      const cd expected = -oracle::bernoulli_poly(n + 1, a) / static_cast<double>(n + 1);
      const auto got = hurwitz_zeta<double>(cd(-n), a);
      EXPECT_LT(std::abs(got.value - expected), 1e-12 * std::max(1.0, std::abs(expected))) << n << " " << a;
    }
}

TEST(Hurwitz, ShiftRecurrence) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> re(-6, 6), im(-8, 8), ar(0.2, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const cd s(re(rng), im(rng));
    const cd a(ar(rng), im(rng) / 4);
    const cd lhs = hurwitz_zeta<double>(s, a).value - hurwitz_zeta<double>(s, a + 1.0).value;
    const cd rhs = std::pow(a, -s);
    EXPECT_LT(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(rhs))) << s << " " << a;
  }
}

TEST(Hurwitz, ErrorsAndEstimate) {
  EXPECT_THROW(hurwitz_zeta<double>(1, 1), SingularityError);
  EXPECT_THROW(hurwitz_zeta<double>(2, 0), DomainError);
  EXPECT_THROW(hurwitz_zeta<double>(2, cd(-1, 1)), DomainError);
  const auto r = hurwitz_zeta<double>(cd(0.5, 14.134725), 1);
  EXPECT_GE(r.err_estimate, 0);
  EXPECT_EQ(r.method, Method::euler_maclaurin);
}

TEST(Hurwitz, ExtendedPrecision) {
  const auto r = hurwitz_zeta<long double>(2, 1);
  EXPECT_LT(std::abs(r.value.real() - std::numbers::pi_v<long double> * std::numbers::pi_v<long double> / 6), 1e-17L);
}

TEST(Riemann, Examples) {
  for (int k : {2, 4, 6}) {
    const double expected = -oracle::bernoulli(k).to_double() / k;
    EXPECT_NEAR(zeta(1 - k), expected, 1e-15);
  }
  EXPECT_NEAR(zeta(0), -0.5, 1e-15);
  EXPECT_NEAR(zeta(3), oracle::zeta3, 1e-14);
  EXPECT_NEAR(zeta(5), oracle::zeta5, 1e-14);
  // direct partial sum with the integral tail estimate
  double partial = 0;
  for (int n = 1; n <= 100000; ++n) partial += std::pow(static_cast<double>(n), -3.0);
  EXPECT_NEAR(zeta(3), partial + 0.5 / 1e10, 1e-12);
}

TEST(SingularityDistance, Examples) {
  const auto a = singularity_distance(0, 1);
  EXPECT_EQ(a.distance, 0);
  EXPECT_EQ(a.hyperplane, "s2=1");
  const auto b = singularity_distance(1, 1);
  EXPECT_EQ(b.distance, 0);
  EXPECT_EQ(b.hyperplane, "s1+s2=2");
  EXPECT_GT(singularity_distance(3, 4).distance, 1);
  EXPECT_EQ(singularity_distance(-3, -1).hyperplane, "s1+s2=-4");
  EXPECT_EQ(singularity_distance(-3, -1, 2).hyperplane, "s1+s2=-2");
  EXPECT_NEAR(singularity_distance(-3, -1, 2).distance, std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(singularity_distance(0.5, -1.5).distance, std::sqrt(0.5), 1e-15);  // s1+s2 = -1 is regular
}

TEST(DoubleZeta, ConvergentValue) {
  // zeta_2(3,2) = sum m^-3 sum_{n>m} n^-2
  const auto [sum, bound] = oracle::zeta2_even_b(3, 2, 200000);
  const auto r = double_zeta<double>(3, 2, 1, 1);
  EXPECT_LT(std::abs(r.value.real() - sum), 1e-10 + bound);
  EXPECT_NEAR(r.value.real(), 4.5 * oracle::zeta5 - 2 * kPi2over6 * oracle::zeta3, 1e-12);
  // zeta_2(2,3) in the same convention
  EXPECT_NEAR(double_zeta<double>(2, 3, 1, 1).value.real(), 0.2288103976, 1e-9);
}

TEST(DoubleZeta, ZeroArgumentIdentities) {
  // zeta_2(0, s) = zeta(s-1) - zeta(s); zeta_2(s, 0) = -zeta(s-1) - zeta(s)/2
  EXPECT_NEAR(double_zeta<double>(0, 4, 1, 1).value.real(), zeta(3) - zeta(4), 1e-12);
  EXPECT_NEAR(double_zeta<double>(4, 0, 1, 1).value.real(), -zeta(3) - zeta(4) / 2, 1e-12);
}

TEST(DoubleZeta, PolynomialReductionAgreesWithTail) {
  const cd s1(4.5), s2(-3);
  const auto poly = double_zeta<double>(s1, s2, 1, 1, 1e-14, DoubleZetaPath::polynomial_reduction);
  const auto em = double_zeta<double>(s1, s2, 1, 1, 1e-14, DoubleZetaPath::euler_maclaurin);
  EXPECT_EQ(poly.method, Method::polynomial_reduction);
  // sum_m m^-4.5 zeta(-3, m+1) with zeta(-3, m+1) = 1/120 - sum n^3 and the
  // power sum written out: -(1/4)(zeta(.5) + 2 zeta(1.5) + zeta(2.5) - zeta(4.5)/30)
  const double expected = -0.25 * (zeta(0.5) + 2 * zeta(1.5) + zeta(2.5) - zeta(4.5) / 30);
  EXPECT_NEAR(poly.value.real(), expected, 1e-12);
  EXPECT_NEAR(em.value.real(), expected, 1e-9);
}

TEST(DoubleZeta, DirectSumAgreesWithEulerMaclaurin) {
  // points where the truncated triangle converges well within its cutoff
  const std::vector<std::pair<cd, cd>> points{{3, 4}, {2.5, 5}, {cd(3, 1), cd(4.5, -0.5)}, {1.5, 6}};
  const std::vector<std::pair<cd, cd>> gammas{{1, 1}, {0.5, 3}, {cd(1, 0.5), cd(2, -0.25)}};
  for (const auto& [s1, s2] : points)
    for (const auto& [g1, g2] : gammas) {
      const auto direct = double_zeta<double>(s1, s2, g1, g2, 1e-12, DoubleZetaPath::direct_sum);
      const auto em = double_zeta<double>(s1, s2, g1, g2, 1e-14, DoubleZetaPath::euler_maclaurin);
      EXPECT_LT(std::abs(direct.value - em.value), 1e-9) << s1 << s2 << g1 << g2;
      EXPECT_EQ(direct.method, Method::direct_sum);
      EXPECT_LT(direct.err_estimate, 1e-8);
    }
}

TEST(DoubleZeta, Homogeneity) {
  // zeta_2(s; l g1, l g2) = l^{-s1-s2} zeta_2(s; g1, g2) for l > 0
  const cd s1(2.5, 1), s2(-1.5, 0.5);
  const double l = 2.75;
  const auto a = double_zeta<double>(s1, s2, l * 0.5, l * 1.5);
  const auto b = double_zeta<double>(s1, s2, 0.5, 1.5);
  EXPECT_LT(std::abs(a.value - std::pow(l, -(s1 + s2)) * b.value), 1e-10);
}

TEST(DoubleZeta, Errors) {
  EXPECT_THROW(double_zeta<double>(0, 1, 1, 1), SingularityError);
  EXPECT_THROW(double_zeta<double>(3, -3, 1, 1), SingularityError);
  EXPECT_THROW(double_zeta<double>(3, 4, -1, 1), DomainError);
  EXPECT_THROW(double_zeta<double>(3, 4, 1, 1, 1e-12, DoubleZetaPath::polynomial_reduction), DomainError);
  EXPECT_THROW(double_zeta<double>(0.5, 4, 1, 1, 1e-12, DoubleZetaPath::direct_sum), DomainError);
  try {
    double_zeta<double>(cd(0.5), cd(1.5), 1, 1);
    FAIL();
  } catch (const SingularityError& e) {
    EXPECT_EQ(e.report().hyperplane, "s1+s2=2");
  }
}

TEST(Desing1, Examples) {
  EXPECT_NEAR(desing1<double>(1).value.real(), -1, 1e-12);
  for (int k = 0; k <= 12; ++k) {
    const double expected = (k % 2 ? -1 : 1) * oracle::bernoulli(k + 1).to_double();
    EXPECT_NEAR(desing1<double>(-k).value.real(), expected, 1e-10 * std::max(1.0, std::abs(expected))) << k;
  }
  EXPECT_NEAR(desing1<double>(2).value.real(), -kPi2over6, 1e-14);
}

TEST(Desing2, ExampleTable) {
  struct Point {
    double s1, s2, target;
  };
  const double z2 = kPi2over6, z3 = oracle::zeta3, z4 = kZeta4;
  const std::vector<Point> points{{-1, 1, 0.125},         {-1, 4, z3 - z4},  {3, -3, 0.75 - z3 / 15},
                                  {4, -3, 0.5 + z2 / 2 - z4 / 10}, {1, 1, 0.5}, {2, 1, -z2 + 2 * z3},
                                  {3, 1, 2 * z3 - 1.25 * z4}};
  for (const auto& p : points) {
    const auto r = desing2<double>(p.s1, p.s2, 1.0, 1.0, 1e-6);
    EXPECT_LT(std::abs(r.value - p.target), 1e-6) << p.s1 << "," << p.s2;
    // the estimate is a heuristic; it must be right to within a factor of 2
    EXPECT_LE(std::abs(r.value - p.target), 2 * r.err_estimate + 1e-13) << p.s1 << "," << p.s2;
  }
}

TEST(Desing2, CancellationAtNonPositiveIntegers) {
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l) {
      const auto r = desing2<double>(-k, -l, 1.0, 1.0, 1e-6);
      EXPECT_NEAR(r.value.real(), oracle::ez_value(k, l, 1, 1).to_double(), 1e-6) << k << "," << l;
    }
}

TEST(Desing2, ExtrapolationStableUnderHalvedStep) {
  const std::vector<std::pair<double, double>> points{{-1, 1}, {-1, 4}, {3, -3}, {4, -3}, {1, 1}, {2, 1}, {3, 1}};
  for (const auto& [s1, s2] : points) {
    const auto a = desing2<double>(s1, s2, 1.0, 1.0, 1e-6);
    const auto b = desing2<double>(s1, s2, 1.0, 1.0, 1e-6, 1.0 / 128);
    // both results carry their own estimate; their difference is bounded by the sum
    EXPECT_LT(std::abs(a.value - b.value), a.err_estimate + b.err_estimate) << s1 << "," << s2;
  }
}

TEST(Desing2, RegularPointUsesNoExtrapolation) {
  const auto r = desing2<double>(3, 4);
  EXPECT_NE(r.method, Method::extrapolated);
  EXPECT_LT(r.err_estimate, 1e-8);
}

TEST(Desing2, GammaHomogeneityAtNonPositiveIntegers) {
  const auto r = desing2<double>(-1, -2, 0.5, 3.0, 1e-6);
  EXPECT_NEAR(r.value.real(), oracle::ez_value(1, 2, BigRational(1, 2), 3).to_double(), 1e-6);
}

TEST(Desing2, ToleranceError) { EXPECT_THROW(desing2<double>(-1, 1, 1.0, 1.0, 1e-30), ToleranceError); }

TEST(Neville, ExactOnPolynomials) {
  std::vector<double> x{0.5, 0.25, 0.125, 0.0625};
  std::vector<cd> f;
  for (double t : x) f.emplace_back(3 - 2 * t + 5 * t * t * t);
  const auto e = neville_to_zero(x, f);
  EXPECT_LT(std::abs(e.value - 3.0), 1e-13);
  EXPECT_GE(e.amplification, 1);
  EXPECT_THROW(neville_to_zero<double>({}, {}), DomainError);
}

TEST(Method, NamesRoundTrip) {
  for (Method m : {Method::direct_sum, Method::euler_maclaurin, Method::polynomial_reduction, Method::extrapolated})
    EXPECT_EQ(parse_method(method_name(m)), m);
}
