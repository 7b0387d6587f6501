#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "desing/cyclotomic.hpp"
#include "desing/errors.hpp"
#include "oracles.hpp"

using namespace desing;

namespace {

CycloElement q(long c, long n, long d = 1) { return CycloElement(c, BigRational(n, d)); }

}  // namespace

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(euler_phi(12), 4);
  EXPECT_EQ(cyclotomic_polynomial(1).to_string(), RationalPolynomial(std::vector<BigRational>{-1, 1}).to_string());
  EXPECT_EQ(cyclotomic_polynomial(6), RationalPolynomial(std::vector<BigRational>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), RationalPolynomial(std::vector<BigRational>{1, 0, -1, 0, 1}));
  for (long c = 1; c <= 30; ++c) EXPECT_EQ(cyclotomic_polynomial(c).degree(), euler_phi(c));
}

TEST(Cyclotomic, ArithmeticExamples) {
  const auto i = CycloElement::root({4, 1});
  EXPECT_EQ(i * i, q(4, -1));
  const auto z3 = CycloElement::root({3, 1});
  EXPECT_EQ((q(3, 1) - z3).inverse(), (q(3, 2) + z3) * BigRational(1, 3));
  EXPECT_TRUE((q(2, 1) + CycloElement::root({2, 1})).is_zero());
}

TEST(Cyclotomic, Errors) {
  EXPECT_THROW(q(3, 1) + q(4, 1), MismatchError);
  EXPECT_THROW(q(5, 0).inverse(), DivisionByZero);
  EXPECT_THROW(twisted_bernoulli(1, {3, 0}), TrivialRootError);
  EXPECT_THROW(negative_polylog(1, {3, 3}), TrivialRootError);
  EXPECT_THROW(frobenius_euler(1, q(3, 1)), DomainError);
}

TEST(Cyclotomic, FieldAxiomsOnRandomElements) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  for (long c : {5L, 7L, 8L, 9L, 12L}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<BigRational> a, b;
      for (long k = 0; k < euler_phi(c); ++k) {
        a.emplace_back(d(rng), 1 + std::abs(d(rng)));
        b.emplace_back(d(rng), 1 + std::abs(d(rng)));
      }
      const auto x = CycloElement::from_coeffs(c, a);
      const auto y = CycloElement::from_coeffs(c, b);
      EXPECT_EQ(x * y, y * x);
      if (!y.is_zero()) EXPECT_EQ((x / y) * y, x);
      EXPECT_EQ(x.pow(3), x * x * x);
    }
  }
}

TEST(TwistedBernoulli, Examples) {
  const RootOfUnity minus_one{2, 1};
  EXPECT_EQ(twisted_bernoulli(0, minus_one), q(2, 1, 2));
  EXPECT_TRUE(twisted_bernoulli(2, minus_one).is_zero());
}

TEST(TwistedBernoulli, PrintedClosedForms) {
  for (long c : {2L, 3L, 4L, 6L})
    for (const auto& xi : nontrivial_roots(c)) {
      const auto x = CycloElement::root(xi);
      const auto one = q(c, 1);
      const auto d = one - x;
      EXPECT_EQ(twisted_bernoulli(0, xi), d.inverse());
      EXPECT_EQ(twisted_bernoulli(1, xi), x / d.pow(2));
      EXPECT_EQ(twisted_bernoulli(2, xi), x * (x + one) / d.pow(3));
      EXPECT_EQ(twisted_bernoulli(3, xi), x * (x * x + x * BigRational(4) + one) / d.pow(4));
      EXPECT_EQ(twisted_bernoulli(4, xi),
                x * (x.pow(3) + x * x * BigRational(11) + x * BigRational(11) + one) / d.pow(5));
    }
}

TEST(TwistedBernoulli, AgreesWithSeriesInversion) {
  for (long c : {2L, 3L, 4L, 5L, 6L, 8L})
    for (const auto& xi : nontrivial_roots(c)) {
      const auto expected = oracle::twisted_by_series(10, c, xi.a);
      const auto got = twisted_bernoulli_table(10, xi);
      for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(got[n], expected[n]) << "c=" << c << " a=" << xi.a << " n=" << n;
    }
}

TEST(FrobeniusEuler, Examples) {
  EXPECT_EQ(frobenius_euler(0, CycloElement::root({5, 2})), q(5, 1));
  // H_1(lambda) = 1/(lambda - 1), so -1/2 at lambda = -1.
  EXPECT_EQ(frobenius_euler(1, q(2, -1)), q(2, -1, 2));
}

TEST(FrobeniusEuler, RelationToTwistedBernoulli) {
  for (long c : {2L, 3L, 4L})
    for (const auto& xi : nontrivial_roots(c)) {
      const auto x = CycloElement::root(xi);
      const auto h = frobenius_euler_table(8, x.inverse());
      for (std::size_t n = 0; n <= 8; ++n)
        EXPECT_EQ(twisted_bernoulli(n, xi), h[n] / (q(c, 1) - x));
    }
}

TEST(NegativePolylog, Examples) {
  EXPECT_EQ(negative_polylog(0, {2, 1}), q(2, -1, 2));
  for (long c : {3L, 5L}) {
    const RootOfUnity xi{c, 1};
    const auto z = CycloElement::root(xi);
    EXPECT_EQ(negative_polylog(1, xi), z / (q(c, 1) - z).pow(2));
  }
  const auto i = CycloElement::root({4, 1});
  EXPECT_EQ(negative_polylog(2, {4, 1}), i * (q(4, 1) + i) / (q(4, 1) - i).pow(3));
}

TEST(NegativePolylog, MatchesInvertedTwistedBernoulli) {
  for (long c : {2L, 3L, 4L})
    for (const auto& xi : nontrivial_roots(c))
      for (std::size_t k = 0; k <= 8; ++k) {
        const auto expected = twisted_bernoulli(k, xi.inverse()) * BigRational(k % 2 ? 1 : -1);
        EXPECT_EQ(negative_polylog(k, xi), expected) << c << " " << xi.a << " " << k;
      }
}

TEST(RootSum, Examples) {
  EXPECT_EQ(root_sum_twisted(0, 2), BigRational(1, 2));
  EXPECT_EQ(root_sum_twisted(1, 2), BigRational(-1, 4));
}

TEST(RootSum, Identity) {
  for (long c = 2; c <= 6; ++c)
    for (int n = 0; n <= 12; ++n) {
      const auto expected = (BigRational(1) - BigRational(c).pow(n + 1)) * oracle::bernoulli(n + 1) / BigRational(n + 1);
      EXPECT_EQ(root_sum_twisted(static_cast<std::size_t>(n), c), expected);
    }
}

TEST(Galois, ConjugatesPermuteValues) {
  for (long c : {5L, 8L, 12L})
    for (std::size_t n = 0; n <= 5; ++n)
      for (long b = 1; b < c; ++b) {
        if (std::gcd(b, c) != 1) continue;
        const RootOfUnity xi{c, 1};
        const RootOfUnity image{c, b};
        EXPECT_EQ(twisted_bernoulli(n, xi).galois(b), twisted_bernoulli(n, image));
      }
}

TEST(Galois, OrbitSumsAreRational) {
  for (long c : {6L, 9L, 10L})
    for (std::size_t n = 0; n <= 4; ++n) {
      CycloElement orbit(c);
      for (long b = 1; b < c; ++b)
        if (std::gcd(b, c) == 1) orbit += twisted_bernoulli(n, {c, b});
      EXPECT_TRUE(orbit.is_rational());
    }
}
