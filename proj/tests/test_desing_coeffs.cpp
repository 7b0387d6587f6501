#include <gtest/gtest.h>

#include <random>

#include "desing/desing_coeffs.hpp"
#include "desing/errors.hpp"
#include "oracles.hpp"
#include "printed.hpp"

using namespace desing;

namespace {

std::map<std::vector<int>, LaurentPolynomial> groups_of(std::size_t r) {
  std::map<std::vector<int>, LaurentPolynomial> out;
  const auto comb = combination(r);
  for (const auto& g : comb.groups()) out.emplace(g.shift, g.poly);
  return out;
}

std::size_t distinct_monomials(const LaurentPolynomial& p) { return p.terms().size(); }

}  // namespace

TEST(ExpandG, RankOne) {
  const CoeffTable expected(1, {{BigInt(1), {0}, {0}}, {BigInt(-1), {1}, {0}}});
  EXPECT_EQ(expand_G(1), expected);
  EXPECT_EQ(expand_G(1), CoeffTable::from_uv(1, printed::G1()));
}

TEST(ExpandG, RankTwoMatchesPrinted) {
  const auto t = expand_G(2);
  EXPECT_EQ(t, CoeffTable::from_uv(2, printed::G2()));
  EXPECT_EQ(t.terms().size(), distinct_monomials(printed::G2()));
  EXPECT_EQ(t.terms().size(), 7u);
}

TEST(ExpandG, RankThreeMatchesPrinted) {
  const auto t = expand_G(3);
  EXPECT_EQ(t, CoeffTable::from_uv(3, printed::G3()));
  EXPECT_EQ(t.terms().size(), distinct_monomials(printed::G3()));
  const CoeffTerm corner{BigInt(1), {0, 0, 3}, {-1, -2, 3}};
  EXPECT_NE(std::find(t.terms().begin(), t.terms().end(), corner), t.terms().end());
}

TEST(ExpandG, SortedByVThenU) {
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto table = expand_G(r);
    const auto& terms = table.terms();
    for (std::size_t i = 1; i < terms.size(); ++i)
      EXPECT_LT(std::tie(terms[i - 1].m, terms[i - 1].l), std::tie(terms[i].m, terms[i].l));
  }
}

TEST(ExpandG, AgreesWithProductAtRandomRationalPoints) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> d(1, 9);
  for (std::size_t r = 1; r <= 6; ++r) {
    const auto uv = generating_G(r);
    const auto table_uv = expand_G(r).to_uv();
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<BigRational> u, v;
      for (std::size_t j = 0; j < r; ++j) {
        u.emplace_back(d(rng) - 5, d(rng));
        v.emplace_back(d(rng), d(rng));
      }
      const auto expected = oracle::G_at(u, v);
      EXPECT_EQ(oracle::evaluate_uv(uv, u, v), expected);
      EXPECT_EQ(oracle::evaluate_uv(table_uv, u, v), expected);
    }
  }
}

TEST(ExpandH, EqualsExpandG) {
  for (std::size_t r = 1; r <= 5; ++r) EXPECT_EQ(expand_H(r), expand_G(r)) << "r=" << r;
}

TEST(WeightCheck, HoldsAndCatchesInjectedTerm) {
  for (std::size_t r = 1; r <= 6; ++r) EXPECT_TRUE(weight_check(expand_G(r)));
  auto terms = expand_G(2).terms();
  terms.push_back({BigInt(1), {0, 0}, {1, 0}});
  EXPECT_FALSE(weight_check(CoeffTable(2, terms)));
}

TEST(ExpandG, ConstantTermIsOne) {
  for (std::size_t r = 1; r <= 6; ++r) {
    const auto table = expand_G(r);
    const auto& terms = table.terms();
    const auto it = std::find_if(terms.begin(), terms.end(), [&](const CoeffTerm& t) {
      return t.l == std::vector<int>(r, 0) && t.m == std::vector<int>(r, 0);
    });
    ASSERT_NE(it, terms.end());
    EXPECT_EQ(it->a, 1);
  }
}

TEST(CoeffTable, Validation) {
  EXPECT_THROW(CoeffTable(1, {{BigInt(0), {0}, {0}}}), DomainError);
  EXPECT_THROW(CoeffTable(2, {{BigInt(1), {0}, {0}}}), MismatchError);
  EXPECT_THROW(expand_G(0), DomainError);
}

TEST(CoeffTable, RoundTripThroughUV) {
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto t = expand_G(r);
    EXPECT_EQ(CoeffTable::from_uv(r, t.to_uv()), t);
  }
}

TEST(Combination, GroupsMatchPrinted) {
  EXPECT_EQ(groups_of(1), printed::groups1());
  EXPECT_EQ(groups_of(2), printed::groups2());
  const auto g3 = groups_of(3);
  EXPECT_EQ(g3.size(), 11u);
  EXPECT_EQ(g3, printed::groups3());
}

TEST(Combination, GroupOrderStartsUnshifted) {
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto comb = combination(r);
    const auto& groups = comb.groups();
    ASSERT_FALSE(groups.empty());
    EXPECT_EQ(groups.front().shift, std::vector<int>(r, 0));
    for (std::size_t i = 1; i < groups.size(); ++i) EXPECT_GT(groups[i - 1].shift, groups[i].shift);
  }
}

TEST(Combination, TexMentionsEveryShift) {
  const auto tex = combination(2).to_tex();
  EXPECT_NE(tex.find("s_1-1"), std::string::npos);
  EXPECT_NE(tex.find("s_2+2"), std::string::npos);
}

TEST(PochhammerPolynomial, EvaluatesToRisingFactorial) {
  const std::vector<std::complex<double>> s{{2.5, 0}, {-1.25, 0.5}};
  for (int k = 0; k <= 4; ++k) {
    const auto p = pochhammer_polynomial(2, 1, k);
    std::complex<double> expected = 1;
    for (int i = 0; i < k; ++i) expected *= s[1] + static_cast<double>(i);
    EXPECT_LT(std::abs(evaluate(p, s) - expected), 1e-12);
  }
}
