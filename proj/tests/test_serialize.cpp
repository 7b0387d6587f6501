#include <gtest/gtest.h>

#include "desing/cyclotomic.hpp"
#include "desing/desing_coeffs.hpp"
#include "desing/errors.hpp"
#include "desing/serialize.hpp"
#include "desing/series.hpp"
#include "desing/special_values.hpp"

using namespace desing;

TEST(Serialize, RationalAsString) {
  const Json j = BigRational(-691, 2730);
  EXPECT_EQ(j, "-691/2730");
  EXPECT_EQ(j.get<BigRational>(), BigRational(-691, 2730));
  EXPECT_THROW(Json(3.5).get<BigRational>(), ParseError);
}

TEST(Serialize, RationalPolynomialRoundTrip) {
  const RationalPolynomial p({BigRational(1, 2), 0, -3});
  EXPECT_EQ(Json(p).get<RationalPolynomial>(), p);
}

TEST(Serialize, CycloElementRoundTrip) {
  for (long c : {2L, 5L, 12L}) {
    const auto x = twisted_bernoulli(3, {c, 1});
    EXPECT_EQ(cyclo_from_json(Json(x)), x);
  }
}

TEST(Serialize, ValueRowRoundTrip) {
  const ValueRow row{{0, 2}, {1, BigRational(1, 3)}, desing_value_exact(MultiIndex{0, 2}, {1, BigRational(1, 3)})};
  const Json j = row;
  EXPECT_TRUE(j.at("value").is_string());
  EXPECT_EQ(Json::parse(j.dump()).get<ValueRow>(), row);
}

TEST(Serialize, CoeffTableRoundTrip) {
  for (std::size_t r = 1; r <= 5; ++r) {
    const auto t = expand_G(r);
    const Json j = t;
    EXPECT_EQ(j.at("r"), r);
    EXPECT_EQ(coeff_table_from_json(Json::parse(j.dump())), t);
  }
  const Json r1 = expand_G(1);
  EXPECT_EQ(r1.at("terms").size(), 2u);
  EXPECT_EQ(r1.at("terms")[0].at("a"), 1);
}

TEST(Serialize, LargeCoefficientsSurvive) {
  const BigInt big("123456789012345678901234567890");
  const CoeffTable t(1, {{big, {2}, {0}}});
  EXPECT_EQ(coeff_table_from_json(Json::parse(Json(t).dump())), t);
}

TEST(Serialize, ComplexAndEvalResult) {
  const std::complex<double> z(0.1, -2.5e-300);
  EXPECT_EQ(complex_from_json(Json::parse(complex_to_json(z).dump())), z);
  const EvalResult r{{0.125, -1e-17}, 3.25e-9, Method::extrapolated};
  const Json j = r;
  EXPECT_EQ(j.at("method"), "extrapolated");
  const auto back = eval_result_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.value, r.value);
  EXPECT_EQ(back.err_estimate, r.err_estimate);
  EXPECT_EQ(back.method, r.method);
}

TEST(Serialize, SeriesDump) {
  const auto s = build_E_product({1}, 2);
  const auto j = series_to_json(s);
  ASSERT_EQ(j.size(), 2u);  // B_2 y / 1! and B_1; B_3 = 0
  EXPECT_EQ(j[0].at("exponents"), Json::array({0}));
  EXPECT_EQ(j[0].at("coeff"), "-1/2");
}
