#pragma once

#include <complex>
#include <vector>

#include <nlohmann/json.hpp>

#include "desing/cyclotomic.hpp"
#include "desing/desing_coeffs.hpp"
#include "desing/numeric.hpp"
#include "desing/rational.hpp"
#include "desing/series.hpp"
#include "desing/special_values.hpp"

namespace desing {

using Json = nlohmann::json;

/// One row of an exact special-value table.
struct ValueRow {
  std::vector<int> k;
  std::vector<BigRational> gamma;
  BigRational value;

  friend bool operator==(const ValueRow&, const ValueRow&) = default;
};

// Rationals are "p/q" strings; integers inside tables are JSON numbers.
void to_json(Json& j, const BigRational& q);
void from_json(const Json& j, BigRational& q);

// {"c": int, "coeffs": ["p/q", ...]}
void to_json(Json& j, const CycloElement& x);
CycloElement cyclo_from_json(const Json& j);

// Coefficients of a polynomial in c, lowest degree first.
void to_json(Json& j, const RationalPolynomial& p);
void from_json(const Json& j, RationalPolynomial& p);

void to_json(Json& j, const ValueRow& row);
void from_json(const Json& j, ValueRow& row);

// {"r": int, "terms": [{"a": int, "l": [...], "m": [...]}, ...]}
void to_json(Json& j, const CoeffTable& table);
CoeffTable coeff_table_from_json(const Json& j);

// {"re": float, "im": float}
Json complex_to_json(std::complex<double> z);
std::complex<double> complex_from_json(const Json& j);

// {"value": complex, "err_estimate": float, "method": tag}
void to_json(Json& j, const EvalResult& r);
EvalResult eval_result_from_json(const Json& j);

/// Debug dump: [{"exponents": [...], "coeff": scalar}, ...].
template <typename Scalar>
Json series_to_json(const TruncatedSeries<Scalar>& s) {
  Json out = Json::array();
  for (const auto& [e, c] : s.terms()) out.push_back({{"exponents", e}, {"coeff", c}});
  return out;
}

}  // namespace desing
