#include "desing/serialize.hpp"

#include "desing/errors.hpp"

namespace desing {

namespace {

Json integer_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

BigInt integer_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw ParseError("expected an integer");
}

}  // namespace

void to_json(Json& j, const BigRational& q) { j = q.to_string(); }

void from_json(const Json& j, BigRational& q) {
  if (j.is_string()) {
    q = BigRational::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    q = BigRational(j.get<long>());
  } else {
    throw ParseError("expected a rational string \"p/q\"");
  }
}

void to_json(Json& j, const CycloElement& x) { j = Json{{"c", x.order()}, {"coeffs", x.coeffs()}}; }

CycloElement cyclo_from_json(const Json& j) {
  return CycloElement::from_coeffs(j.at("c").get<long>(), j.at("coeffs").get<std::vector<BigRational>>());
}

void to_json(Json& j, const RationalPolynomial& p) { j = p.coeffs(); }

void from_json(const Json& j, RationalPolynomial& p) {
  p = RationalPolynomial(j.get<std::vector<BigRational>>());
}

void to_json(Json& j, const ValueRow& row) {
  j = Json{{"k", row.k}, {"gamma", row.gamma}, {"value", row.value}};
}

void from_json(const Json& j, ValueRow& row) {
  row.k = j.at("k").get<std::vector<int>>();
  row.gamma = j.at("gamma").get<std::vector<BigRational>>();
  row.value = j.at("value").get<BigRational>();
}

void to_json(Json& j, const CoeffTable& table) {
  Json terms = Json::array();
  for (const auto& t : table.terms()) terms.push_back({{"a", integer_to_json(t.a)}, {"l", t.l}, {"m", t.m}});
  j = Json{{"r", table.rank()}, {"terms", terms}};
}

CoeffTable coeff_table_from_json(const Json& j) {
  std::vector<CoeffTerm> terms;
  for (const auto& t : j.at("terms"))
    terms.push_back({integer_from_json(t.at("a")), t.at("l").get<std::vector<int>>(),
                     t.at("m").get<std::vector<int>>()});
  return CoeffTable(j.at("r").get<std::size_t>(), std::move(terms));
}

Json complex_to_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

std::complex<double> complex_from_json(const Json& j) {
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

void to_json(Json& j, const EvalResult& r) {
  j = Json{{"value", complex_to_json(r.value)},
           {"err_estimate", r.err_estimate},
           {"method", std::string(method_name(r.method))}};
}

EvalResult eval_result_from_json(const Json& j) {
  return {complex_from_json(j.at("value")), j.at("err_estimate").get<double>(),
          parse_method(j.at("method").get<std::string>())};
}

}  // namespace desing
