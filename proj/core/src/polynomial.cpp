#include "desing/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "desing/errors.hpp"

namespace desing {

RationalPolynomial::RationalPolynomial(BigRational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

RationalPolynomial RationalPolynomial::monomial(std::size_t k, BigRational coeff) {
  std::vector<BigRational> c(k + 1);
  c[k] = std::move(coeff);
  return RationalPolynomial(std::move(c));
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational RationalPolynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigRational();
}

BigRational RationalPolynomial::evaluate(const BigRational& x) const {
  BigRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * BigRational(static_cast<long>(k));
  return RationalPolynomial(std::move(d));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const BigRational& k) {
  for (auto& c : coeffs_) c *= k;
  trim();
  return *this;
}

RationalPolynomial operator-(RationalPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(const RationalPolynomial& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  RationalPolynomial rem = *this;
  if (rem.degree() < d.degree()) return {RationalPolynomial(), rem};
  std::vector<BigRational> quot(static_cast<std::size_t>(rem.degree() - d.degree() + 1));
  const BigRational& lead = d.leading();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - d.degree());
    const BigRational factor = rem.leading() / lead;
    quot[shift] = factor;
    for (std::size_t k = 0; k < d.coeffs_.size(); ++k) rem.coeffs_[k + shift] -= factor * d.coeffs_[k];
    rem.trim();
  }
  return {RationalPolynomial(std::move(quot)), rem};
}

RationalPolynomial RationalPolynomial::divide_exact(const RationalPolynomial& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact: remainder " + r.to_string());
  return q;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigRational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const BigRational mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    const bool unit = mag == BigRational(1);
    if (!unit || k == 0) os << mag;
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p) { return os << p.to_string(); }

ExtendedGcd extended_gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial r0 = a, r1 = b;
  RationalPolynomial s0(1), s1;
  RationalPolynomial t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const BigRational inv = BigRational(1) / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

}  // namespace desing
