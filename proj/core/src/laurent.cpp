#include "desing/laurent.hpp"

#include <sstream>

#include "desing/errors.hpp"

namespace desing {

LaurentPolynomial LaurentPolynomial::constant(std::size_t nvars, const BigInt& value) {
  LaurentPolynomial p(nvars);
  p.add_term(Monomial(nvars, 0), value);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t nvars, std::size_t var, int power, const BigInt& coeff) {
  if (var >= nvars) throw DomainError("variable index out of range");
  LaurentPolynomial p(nvars);
  Monomial m(nvars, 0);
  m[var] = power;
  p.add_term(m, coeff);
  return p;
}

BigInt LaurentPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPolynomial::add_term(const Monomial& m, const BigInt& coeff) {
  if (m.size() != nvars_) throw MismatchError("monomial arity does not match the polynomial");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  if (o.nvars_ != nvars_) throw MismatchError("Laurent polynomials in different variable sets");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  if (o.nvars_ != nvars_) throw MismatchError("Laurent polynomials in different variable sets");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.nvars_ != b.nvars_) throw MismatchError("Laurent polynomials in different variable sets");
  LaurentPolynomial r(a.nvars_);
  LaurentPolynomial::Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

LaurentPolynomial operator*(LaurentPolynomial a, const BigInt& k) {
  if (k == 0) {
    a.terms_.clear();
    return a;
  }
  for (auto& [m, c] : a.terms_) c *= k;
  return a;
}

std::string LaurentPolynomial::to_string(const std::vector<std::string>& names) const {
  if (names.size() != nvars_) throw MismatchError("need one name per variable");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    bool any_var = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (any_var) vars << " ";
      vars << names[i];
      if (m[i] != 1) vars << "^{" << m[i] << "}";
      any_var = true;
    }
    if (mag != 1 || !any_var) {
      os << mag.get_str();
      if (any_var) os << " ";
    }
    os << vars.str();
    first = false;
  }
  return os.str();
}

}  // namespace desing
