#include "desing/rational.hpp"

#include <cmath>
#include <ostream>

#include "desing/errors.hpp"

namespace desing {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational::BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

BigRational BigRational::parse(std::string_view text) {
  std::string s(text);
  // Trim surrounding blanks.
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw ParseError("empty rational literal");
  s = s.substr(first, last - first + 1);

  auto parse_int = [&](const std::string& part) {
    std::string digits = part;
    if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
    const std::size_t start = (!digits.empty() && digits[0] == '-') ? 1 : 0;
    if (digits.size() == start) throw ParseError("malformed rational literal: '" + s + "'");
    for (std::size_t i = start; i < digits.size(); ++i) {
      if (digits[i] < '0' || digits[i] > '9')
        throw ParseError("malformed rational literal: '" + s + "'");
    }
    return BigInt(digits, 10);
  };

  const auto slash = s.find('/');
  if (slash == std::string::npos) return BigRational(parse_int(s));
  const BigInt num = parse_int(s.substr(0, slash));
  const std::string den_text = s.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-')
    throw ParseError("denominator must be unsigned: '" + s + "'");
  return BigRational(num, parse_int(den_text));
}

std::string BigRational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

long double BigRational::to_long_double() const {
  // 128 bits of mantissa is ample for an 80-bit long double.
  const mpf_class f(q_, 128);
  long exp = 0;
  const double hi = mpf_get_d_2exp(&exp, f.get_mpf_t());
  const mpf_class rest = f - mpf_class(std::ldexp(hi, static_cast<int>(exp)), 128);
  long exp2 = 0;
  const double lo = mpf_get_d_2exp(&exp2, rest.get_mpf_t());
  return std::ldexp(static_cast<long double>(hi), static_cast<int>(exp)) +
         std::ldexp(static_cast<long double>(lo), static_cast<int>(exp2));
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

BigRational BigRational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw DivisionByZero();
    return BigRational(1) / pow(-e);
  }
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return BigRational(num, den);
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt multinomial(const std::vector<int>& parts) {
  long total = 0;
  BigInt den = 1;
  for (int p : parts) {
    if (p < 0) return 0;
    total += p;
    den *= factorial(p);
  }
  return factorial(total) / den;
}

}  // namespace desing
