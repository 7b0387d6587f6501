#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace desing {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is stored as 0/1, so equality is structural.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& num, const BigInt& den);
  BigRational(long num, long den);

  /// Parses "p/q", "p", "-p/q" (decimal). Throws ParseError or DivisionByZero.
  static BigRational parse(std::string_view text);

  [[nodiscard]] BigInt numerator() const { return q_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return q_.get_den(); }
  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(q_); }

  /// "p/q" with the denominator omitted when it is 1.
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] double to_double() const { return q_.get_d(); }
  [[nodiscard]] long double to_long_double() const;

  /// Raw GMP value (read-only).
  [[nodiscard]] const mpq_class& raw() const { return q_; }

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) {
    BigRational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Integer power; negative exponents invert (throws on 0^-n).
  [[nodiscard]] BigRational pow(long e) const;

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);
BigInt factorial(long n);
/// Multinomial coefficient (sum parts)! / prod(parts!).
BigInt multinomial(const std::vector<int>& parts);

}  // namespace desing
