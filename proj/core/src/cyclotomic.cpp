#include "desing/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <shared_mutex>
#include <sstream>

#include "desing/errors.hpp"

namespace desing {

long euler_phi(long c) {
  if (c < 1) throw DomainError("euler_phi requires c >= 1");
  long result = c;
  long n = c;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

struct CyclotomicCache {
  std::shared_mutex mutex;
  // Node-based map: references stay valid while other entries are inserted.
  std::map<long, std::unique_ptr<RationalPolynomial>> table;
};

CyclotomicCache& cyclo_cache() {
  static CyclotomicCache cache;
  return cache;
}

RationalPolynomial compute_cyclotomic(long c) {
  // x^c - 1
  RationalPolynomial p = RationalPolynomial::monomial(static_cast<std::size_t>(c)) - RationalPolynomial(1);
  for (long d = 1; d < c; ++d) {
    if (c % d == 0) p = p.divide_exact(cyclotomic_polynomial(d));
  }
  return p;
}

}  // namespace

const RationalPolynomial& cyclotomic_polynomial(long c) {
  if (c < 1) throw DomainError("cyclotomic order must be >= 1");
  auto& cache = cyclo_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.table.find(c); it != cache.table.end()) return *it->second;
  }
  // Computed outside the lock: the recursion re-enters for divisors.
  auto value = std::make_unique<RationalPolynomial>(compute_cyclotomic(c));
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.table.try_emplace(c, std::move(value));
  return *it->second;
}

RootOfUnity::RootOfUnity(long order, long exponent) : c(order) {
  if (order < 1) throw DomainError("root of unity order must be >= 1");
  a = ((exponent % order) + order) % order;
}

RootOfUnity RootOfUnity::lifted(long new_order) const {
  if (new_order % c != 0) throw MismatchError("target order is not a multiple of the root's order");
  return {new_order, a * (new_order / c)};
}

std::vector<RootOfUnity> nontrivial_roots(long c) {
  std::vector<RootOfUnity> roots;
  for (long a = 1; a < c; ++a) roots.emplace_back(c, a);
  return roots;
}

// ---------------------------------------------------------------------------

CycloElement::CycloElement(long c) : c_(c) {
  if (c < 1) throw DomainError("cyclotomic order must be >= 1");
  coeffs_.resize(static_cast<std::size_t>(euler_phi(c)));
}

CycloElement::CycloElement(long c, const BigRational& q) : CycloElement(c) { coeffs_[0] = q; }

CycloElement::CycloElement(long c, const RationalPolynomial& p) : CycloElement(c) {
  const RationalPolynomial& modulus = cyclotomic_polynomial(c);
  const RationalPolynomial reduced = p.degree() >= modulus.degree() ? p.divmod(modulus).second : p;
  for (std::size_t k = 0; k < reduced.coeffs().size(); ++k) coeffs_[k] = reduced.coeffs()[k];
}

CycloElement CycloElement::root(const RootOfUnity& xi) {
  return CycloElement(xi.c, RationalPolynomial::monomial(static_cast<std::size_t>(xi.a)));
}

CycloElement CycloElement::from_coeffs(long c, std::vector<BigRational> coeffs) {
  CycloElement x(c);
  if (coeffs.size() != x.coeffs_.size())
    throw MismatchError("coefficient vector length must equal phi(c) = " + std::to_string(x.coeffs_.size()));
  x.coeffs_ = std::move(coeffs);
  return x;
}

bool CycloElement::is_zero() const {
  for (const auto& q : coeffs_)
    if (!q.is_zero()) return false;
  return true;
}

bool CycloElement::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return false;
  return true;
}

BigRational CycloElement::to_rational() const {
  if (!is_rational()) throw DomainError("cyclotomic element is not rational: " + to_string());
  return coeffs_[0];
}

void CycloElement::require_same_order(const CycloElement& o) const {
  if (c_ != o.c_)
    throw MismatchError("cyclotomic orders differ: " + std::to_string(c_) + " vs " + std::to_string(o.c_));
}

CycloElement& CycloElement::operator+=(const CycloElement& o) {
  require_same_order(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& o) {
  require_same_order(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

CycloElement& CycloElement::operator*=(const CycloElement& o) {
  require_same_order(o);
  *this = CycloElement(c_, as_polynomial() * o.as_polynomial());
  return *this;
}

CycloElement& CycloElement::operator*=(const BigRational& k) {
  for (auto& q : coeffs_) q *= k;
  return *this;
}

CycloElement& CycloElement::operator/=(const CycloElement& o) {
  require_same_order(o);
  return *this *= o.inverse();
}

CycloElement operator-(CycloElement a) {
  for (auto& q : a.coeffs_) q = -q;
  return a;
}

CycloElement CycloElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(c_) + ")");
  // Phi_c is irreducible, so gcd(p, Phi_c) = 1 for every nonzero p of lower degree.
  const ExtendedGcd eg = extended_gcd(as_polynomial(), cyclotomic_polynomial(c_));
  return CycloElement(c_, eg.s);
}

CycloElement CycloElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloElement result(c_, BigRational(1));
  CycloElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

CycloElement CycloElement::galois(long b) const {
  if (std::gcd(b, c_) != 1) throw DomainError("Galois exponent must be coprime to the order");
  const CycloElement image = root(RootOfUnity(c_, b));
  CycloElement acc(c_);
  CycloElement power(c_, BigRational(1));
  for (const auto& q : coeffs_) {
    if (!q.is_zero()) acc += power * q;
    power *= image;
  }
  return acc;
}

std::string CycloElement::to_string() const {
  return as_polynomial().to_string("z" + std::to_string(c_));
}

std::ostream& operator<<(std::ostream& os, const CycloElement& x) { return os << x.to_string(); }

// ---------------------------------------------------------------------------

std::vector<CycloElement> twisted_bernoulli_table(std::size_t nmax, const RootOfUnity& xi) {
  if (xi.trivial()) throw TrivialRootError();
  const CycloElement z = CycloElement::root(xi);
  const CycloElement one(xi.c, BigRational(1));
  const CycloElement inv_one_minus = (one - z).inverse();
  const CycloElement ratio = z * inv_one_minus;

  std::vector<CycloElement> table;
  table.reserve(nmax + 1);
  table.push_back(inv_one_minus);
  for (std::size_t n = 1; n <= nmax; ++n) {
    CycloElement acc(xi.c);
    for (std::size_t k = 0; k < n; ++k)
      acc += table[k] * BigRational(binomial(static_cast<long>(n), static_cast<long>(k)));
    table.push_back(ratio * acc);
  }
  return table;
}

CycloElement twisted_bernoulli(std::size_t n, const RootOfUnity& xi) {
  return twisted_bernoulli_table(n, xi).back();
}

std::vector<CycloElement> frobenius_euler_table(std::size_t nmax, const CycloElement& lambda) {
  const long c = lambda.order();
  const CycloElement one(c, BigRational(1));
  if (lambda == one) throw DomainError("Frobenius-Euler numbers are undefined at lambda = 1");
  // sum_k C(n,k) H_k - lambda H_n = (1 - lambda) [n = 0]
  const CycloElement inv = (lambda - one).inverse();
  std::vector<CycloElement> table;
  table.reserve(nmax + 1);
  table.push_back(one);
  for (std::size_t n = 1; n <= nmax; ++n) {
    CycloElement acc(c);
    for (std::size_t k = 0; k < n; ++k)
      acc += table[k] * BigRational(binomial(static_cast<long>(n), static_cast<long>(k)));
    table.push_back(acc * inv);
  }
  return table;
}

CycloElement frobenius_euler(std::size_t n, const CycloElement& lambda) {
  return frobenius_euler_table(n, lambda).back();
}

CycloElement negative_polylog(std::size_t k, const RootOfUnity& xi) {
  if (xi.trivial()) throw TrivialRootError();
  // (z d/dz)^j [z/(1-z)] = N_j(z) / (1-z)^{j+1};
  // N_{j+1} = z (1-z) N_j' + (j+1) z N_j.
  const RationalPolynomial z = RationalPolynomial::monomial(1);
  const RationalPolynomial one_minus_z = RationalPolynomial(1) - z;
  RationalPolynomial numer = z;
  for (std::size_t j = 0; j < k; ++j) {
    numer = z * one_minus_z * numer.derivative() + z * numer * BigRational(static_cast<long>(j + 1));
  }
  const CycloElement base = CycloElement(xi.c, BigRational(1)) - CycloElement::root(xi);
  // Evaluate N_k at xi by substituting powers of the root.
  CycloElement value(xi.c);
  CycloElement power(xi.c, BigRational(1));
  const CycloElement root = CycloElement::root(xi);
  for (const auto& q : numer.coeffs()) {
    if (!q.is_zero()) value += power * q;
    power *= root;
  }
  return value / base.pow(static_cast<long>(k + 1));
}

BigRational root_sum_twisted(std::size_t n, long c) {
  if (c < 2) throw DomainError("root_sum_twisted requires c >= 2");
  CycloElement acc(c);
  for (const auto& xi : nontrivial_roots(c)) acc += twisted_bernoulli(n, xi);
  if (!acc.is_rational())
    throw Error("sum of twisted Bernoulli numbers over nontrivial roots is not rational: " + acc.to_string());
  return acc.to_rational();
}

}  // namespace desing
