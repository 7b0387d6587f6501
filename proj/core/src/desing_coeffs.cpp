#include "desing/desing_coeffs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "desing/errors.hpp"

namespace desing {

namespace {

bool term_less(const CoeffTerm& x, const CoeffTerm& y) {
  if (x.m != y.m) return x.m < y.m;
  return x.l < y.l;
}

}  // namespace

CoeffTable::CoeffTable(std::size_t r, std::vector<CoeffTerm> terms) : r_(r), terms_(std::move(terms)) {
  if (r == 0) throw DomainError("r must be >= 1");
  for (const auto& t : terms_) {
    if (t.l.size() != r || t.m.size() != r) throw MismatchError("term arity does not match r");
    if (t.a == 0) throw DomainError("coefficient tables hold nonzero terms only");
  }
  std::sort(terms_.begin(), terms_.end(), term_less);
}

CoeffTable CoeffTable::from_uv(std::size_t r, const LaurentPolynomial& uv) {
  if (uv.nvars() != 2 * r) throw MismatchError("u/v polynomial must have 2r variables");
  std::vector<CoeffTerm> terms;
  for (const auto& [mono, a] : uv.terms()) {
    CoeffTerm t{a, std::vector<int>(mono.begin(), mono.begin() + static_cast<std::ptrdiff_t>(r)),
                std::vector<int>(mono.begin() + static_cast<std::ptrdiff_t>(r), mono.end())};
    for (int e : t.l)
      if (e < 0) throw DomainError("u-exponents must be non-negative");
    terms.push_back(std::move(t));
  }
  return CoeffTable(r, std::move(terms));
}

LaurentPolynomial CoeffTable::to_uv() const {
  LaurentPolynomial p(2 * r_);
  for (const auto& t : terms_) {
    LaurentPolynomial::Monomial mono(t.l);
    mono.insert(mono.end(), t.m.begin(), t.m.end());
    p.add_term(mono, t.a);
  }
  return p;
}

std::vector<std::string> uv_names(std::size_t r) {
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= r; ++j) names.push_back("u_" + std::to_string(j));
  for (std::size_t j = 1; j <= r; ++j) names.push_back("v_" + std::to_string(j));
  return names;
}

LaurentPolynomial generating_G(std::size_t r) {
  if (r == 0) throw DomainError("r must be >= 1");
  const std::size_t n = 2 * r;
  LaurentPolynomial acc = LaurentPolynomial::constant(n, 1);
  for (std::size_t j = 0; j < r; ++j) {
    // tail = u_j v_j + ... + u_r v_r
    LaurentPolynomial tail(n);
    for (std::size_t k = j; k < r; ++k)
      tail += LaurentPolynomial::variable(n, u_var(k)) * LaurentPolynomial::variable(n, v_var(r, k));
    LaurentPolynomial diff = LaurentPolynomial::variable(n, v_var(r, j), -1);
    if (j > 0) diff -= LaurentPolynomial::variable(n, v_var(r, j - 1), -1);
    acc = acc * (LaurentPolynomial::constant(n, 1) - tail * diff);
  }
  return acc;
}

CoeffTable expand_G(std::size_t r) { return CoeffTable::from_uv(r, generating_G(r)); }

CoeffTable expand_H(std::size_t r) {
  if (r == 0) throw DomainError("r must be >= 1");
  if (r > 20) throw DomainError("subset enumeration limited to r <= 20");
  const std::size_t n = 2 * r;
  LaurentPolynomial total(n);

  for (unsigned J = 0; J < (1u << r); ++J) {
    // b_{J,l}: prod_{j in J} (t_j + ... + t_r) over r variables t.
    LaurentPolynomial b = LaurentPolynomial::constant(r, 1);
    for (std::size_t j = 0; j < r; ++j) {
      if (!(J & (1u << j))) continue;
      LaurentPolynomial tail(r);
      for (std::size_t k = j; k < r; ++k) tail += LaurentPolynomial::variable(r, k);
      b = b * tail;
    }
    // K ranges over subsets of J \ {1}.
    const unsigned allowed = J & ~1u;
    for (unsigned K = allowed;; K = (K - 1) & allowed) {
      const int sign = (std::popcount(J & ~K) % 2 == 0) ? 1 : -1;
      std::vector<int> shift(r, 0);
      for (std::size_t j = 0; j < r; ++j) {
        if ((J & ~K) & (1u << j)) shift[j] -= 1;                // delta_{j in J\K}
        if (j + 1 < r && (K & (1u << (j + 1)))) shift[j] -= 1;  // delta_{j+1 in K}
      }
      for (const auto& [l, coeff] : b.terms()) {
        LaurentPolynomial::Monomial mono(l);
        for (std::size_t j = 0; j < r; ++j) mono.push_back(l[j] + shift[j]);
        total.add_term(mono, coeff * sign);
      }
      if (K == 0) break;
    }
  }
  return CoeffTable::from_uv(r, total);
}

bool weight_check(const CoeffTable& table) {
  return std::all_of(table.terms().begin(), table.terms().end(), [](const CoeffTerm& t) {
    return std::accumulate(t.m.begin(), t.m.end(), 0) == 0;
  });
}

LaurentPolynomial pochhammer_polynomial(std::size_t r, std::size_t var, int k) {
  LaurentPolynomial p = LaurentPolynomial::constant(r, 1);
  const LaurentPolynomial s = LaurentPolynomial::variable(r, var);
  for (int i = 0; i < k; ++i) p = p * (s + LaurentPolynomial::constant(r, i));
  return p;
}

ShiftedCombination::ShiftedCombination(CoeffTable table) : table_(std::move(table)) {
  const std::size_t r = table_.rank();
  std::map<std::vector<int>, LaurentPolynomial> by_shift;
  for (const auto& t : table_.terms()) {
    LaurentPolynomial poly = LaurentPolynomial::constant(r, t.a);
    for (std::size_t j = 0; j < r; ++j) poly = poly * pochhammer_polynomial(r, j, t.l[j]);
    auto [it, inserted] = by_shift.try_emplace(t.m, r);
    it->second += poly;
  }
  for (auto it = by_shift.rbegin(); it != by_shift.rend(); ++it) {
    if (!it->second.is_zero()) groups_.push_back({it->first, it->second});
  }
}

std::string ShiftedCombination::to_tex() const {
  const std::size_t r = rank();
  std::vector<std::string> s_names;
  std::vector<std::string> gamma_names;
  for (std::size_t j = 1; j <= r; ++j) {
    s_names.push_back("s_" + std::to_string(j));
    gamma_names.push_back("\\gamma_" + std::to_string(j));
  }
  auto join = [](const std::vector<std::string>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i];
    return out;
  };

  std::ostringstream os;
  os << "\\zeta^{\\rm des}_" << r << "(" << join(s_names) << ";" << join(gamma_names) << ")\n";
  bool first = true;
  for (const auto& g : groups_) {
    std::vector<std::string> args;
    for (std::size_t j = 0; j < r; ++j) {
      std::string a = s_names[j];
      if (g.shift[j] > 0) a += "+" + std::to_string(g.shift[j]);
      if (g.shift[j] < 0) a += std::to_string(g.shift[j]);
      args.push_back(a);
    }
    os << (first ? "  = " : "  + ") << "(" << g.poly.to_string(s_names) << ")\\,\\zeta_" << r << "("
       << join(args) << ";(1);" << join(gamma_names) << ")\n";
    first = false;
  }
  return os.str();
}

ShiftedCombination combination(std::size_t r) { return ShiftedCombination(expand_G(r)); }

}  // namespace desing
