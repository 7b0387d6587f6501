#pragma once

// The expansions as printed, transcribed term by term. Variables of the u/v
// ring: u_1..u_r are 0..r-1, v_1..v_r are r..2r-1.

#include <map>
#include <vector>

#include "desing/laurent.hpp"

namespace printed {

using desing::LaurentPolynomial;
using Poly = LaurentPolynomial;

struct UV {
  std::size_t r;
  [[nodiscard]] Poly k(long c) const { return Poly::constant(2 * r, c); }
  [[nodiscard]] Poly u(std::size_t j) const { return Poly::variable(2 * r, j - 1); }
  [[nodiscard]] Poly v(std::size_t j, int p) const { return Poly::variable(2 * r, r + j - 1, p); }
};

struct S {
  std::size_t r;
  [[nodiscard]] Poly k(long c) const { return Poly::constant(r, c); }
  [[nodiscard]] Poly s(std::size_t j) const { return Poly::variable(r, j - 1); }
};

inline Poly G1() {
  const UV x{1};
  return x.k(1) - x.u(1);
}

inline Poly G2() {
  const UV x{2};
  return (x.k(1) - x.u(1)) * (x.k(1) - x.u(2)) + (x.u(2) * x.u(2) - x.u(1) * x.u(2)) * x.v(1, -1) * x.v(2, 1) -
         x.u(2) * x.u(2) * x.v(1, -2) * x.v(2, 2);
}

inline Poly G3() {
  const UV x{3};
  auto u = [&](std::size_t j) { return x.u(j); };
  auto v = [&](std::size_t j, int p) { return x.v(j, p); };
  const Poly one = x.k(1);
  Poly g = x.k(0);
  g -= (u(1) - one) * (u(2) - one) * (u(3) - one);
  g += (u(1) - one) * (u(2) - u(3)) * u(3) * v(2, -1) * v(3, 1);
  g += (u(1) - one) * u(3) * u(3) * v(2, -2) * v(3, 2);
  g += (u(1) - u(2)) * u(2) * (u(3) - one) * v(1, -1) * v(2, 1);
  g += u(3) * (x.k(0) - u(1) + x.k(2) * u(2) - u(1) * u(2) + u(2) * u(2) + u(1) * u(3) - x.k(2) * u(2) * u(3)) *
       v(1, -1) * v(3, 1);
  g -= u(3) * u(3) * (x.k(-1) + u(1) - x.k(2) * u(2) + u(3)) * v(1, -1) * v(2, -1) * v(3, 2);
  g += u(3) * u(3) * u(3) * v(1, -1) * v(2, -2) * v(3, 3);
  g += u(2) * u(2) * (u(3) - one) * v(1, -2) * v(2, 2);
  g -= u(2) * (x.k(2) + u(2) - x.k(2) * u(3)) * u(3) * v(1, -2) * v(2, 1) * v(3, 1);
  g += u(3) * u(3) * (x.k(-1) - x.k(2) * u(2) + u(3)) * v(1, -2) * v(3, 2);
  g -= u(3) * u(3) * u(3) * v(1, -2) * v(2, -1) * v(3, 3);
  return g;
}

/// Shift (m_1..m_r) -> coefficient polynomial in s_1..s_r.
using Groups = std::map<std::vector<int>, Poly>;

inline Groups groups1() {
  const S x{1};
  return {{{0}, x.k(1) - x.s(1)}};
}

inline Groups groups2() {
  const S x{2};
  auto s = [&](std::size_t j) { return x.s(j); };
  const Poly one = x.k(1);
  return {
      {{0, 0}, (s(1) - one) * (s(2) - one)},
      {{-1, 1}, s(2) * (s(2) + one - s(1))},
      {{-2, 2}, x.k(-1) * s(2) * (s(2) + one)},
  };
}

inline Groups groups3() {
  const S x{3};
  auto s = [&](std::size_t j) { return x.s(j); };
  auto c = [&](long v) { return x.k(v); };
  const Poly one = c(1);
  return {
      {{0, 0, 0}, c(-1) * (s(1) - one) * (s(2) - one) * (s(3) - one)},
      {{0, -1, 1}, (s(1) - one) * (c(-1) + s(2) - s(3)) * s(3)},
      {{0, -2, 2}, (s(1) - one) * s(3) * (s(3) + one)},
      {{-1, 1, 0}, (c(-1) + s(1) - s(2)) * s(2) * (s(3) - one)},
      {{-1, 0, 1}, s(3) * (s(2) - s(1) * s(2) + s(2) * s(2) + s(1) * s(3) - c(2) * s(2) * s(3))},
      {{-1, -1, 2}, c(-1) * s(3) * (s(3) + one) * (one + s(1) - c(2) * s(2) + s(3))},
      {{-1, -2, 3}, s(3) * (s(3) + one) * (s(3) + c(2))},
      {{-2, 2, 0}, s(2) * (s(2) + one) * (s(3) - one)},
      {{-2, 1, 1}, c(-1) * s(2) * (one + s(2) - c(2) * s(3)) * s(3)},
      {{-2, 0, 2}, s(3) * (s(3) + one) * (one - c(2) * s(2) + s(3))},
      {{-2, -1, 3}, c(-1) * s(3) * (s(3) + one) * (s(3) + c(2))},
  };
}

}  // namespace printed
