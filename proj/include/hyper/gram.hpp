#pragma once

#include <array>

#include "hyper/hnum.hpp"

namespace hyper {

/// 3x3 matrix of pairwise inner products, entry (a, b) = (u_a, u_b).
template <class S>
struct GramMatrix {
  std::array<std::array<S, 3>, 3> entries;

  const S& operator()(std::size_t a, std::size_t b) const { return entries.at(a).at(b); }
};

template <class S>
[[nodiscard]] GramMatrix<S> gram(const HNum<S>& u1, const HNum<S>& u2, const HNum<S>& u3) {
  const std::array<const HNum<S>*, 3> u{&u1, &u2, &u3};
  GramMatrix<S> g;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) g.entries[a][b] = inner(*u[a], *u[b]);
  return g;
}

/// Gram matrix of the imaginary parts u1', u2', u3'.
template <class S>
[[nodiscard]] GramMatrix<S> gram_im(const HNum<S>& u1, const HNum<S>& u2, const HNum<S>& u3) {
  return gram(imaginary_part(u1), imaginary_part(u2), imaginary_part(u3));
}

/// Cofactor expansion along the first row.
template <class S>
[[nodiscard]] S det3(const GramMatrix<S>& m) {
  const auto& e = m.entries;
  S minor0 = e[1][1] * e[2][2] - e[1][2] * e[2][1];
  S minor1 = e[1][0] * e[2][2] - e[1][2] * e[2][0];
  S minor2 = e[1][0] * e[2][1] - e[1][1] * e[2][0];
  return S(e[0][0] * minor0 - e[0][1] * minor1 + e[0][2] * minor2);
}

/// (a, a)(b, b) - (a, b)^2, the 2x2 Gram determinant.
template <class S>
[[nodiscard]] S det2_gram(const HNum<S>& a, const HNum<S>& b) {
  S ab = inner(a, b);
  return S(norm_sq(a) * norm_sq(b) - ab * ab);
}

}  // namespace hyper
