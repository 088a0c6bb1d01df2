#pragma once

// Additive decompositions of pair and triple products.
//
// Pair:    u1 u2 = {u1,u2} + [u1,u2]
// Triple:  (u1 conj(u2)) u3 = {u1,u2,u3} + [u1,u2,u3] + <u1,u2,u3>
//
// The three triple parts are mutually orthogonal and their squared lengths
// sum to (u1,u1)(u2,u2)(u3,u3). All triple brackets take u2 as given and
// conjugate it internally.
//
// Each bracket has a definitional form (from products) and, where one
// exists, a closed form (from inner products and pair cross products); the
// *_alt variants evaluate the second parenthesization of each definition.

#include "hyper/gram.hpp"
#include "hyper/hnum.hpp"

namespace hyper {

template <class S>
struct PairDecomposition {
  HNum<S> anticommutator;
  HNum<S> commutator;
  HNum<S> product;
};

template <class S>
struct TripleDecomposition {
  HNum<S> anticommutator;
  HNum<S> cross3;
  HNum<S> associator;
  HNum<S> product;  // (u1 conj(u2)) u3
};

namespace detail {

template <class S>
HNum<S> half(const HNum<S>& u) {
  return scale(scalar_traits<S>::half(), u);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Pair

/// {u1,u2} = (u1 u2 + u2 u1) / 2
template <class S>
[[nodiscard]] HNum<S> acomm2(const HNum<S>& u1, const HNum<S>& u2) {
  return detail::half(mul(u1, u2) + mul(u2, u1));
}

/// [u1,u2] = (u1 u2 - u2 u1) / 2
template <class S>
[[nodiscard]] HNum<S> cross2(const HNum<S>& u1, const HNum<S>& u2) {
  return detail::half(mul(u1, u2) - mul(u2, u1));
}

/// (u1,i0) u2 + (u2,i0) u1 - (u1,u2) i0
template <class S>
[[nodiscard]] HNum<S> acomm2_closed(const HNum<S>& u1, const HNum<S>& u2) {
  auto r = scale(real_coeff(u1), u2) + scale(real_coeff(u2), u1);
  r[0] -= inner(u1, u2);
  return r;
}

/// Rebuilds u1 u2 from inner products and the pair cross product.
template <class S>
[[nodiscard]] HNum<S> expand_product2(const HNum<S>& u1, const HNum<S>& u2) {
  return acomm2_closed(u1, u2) + cross2(u1, u2);
}

template <class S>
[[nodiscard]] PairDecomposition<S> decompose_pair(const HNum<S>& u1, const HNum<S>& u2) {
  return {acomm2(u1, u2), cross2(u1, u2), mul(u1, u2)};
}

/// ||[u1,u2]||^2 = (u1',u1')(u2',u2') - (u1',u2')^2
template <class S>
[[nodiscard]] S norm_sq_cross2(const HNum<S>& u1, const HNum<S>& u2) {
  return det2_gram(imaginary_part(u1), imaginary_part(u2));
}

/// ||{u1,u2}||^2 = (u1,u1)(u2,u2) - ||[u1,u2]||^2
template <class S>
[[nodiscard]] S norm_sq_acomm2(const HNum<S>& u1, const HNum<S>& u2) {
  return S(norm_sq(u1) * norm_sq(u2) - norm_sq_cross2(u1, u2));
}

// ---------------------------------------------------------------------------
// Triple, definitional

/// ((u1 conj u2) u3 + (u3 conj u2) u1) / 2
template <class S>
[[nodiscard]] HNum<S> acomm3(const HNum<S>& u1, const HNum<S>& u2, const HNum<S>& u3) {
  const auto c2 = conj(u2);
  return detail::half(mul(mul(u1, c2), u3) + mul(mul(u3, c2), u1));
}

/// (u1 (conj u2 u3) + u3 (conj u2 u1)) / 2
template <class S>
[[nodiscard]] HNum<S> acomm3_alt(const HNum<S>& u1, const HNum<S>& u2, const HNum<S>& u3) {
  const auto c2 = conj(u2);
  return detail::half(mul(u1, mul(c2, u3)) + mul(u3, mul(c2, u1)));
}

/// ((u1 conj u2) u3 - u3 (conj u2 u1)) / 2
template <class S>
[[nodiscard]] HNum<S> cross3(const HNum<S>& u1, const HNum<S>& u2, const HNum<S>& u3) {
  const auto c2 = conj(u2);
  return detail::half(mul(mul(u1, c2), u3) - mul(u3, mul(c2, u1)));
}

/// (u1 (conj u2 u3) - (u3 conj u2) u1) / 2
template <class S>
[[nodiscard]] HNum<S> cross3_alt(const HNum<S>& u1, const HNum<S>& u2, const HNum<S>& u3) {
  const auto c2 = conj(u2);
  return detail::half(mul(u1, mul(c2, u3)) - mul(mul(u3, c2), u1));
}

/// ((u1 conj u2) u3 - u1 (conj u2 u3)) / 2
template <class S>
[[nodiscard]] HNum<S> assoc3(const HNum<S>& u1, const HNum<S>& u2, const HNum<S>& u3) {
  const auto c2 = conj(u2);
  return detail::half(mul(mul(u1, c2), u3) - mul(u1, mul(c2, u3)));
}

/// (u3 (conj u2 u1) - (u3 conj u2) u1) / 2
template <class S>
[[nodiscard]] HNum<S> assoc3_alt(const HNum<S>& u1, const HNum<S>& u2, const HNum<S>& u3) {
  const auto c2 = conj(u2);
  return detail::half(mul(u3, mul(c2, u1)) - mul(mul(u3, c2), u1));
}

// ---------------------------------------------------------------------------
// Triple, closed forms

/// (u1,u2) u3 - (u1,u3) u2 + (u2,u3) u1
template <class S>
[[nodiscard]] HNum<S> acomm3_closed(const HNum<S>& u1, const HNum<S>& u2, const HNum<S>& u3) {
  return scale(inner(u1, u2), u3) - scale(inner(u1, u3), u2) + scale(inner(u2, u3), u1);
}

/// ([u1,u2], u3), the scalar triple product that recurs in the norm formulas.
template <class S>
[[nodiscard]] S mixed_product(const HNum<S>& u1, const HNum<S>& u2, const HNum<S>& u3) {
  return inner(cross2(u1, u2), u3);
}

/// ([u1,u2],u3) i0 - (u1,i0)[u2,u3] + (u2,i0)[u1,u3] - (u3,i0)[u1,u2]
template <class S>
[[nodiscard]] HNum<S> cross3_closed(const HNum<S>& u1, const HNum<S>& u2, const HNum<S>& u3) {
  auto r = scale(real_coeff(u2), cross2(u1, u3)) - scale(real_coeff(u1), cross2(u2, u3)) -
           scale(real_coeff(u3), cross2(u1, u2));
  r[0] += mixed_product(u1, u2, u3);
  return r;
}

template <class S>
[[nodiscard]] TripleDecomposition<S> decompose_triple(const HNum<S>& u1, const HNum<S>& u2,
                                                      const HNum<S>& u3) {
  // Shares the four products among the three parts.
  const auto c2 = conj(u2);
  const auto p = mul(mul(u1, c2), u3);
  const auto q = mul(u3, mul(c2, u1));
  const auto r = mul(u1, mul(c2, u3));
  const auto s = mul(mul(u3, c2), u1);
  return {detail::half(p + s), detail::half(p - q), detail::half(p - r), p};
}

// ---------------------------------------------------------------------------
// Squared lengths of the triple parts, from Gram determinants

/// (u1,u1)(u2,u2)(u3,u3) - det G(u1,u2,u3)
template <class S>
[[nodiscard]] S norm_sq_acomm3(const HNum<S>& u1, const HNum<S>& u2, const HNum<S>& u3) {
  return S(norm_sq(u1) * norm_sq(u2) * norm_sq(u3) - det3(gram(u1, u2, u3)));
}

/// ([u1,u2],u3)^2 + det G(u1,u2,u3) - det G(u1',u2',u3')
template <class S>
[[nodiscard]] S norm_sq_cross3(const HNum<S>& u1, const HNum<S>& u2, const HNum<S>& u3) {
  const S t = mixed_product(u1, u2, u3);
  return S(t * t + det3(gram(u1, u2, u3)) - det3(gram_im(u1, u2, u3)));
}

/// det G(u1',u2',u3') - ([u1,u2],u3)^2
template <class S>
[[nodiscard]] S norm_sq_assoc3(const HNum<S>& u1, const HNum<S>& u2, const HNum<S>& u3) {
  const S t = mixed_product(u1, u2, u3);
  return S(det3(gram_im(u1, u2, u3)) - t * t);
}

// ---------------------------------------------------------------------------

/// u3 (conj(u2) u1), which decomposes as {..} - [..] + <..>.
template <class S>
[[nodiscard]] HNum<S> mirror_product(const HNum<S>& u1, const HNum<S>& u2, const HNum<S>& u3) {
  return mul(u3, mul(conj(u2), u1));
}

/// 2 (u2,i0) u1 u3 - {u1,u2,u3} - [u1,u2,u3] - <u1,u2,u3>, which equals (u1 u2) u3.
template <class S>
[[nodiscard]] HNum<S> okubo_rhs(const HNum<S>& u1, const HNum<S>& u2, const HNum<S>& u3) {
  const auto d = decompose_triple(u1, u2, u3);
  return scale(S(2 * real_coeff(u2)), mul(u1, u3)) - d.anticommutator - d.cross3 - d.associator;
}

}  // namespace hyper
