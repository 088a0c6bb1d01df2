#pragma once

// Hypercomplex numbers of dimension 1, 2, 4, 8 (reals, complex numbers,
// quaternions, octonions) built by Cayley-Dickson doubling.
//
// Coefficient 0 is the multiplicative unit i0; coefficient k is e_k.
// The doubling product used throughout is
//
//   (a1, a2)(b1, b2) = (a1 b1 - conj(b2) a2,  b2 a1 + a2 conj(b1))
//
// with real multiplication as the base case. Under it e1 e2 = e3,
// e1 e4 = e5, e2 e4 = e6, e3 e4 = e7, and dimensions <= 4 are associative.

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>

#include "hyper/scalar.hpp"

namespace hyper {

/// Operands of different dimension, or an unsupported dimension.
class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxDim = 8;

[[nodiscard]] constexpr bool valid_dim(std::size_t dim) noexcept {
  return dim == 1 || dim == 2 || dim == 4 || dim == 8;
}

inline void require_valid_dim(std::size_t dim) {
  if (!valid_dim(dim))
    throw dimension_error("dimension " + std::to_string(dim) + " is not one of 1, 2, 4, 8");
}

template <Scalar S>
class HNum {
 public:
  using scalar_type = S;

  /// The zero element of dimension `dim`.
  explicit HNum(std::size_t dim) : dim_(dim) {
    require_valid_dim(dim);
    coeffs_.fill(S(0));
  }

  HNum(std::initializer_list<S> coeffs) : HNum(std::span<const S>(coeffs.begin(), coeffs.size())) {}

  explicit HNum(std::span<const S> coeffs) : HNum(coeffs.size()) {
    std::copy(coeffs.begin(), coeffs.end(), coeffs_.begin());
  }

  [[nodiscard]] static HNum unit(std::size_t dim) { return basis(dim, 0); }

  [[nodiscard]] static HNum basis(std::size_t dim, std::size_t k) {
    HNum u(dim);
    if (k >= dim)
      throw std::out_of_range("basis index " + std::to_string(k) + " out of range for dimension " +
                              std::to_string(dim));
    u.coeffs_[k] = S(1);
    return u;
  }

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::span<const S> coeffs() const noexcept { return {coeffs_.data(), dim_}; }
  [[nodiscard]] std::span<S> coeffs() noexcept { return {coeffs_.data(), dim_}; }

  const S& operator[](std::size_t k) const { return coeffs_.at(check_index(k)); }
  S& operator[](std::size_t k) { return coeffs_.at(check_index(k)); }

  [[nodiscard]] bool is_zero() const {
    for (const auto& c : coeffs())
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const HNum& a, const HNum& b) {
    if (a.dim_ != b.dim_) return false;
    for (std::size_t k = 0; k < a.dim_; ++k)
      if (a.coeffs_[k] != b.coeffs_[k]) return false;
    return true;
  }

 private:
  std::size_t check_index(std::size_t k) const {
    if (k >= dim_) throw std::out_of_range("coefficient index out of range");
    return k;
  }

  std::size_t dim_;
  std::array<S, kMaxDim> coeffs_;
};

namespace detail {

template <class S>
void require_same_dim(const HNum<S>& a, const HNum<S>& b) {
  if (a.dim() != b.dim())
    throw dimension_error("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
}

// A block of coefficients read through an optional conjugation and sign.
// Conjugating a doubled element (x1, x2) gives (conj x1, -x2), so halves of
// a view are again views and the recursion needs no temporaries.
template <class S>
struct BlockView {
  const S* p;
  std::size_t n;
  bool conj = false;
  bool neg = false;

  [[nodiscard]] BlockView lo() const { return {p, n / 2, conj, neg}; }
  [[nodiscard]] BlockView hi() const { return {p + n / 2, n / 2, false, neg != conj}; }
  [[nodiscard]] BlockView conjugated() const { return {p, n, !conj, neg}; }
};

// out += sign * (a b), with (a1, a2)(b1, b2) = (a1 b1 - conj(b2) a2, b2 a1 + a2 conj(b1)).
template <class S>
void cd_mul_acc(BlockView<S> a, BlockView<S> b, S* out, bool negative, S& scratch) {
  if (a.n == 1) {
    scratch = a.p[0] * b.p[0];
    if (negative != (a.neg != b.neg))
      out[0] -= scratch;
    else
      out[0] += scratch;
    return;
  }
  const std::size_t h = a.n / 2;
  cd_mul_acc(a.lo(), b.lo(), out, negative, scratch);
  cd_mul_acc(b.hi().conjugated(), a.hi(), out, !negative, scratch);
  cd_mul_acc(b.hi(), a.lo(), out + h, negative, scratch);
  cd_mul_acc(a.hi(), b.lo().conjugated(), out + h, negative, scratch);
}

}  // namespace detail

template <class S>
[[nodiscard]] HNum<S> unit(std::size_t dim) {
  return HNum<S>::unit(dim);
}

template <class S>
[[nodiscard]] HNum<S> basis(std::size_t dim, std::size_t k) {
  return HNum<S>::basis(dim, k);
}

template <class S>
[[nodiscard]] HNum<S> add(const HNum<S>& a, const HNum<S>& b) {
  detail::require_same_dim(a, b);
  HNum<S> r(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) r[k] = a[k] + b[k];
  return r;
}

template <class S>
[[nodiscard]] HNum<S> sub(const HNum<S>& a, const HNum<S>& b) {
  detail::require_same_dim(a, b);
  HNum<S> r(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) r[k] = a[k] - b[k];
  return r;
}

template <class S>
[[nodiscard]] HNum<S> scale(const S& s, const HNum<S>& u) {
  HNum<S> r(u.dim());
  for (std::size_t k = 0; k < u.dim(); ++k) r[k] = s * u[k];
  return r;
}

template <class S>
[[nodiscard]] HNum<S> negate(const HNum<S>& u) {
  HNum<S> r(u.dim());
  for (std::size_t k = 0; k < u.dim(); ++k) r[k] = -u[k];
  return r;
}

template <class S>
[[nodiscard]] HNum<S> mul(const HNum<S>& a, const HNum<S>& b) {
  detail::require_same_dim(a, b);
  HNum<S> r(a.dim());
  S scratch(0);
  detail::cd_mul_acc<S>({a.coeffs().data(), a.dim()}, {b.coeffs().data(), b.dim()},
                        r.coeffs().data(), false, scratch);
  return r;
}

/// conj(u) = 2 (u, i0) i0 - u
template <class S>
[[nodiscard]] HNum<S> conj(const HNum<S>& u) {
  HNum<S> r = negate(u);
  r[0] = u[0];
  return r;
}

template <class S>
[[nodiscard]] S inner(const HNum<S>& a, const HNum<S>& b) {
  detail::require_same_dim(a, b);
  S acc(0);
  for (std::size_t k = 0; k < a.dim(); ++k) acc += a[k] * b[k];
  return acc;
}

template <class S>
[[nodiscard]] S norm_sq(const HNum<S>& u) {
  return inner(u, u);
}

/// u' = u - (u, i0) i0
template <class S>
[[nodiscard]] HNum<S> imaginary_part(const HNum<S>& u) {
  HNum<S> r = u;
  r[0] = S(0);
  return r;
}

template <class S>
[[nodiscard]] S real_coeff(const HNum<S>& u) {
  return u[0];
}

/// Widens `u` to dimension `dim` by zero padding.
template <class S>
[[nodiscard]] HNum<S> embed(const HNum<S>& u, std::size_t dim) {
  HNum<S> r(dim);
  if (dim < u.dim()) throw dimension_error("embed cannot narrow a value");
  for (std::size_t k = 0; k < u.dim(); ++k) r[k] = u[k];
  return r;
}

template <class S>
HNum<S> operator+(const HNum<S>& a, const HNum<S>& b) { return add(a, b); }
template <class S>
HNum<S> operator-(const HNum<S>& a, const HNum<S>& b) { return sub(a, b); }
template <class S>
HNum<S> operator-(const HNum<S>& a) { return negate(a); }
template <class S>
HNum<S> operator*(const HNum<S>& a, const HNum<S>& b) { return mul(a, b); }
template <class S>
HNum<S> operator*(const S& s, const HNum<S>& u) { return scale(s, u); }

/// "(c0, c1, ..., c{d-1})"
template <class S>
[[nodiscard]] std::string to_string(const HNum<S>& u) {
  std::string out = "(";
  for (std::size_t k = 0; k < u.dim(); ++k) {
    if (k) out += ", ";
    out += scalar_traits<S>::to_string(u[k]);
  }
  return out + ")";
}

/// "c0,c1,...": the coefficient-list syntax accepted on the command line.
template <class S>
[[nodiscard]] std::string to_coeff_list(const HNum<S>& u) {
  std::string out;
  for (std::size_t k = 0; k < u.dim(); ++k) {
    if (k) out += ",";
    out += scalar_traits<S>::to_string(u[k]);
  }
  return out;
}

/// Parses "a0,a1,...,a{d-1}" (rationals allowed) or a basis name "i0", "e0".."e7".
template <Scalar S>
[[nodiscard]] HNum<S> parse_hnum(std::string_view text, std::size_t dim) {
  require_valid_dim(dim);
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "i0") return HNum<S>::unit(dim);
  if (text.size() == 2 && text[0] == 'e' && text[1] >= '0' && text[1] <= '9') {
    std::size_t k = static_cast<std::size_t>(text[1] - '0');
    if (k >= dim) throw parse_error("basis element " + std::string(text) + " does not exist in dimension " + std::to_string(dim));
    return HNum<S>::basis(dim, k);
  }
  HNum<S> u(dim);
  std::size_t k = 0;
  while (true) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    if (k >= dim)
      throw parse_error("expected " + std::to_string(dim) + " coefficients, got more");
    u[k++] = scalar_traits<S>::parse(item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (k != dim)
    throw parse_error("expected " + std::to_string(dim) + " coefficients, got " + std::to_string(k));
  return u;
}

}  // namespace hyper
