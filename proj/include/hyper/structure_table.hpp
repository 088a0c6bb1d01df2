#pragma once

// Signed structure constants e_i e_j = sign * e_k.
//
// The table is produced by running the doubling recursion symbolically on
// signed basis indices, with no reference to the coefficient arithmetic in
// hnum.hpp. mul_table() then multiplies by bilinear expansion, giving a
// second, independent route to the product.

#include <cstddef>
#include <string>
#include <vector>

#include "hyper/hnum.hpp"

namespace hyper {

struct SignedBasis {
  int sign = 0;  // -1, 0 or +1
  std::size_t index = 0;

  friend bool operator==(const SignedBasis&, const SignedBasis&) = default;
};

class StructureTable {
 public:
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

  [[nodiscard]] const SignedBasis& entry(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) throw std::out_of_range("structure table index out of range");
    return entries_[i * dim_ + j];
  }

  friend StructureTable build_table(std::size_t dim);

 private:
  StructureTable(std::size_t dim, std::vector<SignedBasis> entries)
      : dim_(dim), entries_(std::move(entries)) {}

  std::size_t dim_;
  std::vector<SignedBasis> entries_;
};

namespace detail {

inline SignedBasis conj_basis(SignedBasis x) {
  if (x.index != 0) x.sign = -x.sign;
  return x;
}

}  // namespace detail

/// For a basis element of the doubled algebra, index i < n is (e_i, 0) and
/// index i >= n is (0, e_{i-n}). Expanding the doubling product on such pairs:
///   (x,0)(y,0) = (xy, 0)          (x,0)(0,y) = (0, yx)
///   (0,x)(y,0) = (0, x conj(y))   (0,x)(0,y) = (-conj(y) x, 0)
inline StructureTable build_table(std::size_t dim) {
  require_valid_dim(dim);
  std::vector<SignedBasis> prev{{+1, 0}};
  std::size_t n = 1;
  auto at = [](const std::vector<SignedBasis>& t, std::size_t n, SignedBasis a, SignedBasis b) {
    SignedBasis r = t[a.index * n + b.index];
    r.sign *= a.sign * b.sign;
    return r;
  };
  while (n < dim) {
    const std::size_t m = 2 * n;
    std::vector<SignedBasis> next(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const bool hi_i = i >= n, hi_j = j >= n;
        const SignedBasis x{+1, hi_i ? i - n : i};
        const SignedBasis y{+1, hi_j ? j - n : j};
        SignedBasis r;
        if (!hi_i && !hi_j) {
          r = at(prev, n, x, y);
        } else if (!hi_i && hi_j) {
          r = at(prev, n, y, x);
          r.index += n;
        } else if (hi_i && !hi_j) {
          r = at(prev, n, x, detail::conj_basis(y));
          r.index += n;
        } else {
          r = at(prev, n, detail::conj_basis(y), x);
          r.sign = -r.sign;
        }
        next[i * m + j] = r;
      }
    }
    prev = std::move(next);
    n = m;
  }
  return StructureTable(dim, std::move(prev));
}

/// Bilinear expansion sum_ij a_i b_j e_i e_j.
template <class S>
[[nodiscard]] HNum<S> mul_table(const HNum<S>& a, const HNum<S>& b, const StructureTable& t) {
  if (a.dim() != t.dim() || b.dim() != t.dim())
    throw dimension_error("operand dimension does not match structure table");
  HNum<S> r(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < t.dim(); ++j) {
      const auto& e = t.entry(i, j);
      if (e.sign > 0)
        r[e.index] += a[i] * b[j];
      else if (e.sign < 0)
        r[e.index] -= a[i] * b[j];
    }
  }
  return r;
}

[[nodiscard]] inline std::string basis_name(std::size_t k) {
  return k == 0 ? "i0" : "e" + std::to_string(k);
}

/// Plain-text grid: header row of column names, then one row per e_i with
/// signed entries such as "+e3" or "-i0".
[[nodiscard]] inline std::string format_table(const StructureTable& t) {
  constexpr int width = 5;
  auto pad = [](std::string s) {
    if (s.size() < width) s.insert(0, width - s.size(), ' ');
    return s;
  };
  std::string out = pad("*");
  for (std::size_t j = 0; j < t.dim(); ++j) out += pad(basis_name(j));
  out += '\n';
  for (std::size_t i = 0; i < t.dim(); ++i) {
    out += pad(basis_name(i));
    for (std::size_t j = 0; j < t.dim(); ++j) {
      const auto& e = t.entry(i, j);
      out += pad((e.sign < 0 ? "-" : e.sign > 0 ? "+" : "") + (e.sign ? basis_name(e.index) : "0"));
    }
    out += '\n';
  }
  return out;
}

}  // namespace hyper
