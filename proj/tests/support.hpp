#pragma once

// Shared helpers for the unit and acceptance suites.

#include <random>

#include "hyper/hyper.hpp"

namespace hyper::testing {

using Q = Rational;

/// Seeded source of random hypercomplex numbers with integer coefficients.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = 42, long range = 9) : rng_(seed), coeff_(-range, range) {}

  template <class S = Q>
  HNum<S> next(std::size_t dim) {
    HNum<S> u(dim);
    for (auto& c : u.coeffs()) c = S(coeff_(rng_));
    return u;
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long> coeff_;
};

template <class S = Q>
HNum<S> e(std::size_t k, std::size_t dim = 8) {
  return HNum<S>::basis(dim, k);
}

template <class S>
HNum<S> to_double(const HNum<Q>& u) {
  HNum<S> r(u.dim());
  for (std::size_t k = 0; k < u.dim(); ++k) r[k] = u[k].get_d();
  return r;
}

/// The triple decomposition recomputed from structure constants only. Used
/// as the independent side when freezing derived values.
struct TableTriple {
  HNum<Q> anticommutator, cross3, associator;
};

inline TableTriple triple_via_table(const HNum<Q>& u1, const HNum<Q>& u2, const HNum<Q>& u3) {
  const auto t = build_table(u1.dim());
  auto m = [&](const HNum<Q>& a, const HNum<Q>& b) { return mul_table(a, b, t); };
  auto c2 = u2;
  for (std::size_t k = 1; k < c2.dim(); ++k) c2[k] = -c2[k];
  const Q h(1, 2);
  const auto p = m(m(u1, c2), u3), q = m(u3, m(c2, u1)), r = m(u1, m(c2, u3)),
             s = m(m(u3, c2), u1);
  return {scale(h, p + s), scale(h, p - q), scale(h, p - r)};
}

/// Exhaustive loop over all dim^3 basis triples.
template <class F>
void for_each_basis_triple(std::size_t dim, F&& f) {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) f(e(i, dim), e(j, dim), e(k, dim));
}

/// Coefficientwise comparison under the binary64 tolerance policy.
inline bool near(const HNum<double>& a, const HNum<double>& b, const Tolerance& tol = {}) {
  double scale = 0, dev = 0;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    scale = std::max({scale, std::fabs(a[k]), std::fabs(b[k])});
    dev = std::max(dev, std::fabs(a[k] - b[k]));
  }
  return dev <= tol.bound(scale);
}

inline bool near(double a, double b, const Tolerance& tol = {}) {
  return std::fabs(a - b) <= tol.bound(std::max(std::fabs(a), std::fabs(b)));
}

}  // namespace hyper::testing
