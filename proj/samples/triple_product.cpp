// Splits (u1 conj(u2)) u3 for two octonion triples and shows that the
// parts are orthogonal and that their squared lengths add up.

#include <iostream>

#include "hyper/hyper.hpp"

using hyper::HNum;
using hyper::Rational;

namespace {

void show(const HNum<Rational>& u1, const HNum<Rational>& u2, const HNum<Rational>& u3) {
  const auto d = hyper::decompose_triple(u1, u2, u3);
  std::cout << "u1 = " << to_string(u1) << "\nu2 = " << to_string(u2) << "\nu3 = " << to_string(u3)
            << '\n';
  std::cout << "  anticommutator " << to_string(d.anticommutator) << '\n'
            << "  cross3         " << to_string(d.cross3) << '\n'
            << "  associator     " << to_string(d.associator) << '\n';
  std::cout << "  squared lengths " << hyper::norm_sq(d.anticommutator) << " + "
            << hyper::norm_sq(d.cross3) << " + " << hyper::norm_sq(d.associator) << " = "
            << hyper::norm_sq(u1) * hyper::norm_sq(u2) * hyper::norm_sq(u3) << "\n\n";
}

}  // namespace

int main() {
  const auto e = [](std::size_t k) { return HNum<Rational>::basis(8, k); };
  show(e(1), e(2), e(4));

  HNum<Rational> a{1, 2, 0, -1, 3, 0, 1, 2};
  HNum<Rational> b{0, 1, 1, 0, -2, 1, 0, 1};
  HNum<Rational> c{2, 0, -1, 1, 0, 3, -1, 0};
  show(a, b, c);

  // The product of three factors in the other conventional form.
  std::cout << "(a b) c == okubo_rhs(a, b, c): " << std::boolalpha
            << (mul(mul(a, b), c) == hyper::okubo_rhs(a, b, c)) << '\n';
}
