#include <gtest/gtest.h>

#include "support.hpp"

namespace hyper {
namespace {

using testing::e;
using testing::Q;
using testing::Sampler;

TEST(BuildTable, Invariants) {
  for (std::size_t d : {1, 2, 4, 8}) {
    const auto t = build_table(d);
    ASSERT_EQ(t.dim(), d);
    for (std::size_t i = 0; i < d; ++i) {
      EXPECT_EQ(t.entry(0, i), (SignedBasis{+1, i}));
      EXPECT_EQ(t.entry(i, 0), (SignedBasis{+1, i}));
      if (i > 0) {
        EXPECT_EQ(t.entry(i, i), (SignedBasis{-1, 0}));
      }
      for (std::size_t j = 1; j < d; ++j) {
        if (i == 0 || i == j) continue;
        auto ij = t.entry(i, j), ji = t.entry(j, i);
        EXPECT_EQ(ij.index, ji.index);
        EXPECT_EQ(ij.sign, -ji.sign) << i << "," << j;
      }
    }
  }
}

TEST(BuildTable, OctonionEntries) {
  const auto t = build_table(8);
  EXPECT_EQ(t.entry(1, 2), (SignedBasis{+1, 3}));
  EXPECT_EQ(t.entry(1, 1), (SignedBasis{-1, 0}));
  EXPECT_EQ(t.entry(0, 5), (SignedBasis{+1, 5}));
  EXPECT_EQ(t.entry(1, 4), (SignedBasis{+1, 5}));
  EXPECT_EQ(t.entry(3, 4), (SignedBasis{+1, 7}));
}

TEST(BuildTable, RejectsInvalidDimension) {
  EXPECT_THROW(build_table(3), dimension_error);
  EXPECT_THROW(build_table(16), dimension_error);
  EXPECT_THROW((void)build_table(4).entry(4, 0), std::out_of_range);
}

TEST(MulTable, AgreesWithDoublingOnAllBasisPairs) {
  for (std::size_t d : {1, 2, 4, 8}) {
    const auto t = build_table(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        ASSERT_EQ(mul_table(e(i, d), e(j, d), t), mul(e(i, d), e(j, d))) << i << "," << j;
  }
}

TEST(MulTable, AgreesWithDoublingOnRandomInputs) {
  Sampler s(7);
  for (std::size_t d : {1, 2, 4, 8}) {
    const auto t = build_table(d);
    for (int k = 0; k < 1000; ++k) {
      auto a = s.next(d), b = s.next(d);
      ASSERT_EQ(mul_table(a, b, t), mul(a, b));
    }
  }
}

TEST(MulTable, UnitAndMismatch) {
  const auto t = build_table(8);
  Sampler s;
  auto u = s.next(8);
  EXPECT_EQ(mul_table(unit<Q>(8), u, t), u);
  EXPECT_THROW(mul_table(e(1, 4), e(1, 4), t), dimension_error);
}

TEST(FormatTable, Dim2) {
  EXPECT_EQ(format_table(build_table(2)),
            "    *   i0   e1\n"
            "   i0  +i0  +e1\n"
            "   e1  +e1  -i0\n");
}

TEST(Gram, Examples) {
  const auto g = gram(e(1), e(2), e(4));
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) EXPECT_EQ(g(a, b), a == b ? 1 : 0);
  EXPECT_EQ(det3(g), 1);

  const auto gi = gram_im(unit<Q>(8) + e(1), e(2), e(3));
  EXPECT_EQ(gi.entries, gram(e(1), e(2), e(3)).entries);

  Sampler s;
  auto u = s.next(8), v = s.next(8);
  EXPECT_EQ(det3(gram(u, u, v)), 0);
}

TEST(Det3, CofactorExpansion) {
  GramMatrix<Q> m{{{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}}}};
  // 2(12-1) - 1(4-0) + 0 = 18
  EXPECT_EQ(det3(m), 18);
}

TEST(Det3, GramMatricesArePositiveSemidefinite) {
  Sampler s(11);
  for (std::size_t d : {1, 2, 4, 8}) {
    for (int t = 0; t < 500; ++t) {
      auto a = s.next(d), b = s.next(d), c = s.next(d);
      ASSERT_GE(det3(gram(a, b, c)), 0);
      ASSERT_GE(det3(gram_im(a, b, c)), 0);
      if (d < 3) {
        ASSERT_EQ(det3(gram(a, b, c)), 0);  // rank at most d
      }
    }
  }
}

TEST(Det2Gram, CauchySchwarz) {
  Sampler s(3);
  for (int t = 0; t < 200; ++t) ASSERT_GE(det2_gram(s.next(8), s.next(8)), 0);
  EXPECT_EQ(det2_gram(e(1), e(2)), 1);
}

}  // namespace
}  // namespace hyper
