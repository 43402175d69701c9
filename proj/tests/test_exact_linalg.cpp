#include <gtest/gtest.h>

#include "fae/lattice.hpp"
#include "fae/random_instances.hpp"
#include "oracles.hpp"

namespace fae {
namespace {

using testing::adjugate;
using testing::cofactor_det;
using testing::cramer_in_lattice;

TEST(MatMul, IdentityTimesColumn) {
  IntMatrix a = IntMatrix::identity(2);
  IntMatrix b{{3}, {5}};
  EXPECT_EQ(a * b, b);
}

TEST(MatMul, HandProduct) {
  IntMatrix a{{2, 1}, {0, 1}};
  IntMatrix b{{1}, {1}};
  EXPECT_EQ(a * b, (IntMatrix{{3}, {1}}));
}

TEST(MatMul, AdjugateGivesDetTimesIdentity) {
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    IntMatrix a = random_matrix(rng, 3, 3, -4, 4);
    IntMatrix p = a * adjugate(a);
    Int d = cofactor_det(a);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(p(i, j), i == j ? d : Int(0));
  }
}

TEST(MatMul, InnerDimensionMismatchThrows) {
  IntMatrix a(2, 3), b(2, 2);
  EXPECT_THROW(a * b, DimensionMismatch);
}

TEST(Det, Triangular) { EXPECT_EQ(det(IntMatrix{{1, 1}, {0, 2}}), 2); }

TEST(Det, Identity) {
  for (std::size_t m = 1; m <= 5; ++m) EXPECT_EQ(det(IntMatrix::identity(m)), 1);
}

TEST(Det, MatchesCofactorExpansion) {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    IntMatrix a = random_matrix(rng, 4, 4, -3, 3);
    EXPECT_EQ(det(a), cofactor_det(a));
  }
}

TEST(Det, FrozenFourByFour) {
  // Value computed by cofactor expansion.
  IntMatrix a{{2, -3, 1, 0}, {1, 2, -1, 3}, {0, 1, 3, -2}, {-3, 0, 2, 1}};
  EXPECT_EQ(cofactor_det(a), 148);
  EXPECT_EQ(det(a), 148);
}

TEST(Det, ProductRule) {
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    std::size_t m = 1 + rng.index(3);
    IntMatrix a = random_matrix(rng, m, m, -3, 3), b = random_matrix(rng, m, m, -3, 3);
    EXPECT_EQ(det(a * b), det(a) * det(b));
  }
}

TEST(Det, NonSquareThrows) { EXPECT_THROW(det(IntMatrix(2, 3)), DimensionMismatch); }

TEST(Det, LargeEntriesStayExact) {
  IntMatrix a{{Int("1000000000000000000000"), 1}, {1, Int("1000000000000000000000")}};
  EXPECT_EQ(det(a), Int("1000000000000000000000000000000000000000000") - 1);
}

TEST(Inverse, DiagonalTwo) {
  RatMatrix x = inverse(IntMatrix{{2, 0}, {0, 2}});
  EXPECT_EQ(x(0, 0), Rat(1, 2));
  EXPECT_EQ(x(0, 1), 0);
  EXPECT_EQ(x(1, 0), 0);
  EXPECT_EQ(x(1, 1), Rat(1, 2));
}

TEST(Inverse, Identity) { EXPECT_EQ(inverse(IntMatrix::identity(3)), to_rat(IntMatrix::identity(3))); }

TEST(Inverse, ProductIsIdentity) {
  Rng rng(17);
  for (int k = 0; k < 100; ++k) {
    IntMatrix a = random_nonsingular(rng, 3, -5, 5, Int(1000));
    EXPECT_EQ(a * inverse(a), to_rat(IntMatrix::identity(3)));
  }
}

TEST(Inverse, SingularThrows) { EXPECT_THROW(inverse(IntMatrix{{1, 2}, {2, 4}}), SingularMatrix); }

TEST(Solve, MatchesCramer) {
  Rng rng(19);
  for (int k = 0; k < 100; ++k) {
    IntMatrix a = random_nonsingular(rng, 3, -4, 4, Int(500));
    IntVector v = random_vector(rng, 3, -9, 9);
    EXPECT_EQ(solve(a, v), testing::cramer_solve(a, v));
  }
}

void expect_hnf_invariants(const IntMatrix& a, const HnfResult& r) {
  const std::size_t m = a.rows();
  EXPECT_EQ(a * r.U, r.H);
  EXPECT_EQ(abs(det(r.U)), 1);
  for (std::size_t i = 0; i < m; ++i) {
    EXPECT_GT(r.H(i, i), 0);
    for (std::size_t j = i + 1; j < r.H.cols(); ++j) EXPECT_EQ(r.H(i, j), 0);
    for (std::size_t j = 0; j < i; ++j) {
      EXPECT_GE(r.H(i, j), 0);
      EXPECT_LT(r.H(i, j), r.H(i, i));
    }
  }
}

TEST(Hnf, TwoByTwo) {
  IntMatrix a{{1, 1}, {0, 2}};
  HnfResult r = hnf(a);
  expect_hnf_invariants(a, r);
  EXPECT_EQ(r.basis(), (IntMatrix{{1, 0}, {0, 2}}));
  // Both generate the same lattice.
  for (const auto& c : r.basis().columns()) EXPECT_TRUE(cramer_in_lattice(a, c));
  for (const auto& c : a.columns()) EXPECT_TRUE(cramer_in_lattice(r.basis(), c));
}

TEST(Hnf, Identity) {
  HnfResult r = hnf(IntMatrix::identity(3));
  EXPECT_EQ(r.H, IntMatrix::identity(3));
  EXPECT_EQ(r.U, IntMatrix::identity(3));
}

TEST(Hnf, GcdRow) {
  IntMatrix a{{3, 5}};
  HnfResult r = hnf(a);
  expect_hnf_invariants(a, r);
  EXPECT_EQ(r.basis(), (IntMatrix{{1}}));
}

TEST(Hnf, RankDeficientThrows) { EXPECT_THROW(hnf(IntMatrix{{1, 2}, {2, 4}}), RankDeficient); }

TEST(Hnf, WideRandomInvariantsAndLattice) {
  Rng rng(23);
  for (int k = 0; k < 100; ++k) {
    std::size_t m = 1 + rng.index(3), n = m + rng.index(3);
    IntMatrix a = random_matrix(rng, m, n, -5, 5);
    if (rank(a) != m) continue;
    HnfResult r = hnf(a);
    expect_hnf_invariants(a, r);
    // Lattice of the columns of a equals that of the triangular basis.
    Lattice l(r.basis());
    for (const auto& c : a.columns()) EXPECT_TRUE(l.contains(c));
  }
}

TEST(PrimitiveNormal, AxisColumn) {
  auto a = primitive_normal(IntMatrix{{1}, {0}});
  ASSERT_TRUE(a);
  EXPECT_EQ(*a, (IntVector{0, 1}));
}

TEST(PrimitiveNormal, Diagonal) {
  auto a = primitive_normal(IntMatrix{{1}, {1}});
  ASSERT_TRUE(a);
  EXPECT_EQ(*a, (IntVector{1, -1}));
}

TEST(PrimitiveNormal, DegenerateColumn) { EXPECT_FALSE(primitive_normal(IntMatrix{{0}, {0}})); }

TEST(PrimitiveNormal, RandomIsPrimitiveAndOrthogonal) {
  Rng rng(29);
  for (int k = 0; k < 200; ++k) {
    std::size_t m = 2 + rng.index(3);
    IntMatrix s = random_matrix(rng, m, m - 1, -5, 5);
    auto a = primitive_normal(s);
    if (rank(s) != m - 1) {
      EXPECT_FALSE(a);
      continue;
    }
    ASSERT_TRUE(a);
    Int g = 0;
    for (const auto& v : *a) g = gcd(g, v);
    EXPECT_EQ(g, 1);
    for (const auto& c : s.columns()) EXPECT_EQ(dot(*a, c), 0);
  }
}

TEST(Scalars, FloorCeilAndParsing) {
  EXPECT_EQ(floor(Rat(-3, 2)), -2);
  EXPECT_EQ(ceil(Rat(-3, 2)), -1);
  EXPECT_EQ(floor_div(Int(-7), Int(2)), -4);
  EXPECT_EQ(parse_rational("-6/4"), Rat(-3, 2));
  EXPECT_EQ(to_string(Rat(-3, 2)), "-3/2");
  EXPECT_EQ(to_string(Rat(4)), "4");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
}

}  // namespace
}  // namespace fae
