#include <gtest/gtest.h>

#include "fae/convex_body.hpp"
#include "fae/random_instances.hpp"
#include "oracles.hpp"

namespace fae {
namespace {

RatVector random_point(Rng& rng, std::size_t m, std::int64_t range, std::int64_t den) {
  RatVector x(m);
  for (auto& v : x) v = Rat(rng.uniform(-range * den, range * den), den);
  return x;
}

BodyPtr triangle_body() {
  HPolyhedron p(2);
  p.add(IntVector{1, 1}, Int(1));
  p.add(IntVector{-1, 0}, Int(0));
  p.add(IntVector{0, -1}, Int(0));
  return make_polytope(std::move(p));
}

HPolyhedron halfspace_ge(std::size_t dim, std::size_t i, const Rat& v) {
  HPolyhedron p(dim);
  RatVector a(dim, Rat(0));
  a[i] = -1;
  p.add(a, -v);
  return p;
}

TEST(IntegerPointIn, BoxMeetsHalfspace) {
  auto q = make_box(IntVector{0, 0}, IntVector{2, 2});
  auto b = integer_point_in(*q, halfspace_ge(2, 0, Rat(3, 2)));
  ASSERT_TRUE(b);
  EXPECT_EQ((*b)[0], 2);
  EXPECT_TRUE(q->contains(*b));
}

TEST(IntegerPointIn, SmallBallHasNoLatticePoint) {
  auto q = make_ball({Rat(1, 2), Rat(1, 2)}, Rat(1, 4));
  EXPECT_FALSE(integer_point_in(*q, HPolyhedron(2)));
}

TEST(IntegerPointIn, TriangleCorner) {
  auto b = integer_point_in(*triangle_body(), halfspace_ge(2, 0, Rat(1)));
  ASSERT_TRUE(b);
  EXPECT_EQ(*b, (IntVector{1, 0}));
}

TEST(IntegerPointIn, MatchesNaiveScan) {
  Rng rng(83);
  for (int k = 0; k < 150; ++k) {
    std::size_t m = 1 + rng.index(2);
    BodyPtr q;
    switch (k % 3) {
      case 0: q = random_box(rng, m, 3, 4); break;
      case 1: q = random_polytope(rng, m, 3, 4); break;
      default: q = random_ball(rng, m, 3); break;
    }
    HPolyhedron p(m);
    p.add(random_vector(rng, m, -2, 2), Int(rng.uniform(-3, 3)));
    std::optional<IntVector> naive;
    testing::for_each_in_cube(m, -12, 12, [&](const IntVector& x) {
      if (!naive && q->contains(x) && p.contains(x)) naive = x;
    });
    EXPECT_EQ(integer_point_in(*q, p), naive);
  }
}

TEST(ConvexBody, OuterBoxContainsMembersAndMidpointsStayInside) {
  Rng rng(89);
  for (int k = 0; k < 30; ++k) {
    std::size_t m = 1 + rng.index(2);
    BodyPtr q;
    switch (k % 3) {
      case 0: q = random_box(rng, m, 3, 4); break;
      case 1: q = random_polytope(rng, m, 3, 4); break;
      default: q = random_ball(rng, m, 3); break;
    }
    std::vector<RatVector> members;
    for (int t = 0; t < 2000 && members.size() < 40; ++t) {
      RatVector x = random_point(rng, m, 8, 4);
      if (q->contains(x)) members.push_back(x);
    }
    RatBox box = q->outer_box();
    HPolyhedron relax = q->relaxation();
    for (const auto& x : members) {
      for (std::size_t i = 0; i < m; ++i) {
        EXPECT_LE(box.lo[i], x[i]);
        EXPECT_LE(x[i], box.hi[i]);
      }
      EXPECT_TRUE(relax.contains(x));
    }
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        for (int w = 1; w < 4; ++w) {
          RatVector c(m);
          for (std::size_t i = 0; i < m; ++i) c[i] = (members[a][i] * w + members[b][i] * (4 - w)) / 4;
          EXPECT_TRUE(q->contains(c));
        }
  }
}

TEST(ConvexBody, BallMembershipIsExact) {
  auto q = make_ball({Rat(0), Rat(0)}, Rat(5));
  EXPECT_TRUE(q->contains(IntVector{3, 4}));
  EXPECT_FALSE(q->contains(RatVector{Rat(3), Rat(4) + Rat(1, 1000000)}));
}

TEST(ConvexBody, UnboundedPolytopeRejected) {
  HPolyhedron p(2);
  p.add(IntVector{-1, 0}, Int(0));
  EXPECT_THROW(make_polytope(std::move(p)), UnboundedBody);
}

TEST(AffinePreimage, IdentityKeepsMembership) {
  Rng rng(97);
  auto q = random_ball(rng, 2, 3);
  auto id = affine_preimage(q, IntMatrix::identity(2), IntVector{0, 0});
  for (int t = 0; t < 100; ++t) {
    RatVector x = random_point(rng, 2, 8, 3);
    EXPECT_EQ(id->contains(x), q->contains(x));
  }
}

TEST(AffinePreimage, ScaledBox) {
  auto q = make_box(IntVector{0, 0}, IntVector{2, 2});
  auto s = affine_preimage(q, IntMatrix{{2, 0}, {0, 2}}, IntVector{0, 0});
  Rng rng(101);
  for (int t = 0; t < 200; ++t) {
    RatVector x = random_point(rng, 2, 2, 4);
    bool in_unit = x[0] >= 0 && x[0] <= 1 && x[1] >= 0 && x[1] <= 1;
    EXPECT_EQ(s->contains(x), in_unit);
  }
  RatBox box = s->outer_box();
  EXPECT_EQ(box.lo, (RatVector{0, 0}));
  EXPECT_EQ(box.hi, (RatVector{1, 1}));
}

TEST(AffinePreimage, BallUnderUnimodularMapMatchesSubstitution) {
  Rng rng(103);
  for (int k = 0; k < 20; ++k) {
    auto q = random_ball(rng, 2, 3);
    IntMatrix t = random_nonsingular(rng, 2, -2, 2, Int(1));
    IntVector shift = random_vector(rng, 2, -2, 2);
    auto pre = affine_preimage(q, t, shift);
    for (int s = 0; s < 50; ++s) {
      RatVector x = random_point(rng, 2, 6, 2);
      RatVector y = multiply(t, x);
      for (std::size_t i = 0; i < 2; ++i) y[i] += shift[i];
      EXPECT_EQ(pre->contains(x), q->contains(y));
    }
    // Outer box and relaxation still contain every member.
    RatBox box = pre->outer_box();
    HPolyhedron relax = pre->relaxation();
    testing::for_each_in_cube(2, -15, 15, [&](const IntVector& z) {
      if (!pre->contains(z)) return;
      EXPECT_TRUE(relax.contains(z));
      for (std::size_t i = 0; i < 2; ++i) {
        EXPECT_LE(box.lo[i], Rat(z[i]));
        EXPECT_LE(Rat(z[i]), box.hi[i]);
      }
    });
  }
}

TEST(AffinePreimage, Composition) {
  Rng rng(107);
  for (int k = 0; k < 20; ++k) {
    auto q = random_polytope(rng, 2, 3, 5);
    IntMatrix t1 = random_nonsingular(rng, 2, -2, 2, Int(4)), t2 = random_nonsingular(rng, 2, -2, 2, Int(4));
    IntVector s1 = random_vector(rng, 2, -2, 2), s2 = random_vector(rng, 2, -2, 2);
    auto twice = affine_preimage(affine_preimage(q, t1, s1), t2, s2);
    IntVector s = add(multiply(t1, s2), s1);
    auto once = affine_preimage(q, t1 * t2, s);
    for (int p = 0; p < 100; ++p) {
      RatVector x = random_point(rng, 2, 4, 3);
      EXPECT_EQ(twice->contains(x), once->contains(x));
    }
  }
}

TEST(AffinePreimage, SingularThrows) {
  auto q = make_box(IntVector{0, 0}, IntVector{1, 1});
  EXPECT_THROW(affine_preimage(q, IntMatrix{{1, 1}, {1, 1}}, IntVector{0, 0}), SingularMatrix);
}

TEST(Clip, MembershipIsConjunction) {
  auto q = make_box(IntVector{-2, -2}, IntVector{2, 2});
  auto c = clip(q, halfspace_ge(2, 1, Rat(1)));
  EXPECT_TRUE(c->contains(IntVector{0, 1}));
  EXPECT_FALSE(c->contains(IntVector{0, 0}));
  EXPECT_FALSE(c->contains(IntVector{0, 3}));
  EXPECT_EQ(c->outer_box().lo[1], 1);
}

}  // namespace
}  // namespace fae
