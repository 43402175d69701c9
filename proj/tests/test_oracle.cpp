#include <gtest/gtest.h>

#include "fae/oracle.hpp"
#include "fae/random_instances.hpp"
#include "oracles.hpp"

namespace fae {
namespace {

void expect_witness(const IntMatrix& w, const FeasibilityCertificate& c) {
  ASSERT_TRUE(c.feasible);
  IntVector wx = multiply(w, c.x);
  for (std::size_t i = 0; i < wx.size(); ++i) EXPECT_LE(wx[i], c.b[i]);
}

TEST(IlpFeasible, DivisibleRow) {
  IntMatrix w{{2}};
  auto c = ilp_feasible(w, {5});
  expect_witness(w, c);
}

TEST(IlpFeasible, EmptyInterval) {
  auto c = ilp_feasible(IntMatrix{{-1}, {1}}, {-1, 0});
  EXPECT_FALSE(c.feasible);
  EXPECT_FALSE(c.lp_feasible);
}

TEST(IlpFeasible, SemigroupGap) {
  // 3 a + 5 b = 7 with a, b >= 0.
  IntMatrix w{{3, 5}, {-3, -5}, {-1, 0}, {0, -1}};
  auto c = ilp_feasible(w, {7, -7, 0, 0});
  EXPECT_FALSE(c.feasible);
  EXPECT_TRUE(c.lp_feasible);
  EXPECT_EQ(c.search_radius, proximity_radius(4, Int(5)));
  auto d = ilp_feasible(w, {8, -8, 0, 0});
  expect_witness(w, d);
  EXPECT_EQ(d.x, (IntVector{1, 1}));
}

TEST(IlpFeasible, ParityLattice) {
  // x1 + x2 = 1 and x1 - x2 = 0 has a rational but no integer solution.
  IntMatrix w{{1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
  auto c = ilp_feasible(w, {1, -1, 0, 0});
  EXPECT_TRUE(c.lp_feasible);
  EXPECT_FALSE(c.feasible);
}

TEST(IlpFeasible, AgreesWithBoxScan) {
  Rng rng(127);
  for (int k = 0; k < 300; ++k) {
    std::size_t m = 1 + rng.index(2), n = 1 + rng.index(3);
    IntMatrix w = random_matrix(rng, m, n, -2, 2);
    IntVector b = random_vector(rng, m, -4, 4);
    auto c = ilp_feasible(w, b);
    bool scan = testing::scan_feasible(w, b, 8);
    if (scan) EXPECT_TRUE(c.feasible);
    if (c.feasible) {
      expect_witness(w, c);
      if (inf_norm(c.x) <= 8) EXPECT_TRUE(scan);
    }
  }
}

TEST(IlpFeasible, BudgetGuard) {
  IntMatrix w{{3, 5}, {-3, -5}, {-1, 0}, {0, -1}};
  OracleOptions o;
  o.node_budget = 1;
  EXPECT_THROW(ilp_feasible(w, {7, -7, 0, 0}, o), BudgetExceeded);
}

TEST(ProximityRadius, FloorsDelta) {
  EXPECT_EQ(proximity_radius(1, Int(0)), 3);
  EXPECT_EQ(proximity_radius(2, Int(1)), 50);
}

TEST(DecideNaive, IdentityRowIsValid) {
  auto v = decide_naive({IntMatrix{{1}}, make_box(IntVector{0}, IntVector{5})});
  EXPECT_TRUE(v.valid());
  EXPECT_FALSE(v.witness);
}

TEST(DecideNaive, EmptyIntervalCounterexample) {
  auto v = decide_naive({IntMatrix{{-1}, {1}}, make_box(IntVector{-2, -2}, IntVector{2, 2})});
  ASSERT_FALSE(v.valid());
  const IntVector& b = *v.witness;
  EXPECT_GT(-b[0], b[1]);
  EXPECT_EQ(b, (IntVector{-2, -2}));
  ASSERT_TRUE(v.certificate);
  EXPECT_FALSE(v.certificate->feasible);
}

TEST(DecideNaive, MatchesBoxScanPerPoint) {
  Rng rng(131);
  for (int k = 0; k < 60; ++k) {
    auto s = random_statement(rng, BodyKind::box, 1 + rng.index(2), 2, 2, 3, 3);
    std::optional<IntVector> expected;
    testing::for_each_in_cube(s.m(), -6, 6, [&](const IntVector& b) {
      if (!expected && s.q->contains(b) && !testing::scan_feasible(s.w, b, 10)) expected = b;
    });
    auto v = decide_naive(s);
    EXPECT_EQ(v.witness, expected);
  }
}

TEST(DecideOrthantNaive, Examples) {
  auto q = make_box(IntVector{0, 0}, IntVector{3, 3});
  EXPECT_EQ(decide_orthant_naive(*q, {{0, 1}, {1, 0}}), (IntVector{0, 0}));
  EXPECT_FALSE(decide_orthant_naive(*q, {{0, 0}}));
  EXPECT_EQ(decide_orthant_naive(*make_box(IntVector{2, -1}, IntVector{3, 3}), {}), (IntVector{2, -1}));
}

TEST(DecideOrthantNaive, ScanBudget) {
  OracleOptions o;
  o.scan_budget = 3;
  auto q = make_box(IntVector{0, 0}, IntVector{3, 3});
  EXPECT_THROW(decide_orthant_naive(*q, {{0, 0}}, o), BudgetExceeded);
}

}  // namespace
}  // namespace fae
