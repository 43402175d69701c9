#include <gtest/gtest.h>

#include "fae/oracle.hpp"
#include "fae/orthant_solver.hpp"
#include "fae/random_instances.hpp"
#include "oracles.hpp"

namespace fae {
namespace {

bool dominated(const IntVector& b, const std::vector<IntVector>& shifts) {
  for (const auto& c : shifts) {
    bool le = true;
    for (std::size_t i = 0; i < b.size(); ++i) le = le && c[i] <= b[i];
    if (le) return true;
  }
  return false;
}

std::optional<IntVector> naive_orthant(const ConvexBody& q, const std::vector<IntVector>& shifts, long r) {
  std::optional<IntVector> out;
  testing::for_each_in_cube(q.dim(), -r, r, [&](const IntVector& b) {
    if (!out && q.contains(b) && !dominated(b, shifts)) out = b;
  });
  return out;
}

TEST(Arrangement, TwoShiftThresholds) {
  auto a = build_arrangement({{0, 1}, {1, 0}}, 2);
  EXPECT_EQ(a.thresholds[0], (std::vector<Int>{0, 1}));
  EXPECT_EQ(a.thresholds[1], (std::vector<Int>{0, 1}));
  EXPECT_EQ(a.cell_count(), 9);
}

TEST(Arrangement, EmptyShiftSetIsOneCell) {
  auto a = build_arrangement({}, 3);
  for (const auto& t : a.thresholds) EXPECT_TRUE(t.empty());
  EXPECT_EQ(a.cell_count(), 1);
}

TEST(Arrangement, Deduplicates) {
  auto a = build_arrangement({{2, 2}, {2, 5}}, 2);
  EXPECT_EQ(a.thresholds[0], (std::vector<Int>{2}));
  EXPECT_EQ(a.thresholds[1], (std::vector<Int>{2, 5}));
}

TEST(CellRepresentative, Examples) {
  Arrangement one{{{0}}};
  EXPECT_EQ(cell_representative({0}, one), (RatVector{-1}));
  Arrangement two{{{0, 1}}};
  EXPECT_EQ(cell_representative({1}, two), (RatVector{0}));
  EXPECT_EQ(cell_representative({2}, two), (RatVector{2}));
  Arrangement none{{{}}};
  EXPECT_EQ(cell_representative({0}, none), (RatVector{0}));
}

TEST(CoveredByUnion, Examples) {
  EXPECT_TRUE(covered_by_union({0, 0}, {{0, 0}}));
  EXPECT_FALSE(covered_by_union({-1, 5}, {{0, 0}}));
  EXPECT_FALSE(covered_by_union({0, 0}, {{0, 1}, {1, 0}}));
  EXPECT_FALSE(covered_by_union({0, 0}, {}));
}

TEST(CoveredByUnion, ConstantOnEachCell) {
  Rng rng(109);
  for (int k = 0; k < 100; ++k) {
    std::size_t m = 1 + rng.index(3);
    std::vector<IntVector> shifts;
    const std::size_t count = rng.index(6);
    for (std::size_t s = 0; s < count; ++s) shifts.push_back(random_vector(rng, m, -4, 4));
    auto arr = build_arrangement(shifts, m);
    Cell cell(m);
    for (std::size_t i = 0; i < m; ++i) cell[i] = rng.index(arr.thresholds[i].size() + 1);
    const bool expected = covered_by_union(cell_representative(cell, arr), shifts);
    for (int p = 0; p < 100; ++p) {
      RatVector x(m);
      for (std::size_t i = 0; i < m; ++i) {
        const auto& t = arr.thresholds[i];
        const std::size_t j = cell[i];
        // Strictly inside (t[j-1] - 1/2, t[j] - 1/2), open ends extended by 5.
        Rat lo = j == 0 ? (t.empty() ? Rat(-5) : Rat(t.front()) - 6) : Rat(t[j - 1]) - Rat(1, 2);
        Rat hi = j == t.size() ? (t.empty() ? Rat(5) : Rat(t.back()) + 5) : Rat(t[j]) - Rat(1, 2);
        x[i] = lo + (hi - lo) * Rat(rng.uniform(1, 99), 100);
      }
      EXPECT_EQ(covered_by_union(x, shifts), expected);
    }
  }
}

TEST(Solve, TwoShiftCounterExample) {
  auto q = make_box(IntVector{0, 0}, IntVector{3, 3});
  auto b = solve(*q, {{0, 1}, {1, 0}});
  ASSERT_TRUE(b);
  EXPECT_EQ(*b, (IntVector{0, 0}));
}

TEST(Solve, OriginShiftCoversBox) {
  auto q = make_box(IntVector{0, 0}, IntVector{3, 3});
  EXPECT_FALSE(solve(*q, {{0, 0}}));
}

TEST(Solve, EmptyShiftSetReportsFirstPoint) {
  auto q = make_box(IntVector{0, 0}, IntVector{3, 3});
  auto b = solve(*q, {});
  ASSERT_TRUE(b);
  EXPECT_EQ(*b, (IntVector{0, 0}));
}

TEST(Solve, DimensionMismatchThrows) {
  auto q = make_box(IntVector{0, 0}, IntVector{3, 3});
  EXPECT_THROW(solve(*q, {{0, 0, 0}}), DimensionMismatch);
}

TEST(Solve, MatchesNaiveScanWithAndWithoutPruning) {
  Rng rng(113);
  for (int k = 0; k < 300; ++k) {
    std::size_t m = 1 + rng.index(2);
    BodyPtr q;
    switch (k % 3) {
      case 0: q = random_box(rng, m, 5, 5); break;
      case 1: q = random_polytope(rng, m, 5, 5); break;
      default: q = random_ball(rng, m, 4); break;
    }
    std::vector<IntVector> shifts;
    const std::size_t count = rng.index(7);
    for (std::size_t s = 0; s < count; ++s) shifts.push_back(random_vector(rng, m, -6, 6));
    auto naive = naive_orthant(*q, shifts, 12);
    auto pruned = solve(*q, shifts, SolveOptions{true});
    auto full = solve(*q, shifts, SolveOptions{false});
    EXPECT_EQ(pruned.has_value(), naive.has_value());
    EXPECT_EQ(full.has_value(), naive.has_value());
    for (const auto& b : {pruned, full}) {
      if (!b) continue;
      EXPECT_TRUE(q->contains(*b));
      EXPECT_FALSE(dominated(*b, shifts));
    }
    EXPECT_EQ(decide_orthant_naive(*q, shifts), naive);
  }
}

TEST(Solve, FilterSkipsRejectedCandidates) {
  auto q = make_box(IntVector{0, 0}, IntVector{3, 3});
  SolveStats stats;
  auto b = solve(
      *q, {{0, 1}, {1, 0}}, [](const IntVector& v) { return v != IntVector{0, 0}; }, {}, &stats);
  EXPECT_FALSE(b);
  EXPECT_EQ(stats.candidates_rejected, 1u);
}

}  // namespace
}  // namespace fae
