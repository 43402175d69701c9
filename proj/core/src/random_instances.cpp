#include "fae/random_instances.hpp"

#include <limits>

#include "fae/polyhedral.hpp"

namespace fae {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw DimensionMismatch("empty random range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % span);
}

IntVector random_vector(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  IntVector v(n);
  for (auto& x : v) x = rng.uniform(lo, hi);
  return v;
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi) {
  IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng.uniform(lo, hi);
  return a;
}

IntMatrix random_nonsingular(Rng& rng, std::size_t m, std::int64_t lo, std::int64_t hi, const Int& max_det) {
  while (true) {
    IntMatrix a = random_matrix(rng, m, m, lo, hi);
    Int d = abs(det(a));
    if (d != 0 && d <= max_det) return a;
  }
}

BodyPtr random_box(Rng& rng, std::size_t m, std::int64_t range, std::int64_t max_width) {
  IntVector lo(m), hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t l = rng.uniform(-range, range);
    lo[i] = l;
    hi[i] = l + rng.uniform(0, max_width);
  }
  return make_box(lo, hi);
}

BodyPtr random_polytope(Rng& rng, std::size_t m, std::int64_t range, std::int64_t max_width) {
  HPolyhedron p(m);
  IntVector lo(m), hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::int64_t l = rng.uniform(-range, range);
    lo[i] = l;
    hi[i] = l + rng.uniform(1, max_width);
    p.add_bounds(i, Rat(lo[i]), Rat(hi[i]));
  }
  const std::size_t cuts = 1 + rng.index(2);
  for (std::size_t k = 0; k < cuts; ++k) {
    IntVector a = random_vector(rng, m, -3, 3);
    if (std::all_of(a.begin(), a.end(), [](const Int& v) { return v == 0; })) a[0] = 1;
    // Through a random rational point of the box, offset by a random half.
    RatVector x(m);
    for (std::size_t i = 0; i < m; ++i) x[i] = Rat(lo[i]) + Rat(hi[i] - lo[i]) * Rat(rng.uniform(0, 4), 4);
    p.add(to_rat(a), dot(to_rat(a), x) + Rat(rng.uniform(0, 2), 2));
  }
  return make_polytope(std::move(p));
}

BodyPtr random_ball(Rng& rng, std::size_t m, std::int64_t range) {
  RatVector c(m);
  for (auto& x : c) x = Rat(rng.uniform(-2 * range, 2 * range), 2);
  std::int64_t q = rng.uniform(1, 4);
  Rat r(rng.uniform(q, 3 * q), q);
  return make_ball(std::move(c), std::move(r));
}

InputStatement random_statement(Rng& rng, BodyKind kind, std::size_t m, std::size_t max_n, std::int64_t delta,
                                std::int64_t range, std::int64_t max_width) {
  const std::size_t n = 1 + rng.index(max_n);
  InputStatement s;
  s.w = random_matrix(rng, m, n, -delta, delta);
  switch (kind) {
    case BodyKind::box:
      s.q = random_box(rng, m, range, max_width);
      break;
    case BodyKind::polytope:
      s.q = random_polytope(rng, m, range, max_width);
      break;
    case BodyKind::ball:
      s.q = random_ball(rng, m, range);
      break;
  }
  return s;
}

IntMatrix random_pointed(Rng& rng, std::size_t m, std::size_t n, std::int64_t delta) {
  while (true) {
    IntMatrix w = random_matrix(rng, m, n, -delta, delta);
    bool zero_col = false;
    for (const auto& c : w.columns())
      zero_col = zero_col || std::all_of(c.begin(), c.end(), [](const Int& v) { return v == 0; });
    if (zero_col || rank(w) != m) continue;
    HPolyhedron p(m);
    for (const auto& c : w.columns()) {
      IntVector neg = c;
      for (auto& v : neg) v = -v;
      p.add(neg, Int(-1));
    }
    if (fm_project_feasible(p)) return w;
  }
}

}  // namespace fae
