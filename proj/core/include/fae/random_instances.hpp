#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fae/convex_body.hpp"
#include "fae/exact_linalg.hpp"
#include "fae/statement.hpp"

namespace fae {

/// Seeded generator whose draws are identical on every platform
/// (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

IntVector random_vector(Rng& rng, std::size_t n, std::int64_t lo, std::int64_t hi);
IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi);
/// Redraws until the determinant is nonzero and |det| <= max_det.
IntMatrix random_nonsingular(Rng& rng, std::size_t m, std::int64_t lo, std::int64_t hi, const Int& max_det);

/// Integral box with lo in [-range, range] and widths in [0, max_width].
BodyPtr random_box(Rng& rng, std::size_t m, std::int64_t range, std::int64_t max_width);
/// A random box cut by one or two halfspaces through points of the box.
BodyPtr random_polytope(Rng& rng, std::size_t m, std::int64_t range, std::int64_t max_width);
/// Center with half-integral coordinates, radius p/q in [1, 3].
BodyPtr random_ball(Rng& rng, std::size_t m, std::int64_t range);

enum class BodyKind { box, polytope, ball };

/// W with m rows, 1..max_n columns and entries in [-delta, delta].
InputStatement random_statement(Rng& rng, BodyKind kind, std::size_t m, std::size_t max_n, std::int64_t delta,
                                std::int64_t range, std::int64_t max_width);

/// Rank-m matrix with entries in [-delta, delta] whose cone is pointed.
IntMatrix random_pointed(Rng& rng, std::size_t m, std::size_t n, std::int64_t delta);

}  // namespace fae
