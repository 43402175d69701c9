#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "fae/exact_linalg.hpp"
#include "fae/lattice.hpp"

namespace fae {

/// m (2 m Delta + 1)^m. Requires m >= 1 and Delta >= 1.
Int paper_bound(std::size_t m, const Int& delta);

/// Rank-m matrix whose cone is pointed, with an integral functional y
/// (y^T w >= 1 for every column w) and the HNF basis of its lattice.
class FrobeniusInstance {
 public:
  /// Throws RankDeficient or NotPointed.
  explicit FrobeniusInstance(IntMatrix w);

  const IntMatrix& w() const noexcept { return w_; }
  const IntVector& functional() const noexcept { return y_; }
  const Lattice& lattice() const noexcept { return lattice_; }

  /// Is z a nonnegative integer combination of the columns? Memoized
  /// depth-first search; the total multiplicity is at most y^T z.
  bool intcone_member(const IntVector& z) const;

  /// Is z in W (t 1 + [0,1]^n)?
  bool in_zonotope(const IntVector& z, const Int& t) const;

 private:
  IntMatrix w_;
  IntVector y_;
  Lattice lattice_;
  mutable std::map<IntVector, bool> memo_;
};

/// A rational r with r >= (n - m) sqrt(n) / 2 * sqrt(det(W W^T)), within a
/// relative 2^-20 of it; nullopt unless the columns generate Z^m.
std::optional<Rat> aliev_henk_bound(const IntMatrix& w);

struct FrobeniusSearch {
  std::optional<Int> t;     // nullopt: unresolved
  std::string reason;       // why unresolved
  Int levels_checked = 0;
  std::size_t points_checked = 0;
};

/// Smallest t in {0..t_max} such that every lattice point of W (t 1 + R^n_{>=0})
/// lies in intcone(W). Level t fails iff some lattice point of the zonotope
/// W (t 1 + [0,1]^n) is outside intcone(W); the search is unresolved when
/// that zonotope leaves [-z_box, z_box]^m or t would exceed t_max.
FrobeniusSearch exact_diagonal_frobenius(const FrobeniusInstance& inst, const Int& t_max, const Int& z_box);

struct DiagonalFrobeniusReport {
  std::size_t m = 0;
  std::size_t n = 0;
  Int delta = 0;
  FrobeniusSearch search;
  Int paper_bound = 0;
  std::optional<Rat> aliev_henk_bound;
};

/// t_max defaults to paper_bound(m, Delta).
DiagonalFrobeniusReport frobenius_report(const IntMatrix& w, const Int& z_box,
                                         const std::optional<Int>& t_max = std::nullopt);

}  // namespace fae
