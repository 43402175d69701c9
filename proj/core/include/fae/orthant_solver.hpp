#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fae/convex_body.hpp"
#include "fae/exact_linalg.hpp"
#include "fae/polyhedral.hpp"

namespace fae {

/// Axis-parallel arrangement of the hyperplanes x_i = c_i - 1/2, stored as
/// the sorted distinct values {c_i : c in C} per coordinate.
struct Arrangement {
  std::vector<std::vector<Int>> thresholds;

  std::size_t dim() const noexcept { return thresholds.size(); }
  /// prod (k_i + 1)
  Int cell_count() const;
};

/// Cell index tuple (j_1..j_m) with 0 <= j_i <= k_i. Coordinate i of the cell
/// spans [l_i^{j_i} - 1/2, l_i^{j_i + 1} - 1/2] with l^0 = -inf and
/// l^{k+1} = +inf (thresholds are 1-based in this notation).
using Cell = std::vector<std::size_t>;

Arrangement build_arrangement(const std::vector<IntVector>& shifts, std::size_t dim);

/// A point strictly inside the cell.
RatVector cell_representative(const Cell& cell, const Arrangement& arr);

/// The closed cell with its half-integral bounds.
HPolyhedron cell_polyhedron(const Cell& cell, const Arrangement& arr);

/// Is x in the union over c of (c - 1/2 * 1) + R^m_{>=0}?
bool covered_by_union(const RatVector& x, const std::vector<IntVector>& shifts);

struct SolveOptions {
  /// Skip cells and shifts that cannot meet Q's outer box.
  bool prune = true;
};

struct SolveStats {
  Int cells_total = 0;
  std::size_t cells_scanned = 0;
  std::size_t cells_uncovered = 0;
  std::size_t candidates_rejected = 0;
};

/// Accepts or rejects an uncovered integer point of Q.
using CandidateFilter = std::function<bool(const IntVector&)>;

/// Searches for b in Q cap Z^m such that no shift c satisfies c <= b. Cells
/// are visited in lexicographic order; within a cell integer points are
/// visited lexicographically. Returns the first point `accept` agrees with,
/// or nullopt when the statement "for all b exists c <= b" holds (modulo
/// rejected candidates).
std::optional<IntVector> solve(const ConvexBody& q, const std::vector<IntVector>& shifts,
                               const CandidateFilter& accept, const SolveOptions& options = {},
                               SolveStats* stats = nullptr);

std::optional<IntVector> solve(const ConvexBody& q, const std::vector<IntVector>& shifts,
                               const SolveOptions& options = {}, SolveStats* stats = nullptr);

}  // namespace fae
