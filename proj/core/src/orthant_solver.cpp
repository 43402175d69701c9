#include "fae/orthant_solver.hpp"

#include <algorithm>
#include <set>

namespace fae {

Int Arrangement::cell_count() const {
  Int n = 1;
  for (const auto& t : thresholds) n *= Int(t.size() + 1);
  return n;
}

Arrangement build_arrangement(const std::vector<IntVector>& shifts, std::size_t dim) {
  Arrangement arr;
  arr.thresholds.resize(dim);
  for (const auto& c : shifts) {
    if (c.size() != dim) throw DimensionMismatch("shift dimension differs from arrangement");
    for (std::size_t i = 0; i < dim; ++i) arr.thresholds[i].push_back(c[i]);
  }
  for (auto& t : arr.thresholds) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
  }
  return arr;
}

namespace {

void check_cell(const Cell& cell, const Arrangement& arr) {
  if (cell.size() != arr.dim()) throw DimensionMismatch("cell dimension differs from arrangement");
  for (std::size_t i = 0; i < cell.size(); ++i)
    if (cell[i] > arr.thresholds[i].size()) throw DimensionMismatch("cell index out of range");
}

}  // namespace

RatVector cell_representative(const Cell& cell, const Arrangement& arr) {
  check_cell(cell, arr);
  RatVector x(cell.size());
  for (std::size_t i = 0; i < cell.size(); ++i) {
    const auto& t = arr.thresholds[i];
    const std::size_t j = cell[i];
    if (t.empty()) {
      x[i] = 0;
    } else if (j == 0) {
      x[i] = Rat(t.front() - 1);
    } else if (j == t.size()) {
      x[i] = Rat(t.back() + 1);
    } else {
      // midpoint of (t[j-1] - 1/2, t[j] - 1/2)
      x[i] = Rat(t[j - 1] + t[j]) / 2 - Rat(1, 2);
    }
  }
  return x;
}

HPolyhedron cell_polyhedron(const Cell& cell, const Arrangement& arr) {
  check_cell(cell, arr);
  const std::size_t m = cell.size();
  HPolyhedron p(m);
  const Rat half(1, 2);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& t = arr.thresholds[i];
    const std::size_t j = cell[i];
    RatVector e(m, Rat(0));
    if (j > 0) {
      e[i] = -1;
      p.add(e, -(Rat(t[j - 1]) - half));
    }
    if (j < t.size()) {
      e[i] = 1;
      p.add(e, Rat(t[j]) - half);
    }
  }
  return p;
}

bool covered_by_union(const RatVector& x, const std::vector<IntVector>& shifts) {
  const Rat half(1, 2);
  return std::any_of(shifts.begin(), shifts.end(), [&](const IntVector& c) {
    if (c.size() != x.size()) throw DimensionMismatch("shift dimension differs from point");
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] < Rat(c[i]) - half) return false;
    return true;
  });
}

namespace {

// Integer bounds of a cell: [t[j-1], t[j] - 1] per coordinate, open ends
// replaced by nothing.
HPolyhedron cell_integer_polyhedron(const Cell& cell, const Arrangement& arr) {
  const std::size_t m = cell.size();
  HPolyhedron p(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& t = arr.thresholds[i];
    const std::size_t j = cell[i];
    IntVector e(m, Int(0));
    if (j > 0) {
      e[i] = -1;
      p.add(e, Int(-t[j - 1]));
    }
    if (j < t.size()) {
      e[i] = 1;
      p.add(e, Int(t[j] - 1));
    }
  }
  return p;
}

}  // namespace

std::optional<IntVector> solve(const ConvexBody& q, const std::vector<IntVector>& shifts,
                               const CandidateFilter& accept, const SolveOptions& options,
                               SolveStats* stats) {
  const std::size_t m = q.dim();
  SolveStats local;
  SolveStats& st = stats ? *stats : local;

  RatBox box = q.outer_box();
  if (options.prune && box.empty()) return std::nullopt;

  std::vector<IntVector> active;
  std::vector<Int> int_lo(m), int_hi(m);
  if (options.prune) {
    for (std::size_t i = 0; i < m; ++i) {
      int_lo[i] = ceil(box.lo[i]);
      int_hi[i] = floor(box.hi[i]);
      if (int_lo[i] > int_hi[i]) return std::nullopt;
    }
    // A shift exceeding the box's integer top in some coordinate covers no
    // integer point of Q; inside the box c covers exactly what max(c, lo)
    // covers.
    std::set<IntVector> clamped;
    for (const auto& c : shifts) {
      if (c.size() != m) throw DimensionMismatch("shift dimension differs from body");
      bool useful = true;
      for (std::size_t i = 0; i < m && useful; ++i) useful = c[i] <= int_hi[i];
      if (!useful) continue;
      IntVector d = c;
      for (std::size_t i = 0; i < m; ++i) d[i] = std::max(d[i], int_lo[i]);
      clamped.insert(std::move(d));
    }
    active.assign(clamped.begin(), clamped.end());
  } else {
    active = shifts;
  }

  Arrangement arr = build_arrangement(active, m);
  st.cells_total += arr.cell_count();

  // Per coordinate, the range of cell indices to visit.
  std::vector<std::size_t> j_from(m, 0), j_to(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& t = arr.thresholds[i];
    j_to[i] = t.size();
    if (!options.prune) continue;
    // Cell j holds integers [t[j-1], t[j]-1].
    j_from[i] = static_cast<std::size_t>(std::upper_bound(t.begin(), t.end(), int_lo[i]) - t.begin());
    j_to[i] = static_cast<std::size_t>(std::upper_bound(t.begin(), t.end(), int_hi[i]) - t.begin());
  }

  Cell cell = j_from;
  while (true) {
    ++st.cells_scanned;
    if (!covered_by_union(cell_representative(cell, arr), active)) {
      ++st.cells_uncovered;
      std::optional<IntVector> found;
      for_each_integer_point_in(q, cell_integer_polyhedron(cell, arr), [&](const IntVector& b) {
        if (accept && !accept(b)) {
          ++st.candidates_rejected;
          return false;
        }
        found = b;
        return true;
      });
      if (found) return found;
    }
    // Odometer: last coordinate fastest.
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (cell[i] < j_to[i]) {
        ++cell[i];
        break;
      }
      cell[i] = j_from[i];
      if (i == 0) return std::nullopt;
    }
    if (m == 0) return std::nullopt;
  }
}

std::optional<IntVector> solve(const ConvexBody& q, const std::vector<IntVector>& shifts,
                               const SolveOptions& options, SolveStats* stats) {
  return solve(q, shifts, CandidateFilter{}, options, stats);
}

}  // namespace fae
