#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "fae/exact_linalg.hpp"

namespace fae {

/// a^T x <= d
struct Halfspace {
  RatVector a;
  Rat d;
};

/// {x in R^dim : A x <= d}. An empty constraint list is all of R^dim.
class HPolyhedron {
 public:
  explicit HPolyhedron(std::size_t dim = 0) : dim_(dim) {}
  HPolyhedron(std::size_t dim, std::vector<Halfspace> rows);
  static HPolyhedron from_matrix(const RatMatrix& a, const RatVector& d);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Halfspace>& constraints() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }

  void add(RatVector a, Rat d);
  void add(const IntVector& a, const Int& d);
  /// Adds lo <= x_i <= hi.
  void add_bounds(std::size_t i, const Rat& lo, const Rat& hi);
  HPolyhedron intersect(const HPolyhedron& other) const;

  bool contains(const RatVector& x) const;
  bool contains(const IntVector& x) const;

 private:
  std::size_t dim_;
  std::vector<Halfspace> rows_;
};

/// Closed interval with optional (infinite) ends.
struct Interval {
  std::optional<Rat> lo;
  std::optional<Rat> hi;

  bool bounded() const { return lo.has_value() && hi.has_value(); }
};

struct BoundingBox {
  bool empty = false;
  std::vector<Interval> intervals;

  bool bounded() const;
};

/// Facet normals a of a full-dimensional cone, meaning a^T x <= 0.
struct ConeFacets {
  std::vector<IntVector> normals;

  HPolyhedron as_polyhedron(std::size_t dim) const;
  bool contains(const IntVector& x) const;
};

struct ColumnBasis {
  std::vector<std::size_t> indices;  // 0-based, increasing
  IntMatrix wb;
  Int det_abs;
};

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

/// Facets of cone(W) by the (m-1)-subset normal-candidate method. Throws
/// RankDeficient unless rank(W) = m.
ConeFacets cone_facets(const IntMatrix& w);

/// All column subsets of size m with nonzero determinant, lexicographic.
std::vector<ColumnBasis> enumerate_bases(const IntMatrix& w);

/// Emptiness test by Fourier-Motzkin elimination of every variable.
bool fm_project_feasible(const HPolyhedron& p);

/// Some point of P (built by back substitution through the projection
/// chain), or nullopt when P is empty.
std::optional<RatVector> fm_find_point(const HPolyhedron& p);

/// Exact per-coordinate ranges of P.
BoundingBox bounding_box(const HPolyhedron& p);

/// Projections of P onto the leading coordinates: level k describes
/// {(x_0..x_k) : some completion lies in P}. Fixing a prefix and reading the
/// next coordinate's range is then a substitution instead of a fresh
/// elimination.
class ProjectionChain {
 public:
  explicit ProjectionChain(const HPolyhedron& p);
  ~ProjectionChain();
  ProjectionChain(ProjectionChain&&) noexcept;
  ProjectionChain& operator=(ProjectionChain&&) noexcept;

  std::size_t dim() const noexcept { return dim_; }
  /// Range of x_k given x_0..x_{k-1} = prefix (prefix.size() >= k), or
  /// nullopt when that slice of P is empty.
  std::optional<Interval> slice(std::size_t k, const IntVector& prefix) const;
  std::optional<Interval> slice(std::size_t k, const RatVector& prefix) const;
  bool feasible() const;

 private:
  struct Impl;
  std::size_t dim_;
  std::unique_ptr<Impl> impl_;
};

/// Return true from the visitor to stop the enumeration.
using PointVisitor = std::function<bool(const IntVector&)>;

/// Visits every integer point of P inside `box` in lexicographic order
/// (first coordinate most significant). Returns true iff the visitor
/// stopped the scan. Throws UnboundedBody when the box is not bounded.
bool for_each_integer_point(const HPolyhedron& p, const std::vector<Interval>& box,
                            const PointVisitor& visit);

std::vector<IntVector> integer_points(const HPolyhedron& p, const std::vector<Interval>& box);

}  // namespace fae
