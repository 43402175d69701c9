#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "fae/exact_linalg.hpp"
#include "fae/polyhedral.hpp"

namespace fae {

/// Bounded closed rational box; `lo[i] > hi[i]` for some i means empty.
struct RatBox {
  RatVector lo;
  RatVector hi;

  std::size_t dim() const noexcept { return lo.size(); }
  bool empty() const;
  std::vector<Interval> intervals() const;
  HPolyhedron as_polyhedron() const;
};

/// A convex set Q in R^m seen through three capabilities: exact membership,
/// a finite outer box, and a polyhedral outer relaxation. Every member of Q
/// must lie in both the outer box and the relaxation.
class ConvexBody {
 public:
  virtual ~ConvexBody() = default;

  virtual std::size_t dim() const = 0;
  virtual bool contains(const RatVector& x) const = 0;
  virtual RatBox outer_box() const = 0;
  /// Linear constraints valid for every member. Defaults to the outer box.
  virtual HPolyhedron relaxation() const { return outer_box().as_polyhedron(); }

  bool contains(const IntVector& x) const { return contains(to_rat(x)); }
};

using BodyPtr = std::shared_ptr<const ConvexBody>;

class BoxBody final : public ConvexBody {
 public:
  BoxBody(RatVector lo, RatVector hi);
  std::size_t dim() const override { return box_.dim(); }
  bool contains(const RatVector& x) const override;
  RatBox outer_box() const override { return box_; }
  const RatBox& box() const noexcept { return box_; }

 private:
  RatBox box_;
};

/// Bounded polytope {x : A x <= d}. Construction rejects unbounded systems.
class PolyBody final : public ConvexBody {
 public:
  explicit PolyBody(HPolyhedron p);
  std::size_t dim() const override { return poly_.dim(); }
  bool contains(const RatVector& x) const override { return poly_.contains(x); }
  RatBox outer_box() const override { return box_; }
  HPolyhedron relaxation() const override;
  const HPolyhedron& polyhedron() const noexcept { return poly_; }

 private:
  HPolyhedron poly_;
  RatBox box_;
};

/// Euclidean ball; membership compares squared distances exactly.
class BallBody final : public ConvexBody {
 public:
  BallBody(RatVector center, Rat radius);
  std::size_t dim() const override { return center_.size(); }
  bool contains(const RatVector& x) const override;
  RatBox outer_box() const override;
  const RatVector& center() const noexcept { return center_; }
  const Rat& radius() const noexcept { return radius_; }

 private:
  RatVector center_;
  Rat radius_;
  Rat radius_sq_;
};

/// {x : T x + t in Q}.
class PreimageBody final : public ConvexBody {
 public:
  PreimageBody(BodyPtr inner, RatMatrix t_mat, RatVector t_vec);
  std::size_t dim() const override { return t_vec_.size(); }
  bool contains(const RatVector& x) const override;
  RatBox outer_box() const override { return box_; }
  HPolyhedron relaxation() const override;

 private:
  BodyPtr inner_;
  RatMatrix t_mat_;
  RatVector t_vec_;
  RatBox box_;
};

/// Q intersected with a polyhedron; membership is the conjunction.
class ClippedBody final : public ConvexBody {
 public:
  ClippedBody(BodyPtr inner, HPolyhedron clip);
  std::size_t dim() const override { return inner_->dim(); }
  bool contains(const RatVector& x) const override;
  RatBox outer_box() const override { return box_; }
  HPolyhedron relaxation() const override;

 private:
  BodyPtr inner_;
  HPolyhedron clip_;
  RatBox box_;
};

BodyPtr make_box(RatVector lo, RatVector hi);
BodyPtr make_box(const IntVector& lo, const IntVector& hi);
BodyPtr make_polytope(HPolyhedron p);
BodyPtr make_ball(RatVector center, Rat radius);

/// Body with membership(x) <=> membership_Q(T x + t); T square nonsingular.
BodyPtr affine_preimage(BodyPtr q, const RatMatrix& t_mat, const RatVector& t_vec);
BodyPtr affine_preimage(BodyPtr q, const IntMatrix& t_mat, const IntVector& t_vec);

BodyPtr clip(BodyPtr q, HPolyhedron p);

/// An integer point of Q intersected with P (lexicographically first), or
/// nullopt. Scans the integer points of P, Q's relaxation and Q's outer box,
/// filtered by membership.
std::optional<IntVector> integer_point_in(const ConvexBody& q, const HPolyhedron& p);

/// Visits the integer points of Q intersected with P in lexicographic order;
/// the visitor returns true to stop. Returns true iff stopped.
bool for_each_integer_point_in(const ConvexBody& q, const HPolyhedron& p, const PointVisitor& visit);

}  // namespace fae
