#include "fae/convex_body.hpp"

#include <algorithm>

namespace fae {

namespace {

RatBox empty_box(std::size_t dim) { return {RatVector(dim, Rat(1)), RatVector(dim, Rat(0))}; }

RatBox box_from(const BoundingBox& bb, std::size_t dim) {
  if (bb.empty) return empty_box(dim);
  RatBox out;
  for (const auto& iv : bb.intervals) {
    if (!iv.bounded()) throw UnboundedBody("convex body is unbounded");
    out.lo.push_back(*iv.lo);
    out.hi.push_back(*iv.hi);
  }
  return out;
}

}  // namespace

bool RatBox::empty() const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) return true;
  return false;
}

std::vector<Interval> RatBox::intervals() const {
  std::vector<Interval> out;
  out.reserve(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) out.push_back({lo[i], hi[i]});
  return out;
}

HPolyhedron RatBox::as_polyhedron() const {
  HPolyhedron p(dim());
  for (std::size_t i = 0; i < dim(); ++i) p.add_bounds(i, lo[i], hi[i]);
  return p;
}

BoxBody::BoxBody(RatVector lo, RatVector hi) : box_{std::move(lo), std::move(hi)} {
  if (box_.lo.size() != box_.hi.size()) throw DimensionMismatch("box lo/hi lengths differ");
  if (box_.lo.empty()) throw DimensionMismatch("box must have dimension >= 1");
}

bool BoxBody::contains(const RatVector& x) const {
  if (x.size() != dim()) throw DimensionMismatch("point dimension differs from box");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < box_.lo[i] || x[i] > box_.hi[i]) return false;
  return true;
}

PolyBody::PolyBody(HPolyhedron p) : poly_(std::move(p)) {
  if (poly_.dim() == 0) throw DimensionMismatch("polytope must have dimension >= 1");
  box_ = box_from(bounding_box(poly_), poly_.dim());
}

HPolyhedron PolyBody::relaxation() const { return poly_.intersect(box_.as_polyhedron()); }

BallBody::BallBody(RatVector center, Rat radius)
    : center_(std::move(center)), radius_(std::move(radius)), radius_sq_(radius_ * radius_) {
  if (center_.empty()) throw DimensionMismatch("ball must have dimension >= 1");
  if (radius_ < 0) throw DimensionMismatch("ball radius must be nonnegative");
}

bool BallBody::contains(const RatVector& x) const {
  if (x.size() != dim()) throw DimensionMismatch("point dimension differs from ball");
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rat d = x[i] - center_[i];
    s += d * d;
  }
  return s <= radius_sq_;
}

RatBox BallBody::outer_box() const {
  RatBox b;
  for (const auto& c : center_) {
    b.lo.push_back(c - radius_);
    b.hi.push_back(c + radius_);
  }
  return b;
}

PreimageBody::PreimageBody(BodyPtr inner, RatMatrix t_mat, RatVector t_vec)
    : inner_(std::move(inner)), t_mat_(std::move(t_mat)), t_vec_(std::move(t_vec)) {
  const std::size_t m = inner_->dim();
  if (t_mat_.rows() != m || t_mat_.cols() != m || t_vec_.size() != m)
    throw DimensionMismatch("affine map dimensions differ from body");
  RatMatrix t_inv = inverse(t_mat_);

  // Enclosing box of the images T^{-1}(y - t) of the corners of Q's box.
  RatBox q_box = inner_->outer_box();
  if (q_box.empty()) {
    box_ = empty_box(m);
    return;
  }
  box_.lo.assign(m, Rat(0));
  box_.hi.assign(m, Rat(0));
  const std::size_t corners = std::size_t{1} << m;
  for (std::size_t mask = 0; mask < corners; ++mask) {
    RatVector y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = ((mask >> i) & 1U) ? q_box.hi[i] : q_box.lo[i];
    for (std::size_t i = 0; i < m; ++i) y[i] -= t_vec_[i];
    RatVector x = multiply(t_inv, y);
    for (std::size_t i = 0; i < m; ++i) {
      if (mask == 0 || x[i] < box_.lo[i]) box_.lo[i] = x[i];
      if (mask == 0 || x[i] > box_.hi[i]) box_.hi[i] = x[i];
    }
  }
}

bool PreimageBody::contains(const RatVector& x) const {
  RatVector y = multiply(t_mat_, x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += t_vec_[i];
  return inner_->contains(y);
}

HPolyhedron PreimageBody::relaxation() const {
  // A y <= d with y = T x + t  becomes  (A T) x <= d - A t.
  HPolyhedron out(dim());
  const HPolyhedron inner = inner_->relaxation();
  for (const auto& h : inner.constraints()) {
    RatVector a(dim(), Rat(0));
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t i = 0; i < dim(); ++i) a[j] += h.a[i] * t_mat_(i, j);
    out.add(std::move(a), h.d - dot(h.a, t_vec_));
  }
  return out.intersect(box_.as_polyhedron());
}

ClippedBody::ClippedBody(BodyPtr inner, HPolyhedron clip) : inner_(std::move(inner)), clip_(std::move(clip)) {
  if (clip_.dim() != inner_->dim()) throw DimensionMismatch("clip polyhedron dimension differs from body");
  RatBox inner_box = inner_->outer_box();
  if (inner_box.empty()) {
    box_ = inner_box;
    return;
  }
  HPolyhedron all = inner_->relaxation().intersect(clip_).intersect(inner_box.as_polyhedron());
  box_ = box_from(bounding_box(all), dim());
}

bool ClippedBody::contains(const RatVector& x) const { return clip_.contains(x) && inner_->contains(x); }

HPolyhedron ClippedBody::relaxation() const {
  return inner_->relaxation().intersect(clip_).intersect(box_.as_polyhedron());
}

BodyPtr make_box(RatVector lo, RatVector hi) { return std::make_shared<BoxBody>(std::move(lo), std::move(hi)); }

BodyPtr make_box(const IntVector& lo, const IntVector& hi) { return make_box(to_rat(lo), to_rat(hi)); }

BodyPtr make_polytope(HPolyhedron p) { return std::make_shared<PolyBody>(std::move(p)); }

BodyPtr make_ball(RatVector center, Rat radius) {
  return std::make_shared<BallBody>(std::move(center), std::move(radius));
}

BodyPtr affine_preimage(BodyPtr q, const RatMatrix& t_mat, const RatVector& t_vec) {
  return std::make_shared<PreimageBody>(std::move(q), t_mat, t_vec);
}

BodyPtr affine_preimage(BodyPtr q, const IntMatrix& t_mat, const IntVector& t_vec) {
  return affine_preimage(std::move(q), to_rat(t_mat), to_rat(t_vec));
}

BodyPtr clip(BodyPtr q, HPolyhedron p) { return std::make_shared<ClippedBody>(std::move(q), std::move(p)); }

bool for_each_integer_point_in(const ConvexBody& q, const HPolyhedron& p, const PointVisitor& visit) {
  if (p.dim() != q.dim()) throw DimensionMismatch("polyhedron dimension differs from body");
  RatBox box = q.outer_box();
  if (box.empty()) return false;
  HPolyhedron search = p.intersect(q.relaxation());
  return for_each_integer_point(search, box.intervals(), [&](const IntVector& x) {
    return q.contains(x) && visit(x);
  });
}

std::optional<IntVector> integer_point_in(const ConvexBody& q, const HPolyhedron& p) {
  std::optional<IntVector> found;
  for_each_integer_point_in(q, p, [&](const IntVector& x) {
    found = x;
    return true;
  });
  return found;
}

}  // namespace fae
