#include "fae/polyhedral.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fae {

HPolyhedron::HPolyhedron(std::size_t dim, std::vector<Halfspace> rows) : dim_(dim), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.a.size() != dim_) throw DimensionMismatch("halfspace dimension differs from polyhedron");
}

HPolyhedron HPolyhedron::from_matrix(const RatMatrix& a, const RatVector& d) {
  if (a.rows() != d.size()) throw DimensionMismatch("A and d have different row counts");
  HPolyhedron p(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) p.add(a.row(i), d[i]);
  return p;
}

void HPolyhedron::add(RatVector a, Rat d) {
  if (a.size() != dim_) throw DimensionMismatch("halfspace dimension differs from polyhedron");
  rows_.push_back({std::move(a), std::move(d)});
}

void HPolyhedron::add(const IntVector& a, const Int& d) { add(to_rat(a), Rat(d)); }

void HPolyhedron::add_bounds(std::size_t i, const Rat& lo, const Rat& hi) {
  if (i >= dim_) throw DimensionMismatch("bound on a coordinate outside the polyhedron");
  RatVector e(dim_, Rat(0));
  e[i] = 1;
  add(e, hi);
  e[i] = -1;
  add(e, -lo);
}

HPolyhedron HPolyhedron::intersect(const HPolyhedron& other) const {
  if (other.dim_ != dim_) throw DimensionMismatch("intersecting polyhedra of different dimension");
  HPolyhedron out = *this;
  out.rows_.insert(out.rows_.end(), other.rows_.begin(), other.rows_.end());
  return out;
}

bool HPolyhedron::contains(const RatVector& x) const {
  if (x.size() != dim_) throw DimensionMismatch("point dimension differs from polyhedron");
  return std::all_of(rows_.begin(), rows_.end(), [&](const Halfspace& h) { return dot(h.a, x) <= h.d; });
}

bool HPolyhedron::contains(const IntVector& x) const { return contains(to_rat(x)); }

bool BoundingBox::bounded() const {
  if (empty) return true;
  return std::all_of(intervals.begin(), intervals.end(), [](const Interval& i) { return i.bounded(); });
}

HPolyhedron ConeFacets::as_polyhedron(std::size_t dim) const {
  HPolyhedron p(dim);
  for (const auto& a : normals) p.add(a, Int(0));
  return p;
}

bool ConeFacets::contains(const IntVector& x) const {
  return std::all_of(normals.begin(), normals.end(), [&](const IntVector& a) { return dot(a, x) <= 0; });
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

ConeFacets cone_facets(const IntMatrix& w) {
  const std::size_t m = w.rows();
  if (rank(w) != m) throw RankDeficient("cone_facets needs a full-dimensional cone (rank m)");
  const auto cols = w.columns();
  std::set<IntVector> found;
  for (const auto& subset : combinations(cols.size(), m - 1)) {
    IntMatrix s = w.select_columns(subset);
    auto normal = primitive_normal(s);
    if (!normal) continue;
    bool any_pos = false, any_neg = false;
    for (const auto& c : cols) {
      Int v = dot(*normal, c);
      if (v > 0) any_pos = true;
      if (v < 0) any_neg = true;
    }
    if (any_pos && any_neg) continue;
    if (any_pos)
      for (auto& x : *normal) x = -x;
    found.insert(*normal);
  }
  return {std::vector<IntVector>(found.begin(), found.end())};
}

std::vector<ColumnBasis> enumerate_bases(const IntMatrix& w) {
  const std::size_t m = w.rows();
  std::vector<ColumnBasis> out;
  for (auto& subset : combinations(w.cols(), m)) {
    IntMatrix wb = w.select_columns(subset);
    Int d = det(wb);
    if (d == 0) continue;
    out.push_back({std::move(subset), std::move(wb), abs(d)});
  }
  if (out.empty()) throw RankDeficient("matrix has no column basis (rank < m)");
  return out;
}

namespace {

// Inequality system kept in a canonical form: each row is scaled so that its
// first nonzero coefficient has absolute value 1, and parallel rows keep only
// the tightest right-hand side.
class FmSystem {
 public:
  explicit FmSystem(std::size_t dim) : dim_(dim) {}

  static FmSystem from(const HPolyhedron& p) {
    FmSystem s(p.dim());
    for (const auto& h : p.constraints()) s.insert(h.a, h.d);
    return s;
  }

  bool infeasible() const noexcept { return infeasible_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Halfspace>& rows() const noexcept { return flat_; }

  void insert(RatVector a, Rat d) {
    auto first = std::find_if(a.begin(), a.end(), [](const Rat& x) { return x != 0; });
    if (first == a.end()) {
      if (d < 0) infeasible_ = true;
      return;
    }
    Rat scale = *first < 0 ? Rat(-*first) : *first;
    if (scale != 1) {
      for (auto& x : a) x /= scale;
      d /= scale;
    }
    auto [it, inserted] = rows_.try_emplace(std::move(a), d);
    if (!inserted && d < it->second) it->second = d;
  }

  void freeze() {
    flat_.clear();
    flat_.reserve(rows_.size());
    for (const auto& [a, d] : rows_) flat_.push_back({a, d});
  }

  FmSystem eliminate(std::size_t var) const {
    FmSystem out(dim_);
    out.infeasible_ = infeasible_;
    std::vector<const Halfspace*> pos, neg;
    for (const auto& h : flat_) {
      if (h.a[var] > 0)
        pos.push_back(&h);
      else if (h.a[var] < 0)
        neg.push_back(&h);
      else
        out.insert(h.a, h.d);
    }
    for (const auto* p : pos) {
      for (const auto* n : neg) {
        const Rat cp = -n->a[var];
        const Rat cn = p->a[var];
        RatVector a(dim_);
        for (std::size_t i = 0; i < dim_; ++i) a[i] = cp * p->a[i] + cn * n->a[i];
        a[var] = 0;
        out.insert(std::move(a), cp * p->d + cn * n->d);
      }
    }
    out.freeze();
    return out;
  }

 private:
  std::size_t dim_;
  bool infeasible_ = false;
  std::map<RatVector, Rat> rows_;
  std::vector<Halfspace> flat_;
};

// Range of x_k once x_0..x_{k-1} are fixed to `prefix`, for a system that
// only involves x_0..x_k. Returns nullopt when the slice is empty.
template <typename Scalar>
std::optional<Interval> slice_interval(const FmSystem& s, std::size_t k, const std::vector<Scalar>& prefix) {
  if (s.infeasible()) return std::nullopt;
  Interval iv;
  for (const auto& h : s.rows()) {
    Rat rhs = h.d;
    for (std::size_t i = 0; i < k; ++i)
      if (h.a[i] != 0) rhs -= h.a[i] * Rat(prefix[i]);
    const Rat& c = h.a[k];
    if (c == 0) {
      if (rhs < 0) return std::nullopt;
      continue;
    }
    Rat bound = rhs / c;
    if (c > 0) {
      if (!iv.hi || bound < *iv.hi) iv.hi = bound;
    } else {
      if (!iv.lo || bound > *iv.lo) iv.lo = bound;
    }
  }
  if (iv.lo && iv.hi && *iv.lo > *iv.hi) return std::nullopt;
  return iv;
}

// chain[k] is the projection of P onto (x_0..x_k).
std::vector<FmSystem> projection_chain(const HPolyhedron& p) {
  const std::size_t m = p.dim();
  std::vector<FmSystem> chain;
  chain.reserve(m);
  FmSystem full = FmSystem::from(p);
  full.freeze();
  chain.push_back(std::move(full));
  for (std::size_t k = m - 1; k > 0; --k) chain.push_back(chain.back().eliminate(k));
  std::reverse(chain.begin(), chain.end());
  return chain;
}

bool zero_dim_feasible(const HPolyhedron& p) {
  return std::all_of(p.constraints().begin(), p.constraints().end(),
                     [](const Halfspace& h) { return h.d >= 0; });
}

}  // namespace

struct ProjectionChain::Impl {
  std::vector<FmSystem> levels;
  bool zero_dim_ok = true;
};

ProjectionChain::ProjectionChain(const HPolyhedron& p) : dim_(p.dim()), impl_(std::make_unique<Impl>()) {
  if (dim_ == 0)
    impl_->zero_dim_ok = zero_dim_feasible(p);
  else
    impl_->levels = projection_chain(p);
}

ProjectionChain::~ProjectionChain() = default;
ProjectionChain::ProjectionChain(ProjectionChain&&) noexcept = default;
ProjectionChain& ProjectionChain::operator=(ProjectionChain&&) noexcept = default;

std::optional<Interval> ProjectionChain::slice(std::size_t k, const IntVector& prefix) const {
  if (k >= dim_ || prefix.size() < k) throw DimensionMismatch("projection slice index out of range");
  return slice_interval(impl_->levels[k], k, prefix);
}

std::optional<Interval> ProjectionChain::slice(std::size_t k, const RatVector& prefix) const {
  if (k >= dim_ || prefix.size() < k) throw DimensionMismatch("projection slice index out of range");
  return slice_interval(impl_->levels[k], k, prefix);
}

bool ProjectionChain::feasible() const {
  if (dim_ == 0) return impl_->zero_dim_ok;
  return slice_interval(impl_->levels.front(), 0, std::vector<Rat>{}).has_value();
}

bool fm_project_feasible(const HPolyhedron& p) { return ProjectionChain(p).feasible(); }

std::optional<RatVector> fm_find_point(const HPolyhedron& p) {
  if (p.dim() == 0) {
    if (!zero_dim_feasible(p)) return std::nullopt;
    return RatVector{};
  }
  ProjectionChain chain(p);
  RatVector x;
  x.reserve(p.dim());
  for (std::size_t k = 0; k < p.dim(); ++k) {
    auto iv = chain.slice(k, x);
    if (!iv) return std::nullopt;
    if (iv->lo && iv->hi)
      x.push_back((*iv->lo + *iv->hi) / 2);
    else if (iv->lo)
      x.push_back(*iv->lo);
    else if (iv->hi)
      x.push_back(*iv->hi);
    else
      x.push_back(Rat(0));
  }
  return x;
}

BoundingBox bounding_box(const HPolyhedron& p) {
  BoundingBox box;
  const std::size_t m = p.dim();
  if (!fm_project_feasible(p)) {
    box.empty = true;
    return box;
  }
  FmSystem full = FmSystem::from(p);
  full.freeze();
  for (std::size_t i = 0; i < m; ++i) {
    FmSystem s = full;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) s = s.eliminate(j);
    std::vector<Rat> zeros(m, Rat(0));
    auto iv = slice_interval(s, i, zeros);
    if (!iv) {
      box.empty = true;
      box.intervals.clear();
      return box;
    }
    box.intervals.push_back(*iv);
  }
  return box;
}

bool for_each_integer_point(const HPolyhedron& p, const std::vector<Interval>& box,
                            const PointVisitor& visit) {
  const std::size_t m = p.dim();
  if (box.size() != m) throw DimensionMismatch("search box dimension differs from polyhedron");
  for (const auto& iv : box)
    if (!iv.bounded()) throw UnboundedBody("integer point search needs a bounded box");
  if (m == 0) return zero_dim_feasible(p) && visit(IntVector{});

  std::vector<Int> lo(m), hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    lo[i] = ceil(*box[i].lo);
    hi[i] = floor(*box[i].hi);
    if (lo[i] > hi[i]) return false;
  }
  ProjectionChain chain(p);

  IntVector x;
  x.reserve(m);
  std::function<bool(std::size_t)> descend = [&](std::size_t k) -> bool {
    auto iv = chain.slice(k, x);
    if (!iv) return false;
    Int from = lo[k], to = hi[k];
    if (iv->lo) from = std::max(from, ceil(*iv->lo));
    if (iv->hi) to = std::min(to, floor(*iv->hi));
    for (Int v = from; v <= to; ++v) {
      x.push_back(v);
      bool stop = (k + 1 == m) ? visit(x) : descend(k + 1);
      x.pop_back();
      if (stop) return true;
    }
    return false;
  };
  return descend(0);
}

std::vector<IntVector> integer_points(const HPolyhedron& p, const std::vector<Interval>& box) {
  std::vector<IntVector> out;
  for_each_integer_point(p, box, [&](const IntVector& x) {
    out.push_back(x);
    return false;
  });
  return out;
}

}  // namespace fae
