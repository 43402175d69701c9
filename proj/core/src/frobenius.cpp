#include "fae/frobenius.hpp"

#include <boost/multiprecision/integer.hpp>

#include "fae/polyhedral.hpp"

namespace fae {

Int paper_bound(std::size_t m, const Int& delta) {
  if (m == 0) throw DimensionMismatch("paper_bound needs m >= 1");
  if (delta < 1) throw DimensionMismatch("paper_bound needs Delta >= 1");
  const Int mm(static_cast<unsigned long long>(m));
  Int base = 2 * mm * delta + 1;
  Int p = 1;
  for (std::size_t i = 0; i < m; ++i) p *= base;
  return mm * p;
}

namespace {

IntVector pointing_functional(const IntMatrix& w) {
  const std::size_t m = w.rows();
  HPolyhedron p(m);
  for (const auto& c : w.columns()) {
    IntVector neg = c;
    for (auto& v : neg) v = -v;
    p.add(neg, Int(-1));
  }
  auto y = fm_find_point(p);
  if (!y) throw NotPointed("cone(W) contains a line");
  Int scale = 1;
  for (const auto& v : *y) {
    Int d = denominator(v);
    scale = scale / gcd(scale, d) * d;
  }
  IntVector out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = to_int(RatVector{(*y)[i] * scale})[0];
  return out;
}

IntMatrix lattice_basis(const IntMatrix& w) {
  if (rank(w) != w.rows()) throw RankDeficient("W must have rank m");
  return hnf(w).basis();
}

}  // namespace

FrobeniusInstance::FrobeniusInstance(IntMatrix w)
    : w_(std::move(w)), y_(pointing_functional(w_)), lattice_(lattice_basis(w_)) {}

bool FrobeniusInstance::intcone_member(const IntVector& z) const {
  if (z.size() != w_.rows()) throw DimensionMismatch("point dimension differs from W");
  if (std::all_of(z.begin(), z.end(), [](const Int& v) { return v == 0; })) return true;
  if (dot(y_, z) <= 0) return false;
  auto it = memo_.find(z);
  if (it != memo_.end()) return it->second;
  bool ok = false;
  for (std::size_t j = 0; j < w_.cols() && !ok; ++j) ok = intcone_member(subtract(z, w_.column(j)));
  memo_[z] = ok;
  return ok;
}

bool FrobeniusInstance::in_zonotope(const IntVector& z, const Int& t) const {
  const std::size_t m = w_.rows(), n = w_.cols();
  // W mu = z - t W 1 with 0 <= mu <= 1.
  HPolyhedron p(n);
  for (std::size_t i = 0; i < m; ++i) {
    IntVector row = w_.row(i);
    Int rhs = z[i];
    for (const auto& v : row) rhs -= t * v;
    p.add(row, rhs);
    for (auto& v : row) v = -v;
    p.add(row, Int(-rhs));
  }
  for (std::size_t j = 0; j < n; ++j) p.add_bounds(j, Rat(0), Rat(1));
  return fm_project_feasible(p);
}

std::optional<Rat> aliev_henk_bound(const IntMatrix& w) {
  const std::size_t m = w.rows(), n = w.cols();
  if (rank(w) != m) throw RankDeficient("W must have rank m");
  if (hnf(w).basis() != IntMatrix::identity(m)) return std::nullopt;
  const Int big_n = Int(static_cast<unsigned long long>(n)) * det(w * w.transpose());
  const Int scale = Int(1) << 20;
  const Int target = big_n * scale * scale;
  Int r = boost::multiprecision::sqrt(target);
  if (r * r < target) r += 1;
  return Rat(Int(static_cast<unsigned long long>(n - m)) * r, 2 * scale);
}

FrobeniusSearch exact_diagonal_frobenius(const FrobeniusInstance& inst, const Int& t_max, const Int& z_box) {
  const IntMatrix& w = inst.w();
  const std::size_t m = w.rows();
  FrobeniusSearch out;

  std::vector<Int> row_sum(m, Int(0)), neg_part(m, Int(0)), pos_part(m, Int(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < w.cols(); ++j) {
      row_sum[i] += w(i, j);
      if (w(i, j) < 0) neg_part[i] += w(i, j);
      else pos_part[i] += w(i, j);
    }

  for (Int t = 0; t <= t_max; ++t) {
    ++out.levels_checked;
    std::vector<Interval> box;
    for (std::size_t i = 0; i < m; ++i) {
      Int lo = t * row_sum[i] + neg_part[i], hi = t * row_sum[i] + pos_part[i];
      if (lo < -z_box || hi > z_box) {
        out.reason = "zonotope at level " + t.str() + " leaves the z box";
        return out;
      }
      box.push_back({Rat(lo), Rat(hi)});
    }
    bool violated = for_each_integer_point(HPolyhedron(m), box, [&](const IntVector& z) {
      ++out.points_checked;
      if (!inst.lattice().contains(z)) return false;
      if (inst.intcone_member(z)) return false;
      return inst.in_zonotope(z, t);
    });
    if (!violated) {
      out.t = t;
      return out;
    }
  }
  out.reason = "no stable level up to t_max";
  return out;
}

DiagonalFrobeniusReport frobenius_report(const IntMatrix& w, const Int& z_box, const std::optional<Int>& t_max) {
  FrobeniusInstance inst(w);
  DiagonalFrobeniusReport r;
  r.m = w.rows();
  r.n = w.cols();
  r.delta = inf_norm(w);
  r.paper_bound = paper_bound(r.m, r.delta);
  r.search = exact_diagonal_frobenius(inst, t_max ? *t_max : r.paper_bound, z_box);
  r.aliev_henk_bound = aliev_henk_bound(w);
  return r;
}

}  // namespace fae
