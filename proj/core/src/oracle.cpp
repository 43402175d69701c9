#include "fae/oracle.hpp"

#include <algorithm>
#include <functional>

#include "fae/polyhedral.hpp"

namespace fae {

const char* to_string(Status s) { return s == Status::valid ? "valid" : "counterexample"; }

void InputStatement::validate() const {
  if (!q) throw DimensionMismatch("statement has no body Q");
  if (q->dim() != w.rows()) throw DimensionMismatch("Q must live in R^m where m is the row count of W");
}

Int proximity_radius(std::size_t m, const Int& delta) {
  const Int d = delta < 1 ? Int(1) : delta;
  const Int mm(static_cast<unsigned long long>(m));
  Int base = 2 * mm * d + 1;
  Int p = 1;
  for (std::size_t i = 0; i < m; ++i) p *= base;
  return mm * p;
}

namespace {

// A basic feasible solution of {x' >= 0 : [W | -W | I] x' = b}, folded back
// to x = x+ - x-.
std::optional<RatVector> basic_point(const IntMatrix& w, const IntVector& b) {
  const std::size_t m = w.rows(), n = w.cols();
  std::vector<IntVector> cols;
  cols.reserve(2 * n + m);
  for (std::size_t j = 0; j < n; ++j) cols.push_back(w.column(j));
  for (std::size_t j = 0; j < n; ++j) {
    IntVector c = w.column(j);
    for (auto& v : c) v = -v;
    cols.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < m; ++i) {
    IntVector e(m, Int(0));
    e[i] = 1;
    cols.push_back(std::move(e));
  }
  for (const auto& subset : combinations(cols.size(), m)) {
    std::vector<IntVector> picked;
    for (auto j : subset) picked.push_back(cols[j]);
    IntMatrix wb = IntMatrix::from_columns(m, picked);
    if (det(wb) == 0) continue;
    RatVector y = solve(wb, b);
    if (std::any_of(y.begin(), y.end(), [](const Rat& v) { return v < 0; })) continue;
    RatVector x(n, Rat(0));
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t j = subset[k];
      if (j < n)
        x[j] += y[k];
      else if (j < 2 * n)
        x[j - n] -= y[k];
    }
    return x;
  }
  return std::nullopt;
}

void scan_box(const ConvexBody& q, std::size_t budget, const PointVisitor& visit) {
  RatBox box = q.outer_box();
  if (box.empty()) return;
  std::size_t scanned = 0;
  for_each_integer_point(HPolyhedron(q.dim()), box.intervals(), [&](const IntVector& b) {
    if (++scanned > budget) throw BudgetExceeded("naive scan exceeded its budget of right-hand sides");
    return q.contains(b) && visit(b);
  });
}

}  // namespace

FeasibilityCertificate ilp_feasible(const IntMatrix& w, const IntVector& b, const OracleOptions& options) {
  const std::size_t m = w.rows(), n = w.cols();
  if (b.size() != m) throw DimensionMismatch("b length differs from the row count of W");
  FeasibilityCertificate cert;
  cert.b = b;

  auto center = basic_point(w, b);
  if (!center) return cert;
  cert.lp_feasible = true;
  cert.search_radius = proximity_radius(m, inf_norm(w));
  if (n == 0) {
    cert.feasible = true;
    return cert;
  }

  HPolyhedron p(n);
  for (std::size_t i = 0; i < m; ++i) p.add(w.row(i), b[i]);
  ProjectionChain chain(p);

  IntVector x;
  x.reserve(n);
  std::function<bool(std::size_t, const Rat&)> descend = [&](std::size_t k, const Rat& budget) -> bool {
    if (++cert.nodes > options.node_budget)
      throw BudgetExceeded("integer feasibility search exceeded its node budget");
    if (k == n) return true;
    auto iv = chain.slice(k, x);
    if (!iv) return false;
    const Rat& c = (*center)[k];
    Int lo = ceil(c - budget), hi = floor(c + budget);
    if (iv->lo) lo = std::max(lo, ceil(*iv->lo));
    if (iv->hi) hi = std::min(hi, floor(*iv->hi));
    if (lo > hi) return false;
    // Nearest values to the basic point first.
    Int start = std::clamp(floor(c + Rat(1, 2)), lo, hi);
    for (Int step = 0; start + step <= hi || start - step >= lo; ++step) {
      for (int sign : {1, -1}) {
        if (step == 0 && sign < 0) continue;
        Int v = start + sign * step;
        if (v < lo || v > hi) continue;
        Rat off = Rat(v) - c;
        if (off < 0) off = -off;
        Rat rest = budget - off;
        x.push_back(v);
        if (descend(k + 1, rest)) return true;
        x.pop_back();
      }
    }
    return false;
  };

  if (descend(0, Rat(cert.search_radius))) {
    IntVector wx = multiply(w, x);
    for (std::size_t i = 0; i < m; ++i)
      if (wx[i] > b[i]) throw InternalError("feasibility witness violates W x <= b");
    cert.feasible = true;
    cert.x = x;
  }
  return cert;
}

Verdict decide_naive(const InputStatement& s, const OracleOptions& options) {
  s.validate();
  Verdict v;
  scan_box(*s.q, options.scan_budget, [&](const IntVector& b) {
    auto cert = ilp_feasible(s.w, b, options);
    if (cert.feasible) return false;
    v.status = Status::counterexample;
    v.witness = b;
    v.certificate = std::move(cert);
    return true;
  });
  return v;
}

std::optional<IntVector> decide_orthant_naive(const ConvexBody& q, const std::vector<IntVector>& shifts,
                                              const OracleOptions& options) {
  std::optional<IntVector> found;
  scan_box(q, options.scan_budget, [&](const IntVector& b) {
    bool covered = std::any_of(shifts.begin(), shifts.end(), [&](const IntVector& c) {
      if (c.size() != b.size()) throw DimensionMismatch("shift dimension differs from body");
      for (std::size_t i = 0; i < b.size(); ++i)
        if (c[i] > b[i]) return false;
      return true;
    });
    if (covered) return false;
    found = b;
    return true;
  });
  return found;
}

}  // namespace fae
