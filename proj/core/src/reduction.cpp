#include "fae/reduction.hpp"

#include <map>
#include <set>

#include "fae/frobenius.hpp"
#include "fae/orthant_solver.hpp"

namespace fae {

StandardStatement to_standard_form(const InputStatement& s) {
  s.validate();
  const std::size_t m = s.m(), n = s.n();
  IntMatrix out(m, 2 * n + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = s.w(i, j);
      out(i, n + j) = -s.w(i, j);
    }
    out(i, 2 * n + i) = 1;
  }
  return {std::move(out), s.q};
}

IntMatrix dedupe_columns(const IntMatrix& w) {
  std::set<IntVector> seen;
  std::vector<IntVector> keep;
  for (auto& c : w.columns()) {
    bool zero = std::all_of(c.begin(), c.end(), [](const Int& v) { return v == 0; });
    if (zero || !seen.insert(c).second) continue;
    keep.push_back(std::move(c));
  }
  return IntMatrix::from_columns(w.rows(), keep);
}

std::optional<IntVector> preprocess_cone(const StandardStatement& s, const ConeFacets& facets) {
  const std::size_t m = s.w.rows();
  for (const auto& a : facets.normals) {
    HPolyhedron outside(m);
    IntVector neg = a;
    for (auto& v : neg) v = -v;
    outside.add(neg, Int(-1));
    if (auto b = integer_point_in(*s.q, outside)) return b;
  }
  return std::nullopt;
}

ShiftCaps shift_norm_caps(std::size_t m, const Int& delta) {
  const Int d = delta < 1 ? Int(1) : delta;
  Int l = paper_bound(m, d);
  return {l, d * l};
}

ShiftSet build_shift_set(const IntMatrix& w, const ColumnBasis& basis, const Int& cap, std::size_t max_elements) {
  if (cap < 0) throw DimensionMismatch("shift cap must be nonnegative");
  const std::size_t m = w.rows();
  std::vector<bool> in_basis(w.cols(), false);
  for (auto j : basis.indices) in_basis.at(j) = true;
  std::vector<IntVector> nb;
  for (std::size_t j = 0; j < w.cols(); ++j)
    if (!in_basis[j]) nb.push_back(w.column(j));

  // Layer k holds the vectors first reached with k columns; every vector of
  // layer k+1 is a layer-k vector plus one column.
  std::set<IntVector> all{IntVector(m, Int(0))};
  std::vector<IntVector> frontier{IntVector(m, Int(0))};
  for (Int k = 0; k < cap && !frontier.empty(); ++k) {
    std::vector<IntVector> next;
    for (const auto& v : frontier) {
      for (const auto& c : nb) {
        IntVector u = add(v, c);
        if (all.insert(u).second) {
          if (all.size() > max_elements) throw BudgetExceeded("shift set exceeded its element budget");
          next.push_back(std::move(u));
        }
      }
    }
    frontier = std::move(next);
  }

  ShiftSet out;
  out.elements.assign(all.begin(), all.end());
  out.l1_cap = cap;
  out.norm_bound = inf_norm(w) * cap;
  return out;
}

std::vector<ResidueBucket> residue_filter_and_split(const IntMatrix& wb, const ShiftSet& c) {
  Lattice lattice(wb);
  ResidueSet residues = fundamental_domain_points(lattice);
  std::vector<ResidueBucket> out;
  out.reserve(residues.representatives.size());
  for (const auto& p : residues.representatives) out.push_back({p, {}});
  for (const auto& v : c.elements) {
    std::size_t k = residues.index_of(lattice.reduce(v));
    if (k == ResidueSet::npos) throw InternalError("shift reduces to no residue representative");
    out[k].shifts.push_back(v);
  }
  return out;
}

OrthantSubproblem to_orthant_problem(const IntMatrix& wb, const IntVector& p, const std::vector<IntVector>& shifts,
                                     const BodyPtr& q, const std::vector<std::size_t>& basis) {
  const std::size_t m = wb.rows();
  if (!wb.is_square() || p.size() != m || q->dim() != m) throw DimensionMismatch("orthant transform dimensions differ");
  OrthantSubproblem sub;
  sub.wb = wb;
  sub.p = p;
  sub.basis = basis;
  sub.original = q;

  BodyPtr in_cone = clip(q, cone_facets(wb).as_polyhedron(m));
  HPolyhedron orthant(m);
  for (std::size_t i = 0; i < m; ++i) {
    IntVector e(m, Int(0));
    e[i] = -1;
    orthant.add(e, Int(0));
  }
  sub.qsub = clip(affine_preimage(in_cone, wb, p), std::move(orthant));

  sub.shifts.reserve(shifts.size());
  for (const auto& c : shifts) {
    RatVector y = solve(wb, to_rat(subtract(c, p)));
    for (const auto& v : y)
      if (!is_integral(v)) throw InternalError("shift is not congruent to its residue representative");
    sub.shifts.push_back(to_int(y));
  }
  return sub;
}

IntVector backmap(const IntVector& y, const OrthantSubproblem& sub) {
  IntVector b = add(multiply(sub.wb, y), sub.p);
  if (!sub.original->contains(b)) throw InternalError("back-mapped point is not in Q");
  return b;
}

Verdict decide(const InputStatement& s, const DecideOptions& options) {
  s.validate();
  Verdict verdict;
  ReductionTrace& trace = verdict.trace.emplace();
  trace.m = s.m();
  trace.n = s.n();

  StandardStatement st = to_standard_form(s);
  trace.standard_columns = st.w.cols();
  st.w = dedupe_columns(st.w);
  trace.distinct_columns = st.w.cols();

  std::map<IntVector, FeasibilityCertificate> checked;
  auto check = [&](const IntVector& b) -> const FeasibilityCertificate& {
    auto it = checked.find(b);
    if (it == checked.end()) {
      ++trace.oracle_calls;
      it = checked.emplace(b, ilp_feasible(s.w, b, options.oracle)).first;
    }
    return it->second;
  };
  auto report = [&](const IntVector& b) {
    verdict.status = Status::counterexample;
    verdict.witness = b;
    verdict.certificate = check(b);
  };

  ConeFacets facets = cone_facets(st.w);
  trace.cone_facets = facets.normals.size();
  if (auto b = preprocess_cone(st, facets)) {
    if (check(*b).feasible) throw InternalError("point outside cone(W') has a feasible system");
    trace.stopped_in_preprocessing = true;
    report(*b);
    return verdict;
  }

  ShiftCaps caps = shift_norm_caps(s.m(), inf_norm(st.w));
  trace.full_cap = caps.l1_cap;
  trace.l1_cap = options.l1_cap ? *options.l1_cap : caps.l1_cap;
  trace.norm_bound = inf_norm(st.w) * trace.l1_cap;

  auto bases = enumerate_bases(st.w);
  trace.bases_total = bases.size();
  SolveOptions solve_options;
  solve_options.prune = options.prune;

  for (const auto& basis : bases) {
    BasisTrace& bt = trace.bases.emplace_back();
    bt.indices = basis.indices;
    bt.det_abs = basis.det_abs;

    ShiftSet shifts = build_shift_set(st.w, basis, trace.l1_cap, options.max_shift_elements);
    bt.shifts = shifts.elements.size();
    auto buckets = residue_filter_and_split(basis.wb, shifts);
    bt.residues = buckets.size();

    for (const auto& bucket : buckets) {
      ++bt.subproblems;
      ++trace.subproblems;
      if (bucket.shifts.empty()) ++bt.empty_residues;
      OrthantSubproblem sub = to_orthant_problem(basis.wb, bucket.p, bucket.shifts, st.q, basis.indices);
      SolveStats stats;
      auto found = solve(
          *sub.qsub, sub.shifts, [&](const IntVector& y) { return !check(backmap(y, sub)).feasible; },
          solve_options, &stats);
      bt.cells_scanned += stats.cells_scanned;
      bt.candidates_rejected += stats.candidates_rejected;
      if (found) {
        report(backmap(*found, sub));
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace fae
