#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fae/convex_body.hpp"
#include "fae/exact_linalg.hpp"
#include "fae/lattice.hpp"
#include "fae/oracle.hpp"
#include "fae/polyhedral.hpp"
#include "fae/statement.hpp"

namespace fae {

/// b in intcone(W') for all b in Q cap Z^m.
struct StandardStatement {
  IntMatrix w;
  BodyPtr q;
};

struct ShiftSet {
  std::vector<IntVector> elements;  // sorted, contains 0
  Int norm_bound = 0;               // Delta * l1_cap
  Int l1_cap = 0;
};

/// for all y in qsub cap Z^m there is c in shifts with c <= y; an integer y
/// corresponds to b = wb * y + p in the original coordinates.
struct OrthantSubproblem {
  BodyPtr qsub;
  std::vector<IntVector> shifts;
  IntMatrix wb;
  IntVector p;
  std::vector<std::size_t> basis;
  BodyPtr original;
};

struct ShiftCaps {
  Int l1_cap;      // L = m (2 m Delta + 1)^m
  Int norm_bound;  // Delta * L
};

/// [W | -W | I_m].
StandardStatement to_standard_form(const InputStatement& s);

/// Drops zero columns and repeated columns, keeping first occurrences in
/// order.
IntMatrix dedupe_columns(const IntMatrix& w);

/// First integer point of Q outside cone(W'), found facet by facet, or
/// nullopt when Q cap Z^m lies inside the cone.
std::optional<IntVector> preprocess_cone(const StandardStatement& s, const ConeFacets& facets);

/// Delta = 0 is treated as Delta = 1.
ShiftCaps shift_norm_caps(std::size_t m, const Int& delta);

/// {W_NB z : z >= 0 integral, |z|_1 <= cap} for the columns outside the
/// basis. Throws BudgetExceeded past `max_elements` distinct vectors.
ShiftSet build_shift_set(const IntMatrix& w, const ColumnBasis& basis, const Int& cap,
                         std::size_t max_elements = 2'000'000);

struct ResidueBucket {
  IntVector p;
  std::vector<IntVector> shifts;  // every c in C with c = p mod the lattice
};

/// One bucket per residue class of Z^m modulo the lattice of W_B, in the
/// order of fundamental_domain_points. Empty buckets are kept.
std::vector<ResidueBucket> residue_filter_and_split(const IntMatrix& wb, const ShiftSet& c);

/// Coordinates y with b = W_B y + p. Q is restricted to cone(W_B) and the
/// result to y >= 0; shifts become W_B^{-1}(c - p).
OrthantSubproblem to_orthant_problem(const IntMatrix& wb, const IntVector& p, const std::vector<IntVector>& shifts,
                                     const BodyPtr& q, const std::vector<std::size_t>& basis = {});

/// W_B y + p. Throws InternalError if the result is not in the original Q.
IntVector backmap(const IntVector& y, const OrthantSubproblem& sub);

struct DecideOptions {
  /// Replaces m (2 m Delta + 1)^m as the multiplicity cap for shifts.
  std::optional<Int> l1_cap;
  std::size_t max_shift_elements = 2'000'000;
  OracleOptions oracle;
  bool prune = true;
};

/// The full reduction: standard form, cone preprocessing, one orthant
/// problem per (basis, residue) pair. Candidate counterexamples are mapped
/// back and checked with ilp_feasible; feasible ones are skipped. The
/// verdict carries the trace.
Verdict decide(const InputStatement& s, const DecideOptions& options = {});

}  // namespace fae
