#pragma once

#include <optional>
#include <vector>

#include "fae/convex_body.hpp"
#include "fae/exact_linalg.hpp"

namespace fae {

/// "for all b in Q cap Z^m there is x in Z^n with W x <= b".
struct InputStatement {
  IntMatrix w;
  BodyPtr q;

  std::size_t m() const { return w.rows(); }
  std::size_t n() const { return w.cols(); }
  Int delta() const { return inf_norm(w); }
  /// Throws DimensionMismatch when Q does not live in R^m.
  void validate() const;
};

/// Outcome of one integer feasibility query W x <= b.
struct FeasibilityCertificate {
  IntVector b;
  bool feasible = false;
  IntVector x;             // witness, set when feasible
  bool lp_feasible = false;
  Int search_radius = 0;   // l1 radius searched around the basic point
  std::size_t nodes = 0;
};

enum class Status { valid, counterexample };

const char* to_string(Status s);

struct BasisTrace {
  std::vector<std::size_t> indices;  // 0-based columns of the deduplicated W'
  Int det_abs = 0;
  std::size_t residues = 0;
  std::size_t shifts = 0;            // |C| for this basis
  std::size_t subproblems = 0;
  std::size_t empty_residues = 0;    // residues p with C_p empty
  std::size_t cells_scanned = 0;
  std::size_t candidates_rejected = 0;
};

struct ReductionTrace {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t standard_columns = 0;  // 2n + m
  std::size_t distinct_columns = 0;
  std::size_t cone_facets = 0;
  bool stopped_in_preprocessing = false;
  Int full_cap = 0;                  // m(2m Delta + 1)^m
  Int l1_cap = 0;                    // cap actually used
  Int norm_bound = 0;
  std::size_t bases_total = 0;
  std::size_t subproblems = 0;
  std::size_t oracle_calls = 0;
  std::vector<BasisTrace> bases;     // bases that were processed, in order
};

struct Verdict {
  Status status = Status::valid;
  std::optional<IntVector> witness;
  std::optional<FeasibilityCertificate> certificate;
  std::optional<ReductionTrace> trace;

  bool valid() const noexcept { return status == Status::valid; }
};

}  // namespace fae
