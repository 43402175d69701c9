#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fae/convex_body.hpp"
#include "fae/exact_linalg.hpp"
#include "fae/statement.hpp"

namespace fae {

struct OracleOptions {
  /// Search nodes allowed per feasibility query before BudgetExceeded.
  std::size_t node_budget = 20'000'000;
  /// Right-hand sides b allowed per decide_naive / decide_orthant_naive scan.
  std::size_t scan_budget = 1'000'000;
};

/// m (2 m Delta + 1)^m with Delta floored at 1.
Int proximity_radius(std::size_t m, const Int& delta);

/// Decides whether W x <= b has an integer solution. A basic feasible point
/// x* of the relaxation is found by trying every column basis of
/// [W | -W | I]; integer points are then searched in the l1 ball of radius
/// proximity_radius around x*.
FeasibilityCertificate ilp_feasible(const IntMatrix& w, const IntVector& b, const OracleOptions& options = {});

/// Scan of every integer b in Q with one ilp_feasible call each.
Verdict decide_naive(const InputStatement& s, const OracleOptions& options = {});

/// First integer b in Q (lexicographic) with no c in `shifts` satisfying
/// c <= b.
std::optional<IntVector> decide_orthant_naive(const ConvexBody& q, const std::vector<IntVector>& shifts,
                                              const OracleOptions& options = {});

}  // namespace fae
