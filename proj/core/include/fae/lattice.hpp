#pragma once

#include <map>
#include <vector>

#include "fae/exact_linalg.hpp"

namespace fae {

/// Full-dimensional lattice generated by the columns of a nonsingular square
/// integer matrix.
class Lattice {
 public:
  explicit Lattice(IntMatrix basis);

  const IntMatrix& basis() const noexcept { return basis_; }
  const HnfResult& hnf() const noexcept { return hnf_; }
  const Int& det_abs() const noexcept { return det_abs_; }
  std::size_t dim() const noexcept { return basis_.rows(); }

  /// Membership by forward substitution against the triangular HNF basis.
  bool contains(const IntVector& v) const;

  /// The unique point of (v + lattice) inside the half-open fundamental
  /// parallelepiped {basis * lambda : lambda in [0,1)^m}.
  IntVector reduce(const IntVector& v) const;

 private:
  IntMatrix basis_;
  HnfResult hnf_;
  IntMatrix triangular_;
  Int det_abs_;
};

/// One representative per residue class of Z^m modulo a lattice, each inside
/// the fundamental parallelepiped, sorted lexicographically.
struct ResidueSet {
  std::vector<IntVector> representatives;

  /// Index of the representative congruent to `reduced` (which must already
  /// be reduced by Lattice::reduce), or npos.
  std::size_t index_of(const IntVector& reduced) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

ResidueSet fundamental_domain_points(const Lattice& lattice);

/// For nonsingular square wb: is v a nonnegative integer combination of its
/// columns? Uses intcone = cone intersected with the lattice.
bool intcone_member_square(const IntMatrix& wb, const IntVector& v);

}  // namespace fae
