#include "fae/lattice.hpp"

#include <algorithm>

namespace fae {

Lattice::Lattice(IntMatrix basis) : basis_(std::move(basis)) {
  if (!basis_.is_square()) throw DimensionMismatch("lattice basis must be square");
  det_abs_ = abs(det(basis_));
  if (det_abs_ == 0) throw SingularMatrix("lattice basis is singular");
  hnf_ = fae::hnf(basis_);
  triangular_ = hnf_.basis();
}

bool Lattice::contains(const IntVector& v) const {
  const std::size_t m = dim();
  if (v.size() != m) throw DimensionMismatch("lattice membership: dimension mismatch");
  IntVector rest = v;
  for (std::size_t i = 0; i < m; ++i) {
    const Int& piv = triangular_(i, i);
    if (rest[i] % piv != 0) return false;
    Int x = rest[i] / piv;
    if (x == 0) continue;
    for (std::size_t r = i; r < m; ++r) rest[r] -= x * triangular_(r, i);
  }
  return true;
}

IntVector Lattice::reduce(const IntVector& v) const {
  if (v.size() != dim()) throw DimensionMismatch("lattice reduce: dimension mismatch");
  RatVector lambda = solve(basis_, v);
  IntVector shift(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) shift[i] = floor(lambda[i]);
  return subtract(v, multiply(basis_, shift));
}

std::size_t ResidueSet::index_of(const IntVector& reduced) const {
  auto it = std::lower_bound(representatives.begin(), representatives.end(), reduced);
  if (it == representatives.end() || *it != reduced) return npos;
  return static_cast<std::size_t>(it - representatives.begin());
}

ResidueSet fundamental_domain_points(const Lattice& lattice) {
  // With a lower-triangular HNF basis, the vectors r with 0 <= r_i < H(i,i)
  // form a complete residue system; each is then moved into the
  // parallelepiped of the original basis.
  const std::size_t m = lattice.dim();
  const IntMatrix& h = lattice.hnf().H;
  ResidueSet out;
  IntVector r(m, Int(0));
  while (true) {
    out.representatives.push_back(lattice.reduce(r));
    std::size_t i = 0;
    for (; i < m; ++i) {
      ++r[i];
      if (r[i] < h(i, i)) break;
      r[i] = 0;
    }
    if (i == m) break;
  }
  std::sort(out.representatives.begin(), out.representatives.end());
  return out;
}

bool intcone_member_square(const IntMatrix& wb, const IntVector& v) {
  if (!wb.is_square() || wb.rows() != v.size())
    throw DimensionMismatch("intcone membership: dimension mismatch");
  RatVector y = solve(wb, v);
  return std::all_of(y.begin(), y.end(), [](const Rat& c) { return is_integral(c) && c >= 0; });
}

}  // namespace fae
