#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fae/errors.hpp"

namespace fae {

/// Arbitrary-precision integer.
using Int = boost::multiprecision::cpp_int;
/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rat = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

/// Dense row-major matrix. Rows must be >= 1; zero columns are allowed.
template <typename T>
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0) throw DimensionMismatch("matrix must have at least one row");
  }

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    if (rows.size() == 0) throw DimensionMismatch("matrix must have at least one row");
    rows_ = rows.size();
    cols_ = rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) throw DimensionMismatch("matrix must have at least one row");
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Builds a matrix with `rows` rows from the given column vectors.
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionMismatch("column length differs from row count");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<std::vector<T>> columns() const {
    std::vector<std::vector<T>> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }

  Matrix select_columns(std::span<const std::size_t> idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] >= cols_) throw DimensionMismatch("column index out of range");
      for (std::size_t i = 0; i < rows_; ++i) m(i, k) = (*this)(i, idx[k]);
    }
    return m;
  }

  Matrix transpose() const {
    if (cols_ == 0) throw DimensionMismatch("cannot transpose a matrix without columns");
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

/// Column-style Hermite normal form: A * U = H, H lower triangular with a
/// positive diagonal and 0 <= H(i, j) < H(i, i) for j < i. Columns m..n-1 of H
/// are zero.
struct HnfResult {
  IntMatrix H;
  IntMatrix U;

  /// Leading m x m block of H: a triangular basis of the column lattice.
  IntMatrix basis() const;
};

// --- scalar helpers ---------------------------------------------------------

Int floor_div(const Int& a, const Int& b);
Int floor(const Rat& r);
Int ceil(const Rat& r);
bool is_integral(const Rat& r);
Int abs(const Int& a);
Int gcd(const Int& a, const Int& b);
/// Extended gcd: returns g >= 0 and sets p, q with p*a + q*b = g.
Int xgcd(const Int& a, const Int& b, Int& p, Int& q);

/// "p/q" or "p" for integral values.
std::string to_string(const Rat& r);
/// Parses "p/q", "p", or "-p/q" exactly. Throws ParseError.
Rat parse_rational(const std::string& text);

RatVector to_rat(const IntVector& v);
RatMatrix to_rat(const IntMatrix& m);
/// Converts an integral rational vector; throws InternalError otherwise.
IntVector to_int(const RatVector& v);

// --- matrix operations ------------------------------------------------------

/// Largest absolute entry (0 for a matrix without columns).
Int inf_norm(const IntMatrix& m);
Int inf_norm(const IntVector& v);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatMatrix multiply(const IntMatrix& a, const RatMatrix& b);
RatMatrix multiply(const RatMatrix& a, const IntMatrix& b);
IntVector multiply(const IntMatrix& a, const IntVector& x);
RatVector multiply(const IntMatrix& a, const RatVector& x);
RatVector multiply(const RatMatrix& a, const RatVector& x);

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return multiply(a, b); }
inline RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return multiply(a, b); }
inline RatMatrix operator*(const IntMatrix& a, const RatMatrix& b) { return multiply(a, b); }
inline RatMatrix operator*(const RatMatrix& a, const IntMatrix& b) { return multiply(a, b); }

IntVector add(const IntVector& a, const IntVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);
Int dot(const IntVector& a, const IntVector& b);
Rat dot(const RatVector& a, const RatVector& b);

/// Exact determinant by Bareiss fraction-free elimination.
Int det(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Solves A X = B for square nonsingular A. Forward elimination is
/// fraction-free; only the back substitution uses rationals.
RatMatrix solve(const IntMatrix& a, const IntMatrix& b);
RatVector solve(const IntMatrix& a, const RatVector& b);
RatVector solve(const IntMatrix& a, const IntVector& b);

RatMatrix inverse(const IntMatrix& a);
RatMatrix inverse(const RatMatrix& a);

HnfResult hnf(const IntMatrix& a);

/// For S with m rows and m-1 columns: a primitive integer vector a != 0 with
/// a^T S = 0 whose first nonzero entry is positive, or nullopt when the
/// columns do not span a hyperplane.
std::optional<IntVector> primitive_normal(const IntMatrix& s);

}  // namespace fae
