#include "fae/exact_linalg.hpp"

#include <algorithm>
#include <utility>

namespace fae {

namespace mp = boost::multiprecision;

IntMatrix HnfResult::basis() const {
  const std::size_t m = H.rows();
  IntMatrix b(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) b(i, j) = H(i, j);
  return b;
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw SingularMatrix("division by zero");
  Int q = a / b;
  Int r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Int floor(const Rat& r) { return floor_div(mp::numerator(r), mp::denominator(r)); }

Int ceil(const Rat& r) { return -floor_div(-mp::numerator(r), mp::denominator(r)); }

bool is_integral(const Rat& r) { return mp::denominator(r) == 1; }

Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

Int gcd(const Int& a, const Int& b) {
  Int x = abs(a), y = abs(b);
  while (y != 0) {
    Int t = x % y;
    x = std::move(y);
    y = std::move(t);
  }
  return x;
}

Int xgcd(const Int& a, const Int& b, Int& p, Int& q) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int quot = old_r / r;
    Int tmp = old_r - quot * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - quot * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - quot * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  p = old_s;
  q = old_t;
  return old_r;
}

std::string to_string(const Rat& r) {
  if (is_integral(r)) return mp::numerator(r).str();
  return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

namespace {

Int parse_integer(const std::string& s, const std::string& whole) {
  std::size_t pos = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) pos = 1;
  if (pos >= s.size()) throw ParseError("malformed rational '" + whole + "'");
  for (std::size_t i = pos; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw ParseError("malformed rational '" + whole + "'");
  Int v(s[0] == '+' ? s.substr(1) : s);
  return v;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_integer(text, text));
  Int num = parse_integer(text.substr(0, slash), text);
  std::string den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw ParseError("malformed rational '" + text + "'");
  Int den = parse_integer(den_text, text);
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rat(num, den);
}

RatVector to_rat(const IntVector& v) { return RatVector(v.begin(), v.end()); }

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

IntVector to_int(const RatVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!is_integral(x)) throw InternalError("expected an integral vector, got " + to_string(x));
    out.push_back(mp::numerator(x));
  }
  return out;
}

Int inf_norm(const IntMatrix& m) {
  Int best = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) best = std::max(best, abs(m(i, j)));
  return best;
}

Int inf_norm(const IntVector& v) {
  Int best = 0;
  for (const auto& x : v) best = std::max(best, abs(x));
  return best;
}

namespace {

template <typename R, typename A, typename B>
Matrix<R> multiply_impl(const Matrix<A>& a, const Matrix<B>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("inner dimensions of product disagree");
  Matrix<R> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += R(a(i, k)) * R(b(k, j));
    }
  return c;
}

template <typename R, typename A, typename X>
std::vector<R> apply_impl(const Matrix<A>& a, const std::vector<X>& x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector dimensions disagree");
  std::vector<R> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += R(a(i, j)) * R(x[j]);
  return y;
}

}  // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) { return multiply_impl<Int>(a, b); }
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) { return multiply_impl<Rat>(a, b); }
RatMatrix multiply(const IntMatrix& a, const RatMatrix& b) { return multiply_impl<Rat>(a, b); }
RatMatrix multiply(const RatMatrix& a, const IntMatrix& b) { return multiply_impl<Rat>(a, b); }
IntVector multiply(const IntMatrix& a, const IntVector& x) { return apply_impl<Int>(a, x); }
RatVector multiply(const IntMatrix& a, const RatVector& x) { return apply_impl<Rat>(a, x); }
RatVector multiply(const RatMatrix& a, const RatVector& x) { return apply_impl<Rat>(a, x); }

IntVector add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

IntVector subtract(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t r1, std::size_t r2) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r1, j), m(r2, j));
}

// Bareiss forward elimination of the augmented matrix [A | B] in place.
// Returns false when A is singular. On success the left block is upper
// triangular and M(n-1, n-1) = +-det(A).
bool bareiss_forward(IntMatrix& m, std::size_t n, int& sign) {
  sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k) == 0) ++piv;
      if (piv == n) return false;
      swap_rows(m, k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return true;
}

}  // namespace

Int det(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  IntMatrix m = a;
  int sign = 1;
  if (!bareiss_forward(m, m.rows(), sign)) return 0;
  const std::size_t n = m.rows();
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& a) {
  RatMatrix m = to_rat(a);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

RatMatrix solve(const IntMatrix& a, const IntMatrix& b) {
  if (!a.is_square()) throw DimensionMismatch("solve needs a square matrix");
  if (b.rows() != a.rows()) throw DimensionMismatch("right-hand side row count differs");
  const std::size_t n = a.rows();
  const std::size_t r = b.cols();
  IntMatrix aug(n, n + r);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < r; ++j) aug(i, n + j) = b(i, j);
  }
  int sign = 1;
  if (!bareiss_forward(aug, n, sign)) throw SingularMatrix("matrix is singular");

  RatMatrix x(n, r);
  for (std::size_t col = 0; col < r; ++col) {
    for (std::size_t i = n; i-- > 0;) {
      Rat s = aug(i, n + col);
      for (std::size_t j = i + 1; j < n; ++j) s -= Rat(aug(i, j)) * x(j, col);
      x(i, col) = s / Rat(aug(i, i));
    }
  }
  return x;
}

RatVector solve(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length differs");
  IntMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  return solve(a, rhs).column(0);
}

RatVector solve(const IntMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length differs");
  // Clear denominators, solve over the integers, rescale.
  Int common = 1;
  for (const auto& v : b) {
    const Int& d = mp::denominator(v);
    common = common / gcd(common, d) * d;
  }
  IntVector scaled(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) scaled[i] = mp::numerator(b[i] * Rat(common));
  RatVector x = solve(a, scaled);
  for (auto& v : x) v /= Rat(common);
  return x;
}

RatMatrix inverse(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  return solve(a, IntMatrix::identity(a.rows()));
}

RatMatrix inverse(const RatMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  // a = a_int / common  =>  a^{-1} = common * a_int^{-1}
  Int common = 1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Int& d = mp::denominator(a(i, j));
      common = common / gcd(common, d) * d;
    }
  IntMatrix scaled(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) scaled(i, j) = mp::numerator(a(i, j) * Rat(common));
  RatMatrix inv = inverse(scaled);
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j) inv(i, j) *= Rat(common);
  return inv;
}

namespace {

// Column operation (ci, cj) <- (p*ci + q*cj, r*ci + s*cj).
void combine_columns(IntMatrix& m, std::size_t i, std::size_t j, const Int& p, const Int& q,
                     const Int& r, const Int& s) {
  for (std::size_t row = 0; row < m.rows(); ++row) {
    Int ci = m(row, i);
    Int cj = m(row, j);
    m(row, i) = p * ci + q * cj;
    m(row, j) = r * ci + s * cj;
  }
}

void axpy_column(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t row = 0; row < m.rows(); ++row) m(row, dst) -= f * m(row, src);
}

void negate_column(IntMatrix& m, std::size_t c) {
  for (std::size_t row = 0; row < m.rows(); ++row) m(row, c) = -m(row, c);
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (n < m) throw RankDeficient("HNF needs full row rank; fewer columns than rows");
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (h(i, j) == 0) continue;
      Int p, q;
      Int g = xgcd(h(i, i), h(i, j), p, q);
      Int ai = h(i, i) / g;
      Int bj = h(i, j) / g;
      combine_columns(h, i, j, p, q, -bj, ai);
      combine_columns(u, i, j, p, q, -bj, ai);
    }
    if (h(i, i) == 0) throw RankDeficient("HNF needs full row rank");
    if (h(i, i) < 0) {
      negate_column(h, i);
      negate_column(u, i);
    }
    for (std::size_t j = 0; j < i; ++j) {
      Int f = floor_div(h(i, j), h(i, i));
      if (f == 0) continue;
      axpy_column(h, j, i, f);
      axpy_column(u, j, i, f);
    }
  }
  return {std::move(h), std::move(u)};
}

std::optional<IntVector> primitive_normal(const IntMatrix& s) {
  const std::size_t m = s.rows();
  if (s.cols() + 1 != m) throw DimensionMismatch("primitive_normal expects m x (m-1) input");
  IntVector a(m);
  if (m == 1) {
    a[0] = 1;
    return a;
  }
  // Generalised cross product: a_i = (-1)^i det(S without row i).
  for (std::size_t skip = 0; skip < m; ++skip) {
    IntMatrix minor(m - 1, m - 1);
    for (std::size_t i = 0, r = 0; i < m; ++i) {
      if (i == skip) continue;
      for (std::size_t j = 0; j + 1 < m; ++j) minor(r, j) = s(i, j);
      ++r;
    }
    Int d = det(minor);
    a[skip] = (skip % 2 == 0) ? d : Int(-d);
  }
  Int g = 0;
  for (const auto& x : a) g = gcd(g, x);
  if (g == 0) return std::nullopt;
  for (auto& x : a) x /= g;
  auto first = std::find_if(a.begin(), a.end(), [](const Int& x) { return x != 0; });
  if (*first < 0)
    for (auto& x : a) x = -x;
  return a;
}

}  // namespace fae
