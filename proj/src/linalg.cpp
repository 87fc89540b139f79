#include "pfan/linalg.hpp"

#include <sstream>

#include "pfan/error.hpp"

namespace pfan {

RationalMatrix::RationalMatrix(const std::vector<RationalVector>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()), data_(rows_ * cols_) {
  for (std::size_t i = 0; i < rows_; ++i) {
    if (rows[i].size() != cols_) throw Error("DimensionMismatch", "ragged matrix rows");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = rows[i][j];
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::row(std::size_t i) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw Error("DimensionMismatch", "matrix product shape");
  RationalMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("DimensionMismatch", "matrix difference shape");
  RationalMatrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw Error("DimensionMismatch", "matrix-vector shape");
  RationalVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

RationalVector to_rational(const IntVector& v) {
  RationalVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error("DimensionMismatch", "dot product of different lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error("DimensionMismatch", "dot product of different lengths");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

IntVector primitive_ray(const RationalVector& v) {
  if (is_zero(v)) throw Error("ZeroVector", "primitive_ray of the zero vector");
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(x)));
  IntVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = boost::multiprecision::numerator(v[i]) * (l / boost::multiprecision::denominator(v[i]));
    g = boost::multiprecision::gcd(g, out[i]);
  }
  if (g < 0) g = -g;
  for (auto& x : out) x /= g;
  return out;
}

IntVector primitive_ray(const IntVector& v) {
  if (is_zero(v)) throw Error("ZeroVector", "primitive_ray of the zero vector");
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  if (g < 0) g = -g;
  IntVector out(v);
  for (auto& x : out) x /= g;
  return out;
}

EchelonForm rref(const std::vector<RationalVector>& input, std::size_t ncols) {
  std::vector<RationalVector> m = input;
  for (const auto& r : m)
    if (r.size() != ncols) throw Error("DimensionMismatch", "row length differs from column count");
  EchelonForm out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const std::vector<RationalVector>& rows, std::size_t ncols) {
  return rref(rows, ncols).pivots.size();
}

std::size_t rank(const std::vector<IntVector>& rows, std::size_t ncols) {
  std::vector<RationalVector> r;
  r.reserve(rows.size());
  for (const auto& v : rows) r.push_back(to_rational(v));
  return rank(r, ncols);
}

std::vector<IntVector> null_space(const std::vector<IntVector>& rows, std::size_t ncols) {
  std::vector<RationalVector> r;
  for (const auto& v : rows) r.push_back(to_rational(v));
  EchelonForm e = rref(r, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<IntVector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(ncols);
    x[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(primitive_ray(x));
  }
  return basis;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error("DimensionMismatch", "inverse of a non-square matrix");
  std::vector<RationalVector> aug(n, RationalVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m(i, j);
    aug[i][n + i] = 1;
  }
  EchelonForm e = rref(aug, 2 * n);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw Error("DependentBasis", "matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rows[i][n + j];
  return inv;
}

RationalMatrix complement_projection(const std::vector<RationalVector>& basis, std::size_t n) {
  for (const auto& b : basis)
    if (b.size() != n) throw Error("DimensionMismatch", "basis vector length differs from ambient dimension");
  if (basis.empty()) return RationalMatrix::identity(n);
  RationalMatrix b(basis);
  RationalMatrix gram = b * b.transpose();
  RationalMatrix gi;
  try {
    gi = inverse(gram);
  } catch (const Error&) {
    throw Error("DependentBasis", "projection basis is linearly dependent");
  }
  return RationalMatrix::identity(n) - b.transpose() * gi * b;
}

RationalMatrix complement_projection(const std::vector<IntVector>& basis, std::size_t n) {
  std::vector<RationalVector> r;
  for (const auto& v : basis) r.push_back(to_rational(v));
  return complement_projection(r, n);
}

bool span_equal(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b) {
  std::size_t n = 0;
  bool have = false;
  for (const auto* fam : {&a, &b})
    for (const auto& v : *fam) {
      if (have && v.size() != n) throw Error("DimensionMismatch", "vectors of different lengths");
      n = v.size();
      have = true;
    }
  std::vector<RationalVector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  std::size_t ra = rank(a, n), rb = rank(b, n), rab = rank(both, n);
  return ra == rab && rb == rab;
}

bool span_equal(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
  std::vector<RationalVector> ra, rb;
  for (const auto& v : a) ra.push_back(to_rational(v));
  for (const auto& v : b) rb.push_back(to_rational(v));
  return span_equal(ra, rb);
}

std::vector<RationalVector> gram_schmidt(const std::vector<RationalVector>& vectors) {
  std::vector<RationalVector> out;
  for (const auto& v : vectors) {
    RationalVector w = v;
    for (const auto& u : out) {
      Rational c = dot(w, u) / dot(u, u);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * u[i];
    }
    if (!is_zero(w)) out.push_back(std::move(w));
  }
  return out;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace pfan
