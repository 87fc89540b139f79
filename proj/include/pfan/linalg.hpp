#pragma once

// Exact rational linear algebra over arbitrary-precision integers.

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pfan {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit RationalMatrix(const std::vector<RationalVector>& rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const;
  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix operator-(const RationalMatrix& other) const;
  RationalVector apply(const RationalVector& v) const;
  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalVector to_rational(const IntVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);
Integer dot(const IntVector& a, const IntVector& b);
bool is_zero(const RationalVector& v);
bool is_zero(const IntVector& v);

/// Scales v to the unique primitive integer vector on the same open ray.
IntVector primitive_ray(const RationalVector& v);
IntVector primitive_ray(const IntVector& v);

/// Row echelon data of a matrix given by rows.
struct EchelonForm {
  std::vector<RationalVector> rows;  ///< nonzero rows of the reduced row echelon form
  std::vector<std::size_t> pivots;
};

EchelonForm rref(const std::vector<RationalVector>& rows, std::size_t ncols);
std::size_t rank(const std::vector<RationalVector>& rows, std::size_t ncols);
std::size_t rank(const std::vector<IntVector>& rows, std::size_t ncols);

/// Basis of {x : r.x = 0 for all rows r}, as primitive integer vectors.
std::vector<IntVector> null_space(const std::vector<IntVector>& rows, std::size_t ncols);

/// Inverse of a square matrix; throws DependentBasis if singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Orthogonal projection onto span(basis)^perp: I - B^T (B B^T)^{-1} B.
RationalMatrix complement_projection(const std::vector<RationalVector>& basis, std::size_t n);
RationalMatrix complement_projection(const std::vector<IntVector>& basis, std::size_t n);

/// True iff the two families span the same subspace.
bool span_equal(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b);
bool span_equal(const std::vector<IntVector>& a, const std::vector<IntVector>& b);

/// Orthogonal (not normalized) basis of span(vectors) by Gram-Schmidt.
std::vector<RationalVector> gram_schmidt(const std::vector<RationalVector>& vectors);

std::string to_string(const IntVector& v);

}  // namespace pfan
