#pragma once

#include <cstddef>
#include <vector>

#include "hz/field.hpp"
#include "hz/polynomial.hpp"

namespace hz {

/// Square matrix over a valued field, row-major.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t dim);
  static Matrix identity(FieldPtr field, std::size_t dim);

  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return dim_; }

  const Element& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  Element& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix scaled(const Element& c) const;

  bool equals(const Matrix& other) const;

 private:
  void require_compatible(const Matrix& other) const;

  FieldPtr field_;
  std::size_t dim_;
  std::vector<Element> entries_;
};

/// Companion matrix of a monic T of degree d >= 1: ones on the subdiagonal,
/// last column -t_0 .. -t_{d-1}. Its characteristic polynomial is T.
Matrix companion_matrix(const Polynomial& t);

/// det(X I - M), computed division-free (Berkowitz).
Polynomial char_poly(const Matrix& m);

/// Q(M) by Horner's rule.
Matrix mat_poly_eval(const Polynomial& q, const Matrix& m);

}  // namespace hz
