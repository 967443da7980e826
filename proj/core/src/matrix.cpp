#include "hz/matrix.hpp"

#include "hz/errors.hpp"

namespace hz {

Matrix::Matrix(FieldPtr field, std::size_t dim)
    : field_(std::move(field)), dim_(dim), entries_(dim * dim, Element(0)) {}

Matrix Matrix::identity(FieldPtr field, std::size_t dim) {
  Matrix m(std::move(field), dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Element(1);
  return m;
}

void Matrix::require_compatible(const Matrix& other) const {
  if (dim_ != other.dim_) throw DomainError("matrix dimension mismatch");
  if (field_ != other.field_) throw DomainError("matrices over different fields");
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  a.require_compatible(b);
  Matrix out(a.field_, a.dim_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = a.field_->add(a.entries_[i], b.entries_[i]);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  a.require_compatible(b);
  Matrix out(a.field_, a.dim_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = a.field_->sub(a.entries_[i], b.entries_[i]);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  a.require_compatible(b);
  const auto& f = *a.field_;
  const auto n = a.dim_;
  Matrix out(a.field_, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Element& aik = a.at(i, k);
      if (aik.is_rational() && aik.rational().is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(aik, b.at(k, j)));
    }
  return out;
}

Matrix Matrix::scaled(const Element& c) const {
  Matrix out(field_, dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = field_->mul(c, entries_[i]);
  return out;
}

bool Matrix::equals(const Matrix& other) const {
  require_compatible(other);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!field_->equal(entries_[i], other.entries_[i])) return false;
  return true;
}

Matrix companion_matrix(const Polynomial& t) {
  if (t.degree() < 1) throw DomainError("companion matrix needs degree >= 1");
  if (!t.is_monic()) throw DomainError("companion matrix needs a monic polynomial");
  const auto d = static_cast<std::size_t>(t.degree());
  const auto& f = *t.field();
  Matrix m(t.field(), d);
  for (std::size_t i = 0; i + 1 < d; ++i) m.at(i + 1, i) = Element(1);
  for (std::size_t i = 0; i < d; ++i) m.at(i, d - 1) = f.neg(t.coeff(i));
  return m;
}

Polynomial char_poly(const Matrix& m) {
  const auto& f = *m.field();
  const auto n = m.dim();
  // Coefficients in descending order; starts as the characteristic polynomial of the empty matrix.
  std::vector<Element> poly{f.one()};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column for the leading (r+1)x(r+1) block:
    // 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C with A the leading r x r block,
    // R = row r left of the diagonal, C = column r above the diagonal.
    std::vector<Element> toeplitz{f.one(), f.neg(m.at(r, r))};
    std::vector<Element> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = m.at(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Element dot = f.zero();
      for (std::size_t i = 0; i < r; ++i) dot = f.add(dot, f.mul(m.at(r, i), col[i]));
      toeplitz.push_back(f.neg(dot));
      if (k + 1 == r) break;
      std::vector<Element> next(r, Element(0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] = f.add(next[i], f.mul(m.at(i, j), col[j]));
      col = std::move(next);
    }
    std::vector<Element> next_poly(r + 2, Element(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j)
        next_poly[i] = f.add(next_poly[i], f.mul(toeplitz[i - j], poly[j]));
    poly = std::move(next_poly);
  }
  return Polynomial(m.field(), std::vector<Element>(poly.rbegin(), poly.rend()));
}

Matrix mat_poly_eval(const Polynomial& q, const Matrix& m) {
  if (q.field() != m.field() && !m.field()->extends(*q.field()))
    throw DomainError("polynomial and matrix over incompatible fields");
  const auto& f = *m.field();
  Matrix acc(m.field(), m.dim());
  const auto id = Matrix::identity(m.field(), m.dim());
  for (auto it = q.coeffs().rbegin(); it != q.coeffs().rend(); ++it) {
    acc = acc * m;
    if (!f.is_zero(*it)) acc = acc + id.scaled(*it);
  }
  return acc;
}

}  // namespace hz
