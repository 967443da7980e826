#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hz/field.hpp"

namespace hz {

/// Dense univariate polynomial over a valued field. Coefficient i multiplies X^i.
/// The highest stored coefficient is always nonzero (tested with the field's
/// zero predicate), so the zero polynomial has no coefficients.
class Polynomial {
 public:
  explicit Polynomial(FieldPtr field);
  Polynomial(FieldPtr field, std::vector<Element> coeffs);

  static Polynomial constant(FieldPtr field, Element c);
  static Polynomial monomial(FieldPtr field, Element c, std::size_t degree);
  /// The polynomial X.
  static Polynomial x(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Element>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of X^i; zero past the degree.
  Element coeff(std::size_t i) const;
  /// Throws DomainError on the zero polynomial.
  const Element& leading() const;
  bool is_monic() const;

  Element operator()(const Element& x) const;
  Polynomial derivative() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Element& c) const;
  Polynomial pow(std::size_t exponent) const;

  /// Quotient and remainder; the divisor's leading coefficient must be invertible (nonzero).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  /// Remainder modulo a monic polynomial; uses no division.
  Polynomial mod_monic(const Polynomial& modulus) const;

  /// Same coefficients read in a field built on top of this one's.
  Polynomial over(FieldPtr bigger) const;

  /// Semantic equality through the field's zero test.
  bool equals(const Polynomial& other) const { return (*this - other).is_zero(); }

  std::string to_string(std::string_view variable = "x") const;
  void append_key(std::string& out) const;

 private:
  void trim();
  void require_same_field(const Polynomial& other) const;

  FieldPtr field_;
  std::vector<Element> coeffs_;
};

/// P(X + c).
Polynomial poly_shift(const Polynomial& p, const Element& c);
/// P(sX).
Polynomial poly_scale_arg(const Polynomial& p, const Element& s);
/// X^d P(1/X); requires d >= deg P.
Polynomial poly_reverse(const Polynomial& p, std::size_t d);
/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

struct Cofactor {
  Polynomial gcd;
  Polynomial s;
};
/// Monic g = gcd(a, m) with s * a = g mod m; m must be nonzero.
Cofactor gcd_cofactor(const Polynomial& a, const Polynomial& m);

}  // namespace hz
