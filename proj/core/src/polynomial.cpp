#include "hz/polynomial.hpp"

#include <algorithm>

#include "hz/errors.hpp"

namespace hz {

Polynomial::Polynomial(FieldPtr field) : field_(std::move(field)) {}

Polynomial::Polynomial(FieldPtr field, std::vector<Element> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!field_->contains(c)) throw DomainError("coefficient " + c.to_string() + " is foreign to the field");
  trim();
}

Polynomial Polynomial::constant(FieldPtr field, Element c) {
  return Polynomial(std::move(field), std::vector<Element>{std::move(c)});
}

Polynomial Polynomial::monomial(FieldPtr field, Element c, std::size_t degree) {
  std::vector<Element> coeffs(degree + 1, Element(0));
  coeffs[degree] = std::move(c);
  return Polynomial(std::move(field), std::move(coeffs));
}

Polynomial Polynomial::x(FieldPtr field) { return monomial(std::move(field), Element(1), 1); }

void Polynomial::trim() {
  while (!coeffs_.empty() && field_->is_zero(coeffs_.back())) coeffs_.pop_back();
}

void Polynomial::require_same_field(const Polynomial& other) const {
  if (field_ != other.field_) throw DomainError("polynomials over different fields");
}

Element Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Element(0); }

const Element& Polynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool Polynomial::is_monic() const { return !is_zero() && field_->equal(leading(), field_->one()); }

Element Polynomial::operator()(const Element& x) const {
  Element acc = field_->zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_->add(field_->mul(acc, x), *it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Element> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out.push_back(field_->mul(Element(static_cast<long>(i)), coeffs_[i]));
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Element> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(field_->neg(c));
  return Polynomial(field_, std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  a.require_same_field(b);
  const auto n = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::vector<Element> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= a.coeffs_.size())
      out.push_back(b.coeffs_[i]);
    else if (i >= b.coeffs_.size())
      out.push_back(a.coeffs_[i]);
    else
      out.push_back(a.field_->add(a.coeffs_[i], b.coeffs_[i]));
  }
  return Polynomial(a.field_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_field(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  const auto& f = *a.field_;
  std::vector<Element> out(a.coeffs_.size() + b.coeffs_.size() - 1, Element(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
  return Polynomial(a.field_, std::move(out));
}

Polynomial Polynomial::scaled(const Element& c) const {
  std::vector<Element> out;
  out.reserve(coeffs_.size());
  for (const auto& x : coeffs_) out.push_back(field_->mul(c, x));
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::pow(std::size_t exponent) const {
  Polynomial result = constant(field_, Element(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  require_same_field(divisor);
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  const auto& f = *field_;
  const auto dd = static_cast<std::size_t>(divisor.degree());
  const Element lead_inv = f.inv(divisor.leading());
  std::vector<Element> rem = coeffs_;
  std::vector<Element> quot(rem.size() >= dd + 1 ? rem.size() - dd : 0, Element(0));
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (f.is_zero(rem[k])) continue;
    const Element q = f.mul(rem[k], lead_inv);
    quot[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] = f.sub(rem[k - dd + j], f.mul(q, divisor.coeffs_[j]));
    rem[k] = f.zero();
  }
  rem.resize(std::min(rem.size(), dd));
  return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

Polynomial Polynomial::mod_monic(const Polynomial& modulus) const {
  require_same_field(modulus);
  if (modulus.is_zero()) throw DivisionByZero("reduction modulo the zero polynomial");
  const auto& f = *field_;
  const auto dd = static_cast<std::size_t>(modulus.degree());
  if (coeffs_.size() <= dd) return *this;
  std::vector<Element> rem = coeffs_;
  // The modulus is monic, so each step subtracts rem[k] * X^(k-d) * modulus.
  for (std::size_t k = rem.size(); k-- > dd;) {
    const Element q = rem[k];
    for (std::size_t j = 0; j < dd; ++j) rem[k - dd + j] = f.sub(rem[k - dd + j], f.mul(q, modulus.coeffs_[j]));
  }
  rem.resize(dd);
  return Polynomial(field_, std::move(rem));
}

Polynomial Polynomial::over(FieldPtr bigger) const {
  if (!bigger->extends(*field_)) throw DomainError("target field does not contain the coefficient field");
  Polynomial p(std::move(bigger));
  p.coeffs_ = coeffs_;
  return p;
}

std::string Polynomial::to_string(std::string_view variable) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Element& c = coeffs_[k];
    if (field_->is_zero(c)) continue;
    std::string text;
    bool negative = false;
    if (c.is_rational()) {
      negative = c.rational().sign() < 0;
      const Rational mag = c.rational().abs();
      if (k == 0 || mag != Rational(1)) text = mag.to_string();
    } else {
      text = "(" + field_->format(c) + ")";
    }
    std::string term = text;
    if (k > 0) {
      if (!term.empty()) term += "*";
      term += std::string(variable);
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

void Polynomial::append_key(std::string& out) const {
  out += '[';
  for (const auto& c : coeffs_) {
    c.append_key(out);
    out += ';';
  }
  out += ']';
}

Polynomial poly_shift(const Polynomial& p, const Element& c) {
  // Horner in the polynomial ring: ((a_d (X+c) + a_{d-1}) (X+c) + ...)
  const auto& field = p.field();
  const Polynomial x_plus_c(field, {c, Element(1)});
  Polynomial acc(field);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * x_plus_c + Polynomial::constant(field, *it);
  return acc;
}

Polynomial poly_scale_arg(const Polynomial& p, const Element& s) {
  const auto& f = *p.field();
  std::vector<Element> out;
  Element power = f.one();
  for (const auto& c : p.coeffs()) {
    out.push_back(f.mul(c, power));
    power = f.mul(power, s);
  }
  return Polynomial(p.field(), std::move(out));
}

Polynomial poly_reverse(const Polynomial& p, std::size_t d) {
  if (p.degree() > static_cast<long>(d))
    throw DomainError("reversal length " + std::to_string(d) + " below degree " + std::to_string(p.degree()));
  std::vector<Element> out(d + 1, Element(0));
  for (std::size_t i = 0; i <= d; ++i) out[d - i] = p.coeff(i);
  return Polynomial(p.field(), std::move(out));
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(a.field()->inv(a.leading()));
}

Cofactor gcd_cofactor(const Polynomial& a, const Polynomial& m) {
  const auto& field = a.field();
  Polynomial r0 = m, r1 = a.is_zero() ? a : a.divmod(m).second;
  Polynomial s0(field), s1 = Polynomial::constant(field, Element(1));
  while (!r1.is_zero()) {
    auto [quot, rem] = r0.divmod(r1);
    Polynomial s2 = s0 - quot * s1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const Element lead_inv = field->inv(r0.leading());
  return {r0.scaled(lead_inv), s0.scaled(lead_inv).divmod(m).second};
}

}  // namespace hz
