#include "hz/hensel_transforms.hpp"

#include <algorithm>

#include "hz/newton_polygon.hpp"

namespace hz {

HenselCode validate_hensel_code(const Polynomial& p, const Element& a) {
  using Reason = InvalidHenselCode::Reason;
  const auto& f = *p.field();
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (f.val(p.coeffs()[i]) < Val(0))
      throw InvalidHenselCode(Reason::CoefficientNotIntegral,
                              "coefficient of x^" + std::to_string(i) + " not in valuation ring");
  if (f.val(a) < Val(0)) throw InvalidHenselCode(Reason::ApproxNotIntegral, "a not in valuation ring");
  if (f.val(p(a)) <= Val(0)) throw InvalidHenselCode(Reason::ValueNotInMaximalIdeal, "P(a) not in maximal ideal");
  if (f.val(p.derivative()(a)) != Val(0)) throw InvalidHenselCode(Reason::DerivativeNotUnit, "P'(a) not a unit");
  return {p, a};
}

ShiftedCode shift_to_isolated_slope(const HenselCode& code) {
  const auto& f = *code.poly.field();
  ShiftedCode out{poly_shift(code.poly, code.approx), 0, Val::infinity()};
  // After the shift p_0 = P(a) and p_1 = P'(a), a unit, so (1, 0) is a vertex
  // and the slope from 0 to 1 is isolated.
  out.root_valuation = f.val(out.shifted.coeff(0)) - f.val(out.shifted.coeff(1));
  return out;
}

namespace {

bool slope_is_isolated(const Polynomial& p, std::size_t k) {
  const auto slopes = isolated_segments(newton_polygon(p));
  return std::any_of(slopes.begin(), slopes.end(), [k](const IsolatedSlope& s) { return s.k == k; });
}

}  // namespace

Element immediate_from_isolated_slope(const Polynomial& p, std::size_t k) {
  if (!slope_is_isolated(p, k)) throw DomainError("slope at k = " + std::to_string(k) + " is not isolated");
  const auto& f = *p.field();
  if (f.is_zero(p.coeff(k))) return f.zero();
  return f.neg(f.div(p.coeff(k), p.coeff(k + 1)));
}

Polynomial unit_factor_polynomial(const Polynomial& p, std::size_t k) {
  if (!slope_is_isolated(p, k)) throw DomainError("slope at k = " + std::to_string(k) + " is not isolated");
  const auto& f = *p.field();
  const Element& pk = p.coeff(k);
  const Element& pk1 = p.coeff(k + 1);
  if (f.is_zero(pk)) throw DomainError("p_k = 0: the slope's root is 0, no unit factor");
  const Element scale = f.div(f.pow(pk1, static_cast<long>(k)), f.pow(pk, static_cast<long>(k) + 1));
  return poly_scale_arg(p, f.neg(f.div(pk, pk1))).scaled(scale);
}

SpecialPoly SpecialPoly::validate(Polynomial t) {
  const auto& f = *t.field();
  if (t.degree() < 1) throw NotSpecial("special polynomial needs degree >= 1");
  if (!t.is_monic()) throw NotSpecial("special polynomial must be monic");
  const auto d = static_cast<std::size_t>(t.degree());
  if (!f.equal(t.coeff(d - 1), Element(-1))) throw NotSpecial("coefficient of x^(d-1) must be -1");
  for (std::size_t i = 0; i + 1 < d; ++i)
    if (f.val(t.coeff(i)) <= Val(0))
      throw NotSpecial("coefficient of x^" + std::to_string(i) + " not in maximal ideal");
  return SpecialPoly(std::move(t));
}

Element MobiusForm::determinant(const ValuedField& f) const { return f.sub(f.mul(a, d), f.mul(b, c)); }

Element MobiusForm::apply(const ValuedField& f, const Element& x) const {
  return f.div(f.add(f.mul(a, x), b), f.add(f.mul(c, x), d));
}

MobiusForm MobiusForm::compose(const ValuedField& f, const MobiusForm& outer, const MobiusForm& inner) {
  auto dot = [&f](const Element& x1, const Element& y1, const Element& x2, const Element& y2) {
    return f.add(f.mul(x1, y1), f.mul(x2, y2));
  };
  return {dot(outer.a, inner.a, outer.b, inner.c), dot(outer.a, inner.b, outer.b, inner.d),
          dot(outer.c, inner.a, outer.d, inner.c), dot(outer.c, inner.b, outer.d, inner.d)};
}

MobiusForm MobiusForm::normalized() const {
  const Element* entries[] = {&a, &b, &c, &d};
  for (const auto* e : entries)
    if (!e->is_rational()) return *this;
  Integer lcm_den = 1;
  for (const auto* e : entries) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), e->rational().denominator().get_mpz_t());
  Integer common = 0;
  Integer ints[4];
  for (int i = 0; i < 4; ++i) {
    const Rational scaled = entries[i]->rational() * Rational(lcm_den);
    ints[i] = scaled.numerator();
    mpz_gcd(common.get_mpz_t(), common.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (common == 0) return *this;
  const int sign_source = ints[2] != 0 ? sgn(ints[2]) : sgn(ints[3]);
  if (sign_source < 0) common = -common;
  auto entry = [&](int i) { return Element(Rational(Integer(ints[i] / common))); };
  return {entry(0), entry(1), entry(2), entry(3)};
}

std::string MobiusForm::to_string(const ValuedField& f, std::string_view variable) const {
  const auto field = f.ptr();
  const Polynomial num(field, {b, a});
  const Polynomial den(field, {d, c});
  return "(" + num.to_string(variable) + ")/(" + den.to_string(variable) + ")";
}

SpecialOutcome specialize(const Polynomial& q) {
  const auto& field = q.field();
  const auto& f = *field;
  validate_hensel_code(q, f.one());

  Polynomial r = poly_shift(q, f.one());
  const Element r0 = r.coeff(0);
  const Element r1 = r.coeff(1);
  if (f.is_zero(r0)) return {SpecialOutcome::Exact{f.one()}};

  Polynomial s = poly_scale_arg(r, f.neg(f.div(r0, r1))).scaled(f.inv(r0));
  const auto d = static_cast<std::size_t>(q.degree());
  Polynomial t = poly_reverse(s, d);
  try {
    auto special = SpecialPoly::validate(std::move(t));
    MobiusForm nu{r1, f.neg(r0), r1, f.zero()};
    return {SpecialOutcome::Extended{std::move(r), std::move(s), std::move(special), nu}};
  } catch (const NotSpecial& e) {
    throw InternalError(std::string("specialization produced a non-special polynomial: ") + e.what());
  }
}

}  // namespace hz
