#include "hz/padic_oracle.hpp"

#include <algorithm>

#include "hz/errors.hpp"

namespace hz::oracle {

namespace {

Integer power(const Integer& p, std::size_t n) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), n);
  return out;
}

Integer mod(const Integer& x, const Integer& m) {
  Integer out;
  mpz_mod(out.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return out;
}

Integer inverse_mod(const Integer& x, const Integer& m) {
  Integer out;
  if (mpz_invert(out.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0) throw DomainError("not invertible mod p^N");
  return out;
}

std::vector<Rational> rational_coeffs(const Polynomial& poly, const Integer& p) {
  std::vector<Rational> out;
  for (const auto& c : poly.coeffs()) {
    if (!c.is_rational()) throw DomainError("oracle needs rational coefficients");
    if (padic_val(c.rational(), p) < Val(0)) throw DomainError("oracle needs p-integral coefficients");
    out.push_back(c.rational());
  }
  return out;
}

Integer eval_mod(const std::vector<Integer>& coeffs, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = mod(acc * x + *it, m);
  return acc;
}

}  // namespace

Integer ModularApprox::modulus() const { return power(p, precision); }

Integer residue_of(const Rational& q, const Integer& p, std::size_t n) {
  const Integer m = power(p, n);
  if (mod(q.denominator(), p) == 0) throw DomainError("p divides the denominator of " + q.to_string());
  return mod(mod(q.numerator(), m) * inverse_mod(q.denominator(), m), m);
}

ModularApprox hensel_lift(const Polynomial& poly, const Rational& a, const Integer& p, std::size_t n) {
  if (n == 0) throw DomainError("precision must be positive");
  const auto coeffs = rational_coeffs(poly, p);
  if (padic_val(a, p) < Val(0)) throw DomainError("a must be p-integral");
  std::vector<Rational> deriv;
  for (std::size_t i = 1; i < coeffs.size(); ++i) deriv.push_back(coeffs[i] * Rational(static_cast<long>(i)));
  auto horner = [&a](const std::vector<Rational>& c) {
    Rational acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + *it;
    return acc;
  };
  if (padic_val(horner(coeffs), p) <= Val(0)) throw DomainError("P(a) not in maximal ideal");
  if (padic_val(horner(deriv), p) != Val(0)) throw DomainError("P'(a) not a unit");

  // Newton step r <- r - P(r)/P'(r): correct mod p^k becomes correct mod p^2k.
  std::size_t known = 1;
  Integer r = residue_of(a, p, n);
  while (known < n) {
    known = std::min(2 * known, n);
    const Integer m = power(p, known);
    std::vector<Integer> pc;
    std::vector<Integer> dc;
    for (const auto& c : coeffs) pc.push_back(residue_of(c, p, known));
    for (const auto& c : deriv) dc.push_back(residue_of(c, p, known));
    const Integer fx = eval_mod(pc, r, m);
    const Integer dfx = eval_mod(dc, r, m);
    r = mod(r - fx * inverse_mod(dfx, m), m);
  }
  return {mod(r, power(p, n)), p, n};
}

ModularApprox special_zero_approx(const SpecialPoly& t, const Integer& p, std::size_t n) {
  return hensel_lift(t.poly(), Rational(1), p, n);
}

ModularApprox evaluate(const Polynomial& q, const ModularApprox& x) {
  const auto coeffs = rational_coeffs(q, x.p);
  std::vector<Integer> residues;
  for (const auto& c : coeffs) residues.push_back(residue_of(c, x.p, x.precision));
  return {eval_mod(residues, x.residue, x.modulus()), x.p, x.precision};
}

CheckVerdict check_description(const ModularApprox& xi, const Rational& x) {
  if (x.is_zero()) throw DomainError("zero is not an immediate description");
  const Val v = padic_val(x, xi.p);
  if (v < Val(0)) return CheckVerdict::Fail;
  const auto needed = static_cast<std::size_t>(v.finite().numerator().get_ui()) + 1;
  if (xi.precision < needed) return CheckVerdict::InsufficientPrecision;
  const Integer m = power(xi.p, needed);
  return mod(xi.residue - residue_of(x, xi.p, needed), m) == 0 ? CheckVerdict::Pass : CheckVerdict::Fail;
}

const char* to_string(CheckVerdict verdict) {
  switch (verdict) {
    case CheckVerdict::Pass: return "pass";
    case CheckVerdict::Fail: return "fail";
    case CheckVerdict::InsufficientPrecision: return "insufficient precision";
  }
  return "?";
}

}  // namespace hz::oracle
