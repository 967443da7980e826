#include "hz/errors.hpp"
#include "hz/field.hpp"

namespace hz {

Element ValuedField::pow(const Element& x, long exponent) const {
  if (exponent < 0) return pow(inv(x), -exponent);
  Element result = one();
  Element base = x;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

bool ValuedField::extends(const ValuedField& other) const {
  for (const ValuedField* f = this; f != nullptr; f = f->subfield().get())
    if (f == &other) return true;
  return false;
}

Val padic_val(const Rational& x, const Integer& p) {
  if (x.is_zero()) return Val::infinity();
  Integer rest;
  const auto up = mpz_remove(rest.get_mpz_t(), x.mpq().get_num_mpz_t(), p.get_mpz_t());
  const auto down = mpz_remove(rest.get_mpz_t(), x.mpq().get_den_mpz_t(), p.get_mpz_t());
  return Val(static_cast<long>(up) - static_cast<long>(down));
}

bool is_prime_by_trial_division(const Integer& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Integer d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PAdicRationals::PAdicRationals(Integer p) : p_(std::move(p)) {
  if (p_ <= PAdicRationals::kTrialDivisionCap) {
    if (!is_prime_by_trial_division(p_)) throw DomainError("p = " + p_.get_str() + " is not prime");
  } else {
    if (mpz_probab_prime_p(p_.get_mpz_t(), 40) == 0)
      throw DomainError("p = " + p_.get_str() + " is not prime");
    proven_ = false;
  }
}

std::shared_ptr<const PAdicRationals> PAdicRationals::create(long p) {
  return std::make_shared<const PAdicRationals>(Integer(p));
}

const Rational& PAdicRationals::unwrap(const Element& x) const {
  if (!x.is_rational()) throw DomainError("element does not belong to the p-adic rationals");
  return x.rational();
}

Element PAdicRationals::add(const Element& x, const Element& y) const { return unwrap(x) + unwrap(y); }
Element PAdicRationals::sub(const Element& x, const Element& y) const { return unwrap(x) - unwrap(y); }
Element PAdicRationals::mul(const Element& x, const Element& y) const { return unwrap(x) * unwrap(y); }
Element PAdicRationals::neg(const Element& x) const { return -unwrap(x); }
Element PAdicRationals::div(const Element& x, const Element& y) const { return unwrap(x) / unwrap(y); }
bool PAdicRationals::is_zero(const Element& x) const { return unwrap(x).is_zero(); }
Val PAdicRationals::val(const Element& x) const { return padic_val(unwrap(x), p_); }
std::string PAdicRationals::format(const Element& x) const { return unwrap(x).to_string(); }

}  // namespace hz
