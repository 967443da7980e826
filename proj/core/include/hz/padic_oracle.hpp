#pragma once

#include <cstddef>

#include "hz/hensel_transforms.hpp"
#include "hz/polynomial.hpp"
#include "hz/rational.hpp"

namespace hz::oracle {

/// Classical Newton-Hensel lifting in Z/p^N. Independent of the
/// Newton-polygon machinery; used to cross-check it.

inline constexpr std::size_t kDefaultPrecision = 50;

/// A p-adic integer known modulo p^precision.
struct ModularApprox {
  Integer residue;  ///< 0 <= residue < p^precision
  Integer p;
  std::size_t precision;

  Integer modulus() const;
};

/// q mod p^n for a p-integral rational. Throws DomainError when p divides the denominator.
Integer residue_of(const Rational& q, const Integer& p, std::size_t n);

/// The root r of P with r = a mod p, known mod p^n. P must have rational,
/// p-integral coefficients and v(P(a)) > 0, v(P'(a)) = 0.
ModularApprox hensel_lift(const Polynomial& poly, const Rational& a, const Integer& p, std::size_t n);

/// Approximation of the special zero (the lift of 1).
ModularApprox special_zero_approx(const SpecialPoly& t, const Integer& p, std::size_t n);

/// Q(x) mod p^n for a p-integral rational polynomial Q.
ModularApprox evaluate(const Polynomial& q, const ModularApprox& x);

enum class CheckVerdict { Pass, Fail, InsufficientPrecision };

/// Whether xi = x (1 + mu) with v(mu) > 0, judged from xi mod p^N:
/// Pass iff xi = x mod p^(v(x)+1). InsufficientPrecision when N < v(x) + 1.
/// A non-integral x cannot describe an integral xi and fails.
CheckVerdict check_description(const ModularApprox& xi, const Rational& x);

const char* to_string(CheckVerdict verdict);

}  // namespace hz::oracle
