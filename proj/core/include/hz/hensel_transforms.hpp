#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "hz/errors.hpp"
#include "hz/polynomial.hpp"

namespace hz {

/// A pair (P, a) with P in V[X], a in V, v(P(a)) > 0 and v(P'(a)) = 0.
/// It determines a unique root alpha of P with alpha - a in the maximal ideal.
struct HenselCode {
  Polynomial poly;
  Element approx;
};

class InvalidHenselCode : public DomainError {
 public:
  enum class Reason { CoefficientNotIntegral, ApproxNotIntegral, ValueNotInMaximalIdeal, DerivativeNotUnit };

  InvalidHenselCode(Reason reason, const std::string& message) : DomainError(message), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// Checks every condition on a Hensel code; the thrown message names the failed one.
HenselCode validate_hensel_code(const Polynomial& p, const Element& a);

struct ShiftedCode {
  /// P(X + a).
  Polynomial shifted;
  /// Left index of the isolated slope carrying the root; always 0.
  std::size_t k = 0;
  /// v(alpha - a) = v(P(a)) - v(P'(a)); infinite when P(a) = 0.
  Val root_valuation;
};

ShiftedCode shift_to_isolated_slope(const HenselCode& code);

/// -p_k / p_{k+1} for an isolated slope from k to k + 1; zero when p_k = 0.
/// Throws DomainError when that slope is not isolated.
Element immediate_from_isolated_slope(const Polynomial& p, std::size_t k);

/// Q(Y) = p_{k+1}^k / p_k^{k+1} * P(-(p_k / p_{k+1}) Y), whose unit root nu gives
/// the slope's root as -(p_k / p_{k+1}) nu. Requires an isolated slope and p_k != 0.
Polynomial unit_factor_polynomial(const Polynomial& p, std::size_t k);

class NotSpecial : public DomainError {
 public:
  using DomainError::DomainError;
};

/// X^d - X^{d-1} + t_{d-2} X^{d-2} + ... + t_0 with every t_i in the maximal ideal.
/// Its special zero is the root congruent to 1; all other roots lie in the maximal ideal.
class SpecialPoly {
 public:
  /// Throws NotSpecial naming the violated condition.
  static SpecialPoly validate(Polynomial t);

  const Polynomial& poly() const { return poly_; }
  std::size_t degree() const { return static_cast<std::size_t>(poly_.degree()); }
  const FieldPtr& field() const { return poly_.field(); }

 private:
  explicit SpecialPoly(Polynomial t) : poly_(std::move(t)) {}

  Polynomial poly_;
};

/// x -> (a x + b) / (c x + d), stored as the matrix [[a, b], [c, d]].
struct MobiusForm {
  Element a, b, c, d;

  static MobiusForm identity() { return {Element(1), Element(0), Element(0), Element(1)}; }

  Element determinant(const ValuedField& f) const;
  Element apply(const ValuedField& f, const Element& x) const;
  /// The map x -> outer(inner(x)).
  static MobiusForm compose(const ValuedField& f, const MobiusForm& outer, const MobiusForm& inner);
  /// When all four entries are rational: rescaled to coprime integers with the
  /// first nonzero of (c, d) positive. Otherwise returned unchanged.
  MobiusForm normalized() const;

  std::string to_string(const ValuedField& f, std::string_view variable) const;
};

/// Result of the R -> S -> T chain applied to a unit-root code (Q, 1).
struct SpecialOutcome {
  /// r_0 = 0: the unit root is exactly 1.
  struct Exact {
    Element value;
  };
  struct Extended {
    Polynomial r;  ///< Q(1 + X)
    Polynomial s;  ///< (1/r_0) R(-r_0 X / r_1)
    SpecialPoly special;
    /// nu = (r_1 beta - r_0) / (r_1 beta) for the special zero beta.
    MobiusForm mobius;
  };

  std::variant<Exact, Extended> value;

  bool is_exact() const { return std::holds_alternative<Exact>(value); }
  const Exact& exact() const { return std::get<Exact>(value); }
  const Extended& extended() const { return std::get<Extended>(value); }
};

/// Requires (Q, 1) to be a Hensel code; throws InvalidHenselCode otherwise.
SpecialOutcome specialize(const Polynomial& q);

}  // namespace hz
