#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>

#include "hz/rational.hpp"
#include "hz/value_group.hpp"

namespace hz {

class ValuedField;
class ExtensionField;
struct FractionRep;

using FieldPtr = std::shared_ptr<const ValuedField>;

/// A field element, independent of which field handle operates on it.
///
/// Rationals are valid in every field (all fields here have characteristic 0
/// and contain Q). Anything else is a fraction of polynomials in the special
/// zero of some ExtensionField, and is valid in that field and in every field
/// built on top of it.
class Element {
 public:
  Element() = default;
  Element(Rational q) : rep_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  Element(long q) : rep_(Rational(q)) {}       // NOLINT(google-explicit-constructor)
  explicit Element(std::shared_ptr<const FractionRep> fraction) : rep_(std::move(fraction)) {}

  bool is_rational() const { return std::holds_alternative<Rational>(rep_); }
  const Rational& rational() const;
  const FractionRep& fraction() const;

  /// The extension field this element was built in; null for rationals.
  const ExtensionField* owner() const;
  /// Number of special zeros below this element's representation.
  std::size_t level() const;

  /// Structural key; equal keys imply equal elements (not conversely).
  void append_key(std::string& out) const;
  std::string to_string() const;

 private:
  std::variant<Rational, std::shared_ptr<const FractionRep>> rep_;
};

/// A field with exact arithmetic and the two uniform predicates
/// x = 0 and v(x) >= v(y). Every algorithm in the library is written
/// against this interface.
class ValuedField : public std::enable_shared_from_this<ValuedField> {
 public:
  virtual ~ValuedField() = default;

  virtual Element add(const Element& x, const Element& y) const = 0;
  virtual Element sub(const Element& x, const Element& y) const = 0;
  virtual Element mul(const Element& x, const Element& y) const = 0;
  virtual Element neg(const Element& x) const = 0;
  /// Throws DivisionByZero when y = 0.
  virtual Element div(const Element& x, const Element& y) const = 0;

  virtual bool is_zero(const Element& x) const = 0;
  virtual Val val(const Element& x) const = 0;

  /// True when x may be used as an element of this field.
  virtual bool contains(const Element& x) const = 0;
  virtual std::string format(const Element& x) const = 0;

  /// Number of adjoined special zeros between this field and the p-adic rationals.
  virtual std::size_t depth() const = 0;
  /// The field this one was built over; null for the base field.
  virtual FieldPtr subfield() const = 0;
  /// Residue characteristic p of the base valuation.
  virtual const Integer& prime() const = 0;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element inv(const Element& x) const { return div(one(), x); }
  Element pow(const Element& x, long exponent) const;

  bool equal(const Element& x, const Element& y) const { return is_zero(sub(x, y)); }
  /// v(x) >= v(y).
  bool val_ge(const Element& x, const Element& y) const { return val(x) >= val(y); }
  /// x = 1 mod the maximal ideal, i.e. v(x - 1) > 0.
  bool residue_is_one(const Element& x) const { return val(sub(x, one())) > Val(0); }

  /// True when `other` is this field or one of the fields it was built over.
  bool extends(const ValuedField& other) const;
  FieldPtr ptr() const { return shared_from_this(); }
};

/// The field Q with the p-adic valuation.
class PAdicRationals final : public ValuedField {
 public:
  /// Largest p for which primality is proven by trial division.
  static constexpr long kTrialDivisionCap = 1'000'000'000'000L;

  /// Throws DomainError unless p is (probably, above the cap) prime.
  explicit PAdicRationals(Integer p);
  static std::shared_ptr<const PAdicRationals> create(long p);

  Element add(const Element& x, const Element& y) const override;
  Element sub(const Element& x, const Element& y) const override;
  Element mul(const Element& x, const Element& y) const override;
  Element neg(const Element& x) const override;
  Element div(const Element& x, const Element& y) const override;
  bool is_zero(const Element& x) const override;
  Val val(const Element& x) const override;
  bool contains(const Element& x) const override { return x.is_rational(); }
  std::string format(const Element& x) const override;
  std::size_t depth() const override { return 0; }
  FieldPtr subfield() const override { return nullptr; }
  const Integer& prime() const override { return p_; }

  /// False when p exceeded the trial-division cap and only passed a probabilistic test.
  bool primality_proven() const { return proven_; }

 private:
  const Rational& unwrap(const Element& x) const;

  Integer p_;
  bool proven_ = true;
};

/// Exponent of p in x; infinity for x = 0.
Val padic_val(const Rational& x, const Integer& p);

/// Deterministic trial division; only meaningful up to PAdicRationals::kTrialDivisionCap.
bool is_prime_by_trial_division(const Integer& n);

}  // namespace hz
