#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>

#include "hz/field.hpp"
#include "hz/hensel_transforms.hpp"
#include "hz/matrix.hpp"
#include "hz/newton_polygon.hpp"
#include "hz/polynomial.hpp"

namespace hz {

/// Representation of an element of an ExtensionField: num(beta) / den(beta)
/// with num, den over the base field, both reduced below deg T, and
/// den(beta) certified nonzero when the element was built.
struct FractionRep {
  std::shared_ptr<const ExtensionField> owner;
  Polynomial num;
  Polynomial den;
};

/// An immediate description x of xi: xi = x (1 + mu) with v(mu) > 0, or Zero for xi = 0.
class ImmediateDescription {
 public:
  static ImmediateDescription zero() { return ImmediateDescription(); }
  explicit ImmediateDescription(Element x) : value_(std::move(x)) {}

  bool is_zero() const { return !value_.has_value(); }
  /// Throws DomainError on Zero.
  const Element& value() const;

  std::string to_string() const { return value_ ? value_->to_string() : "Zero"; }

 private:
  ImmediateDescription() = default;

  std::optional<Element> value_;
};

/// Every intermediate of the zero test / valuation / description computation for Q(beta).
struct DescriptionTrace {
  explicit DescriptionTrace(Polynomial reduced)
      : q(std::move(reduced)), q1(q.field()), q2(q.field()) {}

  Polynomial q;   ///< Q reduced modulo T
  Polynomial q1;  ///< prod (X - Q(beta_i))
  Polynomial q2;  ///< prod (X - (1 - beta_i) Q(beta_i))
  RootValuations q1_roots;
  RootValuations q2_roots;
  bool zero = false;
  Val valuation = Val::infinity();
  // Present only when Q(beta) != 0.
  std::optional<std::size_t> exponent;  ///< m
  std::optional<Polynomial> q3;         ///< prod (X - beta_i^m Q(beta_i))
  std::optional<std::size_t> slope_index;
  ImmediateDescription description = ImmediateDescription::zero();
};

/// The field K[beta] for the special zero beta of a special polynomial T over K.
///
/// Zero tests, valuations and immediate descriptions are computed from
/// characteristic polynomials of the companion matrix of T and Newton polygons
/// over K, so every query reduces to the two predicates of K.
class ExtensionField final : public ValuedField {
 public:
  struct Adjoined {
    FieldPtr field;
    Element generator;
    /// T(1) = 0: beta = 1 and the field is the base itself.
    bool trivial = false;
  };

  /// T must be special over `base` (as checked by SpecialPoly::validate).
  static Adjoined extend(FieldPtr base, const SpecialPoly& t, std::string generator_name = "beta");

  Element add(const Element& x, const Element& y) const override;
  Element sub(const Element& x, const Element& y) const override;
  Element mul(const Element& x, const Element& y) const override;
  Element neg(const Element& x) const override;
  Element div(const Element& x, const Element& y) const override;
  bool is_zero(const Element& x) const override;
  Val val(const Element& x) const override;
  bool contains(const Element& x) const override;
  std::string format(const Element& x) const override;
  std::size_t depth() const override { return base_->depth() + 1; }
  FieldPtr subfield() const override { return base_; }
  const Integer& prime() const override { return base_->prime(); }

  const FieldPtr& base() const { return base_; }
  const SpecialPoly& special() const { return special_; }
  std::size_t degree() const { return special_.degree(); }
  const std::string& generator_name() const { return generator_name_; }
  Element generator() const;

  /// num(beta) / den(beta). Throws DivisionByZero when den(beta) = 0.
  Element fraction(const Polynomial& num, const Polynomial& den) const;
  Element from_polynomial(const Polynomial& num) const;
  /// Numerator and denominator over the base of any element this field contains.
  std::pair<Polynomial, Polynomial> parts(const Element& x) const;

  /// prod over the roots beta_i of T of (X - G(beta_i)): charpoly of G(companion(T)).
  Polynomial char_poly_of_values(const Polynomial& g) const;
  bool is_zero_at(const Polynomial& q) const;
  Val valuation_at(const Polynomial& q) const;
  ImmediateDescription immediate_description(const Polynomial& q) const;
  /// Runs the general algorithm (no constant shortcut, no cache) and keeps every step.
  DescriptionTrace trace_description(const Polynomial& q) const;

  /// Root valuations of T with the special zero's 0 removed; all strictly positive.
  const RootValuations& conjugate_root_valuations() const { return conjugates_; }

 private:
  ExtensionField(FieldPtr base, SpecialPoly t, std::string generator_name);

  struct Analysis {
    bool zero = false;
    Val valuation = Val::infinity();
    RootValuations q1_roots;
    std::optional<ImmediateDescription> description;
  };

  Polynomial reduce(const Polynomial& q) const;
  Analysis analyze(const Polynomial& reduced, bool want_description) const;
  void run_zero_test(DescriptionTrace& trace) const;
  void run_description(DescriptionTrace& trace) const;
  Element canonical(Polynomial num, Polynomial den, bool check_den = false) const;
  bool owns(const Element& x) const { return x.owner() == this; }
  std::shared_ptr<const ExtensionField> self() const;

  FieldPtr base_;
  SpecialPoly special_;
  std::string generator_name_;
  Matrix companion_;
  RootValuations conjugates_;

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<std::string, Analysis> cache_;
};

/// Smallest m >= 1 with m t != u - w for every finite t in `conjugates` and
/// every pair of finite u, w in `q1_roots`.
std::size_t choose_exponent(const RootValuations& conjugates, const RootValuations& q1_roots);

}  // namespace hz
