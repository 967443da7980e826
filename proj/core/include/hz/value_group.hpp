#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>

#include "hz/rational.hpp"

namespace hz {

/// Element of the divisible hull of the value group (here Q) with infinity adjoined.
/// Infinity is the valuation of zero and compares above every finite value.
class Val {
 public:
  Val(const Rational& q) : value_(q) {}  // NOLINT(google-explicit-constructor)
  Val(long q) : value_(Rational(q)) {}   // NOLINT(google-explicit-constructor)

  static Val infinity() { return Val(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  /// The finite value. Throws DomainError on infinity.
  const Rational& finite() const;

  /// Scaling by a rational: integer multiples stay in the value group,
  /// other rationals land in its divisible hull. Infinity scales only by m > 0.
  Val scaled(const Rational& m) const;

  std::string to_string() const;

  friend Val operator+(const Val& a, const Val& b);
  /// a - b for finite b.
  friend Val operator-(const Val& a, const Val& b);

  friend bool operator==(const Val& a, const Val& b) = default;
  friend std::strong_ordering operator<=>(const Val& a, const Val& b);

 private:
  Val() = default;

  std::optional<Rational> value_;
};

std::ostream& operator<<(std::ostream& os, const Val& v);

}  // namespace hz
