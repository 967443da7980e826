#include "hz/value_group.hpp"

#include <ostream>

#include "hz/errors.hpp"

namespace hz {

const Rational& Val::finite() const {
  if (!value_) throw DomainError("finite value requested from infinity");
  return *value_;
}

Val Val::scaled(const Rational& m) const {
  if (!value_) {
    if (m.sign() <= 0) throw DomainError("infinity scaled by a nonpositive rational");
    return infinity();
  }
  return Val(*value_ * m);
}

std::string Val::to_string() const { return value_ ? value_->to_string() : "∞"; }

Val operator+(const Val& a, const Val& b) {
  if (a.is_infinite() || b.is_infinite()) return Val::infinity();
  return Val(*a.value_ + *b.value_);
}

Val operator-(const Val& a, const Val& b) {
  if (b.is_infinite()) throw DomainError("subtracting infinity from a valuation");
  if (a.is_infinite()) return Val::infinity();
  return Val(*a.value_ - *b.value_);
}

std::strong_ordering operator<=>(const Val& a, const Val& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
  return *a.value_ <=> *b.value_;
}

std::ostream& operator<<(std::ostream& os, const Val& v) { return os << v.to_string(); }

}  // namespace hz
