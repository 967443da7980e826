#include <cstdint>

#include "hz/errors.hpp"
#include "hz/extension.hpp"
#include "hz/field.hpp"

namespace hz {

const Rational& Element::rational() const {
  if (const auto* q = std::get_if<Rational>(&rep_)) return *q;
  throw DomainError("element is not rational");
}

const FractionRep& Element::fraction() const {
  if (const auto* f = std::get_if<std::shared_ptr<const FractionRep>>(&rep_)) return **f;
  throw DomainError("element is rational, not an extension fraction");
}

const ExtensionField* Element::owner() const {
  if (const auto* f = std::get_if<std::shared_ptr<const FractionRep>>(&rep_)) return (*f)->owner.get();
  return nullptr;
}

std::size_t Element::level() const {
  const auto* o = owner();
  return o ? o->depth() : 0;
}

void Element::append_key(std::string& out) const {
  if (const auto* q = std::get_if<Rational>(&rep_)) {
    out += q->to_string();
    return;
  }
  const auto& f = fraction();
  out += '{';
  out += std::to_string(reinterpret_cast<std::uintptr_t>(f.owner.get()));
  out += ':';
  f.num.append_key(out);
  out += '/';
  f.den.append_key(out);
  out += '}';
}

std::string Element::to_string() const {
  if (const auto* q = std::get_if<Rational>(&rep_)) return q->to_string();
  return owner()->format(*this);
}

}  // namespace hz
