#include "hz/tower.hpp"

#include <algorithm>

#include "hz/errors.hpp"

namespace hz {

Tower::Tower(std::shared_ptr<const PAdicRationals> base) : base_(std::move(base)) {}

FieldPtr Tower::top() const {
  if (levels_.empty()) return base_;
  return levels_.back();
}

Tower::Pushed Tower::push(const SpecialPoly& t, std::string generator_name) const {
  auto adjoined = ExtensionField::extend(top(), t, std::move(generator_name));
  if (adjoined.trivial) return {*this, adjoined.generator, true};
  Tower next = *this;
  next.levels_.push_back(std::static_pointer_cast<const ExtensionField>(adjoined.field));
  return {std::move(next), adjoined.generator, false};
}

ImmediateDescription Tower::describe(const Element& e) const {
  if (!top()->contains(e)) throw DomainError("element " + e.to_string() + " is not in this tower");
  return describe_to_base(e);
}

ImmediateDescription describe_to_base(const Element& e) {
  // xi = x (1 + mu) and x = y (1 + mu') give xi = y (1 + mu'') with mu'' in the
  // maximal ideal, so descriptions compose from the top level down.
  Element current = e;
  while (!current.is_rational()) {
    const ExtensionField* field = current.owner();
    const auto& rep = current.fraction();
    const auto num = field->immediate_description(rep.num);
    if (num.is_zero()) return ImmediateDescription::zero();
    const auto den = field->immediate_description(rep.den);
    current = field->base()->div(num.value(), den.value());
  }
  if (current.rational().is_zero()) return ImmediateDescription::zero();
  return ImmediateDescription(current);
}

Element TowerEmbedding::operator()(const Element& e) const {
  if (e.is_rational()) return e;
  const auto it = std::find_if(images_.begin(), images_.end(),
                               [&](const Image& image) { return image.source.get() == e.owner(); });
  if (it == images_.end()) return e;
  const auto& rep = e.fraction();
  const auto& target_ext = dynamic_cast<const ExtensionField*>(it->target.get());
  if (target_ext != nullptr && target_ext->subfield() != nullptr && it->generator.owner() == target_ext) {
    const auto& base = target_ext->base();
    return target_ext->fraction((*this)(rep.num, base), (*this)(rep.den, base));
  }
  // The level collapsed during the merge: evaluate at the image of its generator.
  const auto num = (*this)(rep.num, it->target)(it->generator);
  const auto den = (*this)(rep.den, it->target)(it->generator);
  return it->target->div(num, den);
}

Polynomial TowerEmbedding::operator()(const Polynomial& p, FieldPtr target) const {
  std::vector<Element> coeffs;
  coeffs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs.push_back((*this)(c));
  return Polynomial(std::move(target), std::move(coeffs));
}

struct TowerMerger {
  static MergedTower merge(const Tower& a, const Tower& b) {
    if (a.base()->prime() != b.base()->prime()) throw DomainError("towers over different base fields");
    MergedTower out{a, TowerEmbedding{}};
    for (const auto& level : b.levels()) {
      const auto t = out.embed_second(level->special().poly(), out.tower.top());
      auto pushed = out.tower.push(SpecialPoly::validate(t), level->generator_name());
      out.embed_second.images_.push_back({level, pushed.tower.top(), pushed.generator});
      out.tower = std::move(pushed.tower);
    }
    return out;
  }
};

MergedTower tower_merge(const Tower& a, const Tower& b) { return TowerMerger::merge(a, b); }

HenselZero hensel_zero(const Tower& tower, const HenselCode& code, std::string generator_name) {
  const auto field = tower.top();
  const auto& f = *field;
  const Polynomial poly = code.poly.field() == field ? code.poly : code.poly.over(field);
  const auto valid = validate_hensel_code(poly, code.approx);

  HenselChain chain{shift_to_isolated_slope(valid), f.zero(), std::nullopt, std::nullopt, std::nullopt};
  if (chain.shifted.root_valuation.is_infinite()) return {tower, valid.approx, std::move(chain), false};

  chain.offset_description = immediate_from_isolated_slope(chain.shifted.shifted, 0);
  chain.unit_factor = unit_factor_polynomial(chain.shifted.shifted, 0);
  chain.outcome = specialize(*chain.unit_factor);
  if (chain.outcome->is_exact()) {
    const auto root = f.add(valid.approx, f.mul(chain.offset_description, chain.outcome->exact().value));
    return {tower, root, std::move(chain), false};
  }

  // alpha = a + offset * nu and nu = (r_1 beta - r_0) / (r_1 beta).
  const MobiusForm affine{chain.offset_description, valid.approx, f.zero(), f.one()};
  const auto& extended = chain.outcome->extended();
  chain.mobius = MobiusForm::compose(f, affine, extended.mobius).normalized();

  auto pushed = tower.push(extended.special, std::move(generator_name));
  if (pushed.trivial) {
    const auto root = chain.mobius->apply(f, f.one());
    return {tower, root, std::move(chain), false};
  }
  const auto& level = *pushed.tower.levels().back();
  const auto& mob = *chain.mobius;
  const auto root = level.fraction(Polynomial(field, {mob.b, mob.a}), Polynomial(field, {mob.d, mob.c}));
  return {std::move(pushed.tower), root, std::move(chain), true};
}

}  // namespace hz
