#include "hz/extension.hpp"

#include <algorithm>
#include <set>

#include "hz/errors.hpp"

namespace hz {

const Element& ImmediateDescription::value() const {
  if (!value_) throw DomainError("immediate description of zero has no value");
  return *value_;
}

namespace {

bool is_one(const Polynomial& p) {
  return p.degree() == 0 && p.coeff(0).is_rational() && p.coeff(0).rational() == Rational(1);
}

}  // namespace

ExtensionField::ExtensionField(FieldPtr base, SpecialPoly t, std::string generator_name)
    : base_(std::move(base)),
      special_(std::move(t)),
      generator_name_(std::move(generator_name)),
      companion_(companion_matrix(special_.poly())) {
  conjugates_ = root_valuations(special_.poly());
  const auto special_root = std::find(conjugates_.begin(), conjugates_.end(), Val(0));
  if (special_root == conjugates_.end()) throw InternalError("special polynomial without a unit root");
  conjugates_.erase(special_root);
}

ExtensionField::Adjoined ExtensionField::extend(FieldPtr base, const SpecialPoly& t, std::string generator_name) {
  if (!base->extends(*t.field())) throw DomainError("special polynomial is not over the base field");
  auto special = t.field() == base ? t : SpecialPoly::validate(t.poly().over(base));
  if (base->is_zero(special.poly()(base->one()))) return {base, base->one(), true};
  std::shared_ptr<const ExtensionField> field(new ExtensionField(base, std::move(special), std::move(generator_name)));
  return {field, field->generator(), false};
}

std::shared_ptr<const ExtensionField> ExtensionField::self() const {
  return std::static_pointer_cast<const ExtensionField>(shared_from_this());
}

Element ExtensionField::generator() const { return from_polynomial(Polynomial::x(base_)); }

Polynomial ExtensionField::reduce(const Polynomial& q) const {
  if (q.field() == base_) return q.mod_monic(special_.poly());
  if (!base_->extends(*q.field())) throw DomainError("polynomial is not over the extension's base field");
  return q.over(base_).mod_monic(special_.poly());
}

std::pair<Polynomial, Polynomial> ExtensionField::parts(const Element& x) const {
  if (owns(x)) return {x.fraction().num, x.fraction().den};
  if (!contains(x)) throw DomainError("element " + x.to_string() + " is foreign to this field");
  return {Polynomial::constant(base_, x), Polynomial::constant(base_, base_->one())};
}

Element ExtensionField::canonical(Polynomial num, Polynomial den, bool check_den) const {
  const auto& t = special_.poly();
  num = num.mod_monic(t);
  den = den.mod_monic(t);
  if (den.is_zero()) throw DivisionByZero("denominator vanishes at the special zero");
  if (den.degree() > 0) {
    auto [g, s] = gcd_cofactor(den, t);
    if (g.degree() == 0) {
      num = (num * s).mod_monic(t);
      den = Polynomial::constant(base_, base_->one());
    } else {
      if (check_den && analyze(den, false).zero) throw DivisionByZero("denominator vanishes at the special zero");
      const auto h = gcd(num, den);
      if (h.degree() > 0) {
        num = num.divmod(h).first;
        den = den.divmod(h).first;
      }
    }
  }
  if (num.is_zero()) return base_->zero();
  if (den.degree() == 0) {
    if (!is_one(den)) {
      num = num.scaled(base_->inv(den.coeff(0)));
      den = Polynomial::constant(base_, base_->one());
    }
  } else if (!is_one(Polynomial::constant(base_, den.leading()))) {
    const auto lead_inv = base_->inv(den.leading());
    num = num.scaled(lead_inv);
    den = den.scaled(lead_inv);
  }
  if (num.degree() == 0 && is_one(den)) return num.coeff(0);
  return Element(std::make_shared<const FractionRep>(FractionRep{self(), std::move(num), std::move(den)}));
}

Element ExtensionField::fraction(const Polynomial& num, const Polynomial& den) const {
  return canonical(reduce(num), reduce(den), true);
}

Element ExtensionField::from_polynomial(const Polynomial& num) const {
  return canonical(reduce(num), Polynomial::constant(base_, base_->one()));
}

Element ExtensionField::add(const Element& x, const Element& y) const {
  if (!owns(x) && !owns(y)) return base_->add(x, y);
  auto [n1, d1] = parts(x);
  auto [n2, d2] = parts(y);
  if (is_one(d1) && is_one(d2)) return canonical(n1 + n2, std::move(d1));
  return canonical(n1 * d2 + n2 * d1, d1 * d2);
}

Element ExtensionField::sub(const Element& x, const Element& y) const { return add(x, neg(y)); }

Element ExtensionField::mul(const Element& x, const Element& y) const {
  if (!owns(x) && !owns(y)) return base_->mul(x, y);
  auto [n1, d1] = parts(x);
  auto [n2, d2] = parts(y);
  return canonical(n1 * n2, d1 * d2);
}

Element ExtensionField::neg(const Element& x) const {
  if (!owns(x)) return base_->neg(x);
  const auto& f = x.fraction();
  return Element(std::make_shared<const FractionRep>(FractionRep{f.owner, -f.num, f.den}));
}

Element ExtensionField::div(const Element& x, const Element& y) const {
  if (!owns(x) && !owns(y)) return base_->div(x, y);
  auto [n1, d1] = parts(x);
  auto [n2, d2] = parts(y);
  return canonical(n1 * d2, d1 * n2, true);
}

bool ExtensionField::is_zero(const Element& x) const {
  if (!owns(x)) {
    if (!contains(x)) throw DomainError("element " + x.to_string() + " is foreign to this field");
    return base_->is_zero(x);
  }
  return analyze(x.fraction().num, false).zero;
}

Val ExtensionField::val(const Element& x) const {
  if (!owns(x)) {
    if (!contains(x)) throw DomainError("element " + x.to_string() + " is foreign to this field");
    return base_->val(x);
  }
  return analyze(x.fraction().num, false).valuation - analyze(x.fraction().den, false).valuation;
}

bool ExtensionField::contains(const Element& x) const { return x.is_rational() || owns(x) || base_->contains(x); }

std::string ExtensionField::format(const Element& x) const {
  if (!owns(x)) return base_->format(x);
  const auto& f = x.fraction();
  const auto num = f.num.to_string(generator_name_);
  if (is_one(f.den)) return num;
  return "(" + num + ")/(" + f.den.to_string(generator_name_) + ")";
}

Polynomial ExtensionField::char_poly_of_values(const Polynomial& g) const {
  return char_poly(mat_poly_eval(reduce(g), companion_));
}

void ExtensionField::run_zero_test(DescriptionTrace& trace) const {
  const auto& t = special_.poly();
  const Polynomial one_minus_x(base_, {base_->one(), base_->neg(base_->one())});
  trace.q1 = char_poly(mat_poly_eval(trace.q, companion_));
  trace.q2 = char_poly(mat_poly_eval((one_minus_x * trace.q).mod_monic(t), companion_));
  trace.q1_roots = root_valuations(trace.q1);
  trace.q2_roots = root_valuations(trace.q2);
  if (trace.q1_roots == trace.q2_roots) {
    trace.zero = true;
    trace.valuation = Val::infinity();
    return;
  }
  trace.zero = false;
  const auto mismatch = std::mismatch(trace.q1_roots.begin(), trace.q1_roots.end(), trace.q2_roots.begin());
  const Val w = *mismatch.first;

  // The Q2 list must be the Q1 list with one copy of w replaced by something larger.
  std::multiset<Val> rest(trace.q1_roots.begin(), trace.q1_roots.end());
  rest.erase(rest.find(w));
  std::multiset<Val> extra(trace.q2_roots.begin(), trace.q2_roots.end());
  for (const auto& v : rest) {
    const auto it = extra.find(v);
    if (it == extra.end()) throw InternalError("zero test: root valuation lists differ in more than one entry");
    extra.erase(it);
  }
  if (extra.size() != 1 || !(*extra.begin() > w) || w.is_infinite())
    throw InternalError("zero test: root valuation lists are not related by a single increase");
  trace.valuation = w;
}

void ExtensionField::run_description(DescriptionTrace& trace) const {
  const auto& f = *base_;
  const std::size_t m = choose_exponent(conjugates_, trace.q1_roots);
  const auto shifted = (Polynomial::monomial(base_, f.one(), m) * trace.q).mod_monic(special_.poly());
  Polynomial q3 = char_poly(mat_poly_eval(shifted, companion_));
  const auto slopes = isolated_segments(newton_polygon(q3));
  const auto hit = std::find_if(slopes.begin(), slopes.end(),
                                [&](const IsolatedSlope& s) { return s.root_valuation == trace.valuation; });
  if (hit == slopes.end())
    throw InternalError("description: no isolated slope of valuation " + trace.valuation.to_string());
  const std::size_t k = hit->k;
  trace.exponent = m;
  trace.slope_index = k;
  trace.description = ImmediateDescription(f.neg(f.div(q3.coeff(k), q3.coeff(k + 1))));
  trace.q3 = std::move(q3);
}

DescriptionTrace ExtensionField::trace_description(const Polynomial& q) const {
  DescriptionTrace trace(reduce(q));
  run_zero_test(trace);
  if (!trace.zero) run_description(trace);
  return trace;
}

ExtensionField::Analysis ExtensionField::analyze(const Polynomial& reduced, bool want_description) const {
  if (reduced.degree() <= 0) {
    Analysis a;
    a.zero = reduced.is_zero();
    if (a.zero) {
      a.description = ImmediateDescription::zero();
    } else {
      a.valuation = base_->val(reduced.coeff(0));
      a.description = ImmediateDescription(reduced.coeff(0));
    }
    return a;
  }

  std::string key;
  reduced.append_key(key);
  {
    std::lock_guard lock(cache_mutex_);
    const auto it = cache_.find(key);
    if (it != cache_.end() && (!want_description || it->second.description)) return it->second;
  }

  DescriptionTrace trace(reduced);
  run_zero_test(trace);
  Analysis a;
  a.zero = trace.zero;
  a.valuation = trace.valuation;
  if (trace.zero) {
    a.description = ImmediateDescription::zero();
  } else if (want_description) {
    run_description(trace);
    a.description = trace.description;
  }
  a.q1_roots = std::move(trace.q1_roots);

  std::lock_guard lock(cache_mutex_);
  auto& slot = cache_[key];
  if (!slot.description || !a.description) {
    if (slot.description) a.description = slot.description;
    slot = a;
  }
  return slot;
}

bool ExtensionField::is_zero_at(const Polynomial& q) const { return analyze(reduce(q), false).zero; }

Val ExtensionField::valuation_at(const Polynomial& q) const { return analyze(reduce(q), false).valuation; }

ImmediateDescription ExtensionField::immediate_description(const Polynomial& q) const {
  return *analyze(reduce(q), true).description;
}

std::size_t choose_exponent(const RootValuations& conjugates, const RootValuations& q1_roots) {
  for (const auto& t : conjugates)
    if (t.is_finite() && t.finite().sign() <= 0) throw DomainError("conjugate root valuations must be positive");
  std::set<Rational> differences;
  for (const auto& u : q1_roots)
    for (const auto& w : q1_roots)
      if (u.is_finite() && w.is_finite()) differences.insert(u.finite() - w.finite());
  for (std::size_t m = 1;; ++m) {
    const bool excluded = std::any_of(conjugates.begin(), conjugates.end(), [&](const Val& t) {
      return t.is_finite() && differences.count(t.finite() * Rational(static_cast<long>(m))) > 0;
    });
    if (!excluded) return m;
  }
}

}  // namespace hz
