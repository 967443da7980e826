#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hz/extension.hpp"
#include "hz/field.hpp"
#include "hz/hensel_transforms.hpp"

namespace hz {

/// A finite stack of special-zero extensions over the p-adic rationals.
/// Level i is an ExtensionField over level i - 1. Towers are immutable values;
/// growing one returns a new tower sharing the old levels, so elements of the
/// old tower stay valid in the new one.
class Tower {
 public:
  explicit Tower(std::shared_ptr<const PAdicRationals> base);

  const std::shared_ptr<const PAdicRationals>& base() const { return base_; }
  /// The composite field: the last level, or the base for an empty tower.
  FieldPtr top() const;
  std::size_t depth() const { return levels_.size(); }
  const std::vector<std::shared_ptr<const ExtensionField>>& levels() const { return levels_; }

  struct Pushed;
  /// Adjoins the special zero of T (over top()). A T with T(1) = 0 leaves the tower unchanged.
  Pushed push(const SpecialPoly& t, std::string generator_name) const;

  ImmediateDescription describe(const Element& e) const;
  Val val(const Element& e) const { return top()->val(e); }
  bool equals(const Element& x, const Element& y) const { return top()->equal(x, y); }
  /// v(x) >= v(y).
  bool val_compare(const Element& x, const Element& y) const { return top()->val_ge(x, y); }

 private:
  std::shared_ptr<const PAdicRationals> base_;
  std::vector<std::shared_ptr<const ExtensionField>> levels_;
};

struct Tower::Pushed {
  Tower tower;
  Element generator;
  bool trivial = false;
};

/// Description of e all the way down in the p-adic rationals, obtained level by level.
ImmediateDescription describe_to_base(const Element& e);

/// Maps elements of the second tower of a merge into the merged tower.
class TowerEmbedding {
 public:
  Element operator()(const Element& e) const;
  Polynomial operator()(const Polynomial& p, FieldPtr target) const;

 private:
  friend struct TowerMerger;

  struct Image {
    std::shared_ptr<const ExtensionField> source;
    FieldPtr target;
    Element generator;
  };
  std::vector<Image> images_;
};

struct MergedTower {
  Tower tower;
  /// Elements of the first tower are valid in `tower` unchanged; elements of the
  /// second go through this map.
  TowerEmbedding embed_second;
};

/// The tower `a` followed by the levels of `b` re-read over a's top field.
/// Throws DomainError when the two towers have different base primes.
MergedTower tower_merge(const Tower& a, const Tower& b);

/// All intermediates of adjoining a Hensel root.
struct HenselChain {
  ShiftedCode shifted;
  /// -p_0 / p_1 of the shifted polynomial: an immediate description of alpha - a.
  Element offset_description;
  /// Absent when P(a) = 0.
  std::optional<Polynomial> unit_factor;
  std::optional<SpecialOutcome> outcome;
  /// alpha = mobius(beta) when a level was pushed.
  std::optional<MobiusForm> mobius;
};

struct HenselZero {
  Tower tower;
  Element root;
  HenselChain chain;
  /// True when the root required a new level.
  bool extended = false;
};

/// Adjoins the Hensel root coded by `code` (over tower.top()).
HenselZero hensel_zero(const Tower& tower, const HenselCode& code, std::string generator_name = "beta");

}  // namespace hz
