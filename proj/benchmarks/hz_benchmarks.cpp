#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hz/extension.hpp"
#include "hz/matrix.hpp"
#include "hz/newton_polygon.hpp"
#include "hz/padic_oracle.hpp"
#include "hz/tower.hpp"

namespace {

using namespace hz;

std::shared_ptr<const PAdicRationals> base5() {
  static const auto f = PAdicRationals::create(5);
  return f;
}

Polynomial random_poly(FieldPtr f, std::mt19937& rng, std::size_t degree, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  std::vector<Element> c;
  for (std::size_t i = 0; i < degree; ++i) c.emplace_back(Rational(num(rng), den(rng)));
  c.emplace_back(Rational(1));
  return Polynomial(std::move(f), std::move(c));
}

Polynomial worked_t() {
  return Polynomial(base5(), {Element(Rational(25, 196)), Element(-1), Element(1)});
}

void BM_CharPolyCompanion(benchmark::State& state) {
  std::mt19937 rng(1);
  const auto m = companion_matrix(random_poly(base5(), rng, static_cast<std::size_t>(state.range(0)), 1000));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPolyCompanion)->DenseRange(2, 10, 2);

void BM_CharPolyOfValues(benchmark::State& state) {
  std::mt19937 rng(2);
  const auto f = base5();
  std::vector<Element> t(static_cast<std::size_t>(state.range(0)) - 1, Element(Rational(25, 3)));
  t.emplace_back(-1);
  t.emplace_back(1);
  const auto ext = std::static_pointer_cast<const ExtensionField>(
      ExtensionField::extend(f, SpecialPoly::validate(Polynomial(f, std::move(t)))).field);
  const auto g = random_poly(f, rng, static_cast<std::size_t>(state.range(0)) - 1, 100);
  for (auto _ : state) benchmark::DoNotOptimize(ext->char_poly_of_values(g));
}
BENCHMARK(BM_CharPolyOfValues)->DenseRange(2, 6, 1);

void BM_NewtonPolygon(benchmark::State& state) {
  std::mt19937 rng(3);
  const auto p = random_poly(base5(), rng, static_cast<std::size_t>(state.range(0)), 10000);
  for (auto _ : state) benchmark::DoNotOptimize(root_valuations(p));
}
BENCHMARK(BM_NewtonPolygon)->RangeMultiplier(2)->Range(4, 64);

// The general algorithm on every iteration (trace_description bypasses the cache).
void BM_ImmediateDescription(benchmark::State& state) {
  const auto ext = std::static_pointer_cast<const ExtensionField>(
      ExtensionField::extend(base5(), SpecialPoly::validate(worked_t())).field);
  std::mt19937 rng(4);
  std::vector<Polynomial> qs;
  for (int i = 0; i < 16; ++i) qs.push_back(random_poly(base5(), rng, 1, 200));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ext->trace_description(qs[i++ % qs.size()]));
}
BENCHMARK(BM_ImmediateDescription);

void BM_ImmediateDescriptionCached(benchmark::State& state) {
  const auto ext = std::static_pointer_cast<const ExtensionField>(
      ExtensionField::extend(base5(), SpecialPoly::validate(worked_t())).field);
  const auto q = Polynomial(base5(), {Element(Rational(-121, 196)), Element(1)});
  for (auto _ : state) benchmark::DoNotOptimize(ext->immediate_description(q));
}
BENCHMARK(BM_ImmediateDescriptionCached);

void BM_HenselZero(benchmark::State& state) {
  const auto code = validate_hensel_code(Polynomial(base5(), {Element(-6), Element(0), Element(1)}), Element(1));
  const Tower tower(base5());
  for (auto _ : state) benchmark::DoNotOptimize(hensel_zero(tower, code));
}
BENCHMARK(BM_HenselZero);

struct DepthTwo {
  Tower tower;
  Element alpha;
  Element gamma;

  static const DepthTwo& get() {
    static const DepthTwo t = [] {
      const auto f = base5();
      const auto a = hensel_zero(Tower(f), validate_hensel_code(Polynomial(f, {Element(-6), Element(0), Element(1)}),
                                                                Element(1)));
      const auto top = a.tower.top();
      const Polynomial p(top, {Element(3), Element(1), Element(0), Element(1)});
      const auto b = hensel_zero(a.tower, validate_hensel_code(p, Element(1)));
      return DepthTwo{b.tower, a.root, b.root};
    }();
    return t;
  }
};

void BM_TowerMul(benchmark::State& state) {
  const auto& t = DepthTwo::get();
  const auto& g = *t.tower.top();
  const auto x = g.add(g.mul(t.alpha, t.gamma), Element(Rational(3, 7)));
  const auto y = g.sub(t.gamma, g.mul(t.alpha, Element(2)));
  for (auto _ : state) benchmark::DoNotOptimize(g.mul(x, y));
}
BENCHMARK(BM_TowerMul);

void BM_TowerDiv(benchmark::State& state) {
  const auto& t = DepthTwo::get();
  const auto& g = *t.tower.top();
  const auto x = g.add(g.mul(t.alpha, t.gamma), Element(Rational(3, 7)));
  const auto y = g.sub(t.gamma, g.mul(t.alpha, Element(2)));
  for (auto _ : state) benchmark::DoNotOptimize(g.div(x, y));
}
BENCHMARK(BM_TowerDiv);

void BM_TowerEquals(benchmark::State& state) {
  const auto& t = DepthTwo::get();
  const auto& g = *t.tower.top();
  const auto x = g.mul(g.add(t.alpha, t.gamma), g.sub(t.alpha, t.gamma));
  const auto y = g.sub(g.mul(t.alpha, t.alpha), g.mul(t.gamma, t.gamma));
  for (auto _ : state) benchmark::DoNotOptimize(t.tower.equals(x, y));
}
BENCHMARK(BM_TowerEquals);

void BM_TowerDescribeToBase(benchmark::State& state) {
  const auto& t = DepthTwo::get();
  const auto& g = *t.tower.top();
  const auto x = g.sub(g.mul(t.alpha, t.gamma), Element(1));
  for (auto _ : state) benchmark::DoNotOptimize(describe_to_base(x));
}
BENCHMARK(BM_TowerDescribeToBase);

void BM_TowerMerge(benchmark::State& state) {
  const auto f = base5();
  const auto a = hensel_zero(Tower(f), validate_hensel_code(Polynomial(f, {Element(-6), Element(0), Element(1)}), Element(1)));
  const auto b = hensel_zero(Tower(f), validate_hensel_code(Polynomial(f, {Element(-11), Element(0), Element(1)}), Element(1)));
  for (auto _ : state) benchmark::DoNotOptimize(tower_merge(a.tower, b.tower));
}
BENCHMARK(BM_TowerMerge);

void BM_OracleLift(benchmark::State& state) {
  const auto p = Polynomial(base5(), {Element(-6), Element(0), Element(1)});
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::hensel_lift(p, Rational(1), Integer(5), n));
}
BENCHMARK(BM_OracleLift)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace

BENCHMARK_MAIN();
