#include <gtest/gtest.h>

#include "hz/errors.hpp"
#include "hz/hensel_transforms.hpp"
#include "hz/newton_polygon.hpp"
#include "support.hpp"

namespace hz {
namespace {

using test::poly;
using test::q;
using Reason = InvalidHenselCode::Reason;

Reason reason_of(const Polynomial& p, const Element& a) {
  try {
    validate_hensel_code(p, a);
  } catch (const InvalidHenselCode& e) {
    return e.reason();
  }
  ADD_FAILURE() << "code accepted";
  return Reason::CoefficientNotIntegral;
}

class Transforms : public ::testing::Test {
 protected:
  std::shared_ptr<const PAdicRationals> f = PAdicRationals::create(5);
  Polynomial x2m6 = poly(f, {q(-6), q(0), q(1)});
};

TEST_F(Transforms, ValidateHenselCode) {
  EXPECT_NO_THROW(validate_hensel_code(x2m6, q(1)));
  const auto f2 = PAdicRationals::create(2);
  EXPECT_EQ(reason_of(poly(f2, {q(-6), q(0), q(1)}), q(1)), Reason::ValueNotInMaximalIdeal);
  EXPECT_EQ(reason_of(poly(f, {q(-5), q(0), q(1)}), q(0)), Reason::DerivativeNotUnit);
  EXPECT_EQ(reason_of(poly(f, {q(-6), q(1, 5), q(1)}), q(1)), Reason::CoefficientNotIntegral);
  EXPECT_EQ(reason_of(x2m6, q(1, 5)), Reason::ApproxNotIntegral);
  try {
    validate_hensel_code(poly(f, {q(-5), q(0), q(1)}), q(0));
  } catch (const InvalidHenselCode& e) {
    EXPECT_STREQ(e.what(), "P'(a) not a unit");
  }
}

TEST_F(Transforms, ShiftToIsolatedSlope) {
  const auto s = shift_to_isolated_slope(validate_hensel_code(x2m6, q(1)));
  EXPECT_TRUE(s.shifted.equals(poly(f, {q(-5), q(2), q(1)})));
  EXPECT_EQ(s.k, 0u);
  EXPECT_EQ(s.root_valuation, Val(1));

  const auto exact = shift_to_isolated_slope(validate_hensel_code(poly(f, {q(-3), q(1)}), q(3)));
  EXPECT_TRUE(exact.shifted.equals(Polynomial::x(f)));
  EXPECT_TRUE(exact.root_valuation.is_infinite());

  const auto p = poly(f, {q(25), q(1), q(1)});
  const auto same = shift_to_isolated_slope(validate_hensel_code(p, q(0)));
  EXPECT_TRUE(same.shifted.equals(p));
  EXPECT_EQ(same.root_valuation, Val(2));
}

TEST_F(Transforms, ImmediateFromIsolatedSlope) {
  EXPECT_EQ(immediate_from_isolated_slope(poly(f, {q(-5), q(2), q(1)}), 0).rational(), q(5, 2));
  EXPECT_EQ(immediate_from_isolated_slope(poly(f, {q(-7, 3), q(1)}), 0).rational(), q(7, 3));
  const auto q3 = poly(f, {q(25, 196).pow(3), q(-121, 196), q(1)});
  EXPECT_EQ(immediate_from_isolated_slope(q3, 1).rational(), q(121, 196));
  EXPECT_THROW(immediate_from_isolated_slope(poly(f, {q(-5), q(0), q(1)}), 0), DomainError);
  EXPECT_TRUE(immediate_from_isolated_slope(poly(f, {q(0), q(1), q(5)}), 0).rational().is_zero());
}

TEST_F(Transforms, UnitFactorPolynomial) {
  const auto u = unit_factor_polynomial(poly(f, {q(-5), q(2), q(1)}), 0);
  EXPECT_TRUE(u.equals(poly(f, {q(1), q(-1), q(-5, 4)})));
  EXPECT_EQ(u(q(1)).rational(), q(-5, 4));
  EXPECT_EQ(u.derivative()(q(1)).rational(), q(-7, 2));

  EXPECT_TRUE(unit_factor_polynomial(poly(f, {q(-7, 3), q(1)}), 0).equals(poly(f, {q(1), q(-1)})));
  EXPECT_NO_THROW(validate_hensel_code(unit_factor_polynomial(poly(f, {q(25), q(1), q(1)}), 0), q(1)));
  EXPECT_THROW(unit_factor_polynomial(poly(f, {q(0), q(1), q(5)}), 0), DomainError);
  EXPECT_THROW(unit_factor_polynomial(poly(f, {q(-5), q(0), q(1)}), 0), DomainError);
}

TEST_F(Transforms, SpecialPolyValidation) {
  EXPECT_NO_THROW(SpecialPoly::validate(test::worked_t(f)));
  EXPECT_NO_THROW(SpecialPoly::validate(poly(f, {q(-1), q(1)})));
  EXPECT_THROW(SpecialPoly::validate(poly(f, {q(25), q(-1), q(2)})), NotSpecial);
  EXPECT_THROW(SpecialPoly::validate(poly(f, {q(25), q(1), q(1)})), NotSpecial);
  EXPECT_THROW(SpecialPoly::validate(poly(f, {q(1), q(-1), q(1)})), NotSpecial);
  EXPECT_THROW(SpecialPoly::validate(Polynomial::constant(f, q(1))), NotSpecial);
}

TEST_F(Transforms, SpecializeWorkedChain) {
  const auto out = specialize(poly(f, {q(1), q(-1), q(-5, 4)}));
  ASSERT_FALSE(out.is_exact());
  const auto& e = out.extended();
  EXPECT_TRUE(e.r.equals(poly(f, {q(-5, 4), q(-7, 2), q(-5, 4)})));
  EXPECT_TRUE(e.s.equals(poly(f, {q(1), q(-1), q(25, 196)})));
  EXPECT_TRUE(e.special.poly().equals(test::worked_t(f)));
  EXPECT_EQ(e.mobius.a.rational(), q(-7, 2));
  EXPECT_EQ(e.mobius.b.rational(), q(5, 4));
  EXPECT_EQ(e.mobius.c.rational(), q(-7, 2));
  EXPECT_TRUE(e.mobius.d.rational().is_zero());
}

TEST_F(Transforms, SpecializeExactBranch) {
  const auto out = specialize(poly(f, {q(1), q(-1)}));
  ASSERT_TRUE(out.is_exact());
  EXPECT_EQ(out.exact().value.rational(), q(1));
  EXPECT_THROW(specialize(poly(f, {q(-7), q(0), q(1)})), InvalidHenselCode);
}

TEST_F(Transforms, Mobius) {
  // alpha = 5/2 nu + 1 with nu = (r_1 beta - r_0) / (r_1 beta).
  const MobiusForm affine{q(5, 2), q(1), q(0), q(1)};
  const MobiusForm nu{q(-7, 2), q(5, 4), q(-7, 2), q(0)};
  const auto m = MobiusForm::compose(*f, affine, nu).normalized();
  EXPECT_EQ(m.a.rational(), q(98));
  EXPECT_EQ(m.b.rational(), q(-25));
  EXPECT_EQ(m.c.rational(), q(28));
  EXPECT_EQ(m.d.rational(), q(0));
  EXPECT_EQ(m.determinant(*f).rational(), q(700));
  EXPECT_EQ(m.to_string(*f, "beta"), "(98*beta - 25)/(28*beta)");
  for (long x : {3L, -2L, 11L}) {
    EXPECT_EQ(m.apply(*f, q(x)).rational(), affine.apply(*f, nu.apply(*f, q(x))).rational());
  }
  EXPECT_EQ(MobiusForm::identity().apply(*f, q(7, 3)).rational(), q(7, 3));
}

class SpecializeRandom : public ::testing::TestWithParam<long> {};

// Random (Q, 1) codes: Q'(1) a unit, Q(1) in the maximal ideal.
Polynomial random_unit_code(test::Gen& gen, const FieldPtr& f, long p, std::size_t d) {
  for (;;) {
    std::vector<Rational> c(d + 1);
    Rational deriv;
    Rational rest;
    for (std::size_t i = 1; i <= d; ++i) {
      c[i] = gen.integral(p, 20);
      deriv += Rational(static_cast<long>(i)) * c[i];
      rest += c[i];
    }
    if (c[d].is_zero() || padic_val(deriv, p) != Val(0)) continue;
    c[0] = -rest + gen.in_maximal_ideal(p, 20);
    return Polynomial(f, std::vector<Element>(c.begin(), c.end()));
  }
}

TEST_P(SpecializeRandom, ExtendedOutcomeIsSpecial) {
  const long p = GetParam();
  const auto f = PAdicRationals::create(p);
  test::Gen gen(static_cast<unsigned>(500 + p));
  for (int trial = 0; trial < 40; ++trial) {
    const auto d = static_cast<std::size_t>(gen.uniform(1, 4));
    const auto code = random_unit_code(gen, f, p, d);
    const auto out = specialize(code);
    if (out.is_exact()) {
      EXPECT_TRUE(code(q(1)).rational().is_zero());
      continue;
    }
    const auto& t = out.extended().special.poly();
    EXPECT_EQ(t.degree(), code.degree());
    EXPECT_TRUE(t.is_monic());
    EXPECT_EQ(t.coeff(d - 1).rational(), q(-1));
    for (std::size_t i = 0; i + 1 < d; ++i) EXPECT_GT(f->val(t.coeff(i)), Val(0));
    const auto rv = root_valuations(t);
    EXPECT_EQ(std::count(rv.begin(), rv.end(), Val(0)), 1);
    EXPECT_TRUE(std::all_of(rv.begin(), rv.end(), [](const Val& v) { return v >= Val(0); }));
    EXPECT_NE(out.extended().mobius.determinant(*f).rational(), q(0));
  }
}

TEST_P(SpecializeRandom, ImmediateValuationMatchesSlope) {
  const long p = GetParam();
  const auto f = PAdicRationals::create(p);
  test::Gen gen(static_cast<unsigned>(600 + p));
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = gen.rational_poly(f, 5, 300);
    if (a.is_zero()) continue;
    for (const auto& s : isolated_segments(newton_polygon(a))) {
      const auto x = immediate_from_isolated_slope(a, s.k);
      EXPECT_EQ(f->val(x), s.root_valuation);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, SpecializeRandom, ::testing::Values(2L, 3L, 5L, 7L));

}  // namespace
}  // namespace hz
