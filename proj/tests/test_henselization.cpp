#include <gtest/gtest.h>

#include <thread>

#include "hz/errors.hpp"
#include "hz/extension.hpp"
#include "hz/padic_oracle.hpp"
#include "hz/tower.hpp"
#include "support.hpp"

namespace hz {
namespace {

using test::poly;
using test::q;

class Worked : public ::testing::Test {
 protected:
  void SetUp() override {
    auto adjoined = ExtensionField::extend(f, SpecialPoly::validate(test::worked_t(f)));
    ASSERT_FALSE(adjoined.trivial);
    ext = std::static_pointer_cast<const ExtensionField>(adjoined.field);
    beta = adjoined.generator;
  }

  std::shared_ptr<const PAdicRationals> f = PAdicRationals::create(5);
  std::shared_ptr<const ExtensionField> ext;
  Element beta;
};

TEST_F(Worked, CharPolyOfValues) {
  const auto t = test::worked_t(f);
  EXPECT_TRUE(ext->char_poly_of_values(Polynomial::x(f)).equals(t));
  EXPECT_TRUE(ext->char_poly_of_values(t).equals(Polynomial::monomial(f, q(1), 2)));
  const auto cube = ext->char_poly_of_values(Polynomial::monomial(f, q(1), 3));
  EXPECT_TRUE(cube.equals(poly(f, {q(25, 196).pow(3), q(-121, 196), q(1)})));
}

TEST_F(Worked, ZeroTest) {
  const auto t = test::worked_t(f);
  EXPECT_TRUE(ext->is_zero_at(t));
  EXPECT_FALSE(ext->is_zero_at(Polynomial::x(f)));
  EXPECT_TRUE(ext->is_zero_at(Polynomial::x(f) * t));
  EXPECT_TRUE(ext->is_zero_at(Polynomial(f)));
}

TEST_F(Worked, ValuationAt) {
  EXPECT_EQ(ext->valuation_at(Polynomial::x(f)), Val(0));
  // Norm of beta - 121/196 is -4175/38416 and 4175 = 5^2 * 167; its conjugate is a unit.
  const Rational norm = q(25, 196) - q(121, 196) + q(121, 196).pow(2);
  EXPECT_EQ(norm, Rational(Integer(-4175), Integer(38416)));
  EXPECT_EQ(padic_val(norm, 5), Val(2));
  EXPECT_EQ(ext->valuation_at(poly(f, {q(-121, 196), q(1)})), Val(2));
  EXPECT_EQ(ext->valuation_at(Polynomial::constant(f, q(50, 3))), Val(2));
  EXPECT_TRUE(ext->valuation_at(test::worked_t(f)).is_infinite());
}

TEST(ChooseExponent, Examples) {
  EXPECT_EQ(choose_exponent({Val(2)}, {Val(0), Val(2)}), 2u);
  EXPECT_EQ(choose_exponent({}, {Val(0), Val(2)}), 1u);
  EXPECT_EQ(choose_exponent({Val(1)}, {Val(3), Val(3)}), 1u);
  EXPECT_EQ(choose_exponent({Val(1)}, {Val(0), Val(1), Val(2), Val::infinity()}), 3u);
  EXPECT_EQ(choose_exponent({Val(q(1, 2))}, {Val(0), Val(1)}), 1u);
  EXPECT_THROW(choose_exponent({Val(0)}, {Val(0)}), DomainError);
}

TEST_F(Worked, Trace) {
  const auto tr = ext->trace_description(Polynomial::x(f));
  EXPECT_EQ(tr.q1_roots, (RootValuations{0, 2}));
  EXPECT_EQ(tr.q2_roots, (RootValuations{2, 2}));
  EXPECT_FALSE(tr.zero);
  EXPECT_EQ(tr.valuation, Val(0));
  ASSERT_TRUE(tr.exponent.has_value());
  EXPECT_EQ(*tr.exponent, 2u);
  ASSERT_TRUE(tr.q3.has_value());
  EXPECT_EQ(tr.q3->to_string(), "x^2 - 121/196*x + 15625/7529536");
  EXPECT_EQ(tr.slope_index, std::optional<std::size_t>(1));
  EXPECT_EQ(tr.description.to_string(), "121/196");

  const auto zero = ext->trace_description(test::worked_t(f));
  EXPECT_TRUE(zero.zero);
  EXPECT_TRUE(zero.description.is_zero());
  EXPECT_FALSE(zero.exponent.has_value());
}

TEST_F(Worked, ImmediateDescription) {
  EXPECT_EQ(ext->immediate_description(Polynomial::x(f)).value().rational(), q(121, 196));
  EXPECT_TRUE(ext->immediate_description(test::worked_t(f)).is_zero());
  EXPECT_THROW(ext->immediate_description(test::worked_t(f)).value(), DomainError);
  const auto shifted = poly(f, {q(-121, 196), q(1)});
  const auto d = ext->immediate_description(shifted);
  ASSERT_FALSE(d.is_zero());
  EXPECT_EQ(f->val(d.value()), Val(2));
  const auto beta_hat = oracle::special_zero_approx(ext->special(), 5, 20);
  EXPECT_EQ(oracle::check_description(oracle::evaluate(shifted, beta_hat), d.value().rational()),
            oracle::CheckVerdict::Pass);
}

TEST_F(Worked, Elements) {
  EXPECT_TRUE(ext->equal(beta, beta));
  EXPECT_FALSE(ext->equal(beta, Element(q(121, 196))));
  EXPECT_TRUE(ext->val_ge(beta, Element(q(121, 196))));
  EXPECT_TRUE(ext->val_ge(Element(q(121, 196)), beta));
  const auto t_at_beta = ext->from_polynomial(test::worked_t(f));
  EXPECT_TRUE(ext->equal(t_at_beta, Element(0)));
  EXPECT_TRUE(ext->is_zero(t_at_beta));
  EXPECT_THROW(ext->fraction(Polynomial::x(f), test::worked_t(f)), DivisionByZero);
  EXPECT_THROW(ext->div(beta, t_at_beta), DivisionByZero);
  EXPECT_EQ(ext->depth(), 1u);
  EXPECT_TRUE(ext->contains(beta));
  EXPECT_FALSE(f->contains(beta));
  EXPECT_EQ(describe_to_base(beta).value().rational(), q(121, 196));
  EXPECT_EQ(describe_to_base(Element(q(7, 3))).value().rational(), q(7, 3));
  EXPECT_TRUE(describe_to_base(t_at_beta).is_zero());
}

TEST_F(Worked, QuadraticIdentities) {
  // beta^2 = beta - 25/196 and beta (1 - beta) = 25/196.
  EXPECT_TRUE(ext->equal(ext->mul(beta, beta), ext->sub(beta, Element(q(25, 196)))));
  EXPECT_TRUE(ext->equal(ext->mul(beta, ext->sub(Element(1), beta)), Element(q(25, 196))));
  EXPECT_EQ(ext->val(ext->sub(Element(1), beta)), Val(2));
  const auto inv = ext->inv(beta);
  EXPECT_TRUE(ext->equal(ext->mul(inv, beta), Element(1)));
  EXPECT_TRUE(ext->residue_is_one(beta));
}

TEST(Extension, Trivial) {
  const auto f = PAdicRationals::create(5);
  const auto lin = ExtensionField::extend(f, SpecialPoly::validate(poly(f, {q(-1), q(1)})));
  EXPECT_TRUE(lin.trivial);
  EXPECT_EQ(lin.field, f);
  EXPECT_EQ(lin.generator.rational(), q(1));
  const auto deg2 = ExtensionField::extend(f, SpecialPoly::validate(poly(f, {q(0), q(-1), q(1)})));
  EXPECT_TRUE(deg2.trivial);
}

TEST(Extension, Immediacy) {
  const auto f = PAdicRationals::create(5);
  test::Gen gen(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = static_cast<std::size_t>(gen.uniform(2, 3));
    const auto adjoined = ExtensionField::extend(f, gen.special(f, 5, d));
    if (adjoined.trivial) continue;
    const auto& ext = *std::static_pointer_cast<const ExtensionField>(adjoined.field);
    for (int k = 0; k < 5; ++k) {
      const auto g = gen.rational_poly(f, 3, 40);
      const Val v = ext.valuation_at(g);
      if (v.is_finite()) EXPECT_TRUE(v.finite().is_integer()) << g.to_string() << " over " << ext.special().poly().to_string();
    }
  }
}

TEST(Extension, ConcurrentQueriesAgree) {
  const auto f = PAdicRationals::create(5);
  const auto adjoined = ExtensionField::extend(f, SpecialPoly::validate(test::worked_t(f)));
  const auto ext = std::static_pointer_cast<const ExtensionField>(adjoined.field);
  std::vector<std::string> results(4);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i) {
    threads.emplace_back([&, i] {
      std::string out;
      for (long c = 1; c < 30; ++c) out += ext->immediate_description(poly(f, {q(c), q(1), q(1)})).to_string() + ";";
      results[i] = out;
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& r : results) EXPECT_EQ(r, results[0]);
}

}  // namespace
}  // namespace hz
