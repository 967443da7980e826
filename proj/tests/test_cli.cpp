#include <gtest/gtest.h>

#include <sstream>

#include "hz/errors.hpp"
#include "hzcli/parser.hpp"
#include "hzcli/session.hpp"
#include "support.hpp"

namespace hzcli {
namespace {

using hz::test::poly;
using hz::test::q;

Session with_field(long p) {
  Session s;
  EXPECT_EQ(s.run_line("field Q " + std::to_string(p))->status, Outcome::Status::Ok);
  return s;
}

Outcome run(Session& s, const std::string& line) {
  auto out = s.run_line(line);
  EXPECT_TRUE(out.has_value()) << line;
  return *out;
}

struct ScriptResult {
  int code;
  std::string out;
  std::string err;
};

ScriptResult script(const std::string& text, Format format = Format::Text) {
  std::istringstream in(text);
  std::ostringstream out, err;
  const int code = run_script(in, out, err, format);
  return {code, out.str(), err.str()};
}

TEST(Parser, PolynomialExamples) {
  auto s = with_field(5);
  const auto f = s.tower().top();
  EXPECT_TRUE(s.polynomial(parse_expression("x^2 - 6")).equals(poly(f, {q(-6), q(0), q(1)})));
  EXPECT_TRUE(s.polynomial(parse_expression("x^2 - x + 25/196")).equals(hz::test::worked_t(f)));
  EXPECT_TRUE(s.polynomial(parse_expression("(5/4)*x^2 + x")).equals(poly(f, {q(0), q(1), q(5, 4)})));
  EXPECT_TRUE(s.polynomial(parse_expression("-x^2")).equals(poly(f, {q(0), q(0), q(-1)})));
  EXPECT_TRUE(s.polynomial(parse_expression("2^-2 * (x + 1)^2")).equals(poly(f, {q(1, 4), q(1, 2), q(1, 4)})));
  EXPECT_EQ(s.element(parse_expression("-5/4")).rational(), q(-5, 4));
}

TEST(Parser, SyntaxErrorsCarryColumns) {
  auto column = [](const std::string& text) {
    try {
      parse_expression(text);
    } catch (const hz::ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  EXPECT_EQ(column("x^^2"), 2);
  EXPECT_EQ(column("x + "), 4);
  EXPECT_EQ(column("(x + 1"), 6);
  EXPECT_EQ(column("x $ 1"), 2);
  EXPECT_EQ(column("x^y"), 2);
  EXPECT_EQ(column("x + 1"), -1);
}

TEST(Parser, Commands) {
  EXPECT_FALSE(parse_command("   # only a comment").has_value());
  EXPECT_FALSE(parse_command("").has_value());
  const auto h = parse_command("hensel a := (x^2 - 6, 1)  # comment");
  ASSERT_TRUE(h.has_value());
  ASSERT_TRUE(std::holds_alternative<cmd::Hensel>(*h));
  EXPECT_EQ(std::get<cmd::Hensel>(*h).name, "a");
  const auto c = parse_command("check a 20");
  ASSERT_TRUE(std::holds_alternative<cmd::Check>(*c));
  EXPECT_EQ(std::get<cmd::Check>(*c).precision, std::optional<std::size_t>(20));
  EXPECT_THROW(parse_command("frobnicate 3"), hz::ParseError);
  EXPECT_THROW(parse_command("field R 5"), hz::ParseError);
  EXPECT_THROW(parse_command("hensel a = (x, 0)"), hz::ParseError);
  EXPECT_THROW(parse_command("hensel a := (x - 1)"), hz::ParseError);
  EXPECT_THROW(parse_command("check a 0"), hz::ParseError);
  EXPECT_THROW(parse_command("show bindings"), hz::ParseError);
}

TEST(Parser, EqOperandSplit) {
  auto s = with_field(5);
  auto operands = [](const std::string& line) {
    const auto c = parse_command(line);
    return std::get<cmd::Equal>(*c);
  };
  auto value = [&](const Expr& e) { return s.element(e).rational(); };
  auto e = operands("eq 2 - 1 -1");
  EXPECT_EQ(value(e.lhs), q(1));
  EXPECT_EQ(value(e.rhs), q(-1));
  e = operands("eq (1 + 2) 3");
  EXPECT_EQ(value(e.lhs), q(3));
  e = operands("eq 1 - 2, -1");
  EXPECT_EQ(value(e.rhs), q(-1));
  EXPECT_THROW(parse_command("eq 1 + 2"), hz::ParseError);
  EXPECT_THROW(parse_command("eq 1 2 3"), hz::ParseError);
}

TEST(Session, WorkedChain) {
  auto s = with_field(5);
  const auto h = run(s, "hensel a := (x^2 - 6, 1)");
  ASSERT_EQ(h.status, Outcome::Status::Ok) << h.text;
  EXPECT_EQ(h.data["special"], "x^2 - x + 25/196");
  EXPECT_EQ(h.data["mobius"], "(98*beta_a - 25)/(28*beta_a)");
  EXPECT_EQ(h.data["offset_description"], "5/2");
  EXPECT_EQ(h.data["unit_factor"], "-5/4*x^2 - x + 1");
  EXPECT_NE(h.text.find("special polynomial: x^2 - x + 25/196"), std::string::npos);
  EXPECT_EQ(run(s, "describe a^2 - 6").text, "Zero");
  EXPECT_EQ(run(s, "val a - 1").text, "1");
  EXPECT_EQ(run(s, "val a^2 - 6").text, "∞");
  EXPECT_EQ(run(s, "eq a^2 6").text, "true");
  EXPECT_EQ(run(s, "eq a 1").text, "false");
  EXPECT_EQ(run(s, "eq (98*beta_a - 25)/(28*beta_a) a").text, "true");
  const auto c = run(s, "check a");
  EXPECT_EQ(c.data["verdict"], "pass");
  EXPECT_EQ(c.data["precision"], 50);
}

TEST(Session, PolygonExample) {
  auto s = with_field(5);
  const auto p = run(s, "polygon x^2 + 2*x - 5");
  ASSERT_EQ(p.status, Outcome::Status::Ok);
  EXPECT_EQ(p.data["vertices"], nlohmann::json::parse(R"([[0,"1"],[1,"0"],[2,"0"]])"));
  EXPECT_EQ(p.data["slopes"], nlohmann::json::parse(R"(["1","0"])"));
  EXPECT_NE(p.text.find("vertices: (0, 1) (1, 0) (2, 0)"), std::string::npos);
  EXPECT_NE(p.text.find("slopes: 1, 0"), std::string::npos);
}

TEST(Session, ErrorsNameTheCondition) {
  auto s = with_field(5);
  auto expect_error = [&](const std::string& line, Outcome::Status status, const std::string& message) {
    const auto o = run(s, line);
    EXPECT_EQ(o.status, status) << line;
    EXPECT_NE(o.text.find(message), std::string::npos) << line << ": " << o.text;
  };
  using St = Outcome::Status;
  expect_error("hensel a := (x^2 - 6, 2)", St::CommandError, "P(a) not in maximal ideal");
  expect_error("hensel a := (x^2 - 25, 0)", St::CommandError, "P'(a) not a unit");
  expect_error("hensel a := (x^2/5 - 6, 1)", St::CommandError, "not in valuation ring");
  expect_error("hensel a := (x^2 - 6, 1/5)", St::CommandError, "a not in valuation ring");
  expect_error("special t := x^2 + x + 5", St::CommandError, "must be -1");
  expect_error("special t := x^2 - x + 1", St::CommandError, "not in maximal ideal");
  expect_error("val y", St::ParseError, "unbound identifier 'y'");
  expect_error("describe x", St::ParseError, "x is only allowed in polynomials");
  expect_error("describe 1/0", St::CommandError, "division by zero");
  expect_error("polygon 0", St::CommandError, "zero polynomial");
  expect_error("check nope", St::CommandError, "unbound identifier");
  expect_error("field Q 6", St::CommandError, "not prime");
  ASSERT_EQ(run(s, "hensel a := (x^2 - 6, 1)").status, St::Ok);
  expect_error("hensel a := (x^2 - 11, 1)", St::CommandError, "already bound");
  expect_error("hensel x := (x^2 - 11, 1)", St::CommandError, "cannot be bound");
  expect_error("hensel b := (x^2 - a - 5, 1)", St::Ok, "tower depth 2");
  expect_error("check b", St::CommandError, "rational coefficients");
}

TEST(Session, NoFieldYet) {
  Session s;
  const auto o = run(s, "describe 1");
  EXPECT_EQ(o.status, Outcome::Status::CommandError);
  EXPECT_NE(o.text.find("no field defined"), std::string::npos);
}

TEST(Session, LargePrimeIsFlagged) {
  Session s;
  const auto o = run(s, "field Q 2305843009213693951");
  EXPECT_EQ(o.data["probable_prime"], true);
  EXPECT_NE(o.text.find("probable prime"), std::string::npos);
  EXPECT_EQ(run(s, "field Q 5").data["probable_prime"], false);
}

TEST(Session, FieldResetsBindings) {
  auto s = with_field(5);
  run(s, "hensel a := (x^2 - 6, 1)");
  run(s, "field Q 7");
  EXPECT_EQ(s.tower().depth(), 0u);
  EXPECT_EQ(run(s, "val a").status, Outcome::Status::ParseError);
}

TEST(Session, SpecialAndExactRoots) {
  auto s = with_field(5);
  const auto t = run(s, "special t := x^2 - x + 25/196");
  ASSERT_EQ(t.status, Outcome::Status::Ok) << t.text;
  EXPECT_EQ(run(s, "describe t").text, "121/196");
  const auto trivial = run(s, "special u := x^2 - x");
  EXPECT_EQ(trivial.data["trivial"], true);
  EXPECT_EQ(run(s, "eq u 1").text, "true");
  const auto exact = run(s, "hensel c := (x - 8, 3)");
  EXPECT_EQ(exact.data["exact"], "8");
  EXPECT_EQ(run(s, "check c").data["verdict"], "pass");
  EXPECT_EQ(run(s, "check t").data["verdict"], "pass");
  EXPECT_EQ(run(s, "check t 1").data["verdict"], "insufficient precision");
}

// Printing any element and parsing it back gives an equal element.
TEST(Session, PrintParseRoundTrip) {
  auto s = with_field(5);
  run(s, "hensel a := (x^2 - 6, 1)");
  run(s, "hensel b := (x^3 + x + 3 + 5*a, 1)");
  ASSERT_EQ(s.tower().depth(), 2u);
  hz::test::Gen gen(61);
  const std::vector<std::string> atoms{"a", "b", "beta_a", "beta_b", "1", "5", "2/7"};
  for (int trial = 0; trial < 40; ++trial) {
    std::string text;
    const int terms = static_cast<int>(gen.uniform(1, 3));
    for (int k = 0; k < terms; ++k) {
      if (k > 0) text += gen.coin() ? " + " : " - ";
      text += atoms[gen.uniform(0, atoms.size() - 1)];
      if (gen.coin()) text += "^" + std::to_string(gen.uniform(0, 3));
      if (gen.coin()) text += "/(" + atoms[gen.uniform(0, atoms.size() - 1)] + " + 3)";
    }
    const auto e = s.element(parse_expression(text));
    const auto printed = e.to_string();
    const auto back = s.element(parse_expression(printed));
    EXPECT_TRUE(s.tower().equals(e, back)) << text << " printed as " << printed;
  }
}

TEST(Script, ExitCodes) {
  EXPECT_EQ(script("field Q 5\nhensel a := (x^2 - 6, 1)\ndescribe a\n").code, 0);
  EXPECT_EQ(script("field Q 5\nhensel a := (x^2 - 6, 2)\ndescribe 1\n").code, 1);
  EXPECT_EQ(script("field Q 5\nhensel a := (x^2 - 6, 2)\nfoo\n").code, 2);
  // Processing continues after an error.
  const auto r = script("field Q 5\nfoo\nval 25\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("2"), std::string::npos);
  EXPECT_NE(r.err.find("line 2: parse error: unknown command 'foo'"), std::string::npos);
}

TEST(Script, StructuredIsOneObjectPerCommand) {
  const auto r = script("# setup\nfield Q 5\n\npolygon x^2 + 2*x - 5\nval 1/0\n", Format::Structured);
  std::istringstream lines(r.out);
  std::vector<nlohmann::json> records;
  for (std::string line; std::getline(lines, line);) records.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(records.size(), 3u);
  EXPECT_EQ(records[0]["line"], 2);
  EXPECT_EQ(records[1]["command"], "polygon");
  EXPECT_EQ(records[1]["result"]["slopes"], nlohmann::json::parse(R"(["1","0"])"));
  EXPECT_EQ(records[2]["ok"], false);
  EXPECT_EQ(records[2]["error"], "command");
  EXPECT_EQ(r.code, 1);
}

TEST(Script, Deterministic) {
  const std::string text = "field Q 5\nhensel a := (x^2 - 6, 1)\nhensel b := (x^2 - a - 5, 1)\ndescribe b - 1\nshow tower\n";
  EXPECT_EQ(script(text).out, script(text).out);
}

TEST(Plot, MarksVerticesAndInfinity) {
  auto s = with_field(5);
  const auto p = run(s, "polygon x^3 + 25*x");
  EXPECT_EQ(p.data["zero_root_width"], 1);
  EXPECT_NE(p.text.find("∞ | .   .  "), std::string::npos) << p.text;
  EXPECT_NE(p.text.find("2 |   o    "), std::string::npos) << p.text;
}

}  // namespace
}  // namespace hzcli
