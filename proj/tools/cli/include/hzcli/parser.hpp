#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hz/rational.hpp"

namespace hzcli {

struct Expr {
  enum class Kind { Number, Variable, Name, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind = Kind::Number;
  hz::Integer number;
  std::string name;
  long exponent = 0;
  std::vector<Expr> args;
  std::size_t position = 0;
};

/// Arithmetic over integers, x and identifiers: + - * / ^ and parentheses.
/// Exponents are integer literals. Throws hz::ParseError with a column.
Expr parse_expression(std::string_view text);

/// Calls f on every identifier of e other than x.
template <typename F>
void for_each_name(const Expr& e, F&& f) {
  if (e.kind == Expr::Kind::Name) f(e);
  for (const auto& a : e.args) for_each_name(a, f);
}
bool mentions_variable(const Expr& e);
const Expr* find_variable(const Expr& e);

namespace cmd {
struct Field {
  hz::Integer p;
};
struct Hensel {
  std::string name;
  Expr poly;
  Expr approx;
};
struct Special {
  std::string name;
  Expr poly;
};
struct Describe {
  Expr expr;
};
struct Valuation {
  Expr expr;
};
struct Equal {
  Expr lhs;
  Expr rhs;
};
struct PolygonOf {
  Expr poly;
};
struct Check {
  std::string name;
  std::optional<std::size_t> precision;
};
struct ShowTower {};
}  // namespace cmd

using Command = std::variant<cmd::Field, cmd::Hensel, cmd::Special, cmd::Describe, cmd::Valuation, cmd::Equal,
                             cmd::PolygonOf, cmd::Check, cmd::ShowTower>;

/// nullopt for blank and comment-only lines. Throws hz::ParseError.
std::optional<Command> parse_command(std::string_view line);

const char* command_name(const Command& c);

}  // namespace hzcli
