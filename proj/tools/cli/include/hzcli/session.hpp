#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hz/padic_oracle.hpp"
#include "hz/tower.hpp"
#include "hzcli/parser.hpp"

namespace hzcli {

struct Outcome {
  enum class Status { Ok, CommandError, ParseError };

  Status status = Status::Ok;
  /// Rendered result, or the error message.
  std::string text;
  nlohmann::json data = nlohmann::json::object();
};

/// The state of a script: a base prime, a tower over it and named elements.
class Session {
 public:
  explicit Session(std::size_t precision = hz::oracle::kDefaultPrecision) : precision_(precision) {}

  /// nullopt for blank and comment lines.
  std::optional<Outcome> run_line(std::string_view line);
  Outcome run(const Command& command);

  bool has_field() const { return tower_.has_value(); }
  const hz::Tower& tower() const;
  /// Element bound to `name`. Throws hz::DomainError when unbound.
  const hz::Element& lookup(const std::string& name) const;

  /// Evaluates an expression without x. Throws hz::ParseError on x or unbound names.
  hz::Element element(const Expr& e) const;
  /// Evaluates an expression in x over the top of the tower.
  hz::Polynomial polynomial(const Expr& e) const;

 private:
  struct Binding {
    hz::Element value;
    // The data `check` needs: a Hensel code, or a special polynomial (approx 1).
    std::optional<hz::Polynomial> poly;
    std::optional<hz::Element> approx;
    bool special = false;
  };

  Outcome field(const cmd::Field& c);
  Outcome hensel(const cmd::Hensel& c);
  Outcome special(const cmd::Special& c);
  Outcome describe(const cmd::Describe& c) const;
  Outcome valuation(const cmd::Valuation& c) const;
  Outcome equal(const cmd::Equal& c) const;
  Outcome polygon(const cmd::PolygonOf& c) const;
  Outcome check(const cmd::Check& c) const;
  Outcome show_tower() const;

  void resolve(const Expr& e, bool allow_variable) const;
  hz::Polynomial eval(const Expr& e) const;
  void bind(const std::string& name, Binding b);
  void require_unbound(const std::string& name) const;

  std::size_t precision_;
  std::shared_ptr<const hz::PAdicRationals> base_;
  std::optional<hz::Tower> tower_;
  std::map<std::string, Binding> bindings_;
  std::vector<std::string> order_;
};

enum class Format { Text, Structured };

/// Runs every line of `in`; returns 0, 1 if a command failed, 2 if a line did not parse.
int run_script(std::istream& in, std::ostream& out, std::ostream& err, Format format,
               std::size_t precision = hz::oracle::kDefaultPrecision);

/// ASCII picture of the polygon: one row per finite value, highest first.
std::string plot_polygon(const hz::NewtonPolygon& polygon);

}  // namespace hzcli
