#include "hzcli/session.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "hz/errors.hpp"
#include "hz/newton_polygon.hpp"

namespace hzcli {
namespace {

using hz::DomainError;
using hz::Element;
using hz::ParseError;
using hz::Polynomial;
using nlohmann::json;

Outcome ok(std::string text, json data = json::object()) { return {Outcome::Status::Ok, std::move(text), std::move(data)}; }

std::string point(const hz::PolygonPoint& pt) {
  return "(" + std::to_string(pt.index) + ", " + pt.value.to_string() + ")";
}

json coefficients(const Polynomial& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

std::string description_text(const hz::ImmediateDescription& d) { return d.to_string(); }

json description_json(const hz::ImmediateDescription& d) {
  return d.is_zero() ? json("Zero") : json(d.value().to_string());
}

struct Verdict {
  hz::oracle::CheckVerdict verdict;
  std::string label;
};

Verdict judge(const hz::oracle::ModularApprox& xi, const hz::ImmediateDescription& d, std::string label) {
  using hz::oracle::CheckVerdict;
  if (d.is_zero()) return {xi.residue == 0 ? CheckVerdict::Pass : CheckVerdict::Fail, std::move(label) + " = 0"};
  return {hz::oracle::check_description(xi, d.value().rational()), std::move(label) + " ~ " + d.to_string()};
}

}  // namespace

const hz::Tower& Session::tower() const {
  if (!tower_) throw DomainError("no field defined; start with 'field Q <p>'");
  return *tower_;
}

const Element& Session::lookup(const std::string& name) const {
  const auto it = bindings_.find(name);
  if (it == bindings_.end()) throw DomainError("unbound identifier '" + name + "'");
  return it->second.value;
}

void Session::resolve(const Expr& e, bool allow_variable) const {
  tower();
  if (!allow_variable) {
    if (const auto* v = find_variable(e))
      throw ParseError("x is only allowed in polynomials (column " + std::to_string(v->position + 1) + ")", v->position);
  }
  for_each_name(e, [&](const Expr& n) {
    if (!bindings_.count(n.name))
      throw ParseError("unbound identifier '" + n.name + "' at column " + std::to_string(n.position + 1), n.position);
  });
}

Polynomial Session::eval(const Expr& e) const {
  const auto f = tower().top();
  switch (e.kind) {
    case Expr::Kind::Number:
      return Polynomial::constant(f, Element(hz::Rational(e.number)));
    case Expr::Kind::Variable:
      return Polynomial::x(f);
    case Expr::Kind::Name:
      return Polynomial::constant(f, lookup(e.name));
    case Expr::Kind::Neg:
      return -eval(e.args[0]);
    case Expr::Kind::Add:
      return eval(e.args[0]) + eval(e.args[1]);
    case Expr::Kind::Sub:
      return eval(e.args[0]) - eval(e.args[1]);
    case Expr::Kind::Mul:
      return eval(e.args[0]) * eval(e.args[1]);
    case Expr::Kind::Div: {
      const auto divisor = eval(e.args[1]);
      if (divisor.degree() > 0) throw DomainError("division by a polynomial in x");
      if (divisor.is_zero()) throw hz::DivisionByZero("division by zero");
      return eval(e.args[0]).scaled(f->inv(divisor.coeff(0)));
    }
    case Expr::Kind::Pow: {
      auto base = eval(e.args[0]);
      if (e.exponent >= 0) return base.pow(static_cast<std::size_t>(e.exponent));
      if (base.degree() > 0) throw DomainError("negative power of a polynomial in x");
      if (base.is_zero()) throw hz::DivisionByZero("division by zero");
      return Polynomial::constant(f, f->inv(base.coeff(0))).pow(static_cast<std::size_t>(-e.exponent));
    }
  }
  throw hz::InternalError("unknown expression kind");
}

Element Session::element(const Expr& e) const {
  resolve(e, false);
  return eval(e).coeff(0);
}

Polynomial Session::polynomial(const Expr& e) const {
  resolve(e, true);
  return eval(e);
}

void Session::require_unbound(const std::string& name) const {
  if (name == "x") throw DomainError("x is the polynomial variable and cannot be bound");
  if (bindings_.count(name)) throw DomainError("'" + name + "' is already bound");
}

void Session::bind(const std::string& name, Binding b) {
  bindings_.insert_or_assign(name, std::move(b));
  order_.push_back(name);
}

std::optional<Outcome> Session::run_line(std::string_view line) {
  std::optional<Command> command;
  try {
    command = parse_command(line);
  } catch (const ParseError& e) {
    return Outcome{Outcome::Status::ParseError, e.what(), json::object()};
  }
  if (!command) return std::nullopt;
  return run(*command);
}

Outcome Session::run(const Command& command) {
  try {
    return std::visit(
        [this](const auto& c) -> Outcome {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, cmd::Field>) return field(c);
          else if constexpr (std::is_same_v<T, cmd::Hensel>) return hensel(c);
          else if constexpr (std::is_same_v<T, cmd::Special>) return special(c);
          else if constexpr (std::is_same_v<T, cmd::Describe>) return describe(c);
          else if constexpr (std::is_same_v<T, cmd::Valuation>) return valuation(c);
          else if constexpr (std::is_same_v<T, cmd::Equal>) return equal(c);
          else if constexpr (std::is_same_v<T, cmd::PolygonOf>) return polygon(c);
          else if constexpr (std::is_same_v<T, cmd::Check>) return check(c);
          else return show_tower();
        },
        command);
  } catch (const ParseError& e) {
    return {Outcome::Status::ParseError, e.what(), json::object()};
  } catch (const hz::InvalidHenselCode& e) {
    return {Outcome::Status::CommandError, std::string("invalid Hensel code: ") + e.what(), json::object()};
  } catch (const hz::NotSpecial& e) {
    return {Outcome::Status::CommandError, std::string("not special: ") + e.what(), json::object()};
  } catch (const hz::Error& e) {
    return {Outcome::Status::CommandError, e.what(), json::object()};
  }
}

Outcome Session::field(const cmd::Field& c) {
  auto base = std::make_shared<const hz::PAdicRationals>(c.p);
  base_ = base;
  tower_.emplace(base);
  bindings_.clear();
  order_.clear();
  const bool probable = c.p > hz::PAdicRationals::kTrialDivisionCap;
  std::string text = "field Q with the " + c.p.get_str() + "-adic valuation";
  if (probable) text += " (p is a probable prime)";
  return ok(std::move(text), {{"p", c.p.get_str()}, {"probable_prime", probable}});
}

Outcome Session::hensel(const cmd::Hensel& c) {
  require_unbound(c.name);
  const auto generator = "beta_" + c.name;
  require_unbound(generator);
  const auto p = polynomial(c.poly);
  const auto a = element(c.approx);
  const auto code = hz::validate_hensel_code(p, a);
  const auto old_top = tower().top();
  auto zero = hz::hensel_zero(tower(), code, generator);
  const auto& chain = zero.chain;

  std::ostringstream out;
  json data{{"name", c.name}, {"poly", p.to_string()}, {"approx", a.to_string()}};
  out << c.name << " := root of " << p.to_string() << " near " << a.to_string() << "\n";
  out << "  shifted: " << chain.shifted.shifted.to_string() << "\n";
  out << "  v(" << c.name << " - " << a.to_string() << ") = " << chain.shifted.root_valuation.to_string() << "\n";
  out << "  description of " << c.name << " - " << a.to_string() << ": " << chain.offset_description.to_string() << "\n";
  data["shifted"] = chain.shifted.shifted.to_string();
  data["offset_valuation"] = chain.shifted.root_valuation.to_string();
  data["offset_description"] = chain.offset_description.to_string();
  if (chain.unit_factor) {
    out << "  unit factor: " << chain.unit_factor->to_string() << "\n";
    data["unit_factor"] = chain.unit_factor->to_string();
  }
  if (zero.extended) {
    const auto& ext = chain.outcome->extended();
    out << "  special polynomial: " << ext.special.poly().to_string() << "\n";
    out << "  " << c.name << " = " << chain.mobius->to_string(*old_top, generator) << "\n";
    data["special"] = ext.special.poly().to_string();
    data["special_coefficients"] = coefficients(ext.special.poly());
    data["mobius"] = chain.mobius->to_string(*old_top, generator);
  } else {
    out << "  exact root: " << c.name << " = " << zero.root.to_string() << "\n";
    data["exact"] = zero.root.to_string();
  }
  const auto d = zero.tower.describe(zero.root);
  out << "  description of " << c.name << ": " << description_text(d) << "\n";
  out << "  tower depth " << zero.tower.depth();
  data["description"] = description_json(d);
  data["depth"] = zero.tower.depth();

  tower_ = zero.tower;
  bind(c.name, Binding{zero.root, p, a, false});
  if (zero.extended) bind(generator, Binding{zero.tower.levels().back()->generator(), std::nullopt, std::nullopt, false});
  return ok(out.str(), std::move(data));
}

Outcome Session::special(const cmd::Special& c) {
  require_unbound(c.name);
  const auto t = hz::SpecialPoly::validate(polynomial(c.poly));
  auto pushed = tower().push(t, c.name);
  std::string text = c.name + " := special zero of " + t.poly().to_string() + "\n";
  if (pushed.trivial)
    text += "  T(1) = 0, so " + c.name + " = 1\n";
  text += "  tower depth " + std::to_string(pushed.tower.depth());
  json data{{"name", c.name}, {"special", t.poly().to_string()}, {"trivial", pushed.trivial},
            {"depth", pushed.tower.depth()}};
  tower_ = pushed.tower;
  bind(c.name, Binding{pushed.generator, t.poly(), Element(1), true});
  return ok(std::move(text), std::move(data));
}

Outcome Session::describe(const cmd::Describe& c) const {
  const auto e = element(c.expr);
  const auto d = tower().describe(e);
  std::string text = description_text(d);
  json data{{"element", e.to_string()}, {"description", description_json(d)}};
  if (!d.is_zero() && !d.value().is_rational()) {
    const auto down = hz::describe_to_base(e);
    text += "\nover Q: " + down.to_string();
    data["base_description"] = description_json(down);
  }
  return ok(std::move(text), std::move(data));
}

Outcome Session::valuation(const cmd::Valuation& c) const {
  const auto v = tower().val(element(c.expr));
  return ok(v.to_string(), {{"valuation", v.is_finite() ? json(v.finite().to_string()) : json("infinity")}});
}

Outcome Session::equal(const cmd::Equal& c) const {
  const auto x = element(c.lhs);
  const auto y = element(c.rhs);
  const bool same = tower().equals(x, y);
  return ok(same ? "true" : "false", {{"equal", same}});
}

Outcome Session::polygon(const cmd::PolygonOf& c) const {
  const auto p = polynomial(c.poly);
  const auto np = hz::newton_polygon(p);
  std::ostringstream out;
  json points = json::array(), vertices = json::array(), segments = json::array(), slopes = json::array();
  out << "points:";
  for (const auto& pt : np.points) {
    out << " " << point(pt);
    points.push_back({pt.index, pt.value.is_finite() ? json(pt.value.finite().to_string()) : json("infinity")});
  }
  out << "\nvertices:";
  for (const auto& v : np.vertices) {
    out << " " << point(v);
    vertices.push_back({v.index, v.value.finite().to_string()});
  }
  out << "\nslopes:";
  bool first = true;
  for (const auto& s : np.segments()) {
    out << (first ? " " : ", ") << s.root_valuation().to_string();
    first = false;
    slopes.push_back(s.root_valuation().to_string());
    segments.push_back({{"from", s.left.index}, {"to", s.right.index}, {"width", s.width()},
                        {"slope", s.root_valuation().to_string()}});
  }
  if (np.zero_root_width > 0) out << "\nzero roots: " << np.zero_root_width;
  out << "\n" << plot_polygon(np);
  json data{{"points", points}, {"vertices", vertices}, {"slopes", slopes}, {"segments", segments},
            {"zero_root_width", np.zero_root_width}};
  json roots = json::array();
  for (const auto& v : hz::root_valuations(np)) roots.push_back(v.is_finite() ? json(v.finite().to_string()) : json("infinity"));
  data["root_valuations"] = roots;
  auto text = out.str();
  if (!text.empty() && text.back() == '\n') text.pop_back();
  return ok(std::move(text), std::move(data));
}

Outcome Session::check(const cmd::Check& c) const {
  const auto it = bindings_.find(c.name);
  if (it == bindings_.end()) throw DomainError("unbound identifier '" + c.name + "'");
  const auto& b = it->second;
  if (!b.poly) throw DomainError("'" + c.name + "' was not introduced by hensel or special");
  for (const auto& coeff : b.poly->coeffs())
    if (!coeff.is_rational()) throw DomainError("the oracle needs a polynomial with rational coefficients");
  if (!b.approx->is_rational()) throw DomainError("the oracle needs a rational approximation");
  const auto n = c.precision.value_or(precision_);
  const auto& p = tower().base()->prime();
  const auto lift = hz::oracle::hensel_lift(*b.poly, b.approx->rational(), p, n);

  const auto& f = *tower().top();
  const auto a = b.approx->rational();
  auto shifted = lift;
  shifted.residue = lift.residue - hz::oracle::residue_of(a, p, n);
  if (shifted.residue < 0) shifted.residue += lift.modulus();
  const std::vector<Verdict> verdicts{
      judge(lift, hz::describe_to_base(b.value), c.name),
      judge(shifted, hz::describe_to_base(f.sub(b.value, Element(a))), c.name + " - " + a.to_string())};

  using hz::oracle::CheckVerdict;
  auto overall = CheckVerdict::Pass;
  for (const auto& v : verdicts) {
    if (v.verdict == CheckVerdict::Fail) overall = CheckVerdict::Fail;
    else if (v.verdict == CheckVerdict::InsufficientPrecision && overall == CheckVerdict::Pass)
      overall = CheckVerdict::InsufficientPrecision;
  }
  std::string text = "check " + c.name + " at N = " + std::to_string(n) + ": " + hz::oracle::to_string(overall);
  json cases = json::array();
  for (const auto& v : verdicts) {
    text += "\n  " + v.label + ": " + hz::oracle::to_string(v.verdict);
    cases.push_back({{"claim", v.label}, {"verdict", hz::oracle::to_string(v.verdict)}});
  }
  return ok(std::move(text), {{"name", c.name},
                              {"precision", n},
                              {"verdict", hz::oracle::to_string(overall)},
                              {"pass", overall == CheckVerdict::Pass},
                              {"residue", lift.residue.get_str()},
                              {"cases", cases}});
}

Outcome Session::show_tower() const {
  const auto& t = tower();
  std::ostringstream out;
  out << "base: Q, p = " << t.base()->prime().get_str();
  json levels = json::array();
  for (std::size_t i = 0; i < t.levels().size(); ++i) {
    const auto& level = *t.levels()[i];
    out << "\nlevel " << i + 1 << ": " << level.generator_name() << ", T = " << level.special().poly().to_string();
    levels.push_back({{"generator", level.generator_name()}, {"special", level.special().poly().to_string()}});
  }
  json names = json::object();
  for (const auto& name : order_) {
    const auto& v = bindings_.at(name).value;
    out << "\n" << name << " = " << v.to_string();
    names[name] = v.to_string();
  }
  return ok(out.str(), {{"p", t.base()->prime().get_str()}, {"depth", t.depth()}, {"levels", levels}, {"bindings", names}});
}

std::string plot_polygon(const hz::NewtonPolygon& polygon) {
  std::vector<hz::Rational> rows;
  bool any_infinite = false;
  for (const auto& pt : polygon.points) {
    if (pt.value.is_finite()) rows.push_back(pt.value.finite());
    else any_infinite = true;
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return b < a; });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  std::vector<std::string> labels;
  if (any_infinite) labels.push_back("∞");
  for (const auto& r : rows) labels.push_back(r.to_string());
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l == "∞" ? std::size_t{1} : l.size());

  auto is_vertex = [&](std::size_t i) {
    return std::any_of(polygon.vertices.begin(), polygon.vertices.end(), [&](const auto& v) { return v.index == i; });
  };
  const std::size_t cols = polygon.points.size();
  std::ostringstream out;
  auto row = [&](const std::string& label, auto&& on_row) {
    const auto shown = label == "∞" ? std::size_t{1} : label.size();
    out << std::string(label_width - shown, ' ') << label << " |";
    for (std::size_t i = 0; i < cols; ++i) {
      const auto& pt = polygon.points[i];
      out << ' ' << (on_row(pt) ? (pt.value.is_finite() && is_vertex(i) ? 'o' : '.') : ' ');
    }
    out << "\n";
  };
  if (any_infinite) row("∞", [](const hz::PolygonPoint& pt) { return pt.value.is_infinite(); });
  for (const auto& r : rows)
    row(r.to_string(), [&](const hz::PolygonPoint& pt) { return pt.value.is_finite() && pt.value.finite() == r; });
  out << std::string(label_width, ' ') << " +" << std::string(2 * cols, '-') << "\n";
  out << std::string(label_width + 2, ' ');
  for (std::size_t i = 0; i < cols; ++i) out << ' ' << (i % 10);
  return out.str();
}

int run_script(std::istream& in, std::ostream& out, std::ostream& err, Format format, std::size_t precision) {
  Session session(precision);
  bool command_error = false;
  bool parse_error = false;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto outcome = session.run_line(line);
    if (!outcome) continue;
    const bool failed = outcome->status != Outcome::Status::Ok;
    if (outcome->status == Outcome::Status::ParseError) parse_error = true;
    if (outcome->status == Outcome::Status::CommandError) command_error = true;
    const auto kind = outcome->status == Outcome::Status::ParseError ? "parse" : "command";
    if (format == Format::Structured) {
      json record{{"line", number}, {"ok", !failed}};
      std::string keyword;
      std::istringstream(line) >> keyword;
      record["command"] = keyword;
      if (failed) {
        record["error"] = kind;
        record["message"] = outcome->text;
      } else {
        record["result"] = outcome->data;
      }
      out << record.dump() << "\n";
    } else if (failed) {
      err << "line " << number << ": " << kind << " error: " << outcome->text << "\n";
    } else {
      out << outcome->text << "\n";
    }
  }
  return parse_error ? 2 : command_error ? 1 : 0;
}

}  // namespace hzcli
