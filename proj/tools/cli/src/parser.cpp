#include "hzcli/parser.hpp"

#include <cctype>

#include "hz/errors.hpp"

namespace hzcli {
namespace {

using hz::ParseError;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  Expr parse() {
    skip_space();
    if (at_end()) fail("expected an expression");
    Expr e = sum();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  Expr sum() {
    Expr left = product();
    for (;;) {
      skip_space();
      if (at_end() || (peek() != '+' && peek() != '-')) return left;
      const auto at = column();
      const auto kind = text_[pos_++] == '+' ? Expr::Kind::Add : Expr::Kind::Sub;
      left = binary(kind, std::move(left), product(), at);
    }
  }

  Expr product() {
    Expr left = unary();
    for (;;) {
      skip_space();
      if (at_end() || (peek() != '*' && peek() != '/')) return left;
      const auto at = column();
      const auto kind = text_[pos_++] == '*' ? Expr::Kind::Mul : Expr::Kind::Div;
      left = binary(kind, std::move(left), unary(), at);
    }
  }

  Expr unary() {
    skip_space();
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      const auto at = column();
      const bool minus = text_[pos_++] == '-';
      Expr inner = unary();
      if (!minus) return inner;
      Expr e;
      e.kind = Expr::Kind::Neg;
      e.position = at;
      e.args.push_back(std::move(inner));
      return e;
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    skip_space();
    if (at_end() || peek() != '^') return base;
    const auto at = column();
    ++pos_;
    skip_space();
    bool negative = false;
    if (!at_end() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (at_end() || !is_digit(peek())) fail("exponent must be an integer literal");
    const auto start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (pos_ - start > 6) fail("exponent too large", start);
    Expr e;
    e.kind = Expr::Kind::Pow;
    e.position = at;
    e.exponent = std::stol(std::string(text_.substr(start, pos_ - start))) * (negative ? -1 : 1);
    e.args.push_back(std::move(base));
    return e;
  }

  Expr atom() {
    skip_space();
    if (at_end()) fail("unexpected end of expression");
    Expr e;
    e.position = column();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      e = sum();
      skip_space();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (is_digit(c)) {
      const auto start = pos_;
      while (!at_end() && is_digit(peek())) ++pos_;
      e.kind = Expr::Kind::Number;
      e.number = hz::Integer(std::string(text_.substr(start, pos_ - start)));
      return e;
    }
    if (is_ident_start(c)) {
      const auto start = pos_;
      while (!at_end() && is_ident_char(peek())) ++pos_;
      e.name = std::string(text_.substr(start, pos_ - start));
      e.kind = e.name == "x" ? Expr::Kind::Variable : Expr::Kind::Name;
      return e;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Expr binary(Expr::Kind kind, Expr left, Expr right, std::size_t at) {
    Expr e;
    e.kind = kind;
    e.position = at;
    e.args.push_back(std::move(left));
    e.args.push_back(std::move(right));
    return e;
  }

  [[noreturn]] void fail(const std::string& message) { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) {
    throw ParseError(message + " at column " + std::to_string(offset_ + at + 1), offset_ + at);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  std::size_t column() const { return offset_ + pos_; }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

Expr parse_at(std::string_view text, std::size_t offset) { return ExprParser(text, offset).parse(); }

// Cursor over a command line; positions are columns of the full line.
struct Line {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_space();
    return pos >= text.size();
  }
  std::string word() {
    skip_space();
    const auto start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  }
  std::string identifier(const char* what) {
    skip_space();
    const auto start = pos;
    if (pos < text.size() && is_ident_start(text[pos]))
      while (pos < text.size() && is_ident_char(text[pos])) ++pos;
    if (pos == start) fail(std::string("expected ") + what);
    return std::string(text.substr(start, pos - start));
  }
  void expect(std::string_view token) {
    skip_space();
    if (text.substr(pos, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos += token.size();
  }
  Expr rest_expression() {
    skip_space();
    const auto start = pos;
    pos = text.size();
    return parse_at(text.substr(start), start);
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message + " at column " + std::to_string(pos + 1), pos);
  }
};

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

std::size_t matching_close(const Line& line, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < line.text.size(); ++i) {
    if (line.text[i] == '(') ++depth;
    if (line.text[i] == ')' && --depth == 0) return i;
  }
  throw ParseError("unbalanced '(' at column " + std::to_string(open + 1), open);
}

std::optional<std::size_t> top_level(std::string_view text, char c) {
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth == 0 && text[i] == c) return i;
  }
  return std::nullopt;
}

// `eq` takes two expressions. A top-level comma separates them; otherwise the
// split is the unique top-level space not adjacent to a binary operator.
std::pair<Expr, Expr> two_expressions(std::string_view text, std::size_t offset) {
  if (const auto comma = top_level(text, ','))
    return {parse_at(text.substr(0, *comma), offset), parse_at(text.substr(*comma + 1), offset + *comma + 1)};
  std::vector<std::size_t> splits;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth != 0 || !std::isspace(static_cast<unsigned char>(c))) continue;
    std::size_t l = i, r = i;
    while (l > 0 && std::isspace(static_cast<unsigned char>(text[l - 1]))) --l;
    while (r < text.size() && std::isspace(static_cast<unsigned char>(text[r]))) ++r;
    if (l == 0 || r == text.size()) continue;
    if (std::string_view("+-*/^(").find(text[l - 1]) != std::string_view::npos) continue;
    if (std::string_view("+*/^)").find(text[r]) != std::string_view::npos) continue;
    if (text[r] == '-' && (r + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[r + 1])))) continue;
    if (!splits.empty() && splits.back() >= l) continue;
    splits.push_back(i);
    i = r - 1;
  }
  if (splits.size() != 1)
    throw ParseError(splits.empty() ? "eq needs two expressions" : "ambiguous eq; separate the operands with ','",
                     offset);
  const auto s = splits[0];
  return {parse_at(text.substr(0, s), offset), parse_at(text.substr(s + 1), offset + s + 1)};
}

}  // namespace

Expr parse_expression(std::string_view text) { return parse_at(text, 0); }

const Expr* find_variable(const Expr& e) {
  if (e.kind == Expr::Kind::Variable) return &e;
  for (const auto& a : e.args)
    if (const auto* v = find_variable(a)) return v;
  return nullptr;
}

bool mentions_variable(const Expr& e) { return find_variable(e) != nullptr; }

std::optional<Command> parse_command(std::string_view raw) {
  Line line{strip_comment(raw)};
  if (line.at_end()) return std::nullopt;
  const auto keyword_at = line.pos;
  const auto keyword = line.word();
  if (keyword == "field") {
    if (line.word() != "Q") line.fail("only the field Q is supported");
    line.skip_space();
    const auto start = line.pos;
    const auto digits = line.word();
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      line.pos = start;
      line.fail("expected a prime");
    }
    if (!line.at_end()) line.fail("unexpected text after the prime");
    return cmd::Field{hz::Integer(digits)};
  }
  if (keyword == "hensel") {
    auto name = line.identifier("a name");
    line.expect(":=");
    line.skip_space();
    if (line.pos >= line.text.size() || line.text[line.pos] != '(') line.fail("expected '(' starting (poly, approx)");
    const auto open = line.pos;
    const auto close = matching_close(line, open);
    const auto inner = line.text.substr(open + 1, close - open - 1);
    const auto comma = top_level(inner, ',');
    if (!comma) throw ParseError("expected ',' between the polynomial and the approximation", open);
    line.pos = close + 1;
    if (!line.at_end()) line.fail("unexpected text after ')'");
    return cmd::Hensel{std::move(name), parse_at(inner.substr(0, *comma), open + 1),
                       parse_at(inner.substr(*comma + 1), open + 2 + *comma)};
  }
  if (keyword == "special") {
    auto name = line.identifier("a name");
    line.expect(":=");
    return cmd::Special{std::move(name), line.rest_expression()};
  }
  if (keyword == "describe") return cmd::Describe{line.rest_expression()};
  if (keyword == "val") return cmd::Valuation{line.rest_expression()};
  if (keyword == "polygon") return cmd::PolygonOf{line.rest_expression()};
  if (keyword == "eq") {
    line.skip_space();
    auto [lhs, rhs] = two_expressions(line.text.substr(line.pos), line.pos);
    return cmd::Equal{std::move(lhs), std::move(rhs)};
  }
  if (keyword == "check") {
    auto name = line.identifier("a name");
    cmd::Check c{std::move(name), std::nullopt};
    if (!line.at_end()) {
      const auto start = line.pos;
      const auto digits = line.word();
      if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 6) {
        line.pos = start;
        line.fail("precision must be a positive integer");
      }
      c.precision = std::stoul(digits);
      if (*c.precision == 0) {
        line.pos = start;
        line.fail("precision must be a positive integer");
      }
      if (!line.at_end()) line.fail("unexpected text after the precision");
    }
    return c;
  }
  if (keyword == "show") {
    if (line.word() != "tower") line.fail("expected 'show tower'");
    if (!line.at_end()) line.fail("unexpected text after 'show tower'");
    return cmd::ShowTower{};
  }
  throw ParseError("unknown command '" + keyword + "'", keyword_at);
}

const char* command_name(const Command& c) {
  struct Visitor {
    const char* operator()(const cmd::Field&) const { return "field"; }
    const char* operator()(const cmd::Hensel&) const { return "hensel"; }
    const char* operator()(const cmd::Special&) const { return "special"; }
    const char* operator()(const cmd::Describe&) const { return "describe"; }
    const char* operator()(const cmd::Valuation&) const { return "val"; }
    const char* operator()(const cmd::Equal&) const { return "eq"; }
    const char* operator()(const cmd::PolygonOf&) const { return "polygon"; }
    const char* operator()(const cmd::Check&) const { return "check"; }
    const char* operator()(const cmd::ShowTower&) const { return "show"; }
  };
  return std::visit(Visitor{}, c);
}

}  // namespace hzcli
