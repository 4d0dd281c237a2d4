#pragma once

// Two-variable scalar expressions g(x, y): AST, parser, symbolic
// differentiation and second-order jet evaluation.
//
// Grammar (whitespace-insensitive):
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | atom ('^' integer)?
//   atom   := number | 'x' | 'y' | func '(' expr ')' | '(' expr ')'
//   func   := 'sin' | 'cos' | 'exp' | 'sqrt'
//
// The exponent of '^' is an integer literal, optionally signed.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <system_error>

#include "viewcurve/errors.hpp"
#include "viewcurve/jet.hpp"

namespace viewcurve {

enum class Variable { x, y };
enum class UnaryOp { neg, sin, cos, exp, sqrt };
enum class BinaryOp { add, sub, mul, div };

inline std::string_view to_string(Variable v) { return v == Variable::x ? "x" : "y"; }

inline std::string_view to_string(UnaryOp op) {
  switch (op) {
    case UnaryOp::neg: return "neg";
    case UnaryOp::sin: return "sin";
    case UnaryOp::cos: return "cos";
    case UnaryOp::exp: return "exp";
    case UnaryOp::sqrt: return "sqrt";
  }
  return "?";
}

inline std::string_view to_string(BinaryOp op) {
  switch (op) {
    case BinaryOp::add: return "add";
    case BinaryOp::sub: return "sub";
    case BinaryOp::mul: return "mul";
    case BinaryOp::div: return "div";
  }
  return "?";
}

inline std::string format_constant(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

/// Immutable expression tree. Copies share structure.
class Expr {
 public:
  enum class Kind { constant, variable, unary, binary, power };

  Expr() : Expr(constant(0.0)) {}

  static Expr constant(double value) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::constant;
    n->value = value;
    return Expr(std::move(n));
  }

  static Expr variable(Variable v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::variable;
    n->var = v;
    return Expr(std::move(n));
  }

  /// Literal operands are folded into a constant when the result is finite.
  static Expr unary(UnaryOp op, Expr operand) {
    if (operand.is_constant()) {
      double folded = apply(op, operand.constant_value());
      if (std::isfinite(folded) && !(op == UnaryOp::sqrt && operand.constant_value() < 0.0)) {
        return constant(folded);
      }
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::unary;
    n->uop = op;
    n->lhs = std::move(operand.node_);
    return Expr(std::move(n));
  }

  static Expr binary(BinaryOp op, Expr lhs, Expr rhs) {
    if (lhs.is_constant() && rhs.is_constant()) {
      if (!(op == BinaryOp::div && rhs.constant_value() == 0.0)) {
        double folded = apply(op, lhs.constant_value(), rhs.constant_value());
        if (std::isfinite(folded)) return constant(folded);
      }
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::binary;
    n->bop = op;
    n->lhs = std::move(lhs.node_);
    n->rhs = std::move(rhs.node_);
    return Expr(std::move(n));
  }

  static Expr power(Expr base, int exponent) {
    if (base.is_constant() && !(exponent < 0 && base.constant_value() == 0.0)) {
      double folded = std::pow(base.constant_value(), exponent);
      if (std::isfinite(folded)) return constant(folded);
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::power;
    n->exponent = exponent;
    n->lhs = std::move(base.node_);
    return Expr(std::move(n));
  }

  Kind kind() const { return node_->kind; }
  bool is_constant() const { return node_->kind == Kind::constant; }
  double constant_value() const { return node_->value; }
  Variable variable_id() const { return node_->var; }
  UnaryOp unary_op() const { return node_->uop; }
  BinaryOp binary_op() const { return node_->bop; }
  int exponent() const { return node_->exponent; }

  /// Operand of a unary node, base of a power node, left side of a binary node.
  Expr operand() const { return Expr(node_->lhs); }
  Expr lhs() const { return Expr(node_->lhs); }
  Expr rhs() const { return Expr(node_->rhs); }

  /// Prefix form, e.g. `sub(neg(pow(x,2)),pow(y,2))`.
  std::string to_string() const {
    switch (kind()) {
      case Kind::constant: return format_constant(constant_value());
      case Kind::variable: return std::string(viewcurve::to_string(variable_id()));
      case Kind::unary:
        return std::string(viewcurve::to_string(unary_op())) + "(" + operand().to_string() + ")";
      case Kind::binary:
        return std::string(viewcurve::to_string(binary_op())) + "(" + lhs().to_string() + "," +
               rhs().to_string() + ")";
      case Kind::power:
        return "pow(" + operand().to_string() + "," + std::to_string(exponent()) + ")";
    }
    return "?";
  }

  /// Throws DomainError on division by zero, sqrt of a negative number or a
  /// non-finite intermediate value; the message names the offending node.
  double evaluate(double x, double y) const {
    double result = 0.0;
    switch (kind()) {
      case Kind::constant:
        result = constant_value();
        break;
      case Kind::variable:
        result = variable_id() == Variable::x ? x : y;
        break;
      case Kind::unary: {
        double a = operand().evaluate(x, y);
        if (unary_op() == UnaryOp::sqrt && a < 0.0) {
          throw DomainError("sqrt of negative value in '" + to_string() + "'");
        }
        result = apply(unary_op(), a);
        break;
      }
      case Kind::binary: {
        double a = lhs().evaluate(x, y);
        double b = rhs().evaluate(x, y);
        if (binary_op() == BinaryOp::div && b == 0.0) {
          throw DomainError("division by zero in '" + to_string() + "'");
        }
        result = apply(binary_op(), a, b);
        break;
      }
      case Kind::power: {
        double a = operand().evaluate(x, y);
        if (exponent() < 0 && a == 0.0) {
          throw DomainError("division by zero in '" + to_string() + "'");
        }
        result = std::pow(a, exponent());
        break;
      }
    }
    if (!std::isfinite(result)) {
      throw DomainError("non-finite value in '" + to_string() + "'");
    }
    return result;
  }

 private:
  struct Node {
    Kind kind = Kind::constant;
    double value = 0.0;
    Variable var = Variable::x;
    UnaryOp uop = UnaryOp::neg;
    BinaryOp bop = BinaryOp::add;
    int exponent = 1;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static double apply(UnaryOp op, double a) {
    switch (op) {
      case UnaryOp::neg: return -a;
      case UnaryOp::sin: return std::sin(a);
      case UnaryOp::cos: return std::cos(a);
      case UnaryOp::exp: return std::exp(a);
      case UnaryOp::sqrt: return std::sqrt(a);
    }
    return a;
  }

  static double apply(BinaryOp op, double a, double b) {
    switch (op) {
      case BinaryOp::add: return a + b;
      case BinaryOp::sub: return a - b;
      case BinaryOp::mul: return a * b;
      case BinaryOp::div: return a / b;
    }
    return a;
  }

  std::shared_ptr<const Node> node_;
};

/// Partial derivative of `e` with respect to `var` (product, quotient and chain rules).
inline Expr differentiate(const Expr& e, Variable var) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::constant:
      return Expr::constant(0.0);
    case K::variable:
      return Expr::constant(e.variable_id() == var ? 1.0 : 0.0);
    case K::unary: {
      const Expr u = e.operand();
      const Expr du = differentiate(u, var);
      switch (e.unary_op()) {
        case UnaryOp::neg:
          return Expr::unary(UnaryOp::neg, du);
        case UnaryOp::sin:
          return Expr::binary(BinaryOp::mul, Expr::unary(UnaryOp::cos, u), du);
        case UnaryOp::cos:
          return Expr::binary(BinaryOp::mul,
                              Expr::unary(UnaryOp::neg, Expr::unary(UnaryOp::sin, u)), du);
        case UnaryOp::exp:
          return Expr::binary(BinaryOp::mul, e, du);
        case UnaryOp::sqrt:
          return Expr::binary(BinaryOp::div, du,
                              Expr::binary(BinaryOp::mul, Expr::constant(2.0), e));
      }
      break;
    }
    case K::binary: {
      const Expr a = e.lhs();
      const Expr b = e.rhs();
      const Expr da = differentiate(a, var);
      const Expr db = differentiate(b, var);
      switch (e.binary_op()) {
        case BinaryOp::add:
          return Expr::binary(BinaryOp::add, da, db);
        case BinaryOp::sub:
          return Expr::binary(BinaryOp::sub, da, db);
        case BinaryOp::mul:
          return Expr::binary(BinaryOp::add, Expr::binary(BinaryOp::mul, da, b),
                              Expr::binary(BinaryOp::mul, a, db));
        case BinaryOp::div:
          return Expr::binary(
              BinaryOp::div,
              Expr::binary(BinaryOp::sub, Expr::binary(BinaryOp::mul, da, b),
                           Expr::binary(BinaryOp::mul, a, db)),
              Expr::power(b, 2));
      }
      break;
    }
    case K::power: {
      const int n = e.exponent();
      if (n == 0) return Expr::constant(0.0);
      const Expr u = e.operand();
      return Expr::binary(
          BinaryOp::mul,
          Expr::binary(BinaryOp::mul, Expr::constant(static_cast<double>(n)), Expr::power(u, n - 1)),
          differentiate(u, var));
    }
  }
  return Expr::constant(0.0);
}

/// The six trees g, g_x, g_y, g_xx, g_xy, g_yy, differentiated once up front.
class JetTrees {
 public:
  explicit JetTrees(Expr g)
      : g_(std::move(g)),
        gx_(differentiate(g_, Variable::x)),
        gy_(differentiate(g_, Variable::y)),
        gxx_(differentiate(gx_, Variable::x)),
        gxy_(differentiate(gx_, Variable::y)),
        gyy_(differentiate(gy_, Variable::y)) {}

  const Expr& value() const { return g_; }
  const Expr& dx() const { return gx_; }
  const Expr& dy() const { return gy_; }
  const Expr& dxx() const { return gxx_; }
  const Expr& dxy() const { return gxy_; }
  const Expr& dyy() const { return gyy_; }

  Jet2 evaluate(double x, double y) const {
    return Jet2{g_.evaluate(x, y),   gx_.evaluate(x, y),  gy_.evaluate(x, y),
                gxx_.evaluate(x, y), gxy_.evaluate(x, y), gyy_.evaluate(x, y)};
  }

 private:
  Expr g_, gx_, gy_, gxx_, gxy_, gyy_;
};

inline Jet2 eval_jet2(const Expr& e, double x, double y) { return JetTrees(e).evaluate(x, y); }

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      fail(pos_, "expected operator or end of input, found '" + std::string(1, text_[pos_]) + "'");
    }
    return e;
  }

 private:
  [[noreturn]] static void fail(std::size_t at, const std::string& what) { throw ParseError(at, what); }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      last_token_ = pos_++;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(pos_, std::string("expected '") + c + "'" + found());
  }

  // Input that ends inside a group is reported at the last token read.
  void close_group(std::size_t open_at) {
    if (accept(')')) return;
    if (pos_ >= text_.size()) {
      fail(last_token_, "unbalanced parenthesis, '(' at offset " + std::to_string(open_at) +
                            " is not closed");
    }
    fail(pos_, "expected ')'" + found());
  }

  std::string found() const {
    if (pos_ >= text_.size()) return ", found end of input";
    return ", found '" + std::string(1, text_[pos_]) + "'";
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }

  bool at_number() const {
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return is_digit(c) || (c == '.' && pos_ + 1 < text_.size() && is_digit(text_[pos_ + 1]));
  }

  // Scans [0-9]*(\.[0-9]*)?([eE][+-]?[0-9]+)? starting at pos_.
  double scan_number(bool* integral_literal) {
    const std::size_t start = pos_;
    last_token_ = start;
    bool integral = true;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      integral = false;
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && is_digit(text_[pos_])) {
        integral = false;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      } else {
        pos_ = save;
      }
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{} || ptr != text_.data() + pos_) fail(start, "malformed number");
    if (integral_literal != nullptr) *integral_literal = integral;
    return value;
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(BinaryOp::add, lhs, parse_term());
      } else if (accept('-')) {
        lhs = Expr::binary(BinaryOp::sub, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_term() {
    Expr lhs = parse_factor();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(BinaryOp::mul, lhs, parse_factor());
      } else if (accept('/')) {
        lhs = Expr::binary(BinaryOp::div, lhs, parse_factor());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_factor() {
    if (accept('-')) return Expr::unary(UnaryOp::neg, parse_factor());
    Expr base = parse_atom();
    if (accept('^')) return Expr::power(base, parse_exponent());
    return base;
  }

  int parse_exponent() {
    if (accept('(')) {
      const std::size_t open_at = last_token_;
      const int n = parse_exponent();
      close_group(open_at);
      return n;
    }
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    if (!at_number()) fail(pos_, "expected integer exponent" + found());
    bool integral = true;
    double value = scan_number(&integral);
    if (value != std::floor(value) || (!integral && value != std::trunc(value))) {
      fail(start, "non-integer exponent");
    }
    if (value > static_cast<double>(std::numeric_limits<int>::max())) {
      fail(start, "exponent out of range");
    }
    int n = static_cast<int>(value);
    return negative ? -n : n;
  }

  Expr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) {
      fail(pos_, "expected number, variable, function call or '(', found end of input");
    }
    if (at_number()) return Expr::constant(scan_number(nullptr));
    if (accept('(')) {
      const std::size_t open_at = last_token_;
      Expr inner = parse_expr();
      close_group(open_at);
      return inner;
    }
    if (is_alpha(text_[pos_])) {
      const std::size_t start = pos_;
      last_token_ = start;
      while (pos_ < text_.size() && (is_alpha(text_[pos_]) || is_digit(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "x") return Expr::variable(Variable::x);
      if (name == "y") return Expr::variable(Variable::y);
      UnaryOp op{};
      if (name == "sin") {
        op = UnaryOp::sin;
      } else if (name == "cos") {
        op = UnaryOp::cos;
      } else if (name == "exp") {
        op = UnaryOp::exp;
      } else if (name == "sqrt") {
        op = UnaryOp::sqrt;
      } else {
        fail(start, "unknown identifier '" + std::string(name) + "'");
      }
      expect('(');
      const std::size_t open_at = last_token_;
      Expr arg = parse_expr();
      close_group(open_at);
      return Expr::unary(op, arg);
    }
    fail(pos_, "expected number, variable, function call or '('" + found());
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t last_token_ = 0;
};

}  // namespace detail

/// Throws ParseError carrying the byte offset of the offending token.
inline Expr parse(std::string_view text) { return detail::Parser(text).parse(); }

}  // namespace viewcurve
