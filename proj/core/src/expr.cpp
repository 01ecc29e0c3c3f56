#include "fracon/expr.hpp"

#include "fracon/errors.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

namespace fracon {

namespace {

NodePtr make_node(Node node) { return std::make_shared<const Node>(std::move(node)); }

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool is_integer(double v) { return std::isfinite(v) && v == std::floor(v); }

class Parser {
public:
  Parser(std::string_view text, int arity, const Bindings& constants)
      : text_(text), arity_(arity), constants_(constants) {}

  NodePtr parse() {
    skip_ws();
    if (at_end()) {
      throw ParseError(pos_, "empty expression");
    }
    NodePtr root = parse_expr();
    skip_ws();
    if (!at_end()) {
      throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    }
    return root;
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) {
      throw ParseError(pos_, std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  NodePtr binary(NodeKind kind, NodePtr lhs, NodePtr rhs, std::size_t offset) {
    Node n;
    n.kind = kind;
    n.lhs = std::move(lhs);
    n.rhs = std::move(rhs);
    n.offset = offset;
    return make_node(std::move(n));
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') {
        return lhs;
      }
      const std::size_t at = pos_++;
      NodePtr rhs = parse_term();
      lhs = binary(c == '+' ? NodeKind::add : NodeKind::sub, std::move(lhs), std::move(rhs), at);
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '*' && c != '/') {
        return lhs;
      }
      const std::size_t at = pos_++;
      NodePtr rhs = parse_factor();
      lhs = binary(c == '*' ? NodeKind::mul : NodeKind::div, std::move(lhs), std::move(rhs), at);
    }
  }

  NodePtr parse_factor() {
    skip_ws();
    const std::size_t start = pos_;
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    NodePtr node = parse_atom();
    skip_ws();
    if (peek() == '^') {
      const std::size_t caret = pos_++;
      Node pow;
      pow.kind = NodeKind::pow;
      pow.lhs = std::move(node);
      pow.exponent = parse_exponent();
      pow.offset = caret;
      node = make_node(std::move(pow));
    }
    if (negate) {
      Node neg;
      neg.kind = NodeKind::neg;
      neg.lhs = std::move(node);
      neg.offset = start;
      node = make_node(std::move(neg));
    }
    return node;
  }

  double parse_number(bool allow_sign) {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t end = pos_;
    if (allow_sign && end < text_.size() && text_[end] == '-') {
      ++end;
    }
    const std::size_t digits_start = end;
    while (end < text_.size() && (is_digit(text_[end]) || text_[end] == '.')) {
      ++end;
    }
    if (end == digits_start) {
      throw ParseError(start, "expected number");
    }
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t exp_end = end + 1;
      if (exp_end < text_.size() && (text_[exp_end] == '+' || text_[exp_end] == '-')) {
        ++exp_end;
      }
      if (exp_end < text_.size() && is_digit(text_[exp_end])) {
        while (exp_end < text_.size() && is_digit(text_[exp_end])) {
          ++exp_end;
        }
        end = exp_end;
      }
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + end, value);
    if (ec != std::errc() || ptr != text_.data() + end || !std::isfinite(value)) {
      throw ParseError(start, "malformed number '" + std::string(text_.substr(start, end - start)) + "'");
    }
    pos_ = end;
    return value;
  }

  bool at_alpha_symbol() const {
    return peek() == 'a' && (pos_ + 1 >= text_.size() || !is_ident_char(text_[pos_ + 1]));
  }

  Exponent parse_exponent() {
    skip_ws();
    const std::size_t start = pos_;
    Exponent e;
    if (peek() == '(') {
      ++pos_;
      skip_ws();
      bool have_number = false;
      if (is_digit(peek()) || peek() == '.' || peek() == '-') {
        e.coefficient = parse_number(true);
        have_number = true;
      }
      skip_ws();
      bool star = false;
      if (have_number && peek() == '*') {
        star = true;
        ++pos_;
        skip_ws();
      }
      if (at_alpha_symbol()) {
        ++pos_;
        e.alpha_multiple = true;
      } else if (star || !have_number) {
        throw ParseError(pos_, have_number ? "expected 'a' after '*'" : "expected exponent");
      }
      expect(')');
    } else if (is_digit(peek()) || peek() == '.') {
      e.coefficient = parse_number(false);
      if (at_alpha_symbol()) {
        ++pos_;
        e.alpha_multiple = true;
      }
    } else if (at_alpha_symbol()) {
      ++pos_;
      e.alpha_multiple = true;
    } else {
      throw ParseError(pos_, "expected exponent");
    }
    if (e.alpha_multiple && (!is_integer(e.coefficient) || e.coefficient < 0.0)) {
      throw ParseError(start, "multiple of a must be a nonnegative integer");
    }
    return e;
  }

  NodePtr parse_atom() {
    skip_ws();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (is_digit(c) || c == '.') {
      Node n;
      n.kind = NodeKind::number;
      n.number = parse_number(false);
      n.offset = start;
      return make_node(std::move(n));
    }
    if (is_ident_start(c)) {
      std::size_t end = pos_;
      while (end < text_.size() && is_ident_char(text_[end])) {
        ++end;
      }
      const std::string ident(text_.substr(pos_, end - pos_));
      pos_ = end;
      return identifier(ident, start);
    }
    if (at_end()) {
      throw ParseError(pos_, "unexpected end of input");
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  NodePtr identifier(const std::string& ident, std::size_t start) {
    if (ident == "abs") {
      expect('(');
      Node n;
      n.kind = NodeKind::abs;
      n.lhs = parse_expr();
      n.offset = start;
      expect(')');
      return make_node(std::move(n));
    }
    if (ident == "a") {
      throw ParseError(start, "'a' (alpha) may only appear in exponents");
    }
    if (ident == "x" || ident == "u" || ident == "v") {
      const bool declared = (arity_ == 1) ? ident == "x" : ident != "x";
      if (!declared) {
        throw ParseError(start, "variable '" + ident + "' is not declared for an arity-" +
                                    std::to_string(arity_) + " expression");
      }
      Node n;
      n.kind = NodeKind::variable;
      n.name = ident;
      n.variable_index = ident == "v" ? 1 : 0;
      n.offset = start;
      return make_node(std::move(n));
    }
    if (const auto it = constants_.find(ident); it != constants_.end()) {
      Node n;
      n.kind = NodeKind::constant;
      n.name = ident;
      n.number = it->second;
      n.offset = start;
      return make_node(std::move(n));
    }
    throw ParseError(start, "unbound name '" + ident + "'");
  }

  std::string_view text_;
  int arity_;
  const Bindings& constants_;
  std::size_t pos_ = 0;
};

double checked(double v, const Node& node) {
  if (!std::isfinite(v)) {
    throw EvalError("non-finite value at offset " + std::to_string(node.offset));
  }
  return v;
}

double eval_node(const Node& node, std::span<const double> args, double alpha) {
  switch (node.kind) {
  case NodeKind::number:
  case NodeKind::constant:
    return node.number;
  case NodeKind::variable:
    return args[static_cast<std::size_t>(node.variable_index)];
  case NodeKind::add:
    return checked(eval_node(*node.lhs, args, alpha) + eval_node(*node.rhs, args, alpha), node);
  case NodeKind::sub:
    return checked(eval_node(*node.lhs, args, alpha) - eval_node(*node.rhs, args, alpha), node);
  case NodeKind::mul:
    return checked(eval_node(*node.lhs, args, alpha) * eval_node(*node.rhs, args, alpha), node);
  case NodeKind::div: {
    const double den = eval_node(*node.rhs, args, alpha);
    if (den == 0.0) {
      throw EvalError("division by zero at offset " + std::to_string(node.offset));
    }
    return checked(eval_node(*node.lhs, args, alpha) / den, node);
  }
  case NodeKind::neg:
    return -eval_node(*node.lhs, args, alpha);
  case NodeKind::abs:
    return std::fabs(eval_node(*node.lhs, args, alpha));
  case NodeKind::pow:
    return checked(signed_pow(eval_node(*node.lhs, args, alpha), node.exponent, alpha), node);
  }
  return 0.0;
}

std::string number_text(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

int precedence(const Node& n) {
  switch (n.kind) {
  case NodeKind::add:
  case NodeKind::sub:
    return 1;
  case NodeKind::mul:
  case NodeKind::div:
    return 2;
  case NodeKind::neg:
  case NodeKind::pow:
    return 3;
  default:
    return 4;
  }
}

void print(const Node& n, int min_prec, std::string& out);

void print_wrapped(const Node& n, bool wrap, std::string& out) {
  if (wrap) {
    out += '(';
    print(n, 0, out);
    out += ')';
  } else {
    print(n, 0, out);
  }
}

void print(const Node& n, int min_prec, std::string& out) {
  if (precedence(n) < min_prec) {
    print_wrapped(n, true, out);
    return;
  }
  switch (n.kind) {
  case NodeKind::number:
    out += number_text(n.number);
    return;
  case NodeKind::variable:
  case NodeKind::constant:
    out += n.name;
    return;
  case NodeKind::add:
  case NodeKind::sub:
  case NodeKind::mul:
  case NodeKind::div: {
    const int p = precedence(n);
    print(*n.lhs, p, out);
    const char* op = n.kind == NodeKind::add ? " + " : n.kind == NodeKind::sub ? " - "
                   : n.kind == NodeKind::mul ? "*" : "/";
    out += op;
    print(*n.rhs, p + 1, out);
    return;
  }
  case NodeKind::neg: {
    out += '-';
    const NodeKind k = n.lhs->kind;
    print_wrapped(*n.lhs, !(k == NodeKind::pow || precedence(*n.lhs) == 4), out);
    return;
  }
  case NodeKind::abs:
    out += "abs(";
    print(*n.lhs, 0, out);
    out += ')';
    return;
  case NodeKind::pow: {
    print_wrapped(*n.lhs, precedence(*n.lhs) != 4, out);
    out += "^(";
    if (n.exponent.alpha_multiple) {
      if (n.exponent.coefficient != 1.0) {
        out += number_text(n.exponent.coefficient);
      }
      out += 'a';
    } else {
      out += number_text(n.exponent.coefficient);
    }
    out += ')';
    return;
  }
  }
}

} // namespace

double signed_pow(double base, const Exponent& exponent, double alpha) {
  const double p = exponent.value(alpha);
  if (base == 0.0) {
    if (p < 0.0) {
      throw EvalError("zero raised to a negative power");
    }
    return p == 0.0 ? 1.0 : 0.0;
  }
  const double magnitude = std::pow(std::fabs(base), p);
  if (base > 0.0) {
    return magnitude;
  }
  // Negative base: (b^k)^alpha for k*a exponents, classical parity for
  // integer literals, odd extension otherwise.
  const double k = exponent.coefficient;
  if (is_integer(k)) {
    return std::fmod(std::fabs(k), 2.0) == 1.0 ? -magnitude : magnitude;
  }
  return -magnitude;
}

Expr Expr::parse(std::string_view text, int arity, const Bindings& constants) {
  if (arity != 1 && arity != 2) {
    throw PreconditionError("expression arity must be 1 or 2");
  }
  Parser parser(text, arity, constants);
  return Expr(parser.parse(), arity);
}

Expr Expr::product(const Expr& lhs, const Expr& rhs) {
  if (lhs.arity_ != 1 || rhs.arity_ != 1) {
    throw PreconditionError("Expr::product requires arity-1 operands");
  }
  Node n;
  n.kind = NodeKind::mul;
  n.lhs = lhs.root_;
  n.rhs = rhs.root_;
  return Expr(make_node(std::move(n)), 1);
}

double Expr::evaluate(std::span<const double> args, double alpha) const {
  if (args.size() != static_cast<std::size_t>(arity_)) {
    throw PreconditionError("expected " + std::to_string(arity_) + " argument(s), got " +
                            std::to_string(args.size()));
  }
  return eval_node(*root_, args, alpha);
}

std::string Expr::to_string() const { return fracon::to_string(*root_); }

std::string to_string(const Node& node) {
  std::string out;
  print(node, 0, out);
  return out;
}

} // namespace fracon
