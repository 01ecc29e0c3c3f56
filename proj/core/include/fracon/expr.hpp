#pragma once

#include "fracon/fractal_scalar.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>

namespace fracon {

/// Named run-time constants admitted by the expression language (e.g. `c`).
using Bindings = std::map<std::string, double, std::less<>>;

enum class NodeKind { number, variable, constant, add, sub, mul, div, neg, abs, pow };

/// Exponent of a pow node: either a literal real or k * alpha.
struct Exponent {
  double coefficient = 1.0;
  bool alpha_multiple = false;

  double value(double alpha) const noexcept { return alpha_multiple ? coefficient * alpha : coefficient; }
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

/// Immutable AST node. Fields not relevant to the kind are left defaulted.
struct Node {
  NodeKind kind = NodeKind::number;
  double number = 0.0;     // number literal, or bound value of a constant
  std::string name;        // variable or constant identifier
  int variable_index = 0;  // 0 for x or u, 1 for v
  NodePtr lhs;             // operand of unary nodes, base of pow
  NodePtr rhs;
  Exponent exponent;
  std::size_t offset = 0;  // byte offset in the source text
};

/// Parsed expression of arity 1 (variable x) or 2 (variables u, v).
///
/// Grammar:
///   expr     := term (('+'|'-') term)*
///   term     := factor (('*'|'/') factor)*
///   factor   := ['-'] atom ['^' ( '(' exponent ')' | exponent )]
///   atom     := number | ident | 'abs' '(' expr ')' | '(' expr ')'
///   exponent := number | [number ['*']] 'a'
///
/// `a` stands for alpha and may only appear in exponents; multiples of `a`
/// must be nonnegative integers. Identifiers other than the arity's
/// variables must be bound in `constants`.
class Expr {
public:
  static Expr parse(std::string_view text, int arity, const Bindings& constants = {});

  /// Product node lhs*rhs of two arity-1 expressions.
  static Expr product(const Expr& lhs, const Expr& rhs);

  int arity() const noexcept { return arity_; }
  const Node& root() const noexcept { return *root_; }
  const NodePtr& root_ptr() const noexcept { return root_; }

  /// Bottom-up evaluation returning the magnitude value. Powers follow the
  /// embed sign convention: pow(b, k*alpha) = sign(b)^k |b|^(k*alpha), a
  /// literal real exponent r gives sign(b)|b|^r (sign(b)^r |b|^r for integer r).
  /// Throws EvalError on division by zero, 0 to a negative power, or a
  /// non-finite result; PreconditionError if args.size() != arity().
  double evaluate(std::span<const double> args, double alpha) const;

  double operator()(double x, double alpha) const { return evaluate(std::span<const double>(&x, 1), alpha); }
  double operator()(double u, double v, double alpha) const {
    const double args[2] = {u, v};
    return evaluate(args, alpha);
  }

  FractalScalar eval(std::span<const double> args, const AlphaContext& ctx) const {
    return {evaluate(args, ctx.alpha()), ctx.alpha()};
  }

  /// Canonical text; parse(to_string()) reproduces the same AST.
  std::string to_string() const;

private:
  Expr(NodePtr root, int arity) : root_(std::move(root)), arity_(arity) {}

  NodePtr root_;
  int arity_ = 1;
};

/// pow with the expression language's sign convention (see Expr::evaluate).
double signed_pow(double base, const Exponent& exponent, double alpha);

std::string to_string(const Node& node);

} // namespace fracon
