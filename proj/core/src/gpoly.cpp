#include "fracon/gpoly.hpp"

#include "fracon/errors.hpp"
#include "fracon/gamma.hpp"

#include <cmath>

namespace fracon {

namespace {

using Terms = GPoly::Terms;
using MaybeTerms = std::optional<Terms>;

constexpr double kIntegerSlack = 1e-9;

std::optional<int> as_nonnegative_integer(double v) {
  const double r = std::round(v);
  if (!std::isfinite(v) || r < 0.0 || std::fabs(v - r) > kIntegerSlack || r > 64.0) {
    return std::nullopt;
  }
  return static_cast<int>(r);
}

void prune(Terms& t) {
  std::erase_if(t, [](const auto& kv) { return kv.second == 0.0; });
}

Terms constant_terms(double c) {
  Terms t;
  if (c != 0.0) {
    t.emplace(0, c);
  }
  return t;
}

Terms add(const Terms& a, const Terms& b, double sign) {
  Terms out = a;
  for (const auto& [k, c] : b) {
    out[k] += sign * c;
  }
  prune(out);
  return out;
}

Terms scale(const Terms& a, double factor) {
  Terms out;
  for (const auto& [k, c] : a) {
    out.emplace(k, c * factor);
  }
  prune(out);
  return out;
}

Terms multiply(const Terms& a, const Terms& b) {
  Terms out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      out[ka + kb] += ca * cb;
    }
  }
  prune(out);
  return out;
}

Terms power(const Terms& base, int n) {
  Terms out = constant_terms(1.0);
  for (int i = 0; i < n; ++i) {
    out = multiply(out, base);
  }
  return out;
}

// Value of a variable-free subtree.
std::optional<double> constant_value(const Node& n, double alpha) {
  switch (n.kind) {
  case NodeKind::number:
  case NodeKind::constant:
    return n.number;
  case NodeKind::variable:
    return std::nullopt;
  case NodeKind::neg:
  case NodeKind::abs: {
    const auto v = constant_value(*n.lhs, alpha);
    if (!v) {
      return std::nullopt;
    }
    return n.kind == NodeKind::neg ? -*v : std::fabs(*v);
  }
  case NodeKind::pow: {
    const auto v = constant_value(*n.lhs, alpha);
    if (!v) {
      return std::nullopt;
    }
    try {
      return signed_pow(*v, n.exponent, alpha);
    } catch (const EvalError&) {
      return std::nullopt;
    }
  }
  default:
    break;
  }
  const auto l = constant_value(*n.lhs, alpha);
  const auto r = constant_value(*n.rhs, alpha);
  if (!l || !r) {
    return std::nullopt;
  }
  switch (n.kind) {
  case NodeKind::add:
    return *l + *r;
  case NodeKind::sub:
    return *l - *r;
  case NodeKind::mul:
    return *l * *r;
  case NodeKind::div:
    if (*r == 0.0) {
      return std::nullopt;
    }
    return *l / *r;
  default:
    return std::nullopt;
  }
}

class Normalizer {
public:
  Normalizer(double s, double alpha) : s_(s), alpha_(alpha) {}

  MaybeTerms run(const Node& n) const {
    if (const auto c = constant_value(n, alpha_)) {
      if (!std::isfinite(*c)) {
        return std::nullopt;
      }
      return constant_terms(*c);
    }
    switch (n.kind) {
    case NodeKind::variable:
      return linear_power(0.0, false, Exponent{1.0, false});
    case NodeKind::abs:
      if (const auto s0 = linear_offset(*n.lhs)) {
        return linear_power(*s0, true, Exponent{1.0, false});
      }
      return std::nullopt;
    case NodeKind::pow:
      return pow_terms(n);
    case NodeKind::neg: {
      auto t = run(*n.lhs);
      return t ? MaybeTerms(scale(*t, -1.0)) : std::nullopt;
    }
    case NodeKind::add:
    case NodeKind::sub:
    case NodeKind::mul: {
      const auto l = run(*n.lhs);
      const auto r = run(*n.rhs);
      if (!l || !r) {
        return std::nullopt;
      }
      if (n.kind == NodeKind::mul) {
        return multiply(*l, *r);
      }
      return add(*l, *r, n.kind == NodeKind::add ? 1.0 : -1.0);
    }
    case NodeKind::div: {
      const auto den = constant_value(*n.rhs, alpha_);
      if (!den || *den == 0.0) {
        return std::nullopt;
      }
      const auto num = run(*n.lhs);
      return num ? MaybeTerms(scale(*num, 1.0 / *den)) : std::nullopt;
    }
    default:
      return std::nullopt;
    }
  }

private:
  // s0 such that the node is identically x - s0.
  std::optional<double> linear_offset(const Node& n) const {
    if (n.kind == NodeKind::variable) {
      return 0.0;
    }
    if (n.kind != NodeKind::add && n.kind != NodeKind::sub) {
      return std::nullopt;
    }
    const bool lhs_var = n.lhs->kind == NodeKind::variable;
    const bool rhs_var = n.rhs->kind == NodeKind::variable;
    if (lhs_var) {
      const auto c = constant_value(*n.rhs, alpha_);
      if (!c) {
        return std::nullopt;
      }
      return n.kind == NodeKind::sub ? *c : -*c;
    }
    if (rhs_var && n.kind == NodeKind::add) {
      const auto c = constant_value(*n.lhs, alpha_);
      if (!c) {
        return std::nullopt;
      }
      return -*c;
    }
    return std::nullopt;
  }

  // Integer power whose value is the classical b^n for every sign of b.
  std::optional<int> classical_integer_power(const Exponent& e) const {
    if (!e.alpha_multiple || alpha_ == 1.0) {
      return as_nonnegative_integer(e.value(alpha_));
    }
    return std::nullopt;
  }

  MaybeTerms linear_power(double s0, bool has_abs, const Exponent& e) const {
    if (s0 == s_) {
      // On x >= s the base is nonnegative: (x - s)^p = |x - s|^(k alpha) with k = p / alpha.
      if (const auto k = as_nonnegative_integer(e.value(alpha_) / alpha_)) {
        Terms t;
        t.emplace(*k, 1.0);
        return t;
      }
      return std::nullopt;
    }
    if (alpha_ == 1.0 && !has_abs) {
      if (const auto n = classical_integer_power(e)) {
        Terms shifted;
        shifted.emplace(1, 1.0);
        if (s_ != s0) {
          shifted.emplace(0, s_ - s0);
        }
        return power(shifted, *n);
      }
    }
    return std::nullopt;
  }

  MaybeTerms pow_terms(const Node& n) const {
    const Node& base = *n.lhs;
    if (base.kind == NodeKind::abs) {
      if (const auto s0 = linear_offset(*base.lhs)) {
        return linear_power(*s0, true, n.exponent);
      }
    } else if (const auto s0 = linear_offset(base)) {
      return linear_power(*s0, false, n.exponent);
    }
    if (const auto p = classical_integer_power(n.exponent)) {
      const auto b = run(base);
      return b ? MaybeTerms(power(*b, *p)) : std::nullopt;
    }
    return std::nullopt;
  }

  double s_;
  double alpha_;
};

} // namespace

GPoly::GPoly(double base_point, const AlphaContext& ctx, Terms terms)
    : base_point_(base_point), alpha_(ctx.alpha()), terms_(std::move(terms)) {
  if (!std::isfinite(base_point_)) {
    throw DomainError("GPoly base point must be finite");
  }
  for (const auto& [k, c] : terms_) {
    if (k < 0 || !std::isfinite(c)) {
      throw DomainError("GPoly terms need nonnegative keys and finite coefficients");
    }
  }
  prune(terms_);
}

double GPoly::operator()(double x) const {
  const double d = std::fabs(x - base_point_);
  double sum = 0.0;
  for (const auto& [k, c] : terms_) {
    sum += k == 0 ? c : c * std::pow(d, k * alpha_);
  }
  return sum;
}

GPoly GPoly::derivative() const {
  Terms out;
  for (const auto& [k, c] : terms_) {
    if (k == 0) {
      continue;
    }
    out.emplace(k - 1, c * gamma(1.0 + k * alpha_) / gamma(1.0 + (k - 1) * alpha_));
  }
  return GPoly(base_point_, AlphaContext(alpha_), std::move(out));
}

GPoly GPoly::rescaled(double factor) const {
  if (!(factor > 0.0)) {
    throw DomainError("GPoly::rescaled needs a positive scale");
  }
  Terms out;
  for (const auto& [k, c] : terms_) {
    out.emplace(k, k == 0 ? c : c * std::pow(factor, k * alpha_));
  }
  return GPoly(0.0, AlphaContext(alpha_), std::move(out));
}

std::optional<GPoly> normalize(const Expr& expr, double s, const AlphaContext& ctx) {
  if (expr.arity() != 1) {
    return std::nullopt;
  }
  const Normalizer normalizer(s, ctx.alpha());
  auto terms = normalizer.run(expr.root());
  if (!terms) {
    return std::nullopt;
  }
  return GPoly(s, ctx, std::move(*terms));
}

} // namespace fracon
