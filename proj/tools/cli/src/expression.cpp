#include "varspace_cli/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace varspace::cli {

ExprError::ExprError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at position " + std::to_string(position) + ")"), position_(position), message_(message) {}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  ExprAst parse() {
    ExprAst e = sum();
    skip();
    if (i_ != s_.size()) throw ExprError(std::string("unexpected '") + s_[i_] + "'", i_);
    return e;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (i_ >= s_.size()) throw ExprError(std::string("expected '") + c + "' but the input ended", i_);
      throw ExprError(std::string("expected '") + c + "'", i_);
    }
  }

  static ExprAst binary(NodeKind k, ExprAst a, ExprAst b, std::size_t pos) {
    ExprAst n;
    n.kind = k;
    n.position = pos;
    n.children.push_back(std::move(a));
    n.children.push_back(std::move(b));
    return n;
  }

  ExprAst sum() {
    ExprAst left = product();
    for (;;) {
      skip();
      const std::size_t pos = i_;
      if (accept('+'))
        left = binary(NodeKind::add, std::move(left), product(), pos);
      else if (accept('-'))
        left = binary(NodeKind::sub, std::move(left), product(), pos);
      else
        return left;
    }
  }

  ExprAst product() {
    ExprAst left = unary();
    for (;;) {
      skip();
      const std::size_t pos = i_;
      if (accept('*'))
        left = binary(NodeKind::mul, std::move(left), unary(), pos);
      else if (accept('/'))
        left = binary(NodeKind::div, std::move(left), unary(), pos);
      else
        return left;
    }
  }

  ExprAst unary() {
    skip();
    const std::size_t pos = i_;
    if (accept('-')) {
      ExprAst n;
      n.kind = NodeKind::neg;
      n.position = pos;
      n.children.push_back(unary());
      return n;
    }
    if (accept('+')) return unary();
    return power();
  }

  ExprAst power() {
    ExprAst base = primary();
    skip();
    const std::size_t pos = i_;
    if (accept('^')) return binary(NodeKind::pow, std::move(base), unary(), pos);
    return base;
  }

  ExprAst primary() {
    skip();
    const std::size_t pos = i_;
    if (i_ >= s_.size()) throw ExprError("unexpected end of expression", i_);
    const char c = s_[i_];
    if (accept('(')) {
      ExprAst e = sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw ExprError(std::string("unexpected '") + c + "'", pos);
  }

  ExprAst number() {
    const std::size_t pos = i_;
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s_.data() + i_, s_.data() + s_.size(), v);
    if (ec != std::errc{}) throw ExprError("malformed number", pos);
    i_ = static_cast<std::size_t>(end - s_.data());
    ExprAst n;
    n.kind = NodeKind::constant;
    n.value = v;
    n.position = pos;
    return n;
  }

  ExprAst identifier() {
    const std::size_t pos = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    const std::string name = s_.substr(pos, i_ - pos);
    ExprAst n;
    n.position = pos;
    skip();
    if (i_ < s_.size() && s_[i_] == '(') return call(name, pos);
    if (name == "x1") {
      n.kind = NodeKind::var_x1;
    } else if (name == "x2") {
      n.kind = NodeKind::var_x2;
    } else if (name == "pi") {
      n.value = kPi;
    } else if (name == "inf") {
      n.value = kInfinity;
    } else {
      throw ExprError("unknown identifier '" + name + "'", pos);
    }
    return n;
  }

  ExprAst call(const std::string& name, std::size_t pos) {
    int lo = 0, hi = 0;
    if (name == "sin" || name == "cos" || name == "exp" || name == "abs") {
      lo = hi = 1;
    } else if (name == "min" || name == "max") {
      lo = hi = 2;
    } else if (name == "dist") {
      lo = 2;
      hi = 3;
    } else {
      throw ExprError("unknown function '" + name + "'", pos);
    }
    expect('(');
    ExprAst n;
    n.kind = NodeKind::call;
    n.name = name;
    n.position = pos;
    if (!accept(')')) {
      do n.children.push_back(sum());
      while (accept(','));
      expect(')');
    }
    const int argc = static_cast<int>(n.children.size());
    if (argc < lo || argc > hi) {
      std::ostringstream msg;
      msg << name << " takes " << lo;
      if (hi != lo) msg << " or " << hi;
      msg << " argument" << (hi == 1 ? "" : "s") << ", got " << argc;
      throw ExprError(msg.str(), pos);
    }
    if (name == "dist" && n.children[0].kind != NodeKind::var_x1)
      throw ExprError("the first argument of dist must be x1", n.children[0].position);
    return n;
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

ExprAst parse_expression(const std::string& text) { return Parser(text).parse(); }

double evaluate(const ExprAst& n, const Point& x) {
  auto arg = [&](std::size_t i) { return evaluate(n.children[i], x); };
  switch (n.kind) {
    case NodeKind::constant: return n.value;
    case NodeKind::var_x1: return x[0];
    case NodeKind::var_x2: return x[1];
    case NodeKind::add: return arg(0) + arg(1);
    case NodeKind::sub: return arg(0) - arg(1);
    case NodeKind::mul: return arg(0) * arg(1);
    case NodeKind::div: {
      const double d = arg(1);
      if (d == 0.0) throw ExprError("division by zero", n.position);
      return arg(0) / d;
    }
    case NodeKind::pow: return std::pow(arg(0), arg(1));
    case NodeKind::neg: return -arg(0);
    case NodeKind::call:
      if (n.name == "sin") return std::sin(arg(0));
      if (n.name == "cos") return std::cos(arg(0));
      if (n.name == "exp") return std::exp(arg(0));
      if (n.name == "abs") return std::abs(arg(0));
      if (n.name == "min") return std::min(arg(0), arg(1));
      if (n.name == "max") return std::max(arg(0), arg(1));
      if (n.name == "dist") {
        if (n.children.size() == 2) return circle_distance(x[0], arg(1));
        return torus_distance(x, Point{arg(1), arg(2)}, 2);
      }
      break;
  }
  throw ExprError("corrupt expression node", n.position);
}

Jet evaluate_jet(const ExprAst& n, const Jet& x1, const Jet& x2) {
  auto arg = [&](std::size_t i) { return evaluate_jet(n.children[i], x1, x2); };
  switch (n.kind) {
    case NodeKind::constant: return Jet(x1.dim(), x1.order(), n.value);
    case NodeKind::var_x1: return x1;
    case NodeKind::var_x2: return x2;
    case NodeKind::add: return arg(0) + arg(1);
    case NodeKind::sub: return arg(0) - arg(1);
    case NodeKind::mul: return arg(0) * arg(1);
    case NodeKind::div: {
      const Jet d = arg(1);
      if (d.value() == 0.0) throw ExprError("division by zero", n.position);
      return arg(0) / d;
    }
    case NodeKind::pow: return pow(arg(0), arg(1));
    case NodeKind::neg: return -arg(0);
    case NodeKind::call:
      if (n.name == "sin") return sin(arg(0));
      if (n.name == "cos") return cos(arg(0));
      if (n.name == "exp") return exp(arg(0));
      if (n.name == "abs") return abs(arg(0));
      if (n.name == "min") return min(arg(0), arg(1));
      if (n.name == "max") return max(arg(0), arg(1));
      if (n.name == "dist") throw ExprError("dist is not available in frequency symbols", n.position);
      break;
  }
  throw ExprError("corrupt expression node", n.position);
}

std::vector<double> sample_expression(const ExprAst& ast, const Grid& grid) {
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Point x = grid.point(i);
    double v = 0.0;
    try {
      v = evaluate(ast, x);
    } catch (const ExprError& e) {
      std::ostringstream msg;
      msg << e.message() << " when sampling at x = (" << x[0];
      if (grid.dim() == 2) msg << ", " << x[1];
      msg << ")";
      throw ExprError(msg.str(), e.position());
    }
    if (std::isnan(v)) {
      std::ostringstream msg;
      msg << "expression is undefined at x = (" << x[0];
      if (grid.dim() == 2) msg << ", " << x[1];
      msg << ")";
      throw ExprError(msg.str(), ast.position);
    }
    out[i] = v;
  }
  return out;
}

}  // namespace varspace::cli
