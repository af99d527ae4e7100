#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "varspace/exponent.hpp"
#include "varspace/grid.hpp"
#include "varspace/jet.hpp"

namespace varspace::cli {

/// Parse or evaluation failure; position is a 0-based character offset into the source text.
class ExprError : public std::runtime_error {
 public:
  ExprError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

enum class NodeKind { constant, var_x1, var_x2, add, sub, mul, div, pow, neg, call };

struct ExprAst {
  NodeKind kind = NodeKind::constant;
  double value = 0.0;
  std::string name;  ///< function name for calls
  std::vector<ExprAst> children;
  std::size_t position = 0;
};

/**
 * Grammar, loosest first: sums, products, unary minus, right-associative '^'.
 * Identifiers: x1, x2, pi, inf and the calls sin cos exp abs (1 argument),
 * min max (2 arguments), dist(x1, a) / dist(x1, a, b) (torus distance to a point).
 */
ExprAst parse_expression(const std::string& text);

/// Value at a torus point; division by an exact zero throws.
double evaluate(const ExprAst& ast, const Point& x);

/// Jet evaluation with x1, x2 bound to coordinate jets (symbols m(xi)); dist is rejected.
Jet evaluate_jet(const ExprAst& ast, const Jet& x1, const Jet& x2);

/// Samples on every lattice point; any NaN or division by zero is an error naming the point.
std::vector<double> sample_expression(const ExprAst& ast, const Grid& grid);

}  // namespace varspace::cli
