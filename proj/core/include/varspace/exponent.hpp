#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "varspace/grid.hpp"

namespace varspace {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/**
 * Sampled variable exponent p(.) with values in (0, inf].
 *
 * The value infinity is stored as IEEE +inf and is always tested with
 * std::isinf, never approximated by a large number. p_minus and p_plus are
 * cached at construction.
 */
class VariableExponent {
 public:
  VariableExponent(const Grid& grid, std::vector<double> values);

  static VariableExponent constant(const Grid& grid, double value);
  static VariableExponent from_function(const Grid& grid, const std::function<double(const Point&)>& p);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }

  double p_minus() const noexcept { return p_minus_; }
  double p_plus() const noexcept { return p_plus_; }
  bool is_constant() const noexcept { return p_minus_ == p_plus_; }
  bool bounded() const noexcept { return p_plus_ < kInfinity; }

  /// 1/p pointwise, with 1/inf = 0.
  std::vector<double> reciprocal() const;

  /// p(.)/r for r in (0, inf).
  VariableExponent divided_by(double r) const;

 private:
  Grid grid_;
  std::vector<double> values_;
  double p_minus_;
  double p_plus_;
};

/// Pointwise min{p, q} and max{p, q}.
VariableExponent pointwise_min(const VariableExponent& p, const VariableExponent& q);
VariableExponent pointwise_max(const VariableExponent& p, const VariableExponent& q);

/// Pointwise p/q; requires q bounded (q+ < inf). inf/q = inf.
VariableExponent pointwise_ratio(const VariableExponent& p, const VariableExponent& q);

/// True if p(x) <= q(x) at every lattice point.
bool pointwise_leq(const VariableExponent& p, const VariableExponent& q);

/// Grid estimates of the log-Hoelder constants of a real function g.
struct LogHolderReport {
  double c_log_local = 0.0;   ///< max |g(x)-g(y)| log(e + 1/d(x,y)) over distinct lattice pairs
  double g_infinity = 0.0;    ///< mean of g (torus stand-in for the limit at infinity)
  double c_log_global = 0.0;  ///< max |g(x) - g_infinity| log(e + |x|)
};

LogHolderReport log_holder_estimate(const Grid& grid, std::span<const double> g);

/// Conjugate exponent p' with 1/p + 1/p' = 1; requires p_minus >= 1.
VariableExponent conjugate(const VariableExponent& p);

}  // namespace varspace
