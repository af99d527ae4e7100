#include "varspace/exponent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "varspace/error.hpp"

namespace varspace {

VariableExponent::VariableExponent(const Grid& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)), p_minus_(kInfinity), p_plus_(0.0) {
  if (values_.size() != grid_.size())
    throw PreconditionError("exponent has " + std::to_string(values_.size()) + " values, grid has " +
                            std::to_string(grid_.size()));
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (std::isnan(v) || v <= 0.0)
      throw PreconditionError("exponent must be positive at every lattice point (index " + std::to_string(i) + ")");
    p_minus_ = std::min(p_minus_, v);
    p_plus_ = std::max(p_plus_, v);
  }
}

VariableExponent VariableExponent::constant(const Grid& grid, double value) {
  return VariableExponent(grid, std::vector<double>(grid.size(), value));
}

VariableExponent VariableExponent::from_function(const Grid& grid, const std::function<double(const Point&)>& p) {
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p(grid.point(i));
  return VariableExponent(grid, std::move(v));
}

std::vector<double> VariableExponent::reciprocal() const {
  std::vector<double> r(values_.size());
  std::transform(values_.begin(), values_.end(), r.begin(), [](double v) { return std::isinf(v) ? 0.0 : 1.0 / v; });
  return r;
}

VariableExponent VariableExponent::divided_by(double r) const {
  if (!(r > 0.0) || std::isinf(r)) throw PreconditionError("exponent divisor must be in (0, inf)");
  std::vector<double> v(values_);
  for (auto& x : v) x /= r;
  return VariableExponent(grid_, std::move(v));
}

namespace {

void require_same_grid(const VariableExponent& p, const VariableExponent& q) {
  if (!(p.grid() == q.grid())) throw PreconditionError("exponents live on different grids");
}

}  // namespace

VariableExponent pointwise_min(const VariableExponent& p, const VariableExponent& q) {
  require_same_grid(p, q);
  std::vector<double> v(p.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::min(p[i], q[i]);
  return VariableExponent(p.grid(), std::move(v));
}

VariableExponent pointwise_max(const VariableExponent& p, const VariableExponent& q) {
  require_same_grid(p, q);
  std::vector<double> v(p.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(p[i], q[i]);
  return VariableExponent(p.grid(), std::move(v));
}

VariableExponent pointwise_ratio(const VariableExponent& p, const VariableExponent& q) {
  require_same_grid(p, q);
  if (!q.bounded()) throw PreconditionError("pointwise ratio p/q needs q+ < inf");
  std::vector<double> v(p.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p[i] / q[i];
  return VariableExponent(p.grid(), std::move(v));
}

bool pointwise_leq(const VariableExponent& p, const VariableExponent& q) {
  require_same_grid(p, q);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] > q[i]) return false;
  return true;
}

LogHolderReport log_holder_estimate(const Grid& grid, std::span<const double> g) {
  if (g.size() != grid.size()) throw PreconditionError("sample count does not match grid");
  const std::size_t n = g.size();
  const double e = std::numbers::e;

  // The log factor depends only on the displacement between two points.
  std::vector<double> factor(n, 0.0);
  for (std::size_t d = 1; d < n; ++d) factor[d] = std::log(e + 1.0 / grid.displacement_length(d));

  LogHolderReport report;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const double v = std::abs(g[x] - g[y]) * factor[grid.displacement_index(x, y)];
      report.c_log_local = std::max(report.c_log_local, v);
    }
  }

  // Centred at g[0] so a constant sequence has an exact mean.
  double shift = 0.0;
  for (double v : g) shift += v - g[0];
  report.g_infinity = g[0] + shift / static_cast<double>(n);
  for (std::size_t x = 0; x < n; ++x) {
    const double r = distance_from_origin(grid.point(x), grid.dim());
    report.c_log_global = std::max(report.c_log_global, std::abs(g[x] - report.g_infinity) * std::log(e + r));
  }
  return report;
}

VariableExponent conjugate(const VariableExponent& p) {
  if (p.p_minus() < 1.0)
    throw PreconditionError("conjugate exponent needs p_minus >= 1, got " + std::to_string(p.p_minus()));
  std::vector<double> v(p.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = p[i];
    if (x == 1.0)
      v[i] = kInfinity;
    else if (std::isinf(x))
      v[i] = 1.0;
    else
      v[i] = x / (x - 1.0);
  }
  return VariableExponent(p.grid(), std::move(v));
}

}  // namespace varspace
