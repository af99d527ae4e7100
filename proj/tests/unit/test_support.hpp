#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "varspace/exponent.hpp"
#include "varspace/grid.hpp"

namespace varspace::testing {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Independent complex samples with real and imaginary parts in [-1, 1).
inline GridFunction random_function(const Grid& grid, std::mt19937_64& rng) {
  GridFunction f(grid);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = {uniform(rng, -1, 1), uniform(rng, -1, 1)};
  return f;
}

/// Non-negative real samples in [0, 1).
inline std::vector<double> random_magnitudes(std::size_t n, std::mt19937_64& rng) {
  std::vector<double> v(n);
  for (double& x : v) x = uniform(rng, 0, 1);
  return v;
}

/// lo + (hi - lo) (1 + sin(2 pi (x1 + phase))) / 2 in every dimension.
inline VariableExponent smooth_exponent(const Grid& grid, double lo, double hi, double phase) {
  return VariableExponent::from_function(grid, [=](const Point& x) {
    return lo + (hi - lo) * 0.5 * (1.0 + std::sin(2.0 * kPi * (x[0] + phase)));
  });
}

/// Lattice-independent random exponent values in [lo, hi].
inline VariableExponent random_exponent(const Grid& grid, std::mt19937_64& rng, double lo, double hi) {
  std::vector<double> v(grid.size());
  for (double& x : v) x = uniform(rng, lo, hi);
  return VariableExponent(grid, std::move(v));
}

inline double relative_error(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace varspace::testing
