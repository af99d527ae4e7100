#pragma once

#include <span>
#include <vector>

#include "varspace/exponent.hpp"
#include "varspace/grid.hpp"

namespace varspace {

struct ModularResult {
  double value = 0.0;
  bool infinity_region_violated = false;  ///< some cell has p = inf and |f| > 1
};

/// Semimodular of |f| sampled as magnitudes: h^dim sum phi_{p(x)}(a(x)).
ModularResult modular(std::span<const double> magnitudes, const VariableExponent& p);
ModularResult modular(const GridFunction& f, const VariableExponent& p);

/**
 * inf{lambda > 0 : h^dim sum_x phi_{p(x)}(a(x) * lambda^{-e(x)}) <= 1}.
 *
 * e(x) >= 0 is the rate at which the argument shrinks; e = 1 gives the
 * Luxemburg norm and e = 1/q gives the inner infima of the sequence-Lebesgue
 * modular (with 1/inf = 0, so e = 0 cells do not depend on lambda).
 * Returns +inf when no lambda satisfies the constraint and 0 for a = 0.
 * A finite result satisfies the constraint; it is at most a relative 1e-13
 * above the true infimum.
 */
double scaling_infimum(std::span<const double> a, std::span<const double> p, std::span<const double> e,
                       double cell_volume);

/// Luxemburg quasi-norm inf{lambda > 0 : modular(f/lambda) <= 1}.
double norm(std::span<const double> magnitudes, const VariableExponent& p);
double norm(const GridFunction& f, const VariableExponent& p);

struct HolderPairing {
  double lhs = 0.0;  ///< ||f g||_1
  double rhs = 0.0;  ///< 2 ||f||_p ||g||_{p'}
};

/// Requires p_minus >= 1.
HolderPairing holder_pairing(const GridFunction& f, const GridFunction& g, const VariableExponent& p);

struct CharacteristicNormReport {
  double ratio_min = 0.0;  ///< min over cubes of ||chi_Q||_p / |Q|^{1/p(x_Q)}
  double ratio_max = 0.0;
  std::size_t cubes = 0;
  double cube_side = 0.0;  ///< side actually used (a whole number of cells)
};

/**
 * Norms of characteristic functions of the cubes [x, x + side)^dim anchored
 * at every lattice point x, compared with |Q|^{1/p(x)}.
 * side is rounded to a whole number (>= 1) of cells and must not exceed 1.
 */
CharacteristicNormReport characteristic_norm_check(const VariableExponent& p, double cube_side);

struct SandwichBounds {
  double lower = 0.0;  ///< min{rho^{1/p-}, rho^{1/p+}}
  double upper = 0.0;  ///< max{rho^{1/p-}, rho^{1/p+}}
};

SandwichBounds sandwich_bounds(double rho, double p_minus, double p_plus);

}  // namespace varspace
