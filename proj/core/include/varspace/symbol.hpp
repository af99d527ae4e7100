#pragma once

#include <functional>
#include <string>

#include "varspace/grid.hpp"
#include "varspace/jet.hpp"

namespace varspace {

/**
 * Real multiplier symbol m(xi) with derivative access through jets.
 *
 * fn receives the coordinate jets (xi1, xi2); xi2 is a constant 0 jet in 1D.
 * Complex unimodular factors such as i^{|gamma|} are left to the caller since
 * they do not change any norm.
 */
class Symbol {
 public:
  using Fn = std::function<Jet(const Jet& xi1, const Jet& xi2)>;

  Symbol(int dim, Fn fn, std::string name);

  int dim() const noexcept { return dim_; }
  const std::string& name() const noexcept { return name_; }

  double operator()(const Frequency& xi) const;
  /// Taylor expansion of m at xi up to total order.
  Jet expand(const Frequency& xi, int order) const;
  /// Values on the grid's frequency set.
  SpectralMask sample(const Grid& grid) const;

  static Symbol constant(int dim, double c);
  /// (1 + |xi|^2)^{sigma/2}
  static Symbol lifting(int dim, double sigma);
  /// xi^gamma (1 + |xi|^2)^{-kappa/2}
  static Symbol derivative(int dim, const MultiIndex& gamma, double kappa);

 private:
  int dim_;
  Fn fn_;
  std::string name_;
};

struct MultiplierNormReport {
  double value = 0.0;            ///< sup at the evaluation radius, or +inf when flagged
  bool unbounded = false;        ///< the sup still grows between radius and 2 * radius
  double radius = 0.0;           ///< twice the largest grid frequency norm
  double sup_at_radius = 0.0;
  double sup_at_double_radius = 0.0;
};

/// sup over |gamma| <= 2l and |xi| <= radius of (1 + |xi|^2)^{|gamma|/2} |D^gamma m(xi)|.
MultiplierNormReport multiplier_norm_2l(const Symbol& m, int l, const Grid& grid);

/// Same quantity evaluated at explicit points, for oracles and diagnostics.
double multiplier_sup_at(const Symbol& m, int l, const std::vector<Frequency>& points);

/**
 * ||lambda_0 m | H_2^kappa|| + max_{1<=j<=J} ||lambda(.) m(2^j .) | H_2^kappa||.
 *
 * Each window is sampled on the box [-8, 8)^dim (2048 points per axis in 1D,
 * 512 in 2D) and its Bessel-potential norm is read off the Fourier series.
 */
double h2_kappa_norm(const Symbol& m, double kappa, int J);

/// Bessel-potential norm of one compactly supported window g on the box [-8, 8)^dim.
double window_bessel_norm(const std::function<double(const Frequency&)>& g, int dim, double kappa);

/// (sum_xi (1 + |xi|^2)^kappa |c_xi|^2)^{1/2} on the torus.
double bessel_potential_norm(const GridFunction& g, double kappa);

}  // namespace varspace
