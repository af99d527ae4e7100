#pragma once

#include <vector>

#include "varspace/exponent.hpp"
#include "varspace/grid.hpp"

namespace varspace {

/// Magnitudes |f_nu(x)| of a sequence, one vector per level nu = 0..J.
using LevelMagnitudes = std::vector<std::vector<double>>;

/// Pointwise l_{q(x)} norm of (F_nu(x))_nu; q(x) = inf means max over nu.
std::vector<double> pointwise_lq(const LevelMagnitudes& F, const VariableExponent& q);

/// ||F | L_{p}(l_{q})||: pointwise l_q, then the Luxemburg norm.
double lp_lq_norm(const LevelMagnitudes& F, const VariableExponent& p, const VariableExponent& q);
double lp_lq_norm(const FunctionSequence& F, const VariableExponent& p, const VariableExponent& q);

/**
 * Semimodular of l_{q}(L_{p}): sum over nu of inf{lambda : rho_p(f_nu / lambda^{1/q}) <= 1}.
 *
 * With q+ < inf the simpler form sum_nu || |f_nu|^q | L_{p/q} || is used; with
 * q+ = inf each inner infimum is solved directly (lambda^{1/inf} = 1).
 * May return +inf.
 */
double lq_lp_modular(const LevelMagnitudes& F, const VariableExponent& p, const VariableExponent& q);

/// The inner-infimum route of lq_lp_modular, used for every q (reference route).
double lq_lp_modular_direct(const LevelMagnitudes& F, const VariableExponent& p, const VariableExponent& q);

/// inf{mu > 0 : lq_lp_modular(F / mu) <= 1}.
double lq_lp_norm(const LevelMagnitudes& F, const VariableExponent& p, const VariableExponent& q);
double lq_lp_norm(const FunctionSequence& F, const VariableExponent& p, const VariableExponent& q);

/// Scales every level by c >= 0.
LevelMagnitudes scaled(const LevelMagnitudes& F, double c);

/// Raises every entry to the power r > 0.
LevelMagnitudes powered(const LevelMagnitudes& F, double r);

struct EmbeddingSandwichReport {
  double lp_lq_q0 = 0.0, lp_lq_q1 = 0.0;
  double lq_lp_q0 = 0.0, lq_lp_q1 = 0.0;
  double c_lp_lq = 0.0;  ///< lp_lq_q1 / lp_lq_q0
  double c_lq_lp = 0.0;  ///< lq_lp_q1 / lq_lp_q0
  // min/max sandwich, evaluated with q = q1
  bool sandwich_evaluated = false;
  double l_min_norm = 0.0;  ///< ||F | l_{min(p,q1)}(L_p)||
  double f_norm = 0.0;      ///< ||F | L_p(l_{q1})||
  double l_max_norm = 0.0;  ///< ||F | l_{max(p,q1)}(L_p)||
  double c_left = 0.0;      ///< f_norm / l_min_norm
  double c_right = 0.0;     ///< l_max_norm / f_norm
};

/// Measures the q-monotonicity embeddings for q0 <= q1 and, when p+, q1+ < inf, the min/max sandwich.
EmbeddingSandwichReport embedding_sandwich_check(const LevelMagnitudes& F, const VariableExponent& p,
                                             const VariableExponent& q0, const VariableExponent& q1);

/// G_nu = sum_{k <= J} 2^{-|k - nu| delta} g_k. Entries must be real and non-negative.
FunctionSequence smooth_sequence(const FunctionSequence& g, double delta);
LevelMagnitudes smooth_sequence(const LevelMagnitudes& g, double delta);

/// c(delta) = sum_{l in Z} 2^{-|l| delta / 2} = (1 + 2^{-delta/2}) / (1 - 2^{-delta/2}).
double smoothing_constant(double delta);

/// Bound 2 / (1 - 2^{-delta}) for the constant-q, q >= 1 pointwise smoothing.
double minkowski_smoothing_bound(double delta);

/**
 * Periodized eta_{nu,R}(x) = 2^{n nu} / (1 + 2^nu |x|)^R on the torus.
 *
 * Images are summed while their contribution exceeds 1e-15 of the central
 * term, up to a hard cap; when R > n the omitted far field is replaced by
 * its radial integral. integrable() is false for R <= n.
 */
class EtaKernel {
 public:
  EtaKernel(const Grid& grid, int level, double R);

  int level() const noexcept { return level_; }
  double decay() const noexcept { return R_; }
  bool integrable() const noexcept { return integrable_; }
  const GridFunction& samples() const noexcept { return samples_; }
  /// Quadrature of the periodized kernel (its L1 norm over the cell).
  double l1_norm() const;
  /// (eta * g) via the product of Fourier coefficients.
  GridFunction convolve(const GridFunction& g) const;

 private:
  int level_;
  double R_;
  bool integrable_;
  GridFunction samples_;
  std::vector<Complex> coefficients_;
};

/// L1 norm of the truncated (non-periodized tail dropped) eta_{nu,R} restricted to |x| <= radius.
double eta_truncated_l1(int dim, int level, double R, double radius);

struct SmoothingCheck {
  double norm_g = 0.0;
  double norm_G = 0.0;
  double ratio = 0.0;  ///< norm_G / norm_g
};

struct ConvolutionInequalityReport {
  double delta = 0.0;
  double R = 0.0;
  SmoothingCheck smoothing_lp_lq;
  SmoothingCheck smoothing_lq_lp;
  bool minkowski_bound_applies = false;  ///< constant q >= 1
  double minkowski_bound = 0.0;
  bool modular_bound_applies = false;    ///< p-, q- >= 1
  double modular_bound_value = 0.0;      ///< rho((G_nu) / (c(delta)^2 mu)), must be <= 1
  bool eta_integrable = false;
  bool eta_lp_lq_conditions = false;     ///< 1 < p-, p+ < inf, 1 < q-, q+ < inf, R > n
  bool eta_lq_lp_conditions = false;     ///< p- >= 1, R > n + c_log(1/q)
  double c_log_reciprocal_q = 0.0;
  SmoothingCheck eta_lp_lq;
  SmoothingCheck eta_lq_lp;
};

/// Measures the smoothing and eta-convolution inequalities for a non-negative sequence g.
ConvolutionInequalityReport convolution_inequality_checks(const FunctionSequence& g, const VariableExponent& p,
                                                          const VariableExponent& q, double delta, double R);

}  // namespace varspace
