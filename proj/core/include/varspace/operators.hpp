#pragma once

#include <functional>
#include <vector>

#include "varspace/grid.hpp"
#include "varspace/mixed.hpp"
#include "varspace/systems.hpp"

namespace varspace {

/// Entry j = convolve(f, mask_j).
FunctionSequence littlewood_paley(const GridFunction& f, const AnalysisSystem& sys);

/**
 * Peetre maximal functions: entry j at x = max_y |F_j(y)| / (1 + |2^j (x - y)|^a).
 *
 * The max runs over lattice points only (torus metric), so it under-approximates
 * the continuous supremum.
 */
LevelMagnitudes peetre_maximal(const FunctionSequence& F, double a);

/// ((1 + |xi|^2)^{sigma/2} f^)^v.
GridFunction lift(const GridFunction& f, double sigma);

/// (m f^)^v.
GridFunction apply_multiplier(const GridFunction& f, const SpectralMask& m);

/// Radial kernel profile k(r) on [0, inf), supported in r <= 1.
using RadialKernel = std::function<double(double)>;

/// exp(-1/(1 - r^2)) on r < 1, normalized to unit integral over R^dim.
RadialKernel default_local_means_kernel(int dim);

/// Fourier transform int k(|y|) e^{-i omega . y} dy of a radial kernel, at |omega| = omega.
double radial_fourier_transform(const RadialKernel& k, int dim, double omega);

/**
 * Local means k_0(1, f) and k^N(2^{-j}, f) with k^N the N-fold Laplacian of k^0.
 *
 * Masks are k0^(|xi|) for level 0 and (-|2^{-j} xi|^2)^N k^0^(2^{-j}|xi|)
 * for j >= 1, i.e. the exact transforms of the compactly supported kernels.
 */
class LocalMeansSystem {
 public:
  LocalMeansSystem(const Grid& grid, const RadialKernel& k0, const RadialKernel& k_upper, int laplace_order, int J);

  int laplace_order() const noexcept { return laplace_order_; }
  int levels() const noexcept { return static_cast<int>(masks_.size()) - 1; }
  const std::vector<SpectralMask>& masks() const noexcept { return masks_; }
  double k0_hat_zero() const noexcept { return k0_hat_zero_; }

  FunctionSequence apply(const GridFunction& f) const;

 private:
  int laplace_order_;
  double k0_hat_zero_;
  std::vector<SpectralMask> masks_;
};

/// max_x (1 + |x|)^N sum_{|gamma| <= N} |D^gamma f(x)|, |x| measured in the fundamental cell.
double p_N_seminorm(const GridFunction& f, int N);

}  // namespace varspace
