#include "varspace/operators.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "varspace/error.hpp"

namespace varspace {

FunctionSequence littlewood_paley(const GridFunction& f, const AnalysisSystem& sys) {
  if (!(f.grid() == sys.grid)) throw PreconditionError("function and system live on different grids");
  const auto c = fourier_coefficients(f);
  FunctionSequence out(f.grid());
  for (const auto& mask : sys.masks) {
    auto cj = c;
    for (std::size_t i = 0; i < cj.size(); ++i) cj[i] *= mask[i];
    out.push_back(from_coefficients(f.grid(), std::move(cj)));
  }
  return out;
}

LevelMagnitudes peetre_maximal(const FunctionSequence& F, double a) {
  if (!(a > 0.0)) throw PreconditionError("Peetre exponent a must be positive");
  const Grid& grid = F.grid();
  const std::size_t size = grid.size();
  LevelMagnitudes out(F.size());
  std::vector<double> inv_den(size);
  for (std::size_t j = 0; j < F.size(); ++j) {
    const double scale = std::exp2(static_cast<double>(j));
    for (std::size_t d = 0; d < size; ++d)
      inv_den[d] = 1.0 / (1.0 + std::pow(scale * grid.displacement_length(d), a));
    const auto mag = F[j].magnitudes();
    auto& res = out[j];
    res.assign(size, 0.0);
    for (std::size_t x = 0; x < size; ++x) {
      double m = 0.0;
      for (std::size_t y = 0; y < size; ++y) m = std::max(m, mag[y] * inv_den[grid.displacement_index(x, y)]);
      res[x] = m;
    }
  }
  return out;
}

GridFunction lift(const GridFunction& f, double sigma) {
  if (sigma == 0.0) return f;
  const Grid& grid = f.grid();
  auto c = fourier_coefficients(f);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double r = grid.frequency_norm(i);
    c[i] *= std::pow(1.0 + r * r, sigma / 2.0);
  }
  return from_coefficients(grid, std::move(c));
}

GridFunction apply_multiplier(const GridFunction& f, const SpectralMask& m) {
  for (const auto& z : m.values())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw PreconditionError("multiplier must be finite on the frequency set");
  return convolve(f, m);
}

// ---------------------------------------------------------------------------

namespace {

using Gauss = boost::math::quadrature::gauss<double, 16>;

// Nodes and weights of P equal Gauss-Legendre panels on [0, 1].
struct PanelRule {
  std::vector<double> nodes, weights;
};

const PanelRule& panel_rule(int panels) {
  static std::mutex mutex;
  static std::map<int, PanelRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(panels);
  if (it != cache.end()) return it->second;
  PanelRule rule;
  const auto& abscissa = Gauss::abscissa();
  const auto& weight = Gauss::weights();
  const double h = 1.0 / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (std::size_t i = 0; i < abscissa.size(); ++i) {
      // abscissa holds the non-negative half of the symmetric rule
      const double x = abscissa[i];
      const double w = weight[i] * h / 2.0;
      rule.nodes.push_back(mid + x * h / 2.0);
      rule.weights.push_back(w);
      if (x != 0.0) {
        rule.nodes.push_back(mid - x * h / 2.0);
        rule.weights.push_back(w);
      }
    }
  }
  return cache.emplace(panels, std::move(rule)).first->second;
}

int panels_for(double omega) {
  int p = 8;
  while (p < 512 && p < omega / 2.0) p *= 2;
  return p;
}

double bump(double r) { return r < 1.0 ? std::exp(-1.0 / (1.0 - r * r)) : 0.0; }

}  // namespace

double radial_fourier_transform(const RadialKernel& k, int dim, double omega) {
  if (dim != 1 && dim != 2) throw PreconditionError("dimension must be 1 or 2");
  omega = std::abs(omega);
  const PanelRule& rule = panel_rule(panels_for(omega));
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = rule.nodes[i];
    const double kv = k(r);
    if (kv == 0.0) continue;
    sum += rule.weights[i] * kv * (dim == 1 ? std::cos(omega * r) : std::cyl_bessel_j(0.0, omega * r) * r);
  }
  return dim == 1 ? 2.0 * sum : 2.0 * kPi * sum;
}

RadialKernel default_local_means_kernel(int dim) {
  const double integral = radial_fourier_transform(bump, dim, 0.0);
  return [integral](double r) { return bump(r) / integral; };
}

LocalMeansSystem::LocalMeansSystem(const Grid& grid, const RadialKernel& k0, const RadialKernel& k_upper,
                                   int laplace_order, int J)
    : laplace_order_(laplace_order), k0_hat_zero_(0.0) {
  if (laplace_order < 0) throw PreconditionError("Laplacian order must be >= 0");
  if (J < 0 || J > max_levels(grid)) throw PreconditionError("local means level count out of range");
  for (int i = 0; i <= 64; ++i) {
    const double r = 1.0 + 0.5 * i / 64.0;
    if (k0(r) != 0.0 || k_upper(r) != 0.0)
      throw PreconditionError("local means kernels must vanish for |y| >= 1 (nonzero at r = " + std::to_string(r) +
                              ")");
  }
  const int dim = grid.dim();
  auto abs_k0 = [&](double r) { return std::abs(k0(r)); };
  auto abs_ku = [&](double r) { return std::abs(k_upper(r)); };
  k0_hat_zero_ = radial_fourier_transform(k0, dim, 0.0);
  const double ku_hat_zero = radial_fourier_transform(k_upper, dim, 0.0);
  if (!(std::abs(k0_hat_zero_) > 1e-12 * radial_fourier_transform(abs_k0, dim, 0.0)))
    throw PreconditionError("local means kernel k_0 has vanishing Fourier transform at 0");
  if (!(std::abs(ku_hat_zero) > 1e-12 * radial_fourier_transform(abs_ku, dim, 0.0)))
    throw PreconditionError("local means kernel k^0 has vanishing Fourier transform at 0");

  std::map<double, double> cache0, cacheu;
  auto hat = [&](std::map<double, double>& cache, const RadialKernel& k, double omega) {
    auto it = cache.find(omega);
    if (it != cache.end()) return it->second;
    const double v = radial_fourier_transform(k, dim, omega);
    cache.emplace(omega, v);
    return v;
  };

  masks_.push_back(SpectralMask::radial(grid, [&](double r) { return hat(cache0, k0, r); }));
  for (int j = 1; j <= J; ++j) {
    const double t = std::exp2(-j);
    masks_.push_back(SpectralMask::radial(grid, [&](double r) {
      const double u = t * r;
      double factor = 1.0;
      for (int i = 0; i < laplace_order; ++i) factor *= -u * u;
      return factor == 0.0 ? 0.0 : factor * hat(cacheu, k_upper, u);
    }));
  }
}

FunctionSequence LocalMeansSystem::apply(const GridFunction& f) const {
  if (!(f.grid() == masks_.front().grid())) throw PreconditionError("function and kernels live on different grids");
  const auto c = fourier_coefficients(f);
  FunctionSequence out(f.grid());
  for (const auto& mask : masks_) {
    auto cj = c;
    for (std::size_t i = 0; i < cj.size(); ++i) cj[i] *= mask[i];
    out.push_back(from_coefficients(f.grid(), std::move(cj)));
  }
  return out;
}

// ---------------------------------------------------------------------------

double p_N_seminorm(const GridFunction& f, int N) {
  if (N < 0) throw PreconditionError("seminorm order N must be >= 0");
  const Grid& grid = f.grid();
  std::vector<double> sum(grid.size(), 0.0);
  for (int g1 = 0; g1 <= N; ++g1)
    for (int g2 = 0; g1 + g2 <= N; ++g2) {
      if (grid.dim() == 1 && g2 > 0) break;
      const auto d = spectral_derivative(f, MultiIndex{g1, g2});
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += std::abs(d[i]);
    }
  double best = 0.0;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    const double r = distance_from_origin(grid.point(i), grid.dim());
    best = std::max(best, std::pow(1.0 + r, N) * sum[i]);
  }
  return best;
}

}  // namespace varspace
