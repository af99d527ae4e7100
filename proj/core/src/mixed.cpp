#include "varspace/mixed.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_zeta.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "varspace/error.hpp"
#include "varspace/lebesgue.hpp"
#include "varspace/monotone.hpp"

namespace varspace {

namespace {

void require_shape(const LevelMagnitudes& F, const VariableExponent& p) {
  for (const auto& level : F)
    if (level.size() != p.size()) throw PreconditionError("sequence level size does not match exponent grid");
}

bool all_zero(const LevelMagnitudes& F) {
  for (const auto& level : F)
    for (double v : level)
      if (v != 0.0) return false;
  return true;
}

double max_entry(const LevelMagnitudes& F) {
  double m = 0.0;
  for (const auto& level : F)
    for (double v : level) m = std::max(m, v);
  return m;
}

}  // namespace

std::vector<double> pointwise_lq(const LevelMagnitudes& F, const VariableExponent& q) {
  require_shape(F, q);
  std::vector<double> out(q.size(), 0.0);
  for (std::size_t x = 0; x < q.size(); ++x) {
    double m = 0.0;
    for (const auto& level : F) m = std::max(m, level[x]);
    if (m == 0.0 || std::isinf(q[x])) {
      out[x] = m;
      continue;
    }
    double s = 0.0;
    for (const auto& level : F) s += std::pow(level[x] / m, q[x]);
    out[x] = m * std::pow(s, 1.0 / q[x]);
  }
  return out;
}

double lp_lq_norm(const LevelMagnitudes& F, const VariableExponent& p, const VariableExponent& q) {
  if (!(p.grid() == q.grid())) throw PreconditionError("exponents live on different grids");
  return norm(pointwise_lq(F, q), p);
}

double lp_lq_norm(const FunctionSequence& F, const VariableExponent& p, const VariableExponent& q) {
  return lp_lq_norm(F.magnitudes(), p, q);
}

double lq_lp_modular_direct(const LevelMagnitudes& F, const VariableExponent& p, const VariableExponent& q) {
  require_shape(F, p);
  if (!(p.grid() == q.grid())) throw PreconditionError("exponents live on different grids");
  const auto e = q.reciprocal();
  const double h = p.grid().cell_volume();
  double sum = 0.0;
  for (const auto& level : F) {
    sum += scaling_infimum(level, p.values(), e, h);
    if (std::isinf(sum)) return kInfinity;
  }
  return sum;
}

double lq_lp_modular(const LevelMagnitudes& F, const VariableExponent& p, const VariableExponent& q) {
  if (!q.bounded()) return lq_lp_modular_direct(F, p, q);
  require_shape(F, p);
  const VariableExponent ratio = pointwise_ratio(p, q);
  std::vector<double> b(p.size());
  double sum = 0.0;
  for (const auto& level : F) {
    for (std::size_t x = 0; x < b.size(); ++x) b[x] = std::pow(level[x], q[x]);
    sum += norm(b, ratio);
    if (std::isinf(sum)) return kInfinity;
  }
  return sum;
}

LevelMagnitudes scaled(const LevelMagnitudes& F, double c) {
  LevelMagnitudes out(F);
  for (auto& level : out)
    for (auto& v : level) v *= c;
  return out;
}

LevelMagnitudes powered(const LevelMagnitudes& F, double r) {
  LevelMagnitudes out(F);
  for (auto& level : out)
    for (auto& v : level) v = std::pow(v, r);
  return out;
}

double lq_lp_norm(const LevelMagnitudes& F, const VariableExponent& p, const VariableExponent& q) {
  require_shape(F, p);
  if (all_zero(F)) return 0.0;
  auto h = [&](double mu) { return lq_lp_modular(scaled(F, 1.0 / mu), p, q); };
  return monotone_infimum(h, max_entry(F));
}

double lq_lp_norm(const FunctionSequence& F, const VariableExponent& p, const VariableExponent& q) {
  return lq_lp_norm(F.magnitudes(), p, q);
}

EmbeddingSandwichReport embedding_sandwich_check(const LevelMagnitudes& F, const VariableExponent& p,
                                             const VariableExponent& q0, const VariableExponent& q1) {
  if (!pointwise_leq(q0, q1)) throw PreconditionError("embedding check needs q0 <= q1 pointwise");
  EmbeddingSandwichReport r;
  r.lp_lq_q0 = lp_lq_norm(F, p, q0);
  r.lp_lq_q1 = lp_lq_norm(F, p, q1);
  r.lq_lp_q0 = lq_lp_norm(F, p, q0);
  r.lq_lp_q1 = lq_lp_norm(F, p, q1);
  r.c_lp_lq = r.lp_lq_q0 > 0.0 ? r.lp_lq_q1 / r.lp_lq_q0 : 0.0;
  r.c_lq_lp = r.lq_lp_q0 > 0.0 ? r.lq_lp_q1 / r.lq_lp_q0 : 0.0;
  if (p.bounded() && q1.bounded()) {
    r.sandwich_evaluated = true;
    r.l_min_norm = lq_lp_norm(F, p, pointwise_min(p, q1));
    r.f_norm = r.lp_lq_q1;
    r.l_max_norm = lq_lp_norm(F, p, pointwise_max(p, q1));
    r.c_left = r.l_min_norm > 0.0 ? r.f_norm / r.l_min_norm : 0.0;
    r.c_right = r.f_norm > 0.0 ? r.l_max_norm / r.f_norm : 0.0;
  }
  return r;
}

LevelMagnitudes smooth_sequence(const LevelMagnitudes& g, double delta) {
  if (!(delta > 0.0)) throw PreconditionError("smoothing exponent delta must be positive");
  LevelMagnitudes G(g.size());
  for (std::size_t nu = 0; nu < g.size(); ++nu) {
    G[nu].assign(g.empty() ? 0 : g[0].size(), 0.0);
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (g[k].size() != G[nu].size()) throw PreconditionError("sequence levels differ in size");
      const double factor = std::exp2(-std::abs(static_cast<double>(k) - static_cast<double>(nu)) * delta);
      for (std::size_t x = 0; x < g[k].size(); ++x) {
        if (!(g[k][x] >= 0.0)) throw PreconditionError("smooth_sequence needs non-negative entries");
        G[nu][x] += factor * g[k][x];
      }
    }
  }
  return G;
}

FunctionSequence smooth_sequence(const FunctionSequence& g, double delta) {
  LevelMagnitudes values(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    values[k].resize(g.grid().size());
    for (std::size_t x = 0; x < values[k].size(); ++x) {
      const Complex z = g[k][x];
      if (z.imag() != 0.0 || z.real() < 0.0)
        throw PreconditionError("smooth_sequence needs real non-negative entries (level " + std::to_string(k) + ")");
      values[k][x] = z.real();
    }
  }
  const auto G = smooth_sequence(values, delta);
  FunctionSequence out(g.grid());
  for (const auto& level : G) out.push_back(GridFunction::from_real(g.grid(), level));
  return out;
}

double smoothing_constant(double delta) {
  const double t = std::exp2(-delta / 2.0);
  return (1.0 + t) / (1.0 - t);
}

double minkowski_smoothing_bound(double delta) { return 2.0 / (1.0 - std::exp2(-delta)); }

// ---------------------------------------------------------------------------

namespace {

constexpr double kImageFloor = 1e-15;

// Integral of 2^{n nu} (1 + 2^nu |y|)^{-R} over |y| in [0, rho] (rho may be inf when R > n).
double eta_radial_integral(int dim, int level, double R, double rho_from, double rho_to) {
  const double s = std::exp2(level);
  const double u0 = 1.0 + s * rho_from;
  const double u1 = std::isinf(rho_to) ? kInfinity : 1.0 + s * rho_to;
  auto pw = [](double u, double k) {  // antiderivative of u^{-k}
    if (std::abs(k - 1.0) < 1e-14) return std::log(u);
    if (std::isinf(u)) return k > 1.0 ? 0.0 : kInfinity;
    return std::pow(u, 1.0 - k) / (1.0 - k);
  };
  if (dim == 1) return 2.0 * (pw(u1, R) - pw(u0, R));
  // 2D: 2 pi int u^{-R} (u - 1) du
  return 2.0 * kPi * ((pw(u1, R - 1.0) - pw(u0, R - 1.0)) - (pw(u1, R) - pw(u0, R)));
}

}  // namespace

double eta_truncated_l1(int dim, int level, double R, double radius) {
  if (dim != 1 && dim != 2) throw PreconditionError("dimension must be 1 or 2");
  if (!(R > 0.0) || !(radius > 0.0)) throw PreconditionError("eta needs R > 0 and a positive radius");
  return eta_radial_integral(dim, level, R, 0.0, radius);
}

EtaKernel::EtaKernel(const Grid& grid, int level, double R)
    : level_(level), R_(R), integrable_(R > grid.dim()), samples_(grid) {
  if (level < 0) throw PreconditionError("eta level must be >= 0");
  if (!(R > 0.0)) throw PreconditionError("eta decay R must be positive");
  const int n = grid.dim();
  const double s = std::exp2(level);
  const double peak = std::pow(s, n);

  if (n == 1 && integrable_) {
    // Both one-sided image sums are Hurwitz zeta values: sum_{k>=0} (a + s k)^{-R} = s^{-R} zeta(R, a/s).
    static const bool handler_off = (gsl_set_error_handler_off(), true);
    (void)handler_off;
    const double scale = peak * std::pow(s, -R);
    auto hzeta = [R](double q) {
      gsl_sf_result out;
      if (gsl_sf_hzeta_e(R, q, &out) != GSL_SUCCESS) throw PreconditionError("eta image sum out of range");
      return out.val;
    };
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double x = grid.point(i)[0];
      samples_[i] = scale * (hzeta((1.0 + s * x) / s) + hzeta((1.0 + s * (1.0 - x)) / s));
    }
    coefficients_ = fourier_coefficients(samples_);
    return;
  }

  // Images with |k| > K are below the floor everywhere in the cell.
  const double reach = (std::pow(peak / kImageFloor, 1.0 / R) - 1.0) / s;
  const long cap = n == 1 ? 4096 : 32;
  long K = std::isfinite(reach) ? static_cast<long>(std::ceil(reach + 0.5)) : cap;
  K = std::clamp(K, 1L, cap);

  double tail = 0.0;
  if (integrable_) {
    // Far field replaced by its integral; equal-area disc in 2D.
    const double rho = n == 1 ? static_cast<double>(K) + 0.5 : (2.0 * static_cast<double>(K) + 1.0) / std::sqrt(kPi);
    tail = eta_radial_integral(n, level, R, rho, kInfinity);
  }

  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Point x = grid.point(i);
    double sum = 0.0;
    if (n == 1) {
      for (long k = -K; k <= K; ++k) {
        const double d = std::abs(x[0] + static_cast<double>(k));
        sum += peak * std::pow(1.0 + s * d, -R);
      }
    } else {
      for (long k1 = -K; k1 <= K; ++k1)
        for (long k2 = -K; k2 <= K; ++k2) {
          const double d = std::hypot(x[0] + static_cast<double>(k1), x[1] + static_cast<double>(k2));
          sum += peak * std::pow(1.0 + s * d, -R);
        }
    }
    samples_[i] = sum + tail;
  }
  coefficients_ = fourier_coefficients(samples_);
}

double EtaKernel::l1_norm() const { return quadrature(samples_).real(); }

GridFunction EtaKernel::convolve(const GridFunction& g) const {
  if (!(g.grid() == samples_.grid())) throw PreconditionError("kernel and function live on different grids");
  auto c = fourier_coefficients(g);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= coefficients_[i];
  return from_coefficients(g.grid(), std::move(c));
}

ConvolutionInequalityReport convolution_inequality_checks(const FunctionSequence& g, const VariableExponent& p,
                                                          const VariableExponent& q, double delta, double R) {
  if (!(p.grid() == g.grid()) || !(q.grid() == g.grid())) throw PreconditionError("inputs live on different grids");
  ConvolutionInequalityReport r;
  r.delta = delta;
  r.R = R;

  const FunctionSequence G = smooth_sequence(g, delta);
  const auto gm = g.magnitudes();
  const auto Gm = G.magnitudes();

  auto fill = [](SmoothingCheck& c, double a, double b) {
    c.norm_g = a;
    c.norm_G = b;
    c.ratio = a > 0.0 ? b / a : 0.0;
  };
  fill(r.smoothing_lp_lq, lp_lq_norm(gm, p, q), lp_lq_norm(Gm, p, q));
  fill(r.smoothing_lq_lp, lq_lp_norm(gm, p, q), lq_lp_norm(Gm, p, q));

  r.minkowski_bound_applies = q.is_constant() && q.p_minus() >= 1.0;
  r.minkowski_bound = minkowski_smoothing_bound(delta);

  r.modular_bound_applies = p.p_minus() >= 1.0 && q.p_minus() >= 1.0;
  if (r.modular_bound_applies) {
    const double mu = r.smoothing_lq_lp.norm_g;
    const double c = std::pow(smoothing_constant(delta), 2.0);
    r.modular_bound_value = mu > 0.0 ? lq_lp_modular(scaled(Gm, 1.0 / (c * mu)), p, q) : 0.0;
  }

  const auto recip = q.reciprocal();
  r.c_log_reciprocal_q = log_holder_estimate(g.grid(), recip).c_log_local;
  const int n = g.grid().dim();
  r.eta_lp_lq_conditions = p.p_minus() > 1.0 && p.bounded() && q.p_minus() > 1.0 && q.bounded() && R > n;
  r.eta_lq_lp_conditions = p.p_minus() >= 1.0 && R > n + r.c_log_reciprocal_q;

  LevelMagnitudes conv(g.size());
  for (std::size_t nu = 0; nu < g.size(); ++nu) {
    const EtaKernel eta(g.grid(), static_cast<int>(nu), R);
    if (nu == 0) r.eta_integrable = eta.integrable();
    conv[nu] = eta.convolve(g[nu]).magnitudes();
  }
  fill(r.eta_lp_lq, r.smoothing_lp_lq.norm_g, lp_lq_norm(conv, p, q));
  fill(r.eta_lq_lp, r.smoothing_lq_lp.norm_g, lq_lp_norm(conv, p, q));
  return r;
}

}  // namespace varspace
