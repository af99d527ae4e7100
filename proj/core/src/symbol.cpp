#include "varspace/symbol.hpp"

#include <algorithm>
#include <cmath>

#include "varspace/error.hpp"
#include "varspace/exponent.hpp"
#include "varspace/profiles.hpp"

namespace varspace {

Symbol::Symbol(int dim, Fn fn, std::string name) : dim_(dim), fn_(std::move(fn)), name_(std::move(name)) {
  if (dim != 1 && dim != 2) throw PreconditionError("symbol dimension must be 1 or 2");
  if (!fn_) throw PreconditionError("symbol needs a callable");
}

Jet Symbol::expand(const Frequency& xi, int order) const {
  const Jet x1 = Jet::variable(dim_, order, 0, xi[0]);
  const Jet x2 = dim_ == 2 ? Jet::variable(dim_, order, 1, xi[1]) : Jet(dim_, order, 0.0);
  return fn_(x1, x2);
}

double Symbol::operator()(const Frequency& xi) const { return expand(xi, 0).value(); }

SpectralMask Symbol::sample(const Grid& grid) const {
  if (grid.dim() != dim_) throw PreconditionError("symbol and grid dimensions differ");
  return SpectralMask::from_function(grid, [&](const Frequency& xi) {
    const double v = (*this)(xi);
    if (!std::isfinite(v)) throw PreconditionError("symbol is not finite on the frequency set");
    return Complex{v, 0.0};
  });
}

Symbol Symbol::constant(int dim, double c) {
  return Symbol(dim, [c](const Jet& x1, const Jet&) { return Jet(x1.dim(), x1.order(), c); }, "constant");
}

Symbol Symbol::lifting(int dim, double sigma) {
  return Symbol(
      dim, [sigma](const Jet& x1, const Jet& x2) { return pow(1.0 + x1 * x1 + x2 * x2, sigma / 2.0); }, "lifting");
}

Symbol Symbol::derivative(int dim, const MultiIndex& gamma, double kappa) {
  if (gamma[0] < 0 || gamma[1] < 0 || (dim == 1 && gamma[1] != 0))
    throw PreconditionError("invalid multi-index for the derivative symbol");
  return Symbol(
      dim,
      [gamma, kappa](const Jet& x1, const Jet& x2) {
        return pow(x1, gamma[0]) * pow(x2, gamma[1]) * pow(1.0 + x1 * x1 + x2 * x2, -kappa / 2.0);
      },
      "derivative");
}

// ---------------------------------------------------------------------------

double multiplier_sup_at(const Symbol& m, int l, const std::vector<Frequency>& points) {
  if (l < 1) throw PreconditionError("multiplier order l must be >= 1");
  const int K = 2 * l;
  double best = 0.0;
  for (const auto& xi : points) {
    const Jet jet = m.expand(xi, K);
    const double w2 = 1.0 + xi[0] * xi[0] + xi[1] * xi[1];
    for (int a = 0; a <= K; ++a)
      for (int b = 0; a + b <= K; ++b) {
        if (m.dim() == 1 && b > 0) break;
        const double v = std::pow(w2, (a + b) / 2.0) * std::abs(jet.derivative(a, b));
        if (!std::isfinite(v)) return kInfinity;
        best = std::max(best, v);
      }
  }
  return best;
}

namespace {

std::vector<double> radii(double limit, double dense_step, double ratio) {
  std::vector<double> r;
  for (double x = 0.0; x <= std::min(8.0, limit); x += dense_step) r.push_back(x);
  for (double x = 8.0 * ratio; x < limit; x *= ratio) r.push_back(x);
  r.push_back(limit);
  return r;
}

std::vector<Frequency> evaluation_points(int dim, double limit) {
  std::vector<Frequency> pts;
  if (dim == 1) {
    for (double x : radii(limit, 1.0 / 512.0, 1.002)) {
      pts.push_back({x, 0.0});
      if (x > 0.0) pts.push_back({-x, 0.0});
    }
  } else {
    constexpr int angles = 64;
    for (double x : radii(limit, 1.0 / 32.0, 1.01)) {
      if (x == 0.0) {
        pts.push_back({0.0, 0.0});
        continue;
      }
      for (int a = 0; a < angles; ++a) {
        const double t = 2.0 * kPi * a / angles;
        pts.push_back({x * std::cos(t), x * std::sin(t)});
      }
    }
  }
  return pts;
}

}  // namespace

MultiplierNormReport multiplier_norm_2l(const Symbol& m, int l, const Grid& grid) {
  if (grid.dim() != m.dim()) throw PreconditionError("symbol and grid dimensions differ");
  MultiplierNormReport r;
  r.radius = 2.0 * grid.nyquist_radius() * std::sqrt(static_cast<double>(grid.dim()));
  r.sup_at_radius = multiplier_sup_at(m, l, evaluation_points(m.dim(), r.radius));
  r.sup_at_double_radius = multiplier_sup_at(m, l, evaluation_points(m.dim(), 2.0 * r.radius));
  r.unbounded = !std::isfinite(r.sup_at_double_radius) || r.sup_at_double_radius > r.sup_at_radius * (1.0 + 1e-3);
  r.value = r.unbounded ? kInfinity : r.sup_at_radius;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kBoxSide = 16.0;

}  // namespace

double window_bessel_norm(const std::function<double(const Frequency&)>& g, int dim, double kappa) {
  const std::size_t M = dim == 1 ? 2048 : 512;
  const Grid box(dim, M);
  const auto samples = GridFunction::from_function(box, [&](const Point& y) {
    const Frequency xi{kBoxSide * y[0] - kBoxSide / 2.0, dim == 2 ? kBoxSide * y[1] - kBoxSide / 2.0 : 0.0};
    return Complex{g(xi), 0.0};
  });
  const auto c = fourier_coefficients(samples);
  double sum = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double eta = box.frequency_norm(i) / kBoxSide;
    sum += std::pow(1.0 + eta * eta, kappa) * std::norm(c[i]);
  }
  return std::sqrt(std::pow(kBoxSide, dim) * sum);
}

double h2_kappa_norm(const Symbol& m, double kappa, int J) {
  if (!(kappa > 0.0)) throw PreconditionError("Bessel-potential order kappa must be positive");
  if (J < 0) throw PreconditionError("number of levels J must be >= 0");
  const int dim = m.dim();
  auto radius = [](const Frequency& xi) { return std::hypot(xi[0], xi[1]); };
  const double head = window_bessel_norm(
      [&](const Frequency& xi) {
        const double w = lambda0_profile(radius(xi));
        return w == 0.0 ? 0.0 : w * m(xi);
      },
      dim, kappa);
  double tail = 0.0;
  for (int j = 1; j <= J; ++j) {
    const double s = std::exp2(j);
    tail = std::max(tail, window_bessel_norm(
                              [&](const Frequency& xi) {
                                const double w = lambda_profile(radius(xi));
                                return w == 0.0 ? 0.0 : w * m(Frequency{s * xi[0], s * xi[1]});
                              },
                              dim, kappa));
  }
  return head + tail;
}

double bessel_potential_norm(const GridFunction& g, double kappa) {
  const Grid& grid = g.grid();
  const auto c = fourier_coefficients(g);
  double sum = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double r = grid.frequency_norm(i);
    sum += std::pow(1.0 + r * r, kappa) * std::norm(c[i]);
  }
  return std::sqrt(sum);
}

}  // namespace varspace
