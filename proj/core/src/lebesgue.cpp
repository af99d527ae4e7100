#include "varspace/lebesgue.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "varspace/error.hpp"
#include "varspace/monotone.hpp"

namespace varspace {

ModularResult modular(std::span<const double> magnitudes, const VariableExponent& p) {
  if (magnitudes.size() != p.size()) throw PreconditionError("sample count does not match exponent");
  ModularResult r;
  double sum = 0.0;
  for (std::size_t i = 0; i < magnitudes.size(); ++i) {
    const double a = magnitudes[i];
    if (std::isinf(p[i])) {
      if (a > 1.0) r.infinity_region_violated = true;
    } else if (a > 0.0) {
      sum += std::pow(a, p[i]);
    }
  }
  r.value = r.infinity_region_violated ? kInfinity : sum * p.grid().cell_volume();
  return r;
}

ModularResult modular(const GridFunction& f, const VariableExponent& p) {
  if (!(f.grid() == p.grid())) throw PreconditionError("function and exponent live on different grids");
  return modular(f.magnitudes(), p);
}

double scaling_infimum(std::span<const double> a, std::span<const double> p, std::span<const double> e,
                       double cell_volume) {
  if (a.size() != p.size() || a.size() != e.size()) throw PreconditionError("scaling_infimum: size mismatch");

  double constant = 0.0;     // lambda-independent part (finite p, e = 0)
  double lower = 0.0;        // lambda >= a^{1/e} from p = inf cells
  std::vector<std::size_t> decreasing;
  double guess = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] >= 0.0)) throw PreconditionError("scaling_infimum: magnitudes must be non-negative");
    if (a[i] == 0.0) continue;
    const bool p_inf = std::isinf(p[i]);
    if (e[i] == 0.0) {
      if (p_inf) {
        if (a[i] > 1.0) return kInfinity;
      } else {
        constant += std::pow(a[i], p[i]) * cell_volume;
      }
      continue;
    }
    const double threshold = std::pow(a[i], 1.0 / e[i]);
    if (p_inf) {
      lower = std::max(lower, threshold);
    } else {
      decreasing.push_back(i);
      guess = std::max(guess, threshold);
    }
  }
  if (constant > 1.0) return kInfinity;
  if (decreasing.empty()) return lower;
  const double budget = 1.0 - constant;
  if (budget <= 0.0) return kInfinity;

  auto D = [&](double lambda) {
    double sum = 0.0;
    for (const std::size_t i : decreasing) sum += std::pow(a[i] * std::pow(lambda, -e[i]), p[i]);
    return sum * cell_volume / budget;
  };
  double lambda = monotone_infimum(D, guess);
  if (std::isinf(lambda)) return kInfinity;
  // Margin so that the constraint survives re-evaluation under different rounding.
  lambda *= 1.0 + 1e-13;
  return std::max(lower, lambda);
}

double norm(std::span<const double> magnitudes, const VariableExponent& p) {
  if (magnitudes.size() != p.size()) throw PreconditionError("sample count does not match exponent");
  const std::vector<double> ones(magnitudes.size(), 1.0);
  return scaling_infimum(magnitudes, p.values(), ones, p.grid().cell_volume());
}

double norm(const GridFunction& f, const VariableExponent& p) {
  if (!(f.grid() == p.grid())) throw PreconditionError("function and exponent live on different grids");
  return norm(f.magnitudes(), p);
}

HolderPairing holder_pairing(const GridFunction& f, const GridFunction& g, const VariableExponent& p) {
  const VariableExponent p_conj = conjugate(p);
  HolderPairing r;
  const auto fg = f.times(g);
  r.lhs = norm(fg, VariableExponent::constant(f.grid(), 1.0));
  r.rhs = 2.0 * norm(f, p) * norm(g, p_conj);
  return r;
}

CharacteristicNormReport characteristic_norm_check(const VariableExponent& p, double cube_side) {
  const Grid& grid = p.grid();
  if (!(cube_side > 0.0) || cube_side > 1.0) throw PreconditionError("cube side must lie in (0, 1]");
  const std::size_t n = grid.n();
  const auto m = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(cube_side * static_cast<double>(n))));
  if (m > n) throw PreconditionError("cube side exceeds the torus");

  CharacteristicNormReport report;
  report.cube_side = static_cast<double>(m) / static_cast<double>(n);
  const double volume = std::pow(report.cube_side, grid.dim());
  report.ratio_min = kInfinity;

  const std::size_t cells = grid.dim() == 1 ? m : m * m;
  std::vector<double> ones(cells, 1.0), pq(cells);
  for (std::size_t x = 0; x < grid.size(); ++x) {
    const std::size_t x1 = grid.dim() == 1 ? x : x / n;
    const std::size_t x2 = grid.dim() == 1 ? 0 : x % n;
    std::size_t c = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (grid.dim() == 1) {
        pq[c++] = p[(x1 + i) % n];
      } else {
        for (std::size_t k = 0; k < m; ++k) pq[c++] = p[grid.index_of((x1 + i) % n, (x2 + k) % n)];
      }
    }
    const double nrm = scaling_infimum(ones, pq, ones, grid.cell_volume());
    const double px = p[x];
    const double scale = std::isinf(px) ? 1.0 : std::pow(volume, 1.0 / px);
    const double ratio = nrm / scale;
    report.ratio_min = std::min(report.ratio_min, ratio);
    report.ratio_max = std::max(report.ratio_max, ratio);
    ++report.cubes;
  }
  return report;
}

SandwichBounds sandwich_bounds(double rho, double p_minus, double p_plus) {
  if (!(p_minus > 0.0) || p_plus < p_minus) throw PreconditionError("sandwich bounds need 0 < p- <= p+");
  const double a = std::pow(rho, 1.0 / p_minus);
  const double b = std::isinf(p_plus) ? (rho > 0.0 ? 1.0 : 0.0) : std::pow(rho, 1.0 / p_plus);
  return {std::min(a, b), std::max(a, b)};
}

}  // namespace varspace
