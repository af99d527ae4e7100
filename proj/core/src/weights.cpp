#include "varspace/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "varspace/error.hpp"
#include "varspace/exponent.hpp"

namespace varspace {

WeightSequence::WeightSequence(const Grid& grid, std::vector<std::vector<double>> entries, WeightClass declared,
                               std::string family)
    : grid_(grid), entries_(std::move(entries)), declared_(declared), family_(std::move(family)) {
  if (entries_.empty()) throw PreconditionError("weight sequence needs at least one level");
  if (declared_.alpha < 0.0) throw PreconditionError("weight class alpha must be >= 0");
  if (declared_.alpha1 > declared_.alpha2) throw PreconditionError("weight class needs alpha1 <= alpha2");
  if (!(declared_.c > 0.0)) throw PreconditionError("weight class constant must be positive");
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (entries_[j].size() != grid_.size()) throw PreconditionError("weight level size does not match grid");
    for (double v : entries_[j])
      if (!(v > 0.0) || !std::isfinite(v))
        throw PreconditionError("weights must be finite and strictly positive (level " + std::to_string(j) + ")");
  }
}

WeightSequence WeightSequence::shifted(double sigma) const {
  auto e = entries_;
  for (std::size_t j = 0; j < e.size(); ++j) {
    const double f = std::exp2(-static_cast<double>(j) * sigma);
    for (auto& v : e[j]) v *= f;
  }
  WeightClass c = declared_;
  c.alpha1 -= sigma;
  c.alpha2 -= sigma;
  return WeightSequence(grid_, std::move(e), c, family_);
}

WeightSequence WeightSequence::truncated(int J) const {
  if (J < 0 || J > levels()) throw PreconditionError("truncation level out of range");
  std::vector<std::vector<double>> e(entries_.begin(), entries_.begin() + J + 1);
  return WeightSequence(grid_, std::move(e), declared_, family_);
}

// ---------------------------------------------------------------------------

namespace {

void require_levels(int J) {
  if (J < 0) throw PreconditionError("number of levels J must be >= 0");
}

}  // namespace

WeightSequence make_2microlocal(const Grid& grid, double s, double s_prime, const std::vector<Point>& U, int J) {
  require_levels(J);
  if (U.empty()) throw PreconditionError("2-microlocal weights need a nonempty set U");
  std::vector<double> dist(grid.size(), std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (const auto& u : U) dist[i] = std::min(dist[i], torus_distance(grid.point(i), u, grid.dim()));

  std::vector<std::vector<double>> e(J + 1, std::vector<double>(grid.size()));
  for (int j = 0; j <= J; ++j) {
    const double scale = std::exp2(j);
    const double base = std::exp2(j * s);
    for (std::size_t i = 0; i < grid.size(); ++i) e[j][i] = base * std::pow(1.0 + scale * dist[i], s_prime);
  }
  const WeightClass c{std::abs(s_prime), s + std::min(0.0, s_prime), s + std::max(0.0, s_prime), 1.0};
  return WeightSequence(grid, std::move(e), c, "2microlocal");
}

WeightSequence make_variable_smoothness(const Grid& grid, const std::vector<double>& s, int J) {
  require_levels(J);
  if (s.size() != grid.size()) throw PreconditionError("smoothness samples do not match grid");
  const double c_log = log_holder_estimate(grid, s).c_log_local;
  const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  std::vector<std::vector<double>> e(J + 1, std::vector<double>(grid.size()));
  for (int j = 0; j <= J; ++j)
    for (std::size_t i = 0; i < grid.size(); ++i) e[j][i] = std::exp2(j * s[i]);
  const WeightClass c{c_log, *lo, *hi, std::exp(c_log)};
  return WeightSequence(grid, std::move(e), c, "varsmooth");
}

WeightSequence make_generalized(const Grid& grid, const std::vector<double>& sigma) {
  if (sigma.empty()) throw PreconditionError("generalized weights need at least one level");
  for (double v : sigma)
    if (!(v > 0.0) || !std::isfinite(v)) throw PreconditionError("generalized weights need sigma_j > 0");
  double d1 = 1.0, d2 = 1.0;
  if (sigma.size() > 1) {
    d1 = std::numeric_limits<double>::infinity();
    d2 = 0.0;
    for (std::size_t j = 0; j + 1 < sigma.size(); ++j) {
      const double r = sigma[j + 1] / sigma[j];
      d1 = std::min(d1, r);
      d2 = std::max(d2, r);
    }
  }
  std::vector<std::vector<double>> e;
  for (double v : sigma) e.emplace_back(grid.size(), v);
  const WeightClass c{0.0, std::log2(d1), std::log2(d2), 1.0};
  return WeightSequence(grid, std::move(e), c, "generalized");
}

WeightSequence make_weighted(const Grid& grid, const std::vector<double>& rho, double s, double beta, int J,
                             std::optional<double> rho_constant) {
  require_levels(J);
  if (rho.size() != grid.size()) throw PreconditionError("rho samples do not match grid");
  if (!(beta >= 0.0)) throw PreconditionError("weight function exponent beta must be >= 0");
  const double C = rho_constant.value_or(std::exp2(beta / 2.0));
  if (!(C > 0.0)) throw PreconditionError("rho constant must be positive");
  for (std::size_t i = 0; i < rho.size(); ++i)
    if (!(rho[i] > 0.0) || !std::isfinite(rho[i]))
      throw PreconditionError("rho must be finite and positive (index " + std::to_string(i) + ")");

  std::vector<double> bound(grid.size());
  for (std::size_t d = 0; d < grid.size(); ++d) {
    const double len = grid.displacement_length(d);
    bound[d] = C * std::pow(1.0 + len * len, beta / 2.0);
  }
  for (std::size_t x = 0; x < grid.size(); ++x)
    for (std::size_t y = 0; y < grid.size(); ++y)
      if (rho[x] > bound[grid.displacement_index(x, y)] * rho[y] * (1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "rho violates rho(x) <= C rho(y) (1 + d^2)^{beta/2} with C = " << C << " at x index " << x
            << ", y index " << y << " (rho(x) = " << rho[x] << ", rho(y) = " << rho[y] << ")";
        throw PreconditionError(msg.str());
      }

  std::vector<std::vector<double>> e(J + 1, std::vector<double>(grid.size()));
  for (int j = 0; j <= J; ++j) {
    const double base = std::exp2(j * s);
    for (std::size_t i = 0; i < grid.size(); ++i) e[j][i] = base * rho[i];
  }
  const WeightClass c{beta, s, s, C};
  return WeightSequence(grid, std::move(e), c, "weighted");
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kSampledPairs = 1'000'000;

struct PairMax {
  double value = -std::numeric_limits<double>::infinity();
  std::size_t x = 0, y = 0;
  void offer(double v, std::size_t a, std::size_t b) {
    if (v > value) {
      value = v;
      x = a;
      y = b;
    }
  }
};

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

AdmissibilityReport verify_admissible(const WeightSequence& w, std::uint64_t seed) {
  const Grid& grid = w.grid();
  const WeightClass& decl = w.declared();
  const std::size_t size = grid.size();
  const int J = w.levels();
  AdmissibilityReport r;
  std::ostringstream witness;

  // Condition (ii): dyadic growth between consecutive levels.
  if (J == 0) {
    r.measured_alpha1 = decl.alpha1;
    r.measured_alpha2 = decl.alpha2;
  } else {
    r.measured_alpha1 = std::numeric_limits<double>::infinity();
    r.measured_alpha2 = -std::numeric_limits<double>::infinity();
    std::size_t lo_j = 0, lo_x = 0, hi_j = 0, hi_x = 0;
    for (int j = 0; j < J; ++j)
      for (std::size_t x = 0; x < size; ++x) {
        const double g = std::log2(w[j + 1][x] / w[j][x]);
        if (g < r.measured_alpha1) {
          r.measured_alpha1 = g;
          lo_j = j;
          lo_x = x;
        }
        if (g > r.measured_alpha2) {
          r.measured_alpha2 = g;
          hi_j = j;
          hi_x = x;
        }
      }
    if (r.measured_alpha1 < decl.alpha1 - 1e-9)
      witness << "growth below 2^alpha1 at level " << lo_j << ", index " << lo_x << " (log2 ratio "
              << r.measured_alpha1 << " < " << decl.alpha1 << "); ";
    if (r.measured_alpha2 > decl.alpha2 + 1e-9)
      witness << "growth above 2^alpha2 at level " << hi_j << ", index " << hi_x << " (log2 ratio "
              << r.measured_alpha2 << " > " << decl.alpha2 << "); ";
  }

  // Condition (i): spatial variation at scale 2^{-j}, in log form.
  r.exhaustive = grid.n() <= 128 || size * size <= (std::size_t{1} << 22);
  const double log_c = std::log(decl.c);
  PairMax c_max;
  double alpha_max = 0.0;
  int c_level = 0;
  std::vector<double> lw(size), table(size);
  std::mt19937_64 rng(seed);
  for (int j = 0; j <= J; ++j) {
    for (std::size_t i = 0; i < size; ++i) lw[i] = std::log(w[j][i]);
    const double scale = std::exp2(j);
    for (std::size_t d = 0; d < size; ++d) table[d] = std::log1p(scale * grid.displacement_length(d));
    PairMax level_max;
    auto visit = [&](std::size_t x, std::size_t y) {
      const double L = table[grid.displacement_index(x, y)];
      const double diff = lw[x] - lw[y];
      level_max.offer(diff - decl.alpha * L, x, y);
      if (L > 0.0) alpha_max = std::max(alpha_max, (diff - log_c) / L);
    };
    if (r.exhaustive) {
      for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = 0; y < size; ++y) visit(x, y);
    } else {
      const std::size_t per_x = (kSampledPairs + size - 1) / size;
      for (std::size_t x = 0; x < size; ++x)
        for (std::size_t k = 0; k < per_x; ++k) {
          const auto y = std::min(size - 1, static_cast<std::size_t>(uniform01(rng) * static_cast<double>(size)));
          visit(x, y);
        }
    }
    if (level_max.value > c_max.value) {
      c_max = level_max;
      c_level = j;
    }
  }
  r.measured_c = std::exp(c_max.value);
  r.measured_alpha = alpha_max;
  if (r.measured_c > decl.c * (1.0 + 1e-9))
    witness << "spatial bound exceeded at level " << c_level << ", x index " << c_max.x << ", y index " << c_max.y
            << " (measured c " << r.measured_c << " > " << decl.c << "); ";

  r.witness = witness.str();
  r.passes = r.witness.empty();
  return r;
}

}  // namespace varspace
