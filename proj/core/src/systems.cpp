#include "varspace/systems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "varspace/error.hpp"
#include "varspace/profiles.hpp"

namespace varspace {

int max_levels(const Grid& grid) {
  return static_cast<int>(std::floor(std::log2(kPi * static_cast<double>(grid.n())))) - 1;
}

namespace {

void require_levels(const Grid& grid, int J) {
  if (J < 0) throw PreconditionError("number of levels J must be >= 0");
  const int top = max_levels(grid);
  if (J > top)
    throw PreconditionError("J = " + std::to_string(J) + " exceeds the grid maximum " + std::to_string(top) +
                            " for N = " + std::to_string(grid.n()));
}

template <typename F>
SpectralMask radial_mask(const Grid& grid, F&& profile) {
  return SpectralMask::radial(grid, std::forward<F>(profile));
}

}  // namespace

AnalysisSystem build_admissible_pair(const std::string& profile, const Grid& grid, int J) {
  require_levels(grid, J);
  const RadialPair pair = admissible_profile(profile);
  AnalysisSystem sys;
  sys.kind = SystemKind::admissible_pair;
  sys.profile = profile;
  sys.grid = grid;
  sys.masks.push_back(radial_mask(grid, pair.level0));
  for (int j = 1; j <= J; ++j) {
    const double s = std::exp2(-j);
    sys.masks.push_back(radial_mask(grid, [&](double r) { return pair.annulus(r * s); }));
  }
  return sys;
}

AnalysisSystem build_general_pair(const Grid& grid, int J, double eps, double k, int L) {
  require_levels(grid, J);
  if (!(eps > 0.0)) throw PreconditionError("general pair needs eps > 0");
  if (!(k > 1.0 && k <= 2.0)) throw PreconditionError("general pair needs k in (1, 2]");
  if (L < 0) throw PreconditionError("moment order L must be >= 0");
  const double top = k * eps;
  const double inner = eps / 4.0;
  auto Psi = [=](double r) { return smooth_step((2.0 * top - r) / top); };
  auto psi = [=](double r) { return smooth_step((r - inner) / inner) * smooth_step((2.0 * top - r) / top); };

  AnalysisSystem sys;
  sys.kind = SystemKind::general_pair;
  sys.profile = "general";
  sys.grid = grid;
  sys.eps = eps;
  sys.k = k;
  sys.L = L;
  sys.masks.push_back(radial_mask(grid, Psi));
  for (int j = 1; j <= J; ++j) {
    const double s = std::exp2(-j);
    sys.masks.push_back(radial_mask(grid, [&](double r) { return psi(r * s); }));
  }
  return sys;
}

AnalysisSystem build_theta_partition(const Grid& grid, int J) {
  require_levels(grid, J);
  AnalysisSystem sys;
  sys.kind = SystemKind::theta_partition;
  sys.profile = "theta";
  sys.grid = grid;
  if (J == 0) {
    sys.masks.emplace_back(grid, Complex{1.0, 0.0});
    return sys;
  }
  sys.masks.push_back(radial_mask(grid, theta0));
  for (int j = 1; j <= J; ++j) {
    const double s = std::exp2(-j);
    const double sp = std::exp2(-(j - 1));
    if (j < J)
      sys.masks.push_back(radial_mask(grid, [&](double r) { return theta0(r * s) - theta0(r * sp); }));
    else
      sys.masks.push_back(radial_mask(grid, [&](double r) { return 1.0 - theta0(r * sp); }));
  }
  return sys;
}

AnalysisSystem build_lambda_cover(const Grid& grid, int J) {
  require_levels(grid, J);
  AnalysisSystem sys;
  sys.kind = SystemKind::lambda_cover;
  sys.profile = "lambda";
  sys.grid = grid;
  sys.masks.push_back(radial_mask(grid, lambda0_profile));
  for (int j = 1; j <= J; ++j) {
    const double s = std::exp2(-j);
    sys.masks.push_back(radial_mask(grid, [&](double r) { return lambda_profile(r * s); }));
  }
  return sys;
}

// ---------------------------------------------------------------------------

namespace {

// Tracks the minimum over "must be positive" regions and the maximum over "must vanish" regions.
struct Scan {
  double lower = std::numeric_limits<double>::infinity();
  double outside = 0.0;
  void need_positive(double v) { lower = std::min(lower, v); }
  void need_zero(double v) { outside = std::max(outside, v); }
};

}  // namespace

SystemAudit audit_general_conditions(const AnalysisSystem& sys, double eps, double k) {
  const Grid& grid = sys.grid;
  Scan scan;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid.frequency_norm(i);
    if (r <= k * eps) scan.need_positive(std::abs(sys.masks[0][i]));
    for (int j = 1; j <= sys.levels(); ++j) {
      const double u = r * std::exp2(-j);
      const double v = std::abs(sys.masks[j][i]);
      if (u >= eps / 2.0 && u <= k * eps) scan.need_positive(v);
      if (u < eps / 4.0) scan.need_zero(v);
    }
  }
  SystemAudit a;
  a.lower_bound = scan.lower;
  a.support_violation = scan.outside;
  a.passes = scan.lower > 0.0 && scan.outside == 0.0;
  std::ostringstream d;
  d << "eps=" << eps << " k=" << k << " lower=" << a.lower_bound << " moment_leak=" << a.support_violation;
  a.detail = d.str();
  return a;
}

SystemAudit audit_system(const AnalysisSystem& sys) {
  const Grid& grid = sys.grid;
  if (sys.kind == SystemKind::general_pair) return audit_general_conditions(sys, sys.eps, sys.k);

  SystemAudit a;
  Scan scan;
  double partition_error = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid.frequency_norm(i);
    double total = 0.0;
    for (int j = 0; j <= sys.levels(); ++j) {
      const double v = std::abs(sys.masks[j][i]);
      total += sys.masks[j][i].real();
      const double s = std::exp2(j);
      switch (sys.kind) {
        case SystemKind::admissible_pair:
          if (j == 0) {
            if (r > 2.0) scan.need_zero(v);
            if (r <= 5.0 / 3.0) scan.need_positive(v);
          } else {
            if (r < s / 2.0 || r > 2.0 * s) scan.need_zero(v);
            if (r >= 0.6 * s && r <= s * 5.0 / 3.0) scan.need_positive(v);
          }
          break;
        case SystemKind::lambda_cover:
          if (j == 0) {
            if (r > 4.0) scan.need_zero(v);
            if (r <= 2.0) scan.need_positive(v);
          } else {
            if (r < s / 4.0 || r > 4.0 * s) scan.need_zero(v);
            if (r >= s / 2.0 && r <= 2.0 * s) scan.need_positive(v);
          }
          break;
        default:
          break;
      }
    }
    partition_error = std::max(partition_error, std::abs(total - 1.0));
  }

  std::ostringstream d;
  if (sys.kind == SystemKind::theta_partition) {
    a.partition_error = partition_error;
    a.lower_bound = 1.0;
    a.passes = partition_error <= 1e-14;
    d << "partition_error=" << partition_error;
  } else {
    a.lower_bound = scan.lower;
    a.support_violation = scan.outside;
    a.passes = scan.lower > 0.0 && scan.outside == 0.0;
    if (sys.kind == SystemKind::lambda_cover) a.passes = a.passes && scan.lower == 1.0;
    d << "lower=" << a.lower_bound << " support_violation=" << a.support_violation;
  }
  a.detail = d.str();
  return a;
}

}  // namespace varspace
