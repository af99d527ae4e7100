#pragma once

#include <string>
#include <vector>

#include "varspace/grid.hpp"

namespace varspace {

enum class SystemKind { admissible_pair, general_pair, theta_partition, lambda_cover };

/**
 * Fourier-side masks (mask_0, ..., mask_J) of a dyadic system on a grid.
 *
 * All masks are real, radial and built directly on the frequency set; the
 * spatial kernels are never formed. eps, k and L are meaningful only for
 * general pairs (L is a label: the masks vanish near 0, giving every moment).
 */
struct AnalysisSystem {
  SystemKind kind = SystemKind::admissible_pair;
  std::string profile;
  Grid grid{1, 16};
  std::vector<SpectralMask> masks;
  double eps = 0.0;
  double k = 0.0;
  int L = 0;

  int levels() const noexcept { return static_cast<int>(masks.size()) - 1; }
};

/// floor(log2(pi N)) - 1: the largest J whose top annulus fits the frequency set.
int max_levels(const Grid& grid);

/// mask_0 = Phi^(|xi|), mask_j = phi^(|xi| / 2^j) for a named profile.
AnalysisSystem build_admissible_pair(const std::string& profile, const Grid& grid, int J);

/// Psi^ = 1 on |xi| <= k eps, psi^ vanishes on |xi| <= eps/4 and is 1 on [eps/2, k eps]; needs k in (1, 2].
AnalysisSystem build_general_pair(const Grid& grid, int J, double eps, double k, int L);

/// Theta_0 = theta0, Theta_j = theta0(r/2^j) - theta0(r/2^{j-1}), last level absorbs the tail.
AnalysisSystem build_theta_partition(const Grid& grid, int J);

/// lambda_0 = lambda0_profile, lambda_j = lambda_profile(r / 2^j).
AnalysisSystem build_lambda_cover(const Grid& grid, int J);

struct SystemAudit {
  bool passes = false;
  double lower_bound = 0.0;       ///< min |mask| over the regions where a positive lower bound is required
  double support_violation = 0.0; ///< max |mask| outside the prescribed supports
  double partition_error = 0.0;   ///< max |sum_j mask_j - 1| (theta partitions)
  std::string detail;
};

/// Exhaustive frequency-set audit of the invariants of the system's kind.
SystemAudit audit_system(const AnalysisSystem& sys);

/// Audit of an arbitrary system against the general-pair conditions with given (eps, k).
SystemAudit audit_general_conditions(const AnalysisSystem& sys, double eps, double k);

}  // namespace varspace
