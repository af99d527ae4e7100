#pragma once

#include <string>
#include <vector>

namespace varspace {

/// C-infinity step: 0 for t <= 0, 1 for t >= 1, e(t) / (e(t) + e(1 - t)) with e(t) = exp(-1/t) between.
double smooth_step(double t) noexcept;

/// 1 on [0, 1], 0 on [2, inf), smooth and non-increasing between.
double theta0(double r) noexcept;

/// Radial profile pair of an admissible system: Phi^ (level 0) and phi^ (dilated for j >= 1).
struct RadialPair {
  double (*level0)(double r);
  double (*annulus)(double r);
};

/// Named admissible profiles: "partition" (theta0 differences) and "logbump" (bump in log2 r).
RadialPair admissible_profile(const std::string& name);
std::vector<std::string> admissible_profile_names();

/// Level-0 and generic-level profiles of the lambda cover.
double lambda0_profile(double r) noexcept;  ///< 1 on [0, 2], 0 on [4, inf)
double lambda_profile(double r) noexcept;   ///< 1 on [1/2, 2], 0 off [1/4, 4]

}  // namespace varspace
