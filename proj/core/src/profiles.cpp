#include "varspace/profiles.hpp"

#include <cmath>

#include "varspace/error.hpp"

namespace varspace {

double smooth_step(double t) noexcept {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

double theta0(double r) noexcept { return smooth_step(2.0 - r); }

namespace {

double partition_level0(double r) { return theta0(r); }
double partition_annulus(double r) { return theta0(r) - theta0(2.0 * r); }

double logbump_level0(double r) {
  const double u = r / 2.0;
  if (u >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - u * u));
}

double logbump_annulus(double r) {
  if (r <= 0.5 || r >= 2.0) return 0.0;
  const double t = std::log2(r);
  return std::exp(1.0 - 1.0 / (1.0 - t * t));
}

}  // namespace

RadialPair admissible_profile(const std::string& name) {
  if (name == "partition") return {partition_level0, partition_annulus};
  if (name == "logbump") return {logbump_level0, logbump_annulus};
  throw PreconditionError("unknown admissible profile '" + name + "' (expected partition or logbump)");
}

std::vector<std::string> admissible_profile_names() { return {"partition", "logbump"}; }

double lambda0_profile(double r) noexcept { return smooth_step((4.0 - r) / 2.0); }

double lambda_profile(double r) noexcept { return lambda0_profile(r) - lambda0_profile(8.0 * r); }

}  // namespace varspace
