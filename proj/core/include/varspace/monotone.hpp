#pragma once

#include <functional>

namespace varspace {

/// Solver limits for monotone_infimum.
struct MonotoneOptions {
  double log_tolerance = 1e-13;  ///< bracket width in log(t) at which to stop
  int max_iterations = 200;
};

/**
 * inf{t > 0 : h(t) <= 1} for h non-increasing on (0, inf).
 *
 * Returns 0 when h(t) <= 1 for every t tried down to the smallest positive
 * normal, and +inf when h(t) > 1 up to the largest finite double. Otherwise
 * the returned t satisfies h(t) <= 1 (the upper bracket end is returned), and
 * the bracket has relative width below the tolerance.
 * h may return +inf.
 */
double monotone_infimum(const std::function<double(double)>& h, double initial_guess = 1.0,
                        const MonotoneOptions& options = {});

}  // namespace varspace
