#include "varspace/monotone.hpp"

#include <cmath>
#include <limits>

namespace varspace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Work in s = log t; G(s) = log h(e^s) is non-increasing and crosses 0 at the answer.
struct LogProblem {
  const std::function<double(double)>& h;
  double operator()(double s) const {
    const double v = h(std::exp(s));
    if (std::isnan(v)) return kInf;
    return v <= 0.0 ? -kInf : std::log(v);
  }
};

}  // namespace

double monotone_infimum(const std::function<double(double)>& h, double initial_guess, const MonotoneOptions& options) {
  const double s_min = std::log(std::numeric_limits<double>::min());
  const double s_max = std::log(std::numeric_limits<double>::max());
  LogProblem G{h};

  double s0 = (initial_guess > 0.0 && std::isfinite(initial_guess)) ? std::log(initial_guess) : 0.0;
  if (s0 < s_min) s0 = s_min;
  if (s0 > s_max) s0 = s_max;

  double a, ga, b, gb;  // invariant once bracketed: ga > 0 >= gb, a < b
  const double g0 = G(s0);
  double step = std::log(2.0);
  if (g0 <= 0.0) {
    b = s0;
    gb = g0;
    for (;;) {
      if (b <= s_min) return 0.0;
      a = std::max(b - step, s_min);
      ga = G(a);
      if (ga > 0.0) break;
      b = a;
      gb = ga;
      step *= 2.0;
    }
  } else {
    a = s0;
    ga = g0;
    for (;;) {
      if (a >= s_max) return kInf;
      b = std::min(a + step, s_max);
      gb = G(b);
      if (gb <= 0.0) break;
      a = b;
      ga = gb;
      step *= 2.0;
    }
  }

  // Illinois regula falsi with a bisection fallback for infinite values and stalls.
  int side = 0;
  double width_before = b - a;
  for (int it = 0; it < options.max_iterations; ++it) {
    const double width = b - a;
    const double floor_tol = 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b));
    if (width <= std::max(options.log_tolerance, floor_tol)) break;

    double s;
    const bool finite = std::isfinite(ga) && std::isfinite(gb);
    const bool stalled = (it % 3 == 2) && width > 0.5 * width_before;
    if (it % 3 == 2) width_before = width;
    bool secant = false;
    double slope = 0.0;
    if (finite && !stalled && ga != gb) {
      slope = (ga - gb) / (b - a);
      s = b + gb / slope;
      const double margin = 0.01 * options.log_tolerance;
      secant = s > a + margin && s < b - margin;
      if (!secant) s = 0.5 * (a + b);
    } else {
      s = 0.5 * (a + b);
    }

    const double gs = G(s);
    if (gs <= 0.0) {
      b = s;
      gb = gs;
      if (side == -1 && std::isfinite(ga)) ga *= 0.5;
      side = -1;
    } else {
      a = s;
      ga = gs;
      if (side == 1 && std::isfinite(gb)) gb *= 0.5;
      side = 1;
    }
    // When the secant predicts the crossing within the tolerance, one probe just past
    // the prediction usually closes the bracket.
    if (secant && std::isfinite(gs) && slope > 0.0) {
      const double predicted = std::abs(gs) / slope;
      if (predicted < options.log_tolerance) {
        const double offset = 2.0 * predicted + 0.25 * options.log_tolerance;
        const double x = gs <= 0.0 ? s - offset : s + offset;
        if (x > a && x < b) {
          const double gx = G(x);
          if (gx <= 0.0) {
            b = x;
            gb = gx;
          } else {
            a = x;
            ga = gx;
          }
        }
      }
    }
  }
  return std::exp(b);
}

}  // namespace varspace
