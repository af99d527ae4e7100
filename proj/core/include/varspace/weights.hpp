#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "varspace/grid.hpp"

namespace varspace {

/// Class parameters (alpha, alpha1, alpha2) and the constant c of an admissible weight sequence.
struct WeightClass {
  double alpha = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double c = 1.0;
};

/**
 * Admissible weight sequence (w_j)_{j=0..J} sampled on a grid.
 *
 * Entries are strictly positive. The declared class is what the constructor
 * proves; verify_admissible measures what the samples actually satisfy.
 */
class WeightSequence {
 public:
  WeightSequence(const Grid& grid, std::vector<std::vector<double>> entries, WeightClass declared, std::string family);

  const Grid& grid() const noexcept { return grid_; }
  int levels() const noexcept { return static_cast<int>(entries_.size()) - 1; }
  const std::vector<double>& operator[](std::size_t j) const noexcept { return entries_[j]; }
  const std::vector<std::vector<double>>& entries() const noexcept { return entries_; }
  const WeightClass& declared() const noexcept { return declared_; }
  const std::string& family() const noexcept { return family_; }

  /// (2^{-j sigma} w_j)_j with class (alpha, alpha1 - sigma, alpha2 - sigma).
  WeightSequence shifted(double sigma) const;

  /// First J+1 levels.
  WeightSequence truncated(int J) const;

 private:
  Grid grid_;
  std::vector<std::vector<double>> entries_;
  WeightClass declared_;
  std::string family_;
};

/// w_j(x) = 2^{js} (1 + 2^j d(x, U))^{s'} with the torus distance to the finite set U.
WeightSequence make_2microlocal(const Grid& grid, double s, double s_prime, const std::vector<Point>& U, int J);

/// w_j(x) = 2^{j s(x)}; class (c_log(s), s-, s+) with c = e^{c_log(s)}.
WeightSequence make_variable_smoothness(const Grid& grid, const std::vector<double>& s, int J);

/// w_j = sigma_j constant in x; class (0, log2 d1, log2 d2) with d1, d2 the extreme ratios.
WeightSequence make_generalized(const Grid& grid, const std::vector<double>& sigma);

/**
 * w_j(x) = 2^{js} rho(x); class (beta, s, s).
 *
 * rho must satisfy 0 < rho(x) <= C rho(y) (1 + d(x,y)^2)^{beta/2} on every
 * grid pair; the constant C defaults to 2^{beta/2}. A violation throws with
 * the witnessing pair in the message.
 */
WeightSequence make_weighted(const Grid& grid, const std::vector<double>& rho, double s, double beta, int J,
                             std::optional<double> rho_constant = std::nullopt);

struct AdmissibilityReport {
  bool passes = false;
  double measured_alpha = 0.0;   ///< smallest alpha making condition (i) hold with the declared c
  double measured_alpha1 = 0.0;  ///< min over j, x of log2(w_{j+1}/w_j)
  double measured_alpha2 = 0.0;  ///< max over j, x of log2(w_{j+1}/w_j)
  double measured_c = 0.0;       ///< max of w_j(x) / (w_j(y) (1 + 2^j d)^{declared alpha})
  bool exhaustive = true;        ///< false when the pair scan was sampled
  std::string witness;           ///< description of the first violated condition
};

/// Pair scans are exhaustive for N <= 128 or at most 2^22 pairs, otherwise seeded stratified sampling of 10^6 pairs.
AdmissibilityReport verify_admissible(const WeightSequence& w, std::uint64_t seed = 0x5eed0001ULL);

}  // namespace varspace
