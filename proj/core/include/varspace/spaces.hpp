#pragma once

#include <optional>
#include <string>
#include <vector>

#include "varspace/exponent.hpp"
#include "varspace/grid.hpp"
#include "varspace/mixed.hpp"
#include "varspace/operators.hpp"
#include "varspace/systems.hpp"
#include "varspace/weights.hpp"

namespace varspace {

enum class Scale { B, F };

const char* scale_name(Scale s) noexcept;

/**
 * Data of one Besov (B) or Triebel-Lizorkin (F) quasi-norm on a grid.
 *
 * p, q, w and system share the grid; the F scale needs p+, q+ < inf; system
 * and w provide at least J + 1 levels.
 */
struct SpaceSpec {
  Scale scale;
  VariableExponent p;
  VariableExponent q;
  WeightSequence w;
  AnalysisSystem system;
  int J;

  const Grid& grid() const noexcept { return p.grid(); }
};

/// Throws PreconditionError naming the first violated invariant.
void validate(const SpaceSpec& spec);

/// Magnitudes w_j |F_j| for j = 0..J.
LevelMagnitudes weighted_levels(const FunctionSequence& F, const WeightSequence& w, int J);

/// lq_lp_norm on the B scale, lp_lq_norm on the F scale.
double mixed_norm(Scale scale, const LevelMagnitudes& F, const VariableExponent& p, const VariableExponent& q);

/// (phi_j * f)_{j <= J} for spec.system.
FunctionSequence analysis_sequence(const GridFunction& f, const SpaceSpec& spec);

/// ||(w_j (phi_j * f))_{j <= J}|| in l_q(L_p) (B) or L_p(l_q) (F).
double quasi_norm(const GridFunction& f, const SpaceSpec& spec);

/// ||w_j (phi_j * f) | L_p|| for j = 0..J.
std::vector<double> level_norms(const GridFunction& f, const SpaceSpec& spec);

/// Measured class data entering the maximal, multiplier and local-means thresholds.
struct SpaceConstants {
  int dim = 1;
  double alpha = 0.0;   ///< measured by verify_admissible
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double p_minus = 0.0;
  double q_minus = 0.0;
  double c_log_q_estimate = 0.0;  ///< grid estimate of c_log(1/q)
  double c_log_q = 0.0;           ///< value used in thresholds (estimate unless overridden)
  bool weights_admissible = false;
};

SpaceConstants measure_constants(const SpaceSpec& spec, std::optional<double> c_log_override = std::nullopt);

/// a-threshold: alpha + n/p- + c_log(1/q) (B) or alpha + n/min(p-, q-) (F).
double maximal_threshold(Scale scale, const SpaceConstants& k);

/// 2l-threshold: the a-threshold plus n.
double norm_2l_threshold(Scale scale, const SpaceConstants& k);

/// kappa-threshold: the a-threshold plus n/2.
double h2_kappa_threshold(Scale scale, const SpaceConstants& k);

struct MaximalNorms {
  double plain = 0.0;
  double maximal = 0.0;
};

/// Mixed norms of (w_j (psi_j * f))_j and (w_j (psi_j^* f)_a)_j; rejects a <= maximal_threshold.
MaximalNorms quasi_norm_maximal(const GridFunction& f, const SpaceSpec& spec, double a, const SpaceConstants& k);

/**
 * ||w_0 k_0(1, f) | L_p|| + mixed norm of (w_j k^N(2^{-j}, f))_{1 <= j <= J}.
 *
 * Requires 2 N > alpha2 with N = means.laplace_order(), and means.levels() >= J.
 */
double quasi_norm_local_means(const GridFunction& f, const SpaceSpec& spec, const LocalMeansSystem& means,
                              const SpaceConstants& k);

/**
 * Ratios over a corpus at N and at 2N.
 *
 * drift = |log(ratio_max / ratio_min) at N - same at 2N|; passes iff every
 * ratio is finite and positive and drift < drift_limit.
 */
struct EquivalenceReport {
  double ratio_min = 0.0;
  double ratio_max = 0.0;
  std::size_t corpus_size = 0;
  double ratio_min_refined = 0.0;
  double ratio_max_refined = 0.0;
  double refinement_drift = 0.0;
  double drift_limit = 0.3;
  bool passes = false;
  std::vector<std::string> names;
  std::vector<double> ratios;
  std::vector<double> ratios_refined;
};

EquivalenceReport make_equivalence_report(std::vector<std::string> names, std::vector<double> ratios,
                                          std::vector<double> ratios_refined, double drift_limit = 0.3);

}  // namespace varspace
