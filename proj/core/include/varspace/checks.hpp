#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "varspace/corpus.hpp"
#include "varspace/spaces.hpp"
#include "varspace/symbol.hpp"

namespace varspace {

/// Builds the same space on any grid, so a check can be repeated at N and 2N.
using SpecFactory = std::function<SpaceSpec(const Grid&)>;

/// Per-grid preparation returning the ratio to record for one sampled corpus function.
using RatioSetup = std::function<std::function<double(const GridFunction&)>(const Grid&)>;

/// Ratios on grid and on its 2N refinement, as an EquivalenceReport.
EquivalenceReport refinement_report(const std::vector<CorpusEntry>& corpus, const Grid& grid, const RatioSetup& setup,
                                    double drift_limit = 0.3);

/// quasi_norm under spec a over quasi_norm under spec b; zero functions must not be in the corpus.
EquivalenceReport pair_independence_check(const std::vector<CorpusEntry>& corpus, const Grid& grid,
                                          const SpecFactory& a, const SpecFactory& b);

/// ||I_sigma f|| with weights (2^{-j sigma} w_j) over ||f|| with w.
EquivalenceReport lifting_check(const std::vector<CorpusEntry>& corpus, const Grid& grid, const SpecFactory& spec,
                                double sigma);

/// max over the functions of max|I_{-sigma} I_sigma f - f| / max|f|.
double lifting_round_trip_error(const std::vector<GridFunction>& functions, double sigma);

struct MaximalCheckReport {
  double a = 0.0;
  double threshold = 0.0;        ///< at the base grid
  bool pointwise_domination = true;  ///< (psi_j^* f)_a >= |psi_j * f| at every lattice point
  EquivalenceReport ratios;      ///< maximal / plain
};

/// Runs quasi_norm_maximal with a = threshold + a_offset (threshold measured on each grid).
MaximalCheckReport maximal_check(const std::vector<CorpusEntry>& corpus, const Grid& grid, const SpecFactory& spec,
                                 double a_offset = 1.0, std::optional<double> c_log_override = std::nullopt);

struct LocalMeansCheckReport {
  int laplace_order = 0;
  double alpha2 = 0.0;
  double constant_tail = 0.0;  ///< max over j >= 1 of max |k^N(2^{-j}, 1)| for the constant signal 1
  EquivalenceReport ratios;    ///< local-means norm / quasi_norm
};

/// Default bump kernels for k_0 and k^0 on every grid.
LocalMeansCheckReport local_means_check(const std::vector<CorpusEntry>& corpus, const Grid& grid,
                                        const SpecFactory& spec, int laplace_order);

/**
 * ||(v_j / w_j)_j|| in l_{q*}(L_inf) (B) or L_inf(l_{q*}) (F), 1/q* = (1/q1 - 1/q0+)_+.
 *
 * source carries (w, q0), target carries (v, q1); scales and grids must agree.
 */
double weight_ratio_condition(const SpaceSpec& source, const SpaceSpec& target);

struct EmbeddingReport {
  std::string name;
  bool evaluated = false;     ///< false when the precondition failed
  std::string skipped_reason;
  double constant = 0.0;      ///< measured C = max target / source at N
  double constant_refined = 0.0;
  double condition = 0.0;     ///< weight-ratio condition value (0 when not applicable)
  std::optional<double> bound;  ///< constant asserted not to be exceeded, if any
  std::size_t violations = 0;   ///< corpus functions above the bound (both grids)
  bool passes = false;          ///< finite C, |log C_2N - log C_N| < 0.3, no violations
};

struct EmbeddingVariant {
  std::string name;
  SpecFactory source;
  SpecFactory target;
  /// Returns an empty string when the precondition holds, otherwise the reason.
  std::function<std::string(const SpaceSpec& source, const SpaceSpec& target)> precondition;
  /// Upper bound on C asserted with relative slack 1e-9; may use the condition value.
  std::function<std::optional<double>(const SpaceSpec& source, const SpaceSpec& target, double condition)> bound;
};

std::vector<EmbeddingReport> embedding_checks(const std::vector<CorpusEntry>& corpus, const Grid& grid,
                                              const std::vector<EmbeddingVariant>& variants);

/// q0 <= q1 with equal weights and the bound C <= 1.
EmbeddingVariant q_monotone_variant(const SpecFactory& spec, const std::function<VariableExponent(const Grid&)>& q1);

/// B_{p, min(p, q)} -> F_{p, q} and F_{p, q} -> B_{p, max(p, q)} for an F-scale spec; no bound asserted.
std::vector<EmbeddingVariant> sandwich_variants(const SpecFactory& f_spec);

/// Weights w -> v and q0 -> q1 with bound C <= weight_ratio_condition when both q are constant.
EmbeddingVariant weight_ratio_variant(const SpecFactory& source, const SpecFactory& target);

struct SchwartzReport {
  int order = 0;               ///< the seminorm order N
  double threshold = 0.0;      ///< alpha + n/p-
  double constant = 0.0;       ///< max sup_j ||w_j (phi_j * f)||_p / p_N(f)
  double constant_refined = 0.0;
  double pairing_constant = 0.0;  ///< max |<f, psi>| / ||f | B_{p, inf}^w||
  double pairing_constant_refined = 0.0;
  bool passes = false;
};

/// Requires order > alpha + n/p- (measured). psi is a fixed Gaussian of width 0.1 centred at 1/2.
SchwartzReport schwartz_embedding_checks(const std::vector<CorpusEntry>& bumps, const Grid& grid,
                                         const SpecFactory& spec, int order);

enum class MultiplierMode { norm_2l, h2kappa };

struct MultiplierCheckReport {
  MultiplierMode mode = MultiplierMode::norm_2l;
  double order = 0.0;      ///< 2l or kappa
  double threshold = 0.0;  ///< lower bound the order must exceed
  double M = 0.0;          ///< multiplier norm
  bool M_unbounded = false;
  double constant = 0.0;   ///< C = max lhs / (M rhs) at N
  double constant_refined = 0.0;
  std::size_t violations = 0;  ///< refined ratios above C e^{0.3}
  bool passes = false;
  std::vector<double> ratios;  ///< lhs / (M rhs) at N, one per corpus function
  std::string detail;
};

/**
 * ||(m f^)^v|| <= C M ||f|| over the corpus with M = ||m||_{2l} or ||m | h_2^kappa||.
 *
 * order is l (norm_2l) or kappa (h2kappa). Throws when 2l or kappa does not
 * exceed the measured threshold.
 */
MultiplierCheckReport multiplier_bound_check(const std::vector<CorpusEntry>& corpus, const Grid& grid,
                                             const SpecFactory& spec, const Symbol& m, MultiplierMode mode,
                                             double order, std::optional<double> c_log_override = std::nullopt);

/// ||D^gamma f|| with w over ||f|| with (2^{j|gamma|} w_j).
EquivalenceReport differentiation_check(const std::vector<CorpusEntry>& corpus, const Grid& grid,
                                        const SpecFactory& spec, const MultiIndex& gamma);

/// sum_{|gamma| <= kappa} ||D^gamma f|| with (2^{-j kappa} w_j) over ||f|| with w.
EquivalenceReport derivative_sum_check(const std::vector<CorpusEntry>& corpus, const Grid& grid,
                                     const SpecFactory& spec, int kappa);

struct QuasiTriangleReport {
  double measured = 0.0;   ///< max quasi_norm(f + g) / (quasi_norm(f) + quasi_norm(g)) over consecutive pairs
  double reference = 1.0;  ///< max{1, 2^{1/min(p-, q-, 1) - 1}}
};

QuasiTriangleReport quasi_triangle_constant(const std::vector<GridFunction>& functions, const SpaceSpec& spec);

}  // namespace varspace
