#include "varspace/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "varspace/error.hpp"
#include "varspace/lebesgue.hpp"

namespace varspace {

const char* scale_name(Scale s) noexcept { return s == Scale::B ? "B" : "F"; }

void validate(const SpaceSpec& spec) {
  const Grid& g = spec.grid();
  if (!(spec.q.grid() == g) || !(spec.w.grid() == g) || !(spec.system.grid == g))
    throw PreconditionError("space data live on different grids");
  if (spec.J < 0) throw PreconditionError("number of levels J must be >= 0");
  if (spec.system.levels() < spec.J) throw PreconditionError("analysis system has fewer than J + 1 levels");
  if (spec.w.levels() < spec.J) throw PreconditionError("weight sequence has fewer than J + 1 levels");
  if (spec.scale == Scale::F && (!spec.p.bounded() || !spec.q.bounded()))
    throw PreconditionError("F scale requires p+ < inf and q+ < inf");
}

LevelMagnitudes weighted_levels(const FunctionSequence& F, const WeightSequence& w, int J) {
  if (J < 0 || static_cast<int>(F.size()) <= J || w.levels() < J)
    throw PreconditionError("sequence or weights shorter than J + 1 levels");
  LevelMagnitudes out(J + 1);
  for (int j = 0; j <= J; ++j) {
    out[j] = F[j].magnitudes();
    const auto& wj = w[j];
    for (std::size_t i = 0; i < out[j].size(); ++i) out[j][i] *= wj[i];
  }
  return out;
}

double mixed_norm(Scale scale, const LevelMagnitudes& F, const VariableExponent& p, const VariableExponent& q) {
  return scale == Scale::B ? lq_lp_norm(F, p, q) : lp_lq_norm(F, p, q);
}

FunctionSequence analysis_sequence(const GridFunction& f, const SpaceSpec& spec) {
  if (!(f.grid() == spec.grid())) throw PreconditionError("function and space live on different grids");
  const auto c = fourier_coefficients(f);
  FunctionSequence out(f.grid());
  for (int j = 0; j <= spec.J; ++j) {
    auto cj = c;
    const auto& mask = spec.system.masks[j];
    for (std::size_t i = 0; i < cj.size(); ++i) cj[i] *= mask[i];
    out.push_back(from_coefficients(f.grid(), std::move(cj)));
  }
  return out;
}

double quasi_norm(const GridFunction& f, const SpaceSpec& spec) {
  validate(spec);
  const auto F = analysis_sequence(f, spec);
  return mixed_norm(spec.scale, weighted_levels(F, spec.w, spec.J), spec.p, spec.q);
}

std::vector<double> level_norms(const GridFunction& f, const SpaceSpec& spec) {
  validate(spec);
  const auto levels = weighted_levels(analysis_sequence(f, spec), spec.w, spec.J);
  std::vector<double> out;
  out.reserve(levels.size());
  for (const auto& l : levels) out.push_back(norm(l, spec.p));
  return out;
}

SpaceConstants measure_constants(const SpaceSpec& spec, std::optional<double> c_log_override) {
  validate(spec);
  SpaceConstants k;
  k.dim = spec.grid().dim();
  const auto report = verify_admissible(spec.w.truncated(std::max(spec.J, std::min(1, spec.w.levels()))));
  k.alpha = report.measured_alpha;
  k.alpha1 = report.measured_alpha1;
  k.alpha2 = report.measured_alpha2;
  k.weights_admissible = report.passes;
  k.p_minus = spec.p.p_minus();
  k.q_minus = spec.q.p_minus();
  const auto rq = spec.q.reciprocal();
  k.c_log_q_estimate = log_holder_estimate(spec.grid(), rq).c_log_local;
  k.c_log_q = c_log_override.value_or(k.c_log_q_estimate);
  if (k.c_log_q < 0.0) throw PreconditionError("c_log override must be non-negative");
  return k;
}

double maximal_threshold(Scale scale, const SpaceConstants& k) {
  if (scale == Scale::B) return k.alpha + k.dim / k.p_minus + k.c_log_q;
  return k.alpha + k.dim / std::min(k.p_minus, k.q_minus);
}

double norm_2l_threshold(Scale scale, const SpaceConstants& k) { return maximal_threshold(scale, k) + k.dim; }

double h2_kappa_threshold(Scale scale, const SpaceConstants& k) { return maximal_threshold(scale, k) + k.dim / 2.0; }

MaximalNorms quasi_norm_maximal(const GridFunction& f, const SpaceSpec& spec, double a, const SpaceConstants& k) {
  validate(spec);
  const double threshold = maximal_threshold(spec.scale, k);
  if (!(a > threshold)) {
    std::ostringstream msg;
    msg << "Peetre exponent a = " << a << " must exceed the threshold " << threshold;
    throw PreconditionError(msg.str());
  }
  const auto F = analysis_sequence(f, spec);
  MaximalNorms out;
  out.plain = mixed_norm(spec.scale, weighted_levels(F, spec.w, spec.J), spec.p, spec.q);
  auto star = peetre_maximal(F, a);
  for (int j = 0; j <= spec.J; ++j)
    for (std::size_t i = 0; i < star[j].size(); ++i) star[j][i] *= spec.w[j][i];
  out.maximal = mixed_norm(spec.scale, star, spec.p, spec.q);
  return out;
}

double quasi_norm_local_means(const GridFunction& f, const SpaceSpec& spec, const LocalMeansSystem& means,
                              const SpaceConstants& k) {
  validate(spec);
  if (!(2.0 * means.laplace_order() > k.alpha2)) {
    std::ostringstream msg;
    msg << "local means need 2 N > alpha2; N = " << means.laplace_order() << ", alpha2 = " << k.alpha2;
    throw PreconditionError(msg.str());
  }
  if (means.levels() < spec.J) throw PreconditionError("local means system has fewer than J + 1 levels");
  if (!(means.masks().front().grid() == spec.grid())) throw PreconditionError("local means live on another grid");
  const auto K = means.apply(f);
  auto levels = weighted_levels(K, spec.w, spec.J);
  const double head = norm(levels.front(), spec.p);
  if (spec.J == 0) return head;
  LevelMagnitudes tail(levels.begin() + 1, levels.end());
  return head + mixed_norm(spec.scale, tail, spec.p, spec.q);
}

EquivalenceReport make_equivalence_report(std::vector<std::string> names, std::vector<double> ratios,
                                          std::vector<double> ratios_refined, double drift_limit) {
  if (ratios.empty() || ratios.size() != ratios_refined.size() || names.size() != ratios.size())
    throw PreconditionError("equivalence report needs matching non-empty ratio lists");
  EquivalenceReport r;
  r.corpus_size = ratios.size();
  r.drift_limit = drift_limit;
  bool finite = true;
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    for (double v : {ratios[i], ratios_refined[i]})
      if (!(std::isfinite(v) && v > 0.0)) finite = false;
  }
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  const auto [lo2, hi2] = std::minmax_element(ratios_refined.begin(), ratios_refined.end());
  r.ratio_min = *lo;
  r.ratio_max = *hi;
  r.ratio_min_refined = *lo2;
  r.ratio_max_refined = *hi2;
  r.refinement_drift =
      finite ? std::abs(std::log(r.ratio_max / r.ratio_min) - std::log(r.ratio_max_refined / r.ratio_min_refined))
             : kInfinity;
  r.passes = finite && r.refinement_drift < drift_limit;
  r.names = std::move(names);
  r.ratios = std::move(ratios);
  r.ratios_refined = std::move(ratios_refined);
  return r;
}

}  // namespace varspace
