#include "varspace_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "varspace/checks.hpp"
#include "varspace/corpus.hpp"
#include "varspace/lebesgue.hpp"
#include "varspace/mixed.hpp"
#include "varspace/operators.hpp"
#include "varspace/profiles.hpp"
#include "varspace/systems.hpp"
#include "varspace/weights.hpp"
#include "varspace_cli/signal_io.hpp"

namespace varspace::cli {

namespace {

std::string num(double v) { return format_double(v); }

class Report {
 public:
  void line(const std::string& s) { text_ << s << '\n'; }
  void check(bool pass, const std::string& name, const std::string& detail) {
    text_ << (pass ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    if (!pass) ++failures_;
  }
  int failures() const noexcept { return failures_; }
  std::string str() const { return text_.str(); }

 private:
  std::ostringstream text_;
  int failures_ = 0;
};

void write_file(const std::string& dir, const std::string& name, const std::string& content) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw InputError("write to '" + path.string() + "' failed");
}

std::string equivalence_csv(const EquivalenceReport& r) {
  std::string csv = "function,ratio_N,ratio_2N\n";
  for (std::size_t i = 0; i < r.corpus_size; ++i)
    csv += r.names[i] + "," + num(r.ratios[i]) + "," + num(r.ratios_refined[i]) + "\n";
  return csv;
}

std::string equivalence_summary(const EquivalenceReport& r) {
  return "ratios [" + num(r.ratio_min) + ", " + num(r.ratio_max) + "] at N, [" + num(r.ratio_min_refined) + ", " +
         num(r.ratio_max_refined) + "] at 2N, drift " + num(r.refinement_drift) + " (limit " + num(r.drift_limit) +
         "), corpus " + std::to_string(r.corpus_size);
}

void echo_thresholds(Report& rep, const SpaceSpec& spec, const SpaceConstants& k) {
  rep.line("measured alpha = " + num(k.alpha) + ", alpha1 = " + num(k.alpha1) + ", alpha2 = " + num(k.alpha2));
  rep.line("p- = " + num(k.p_minus) + ", q- = " + num(k.q_minus) + ", c_log(1/q) estimate = " +
           num(k.c_log_q_estimate) + ", used = " + num(k.c_log_q));
  rep.line("threshold a > " + num(maximal_threshold(spec.scale, k)));
  rep.line("threshold 2l > " + num(norm_2l_threshold(spec.scale, k)));
  rep.line("threshold kappa > " + num(h2_kappa_threshold(spec.scale, k)));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(g_()); }

 private:
  std::mt19937_64 g_;
};

VariableExponent random_exponent(const Grid& g, Rng& rng, double lo, double hi) {
  const double k = std::floor(rng.uniform(1.0, 4.0)), phase = rng.uniform(0.0, 2.0 * kPi);
  const double a = rng.uniform(lo, hi), b = rng.uniform(lo, hi);
  const double mn = std::min(a, b), mx = std::max(a, b);
  return VariableExponent::from_function(g, [=](const Point& x) {
    return mn + (mx - mn) * (0.5 + 0.5 * std::sin(2.0 * kPi * (k * x[0] + x[1]) + phase));
  });
}

std::vector<double> random_magnitudes(const Grid& g, Rng& rng) {
  const double scale = std::exp(rng.uniform(-3.0, 3.0));
  std::vector<double> v(g.size());
  for (auto& x : v) x = scale * rng.uniform(0.0, 1.0);
  return v;
}

GridFunction random_signal(const Grid& g, Rng& rng) {
  const auto m = random_magnitudes(g, rng);
  std::vector<Complex> z(g.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = {m[i] * (rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0), 0.0};
  return GridFunction(g, std::move(z));
}

LevelMagnitudes random_levels(const Grid& g, Rng& rng, int J) {
  LevelMagnitudes F;
  for (int j = 0; j <= J; ++j) F.push_back(random_magnitudes(g, rng));
  return F;
}

// ---------------------------------------------------------------------------

void suite_lebesgue(const RunConfig& c, Report& rep) {
  const Grid g = base_grid(c);
  Rng rng(c.seed);
  double worst_unit = 0.0, worst_sandwich = 0.0;
  bool unit_ok = true, sandwich_ok = true;
  for (int t = 0; t < 50; ++t) {
    const auto p = random_exponent(g, rng, 0.5, 8.0);
    const auto a = random_magnitudes(g, rng);
    const double nv = norm(a, p);
    std::vector<double> u(a);
    for (auto& x : u) x /= nv;
    const double m = modular(u, p).value;
    worst_unit = std::max(worst_unit, std::abs(1.0 - m));
    unit_ok = unit_ok && m <= 1.0 && m >= 1.0 - 1e-8;
    const auto b = sandwich_bounds(modular(a, p).value, p.p_minus(), p.p_plus());
    const double rel = std::max(b.lower / nv - 1.0, nv / b.upper - 1.0);
    worst_sandwich = std::max(worst_sandwich, rel);
    sandwich_ok = sandwich_ok && rel <= 1e-9;
  }
  rep.check(unit_ok, "lebesgue.unit_ball", "max |1 - modular(f/norm)| = " + num(worst_unit) + " over 50 instances");
  rep.check(sandwich_ok, "lebesgue.sandwich", "max relative excess = " + num(worst_sandwich));

  std::size_t violations = 0;
  double worst_ratio = 0.0;
  for (int t = 0; t < 50; ++t) {
    const auto p = random_exponent(g, rng, 1.0, 8.0);
    const auto h = holder_pairing(random_signal(g, rng), random_signal(g, rng), p);
    worst_ratio = std::max(worst_ratio, h.lhs / h.rhs);
    if (!(h.lhs <= h.rhs)) ++violations;
  }
  rep.check(violations == 0, "lebesgue.holder",
            std::to_string(violations) + " violations of ||fg||_1 <= 2 ||f||_p ||g||_p' (max ratio " +
                num(worst_ratio) + ")");

  const VariableExponent p(g, field_sampler(c.p, g)(g));
  const double one = norm(GridFunction::constant(g, Complex{1.0, 0.0}), p);
  rep.check(std::abs(one - 1.0) <= 1e-12, "lebesgue.norm_of_one", "||1 | L_p|| = " + num(one));
  const auto ch = characteristic_norm_check(p, 0.125);
  rep.check(std::isfinite(ch.ratio_max) && ch.ratio_min > 0.0, "lebesgue.characteristic_cubes",
            "||chi_Q|| / |Q|^{1/p(x_Q)} in [" + num(ch.ratio_min) + ", " + num(ch.ratio_max) + "] over " +
                std::to_string(ch.cubes) + " cubes");
}

void suite_mixed(const RunConfig& c, Report& rep) {
  const Grid g = base_grid(c);
  Rng rng(c.seed + 1);
  const VariableExponent p(g, field_sampler(c.p, g)(g));
  const VariableExponent q(g, field_sampler(c.q, g)(g));

  double worst = 0.0;
  for (double qc : {1.0, 2.0, kInfinity}) {
    const auto qv = VariableExponent::constant(g, qc);
    for (int t = 0; t < 10; ++t) {
      const auto F = random_levels(g, rng, 6);
      double direct = 0.0;
      for (const auto& level : F) {
        const double nv = norm(level, p);
        direct = std::isinf(qc) ? std::max(direct, nv) : direct + std::pow(nv, qc);
      }
      if (!std::isinf(qc)) direct = std::pow(direct, 1.0 / qc);
      const double v = lq_lp_norm(F, p, qv);
      worst = std::max(worst, std::abs(v - direct) / direct);
    }
  }
  rep.check(worst <= 1e-8, "mixed.iterated_identity", "max relative gap = " + num(worst) + " for q in {1, 2, inf}");

  if (q.bounded()) {
    double gap = 0.0;
    for (int t = 0; t < 10; ++t) {
      const auto F = scaled(random_levels(g, rng, 4), 0.3);
      const double a = lq_lp_modular(F, p, q), b = lq_lp_modular_direct(F, p, q);
      gap = std::max(gap, std::abs(a - b) / std::max(b, 1e-300));
    }
    rep.check(gap <= 1e-9, "mixed.modular_routes", "max relative gap between the two routes = " + num(gap));
  }

  bool monotone_ok = true;
  double worst_c = 0.0;
  std::vector<double> shifted_q(q.values().begin(), q.values().end());
  for (auto& v : shifted_q) v += 0.5;
  const VariableExponent q1(g, std::move(shifted_q));
  for (int t = 0; t < 10; ++t) {
    const auto r = embedding_sandwich_check(random_levels(g, rng, 5), p, q, q1);
    worst_c = std::max({worst_c, r.c_lp_lq, r.c_lq_lp});
    monotone_ok = monotone_ok && r.c_lp_lq <= 1.0 + 1e-9 && r.c_lq_lp <= 1.0 + 1e-9;
  }
  rep.check(monotone_ok, "mixed.q_monotone", "max measured C = " + num(worst_c) + " for q -> q + 1/2");

  for (double delta : {0.5, 1.0, 2.0}) {
    FunctionSequence seq(g);
    for (const auto& level : random_levels(g, rng, 5)) seq.push_back(GridFunction::from_real(g, level));
    const auto r = convolution_inequality_checks(seq, p, q, delta, g.dim() + 1.0);
    if (r.minkowski_bound_applies)
      rep.check(r.smoothing_lp_lq.ratio <= r.minkowski_bound, "mixed.smoothing_minkowski(delta=" + num(delta) + ")",
                "ratio " + num(r.smoothing_lp_lq.ratio) + " <= " + num(r.minkowski_bound));
    if (r.modular_bound_applies)
      rep.check(r.modular_bound_value <= 1.0, "mixed.smoothing_modular(delta=" + num(delta) + ")",
                "modular " + num(r.modular_bound_value) + " <= 1");
    rep.check(std::isfinite(r.smoothing_lp_lq.ratio) && std::isfinite(r.smoothing_lq_lp.ratio),
              "mixed.smoothing_finite(delta=" + num(delta) + ")",
              "L_p(l_q) ratio " + num(r.smoothing_lp_lq.ratio) + ", l_q(L_p) ratio " + num(r.smoothing_lq_lp.ratio));
  }
}

void suite_weights(const RunConfig& c, Report& rep) {
  const Grid g = base_grid(c);
  const SpaceSpec spec = make_spec_factory(c, c.system)(g);
  const auto r = verify_admissible(spec.w);
  rep.check(r.passes, "weights.configured(" + c.weight + ")",
            "alpha " + num(r.measured_alpha) + ", alpha1 " + num(r.measured_alpha1) + ", alpha2 " +
                num(r.measured_alpha2) + ", c " + num(r.measured_c) + (r.exhaustive ? " (exhaustive)" : " (sampled)") +
                (r.witness.empty() ? "" : "; " + r.witness));
  const auto shifted = spec.w.shifted(c.sigma);
  const auto rs = verify_admissible(shifted);
  const bool exact_shift = shifted.declared().alpha1 == spec.w.declared().alpha1 - c.sigma &&
                           shifted.declared().alpha2 == spec.w.declared().alpha2 - c.sigma;
  rep.check(rs.passes && exact_shift, "weights.shifted(sigma=" + num(c.sigma) + ")",
            "class (" + num(shifted.declared().alpha) + ", " + num(shifted.declared().alpha1) + ", " +
                num(shifted.declared().alpha2) + ")" + (rs.witness.empty() ? "" : "; " + rs.witness));
  const int J = spec.J;
  std::vector<double> s(g.size()), rho(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Point x = g.point(i);
    s[i] = 0.5 + 0.25 * std::cos(2.0 * kPi * x[0]);
    rho[i] = 1.0 + 0.25 * std::sin(2.0 * kPi * x[0]);
  }
  std::vector<double> sigma;
  for (int j = 0; j <= J; ++j) sigma.push_back(std::exp2(0.5 * j) * (1.0 + j));
  const std::vector<std::pair<std::string, WeightSequence>> families = {
      {"varsmooth", make_variable_smoothness(g, s, J)},
      {"2microlocal", make_2microlocal(g, 1.0, -0.5, {Point{0.5, 0.5}}, J)},
      {"generalized", make_generalized(g, sigma)},
      {"weighted", make_weighted(g, rho, 1.0, 2.0, J)}};
  for (const auto& [name, w] : families) {
    const auto fr = verify_admissible(w);
    rep.check(fr.passes, "weights.family(" + name + ")",
              "alpha " + num(fr.measured_alpha) + ", alpha1 " + num(fr.measured_alpha1) + ", alpha2 " +
                  num(fr.measured_alpha2) + (fr.witness.empty() ? "" : "; " + fr.witness));
  }
}

void suite_analysis(const RunConfig& c, Report& rep) {
  const Grid g = base_grid(c);
  const int J = c.levels.value_or(max_levels(g));
  std::vector<std::pair<std::string, AnalysisSystem>> systems;
  for (const auto& name : admissible_profile_names()) systems.emplace_back("pair(" + name + ")", build_admissible_pair(name, g, J));
  systems.emplace_back("theta_partition", build_theta_partition(g, J));
  systems.emplace_back("lambda_cover", build_lambda_cover(g, J));
  systems.emplace_back("general_pair", build_general_pair(g, J, 1.0, 1.5, 2));
  for (const auto& [name, sys] : systems) {
    const auto a = audit_system(sys);
    rep.check(a.passes, "analysis.audit." + name,
              "lower bound " + num(a.lower_bound) + ", support violation " + num(a.support_violation) +
                  ", partition error " + num(a.partition_error) + (a.detail.empty() ? "" : "; " + a.detail));
  }
  Rng rng(c.seed + 2);
  const auto f = random_signal(g, rng);
  const auto F = littlewood_paley(f, systems.front().second);
  const auto star = peetre_maximal(F, 2.0);
  bool dominated = true;
  for (std::size_t j = 0; j < F.size(); ++j) {
    const auto mag = F[j].magnitudes();
    for (std::size_t i = 0; i < mag.size(); ++i) dominated = dominated && star[j][i] >= mag[i];
  }
  rep.check(dominated, "analysis.peetre_domination", "(psi_j^* f)_a >= |psi_j * f| at every lattice point");
  const auto kernel = default_local_means_kernel(g.dim());
  const LocalMeansSystem means(g, kernel, kernel, c.laplace, J);
  const auto K = means.apply(GridFunction::constant(g, Complex{1.0, 0.0}));
  double tail = 0.0;
  for (std::size_t j = 1; j < K.size(); ++j) tail = std::max(tail, K[j].max_abs());
  rep.check(tail <= 1e-10, "analysis.local_means_moments", "max_{j>=1} |k^N(2^-j, 1)| = " + num(tail));
  const double rt = lifting_round_trip_error({f}, c.sigma);
  rep.check(rt <= 1e-9, "analysis.lift_round_trip", "max |I_-s I_s f - f| / max|f| = " + num(rt));
}

void suite_spaces(const RunConfig& c, Report& rep) {
  const Grid g = base_grid(c);
  const SpecFactory factory = make_spec_factory(c, c.system);
  const SpaceSpec spec = factory(g);
  const SpaceConstants k = measure_constants(spec, c.c_log);
  echo_thresholds(rep, spec, k);
  const auto corpus = standard_corpus(g.dim());
  const auto functions = sample_corpus(corpus, g);

  double scaling = 0.0;
  for (std::size_t i = 0; i < 5; ++i)
    scaling = std::max(scaling, std::abs(quasi_norm(3.0 * functions[i], spec) / (3.0 * quasi_norm(functions[i], spec)) - 1.0));
  rep.check(scaling <= 1e-9, "spaces.scaling", "max |q(3f) / (3 q(f)) - 1| = " + num(scaling));

  if (spec.p.bounded()) {
    SpaceSpec b = spec, f = spec;
    b.scale = Scale::B;
    f.scale = Scale::F;
    b.q = f.q = spec.p;
    double gap = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
      const double vb = quasi_norm(functions[i], b), vf = quasi_norm(functions[i], f);
      gap = std::max(gap, std::abs(vb - vf) / vf);
    }
    rep.check(gap <= 1e-8, "spaces.B_equals_F_when_q_is_p", "max relative gap = " + num(gap));
  }

  if (spec.scale == Scale::F || spec.q.is_constant()) {
    bool monotone = true;
    for (std::size_t i = 0; i < 5; ++i) {
      double prev = 0.0;
      for (int J = 0; J <= spec.J; ++J) {
        SpaceSpec s = spec;
        s.J = J;
        const double v = quasi_norm(functions[i], s);
        monotone = monotone && v >= prev;
        prev = v;
      }
    }
    rep.check(monotone, "spaces.monotone_truncation", "quasi_norm non-decreasing in J");
  }

  const auto pairs = pair_independence_check(corpus, g, factory, make_spec_factory(c, c.system2));
  rep.check(pairs.passes, "spaces.pair_independence(" + c.system + " vs " + c.system2 + ")", equivalence_summary(pairs));

  const auto lift = lifting_check(corpus, g, factory, c.sigma);
  rep.check(lift.passes, "spaces.lifting(sigma=" + num(c.sigma) + ")", equivalence_summary(lift));

  RunConfig classical = c;
  classical.p = classical.q = "2";
  classical.weight = "varsmooth:1";
  const SpecFactory cf = make_spec_factory(classical, c.system);
  const SpaceSpec cs = cf(g);
  double parseval = 0.0;
  for (std::size_t i = 0; i < 10; ++i) {
    const auto levels = level_norms(functions[i], cs);
    double sum = 0.0;
    for (double v : levels) sum += v * v;
    const double qn = quasi_norm(functions[i], cs);
    parseval = std::max(parseval, std::abs(qn * qn - sum) / sum);
  }
  rep.check(parseval <= 1e-10, "spaces.classical_parseval", "max relative gap = " + num(parseval));
  const auto sob = refinement_report(
      corpus, g,
      [&](const Grid& grid) {
        const SpaceSpec s = cf(grid);
        return std::function<double(const GridFunction&)>(
            [s](const GridFunction& f) { return quasi_norm(f, s) / bessel_potential_norm(f, 1.0); });
      },
      0.1);
  rep.check(sob.passes, "spaces.classical_sobolev_ratio", equivalence_summary(sob));

  const auto tri = quasi_triangle_constant(std::vector<GridFunction>(functions.begin(), functions.begin() + 10), spec);
  rep.line("quasi-triangle constant measured " + num(tri.measured) + ", reference " + num(tri.reference));
}

// ---------------------------------------------------------------------------

struct Outputs {
  std::string csv_name;
  std::string csv;
};

int finish(const RunConfig& c, Report& rep, const Outputs& o, std::ostream& out) {
  rep.line(rep.failures() == 0 ? "RESULT PASS" : "RESULT FAIL (" + std::to_string(rep.failures()) + " failed)");
  out << rep.str();
  if (!c.out.empty()) {
    write_file(c.out, "report.txt", rep.str());
    if (!o.csv_name.empty()) write_file(c.out, o.csv_name, o.csv);
  }
  return rep.failures() == 0 ? kExitPass : kExitFailure;
}

void header(Report& rep, const std::string& command, const RunConfig& c) {
  rep.line("command = " + command);
  std::istringstream in(describe(c));
  std::string l;
  while (std::getline(in, l)) rep.line(l);
}

int cmd_norm(const RunConfig& c, std::ostream& out) {
  if (c.signal.empty()) throw ConfigError("norm needs --signal");
  Report rep;
  header(rep, "norm", c);
  const Grid g = base_grid(c);
  const SpaceSpec spec = make_spec_factory(c, c.system)(g);
  const double v = quasi_norm(load_signal(c.signal, g), spec);
  rep.line("quasi_norm = " + num(v));
  return finish(c, rep, {}, out);
}

int cmd_analyze(const RunConfig& c, std::ostream& out) {
  if (c.signal.empty()) throw ConfigError("analyze needs --signal");
  Report rep;
  header(rep, "analyze", c);
  const Grid g = base_grid(c);
  const SpaceSpec spec = make_spec_factory(c, c.system)(g);
  const auto levels = level_norms(load_signal(c.signal, g), spec);
  std::string csv = "j,level_norm\n";
  for (std::size_t j = 0; j < levels.size(); ++j) csv += std::to_string(j) + "," + num(levels[j]) + "\n";
  if (c.out.empty()) rep.line(csv.substr(0, csv.size() - 1));
  return finish(c, rep, {"analyze.csv", csv}, out);
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  Report rep;
  header(rep, "verify", c);
  const bool all = c.suite == "all";
  if (all || c.suite == "lebesgue") suite_lebesgue(c, rep);
  if (all || c.suite == "mixed") suite_mixed(c, rep);
  if (all || c.suite == "weights") suite_weights(c, rep);
  if (all || c.suite == "analysis") suite_analysis(c, rep);
  if (all || c.suite == "spaces") suite_spaces(c, rep);
  return finish(c, rep, {}, out);
}

int cmd_compare_pairs(const RunConfig& c, std::ostream& out) {
  Report rep;
  header(rep, "compare-pairs", c);
  const Grid g = base_grid(c);
  const auto r =
      pair_independence_check(standard_corpus(g.dim()), g, make_spec_factory(c, c.system), make_spec_factory(c, c.system2));
  rep.check(r.passes, "pair_independence(" + c.system + " vs " + c.system2 + ")", equivalence_summary(r));
  return finish(c, rep, {"compare_pairs.csv", equivalence_csv(r)}, out);
}

int cmd_lift_check(const RunConfig& c, std::ostream& out) {
  Report rep;
  header(rep, "lift-check", c);
  const Grid g = base_grid(c);
  const SpecFactory factory = make_spec_factory(c, c.system);
  const auto corpus = standard_corpus(g.dim());
  const auto r = lifting_check(corpus, g, factory, c.sigma);
  rep.check(r.passes, "lifting(sigma=" + num(c.sigma) + ")", equivalence_summary(r));
  const double rt = lifting_round_trip_error(sample_corpus(corpus, g), c.sigma);
  rep.check(rt <= 1e-9, "lifting_round_trip", "max relative error " + num(rt));
  const SpaceSpec spec = factory(g);
  const auto shifted = spec.w.shifted(c.sigma);
  const auto a = verify_admissible(shifted);
  rep.check(a.passes, "shifted_weight_class",
            "declared (" + num(shifted.declared().alpha) + ", " + num(shifted.declared().alpha1) + ", " +
                num(shifted.declared().alpha2) + "), measured alpha1 " + num(a.measured_alpha1) + ", alpha2 " +
                num(a.measured_alpha2));
  return finish(c, rep, {"lift_check.csv", equivalence_csv(r)}, out);
}

int cmd_multiplier_check(const RunConfig& c, std::ostream& out) {
  Report rep;
  header(rep, "multiplier-check", c);
  rep.line("symbol = " + c.symbol);
  rep.line("mode = " + c.mode);
  const Grid g = base_grid(c);
  const SpecFactory factory = make_spec_factory(c, c.system);
  const SpaceSpec spec = factory(g);
  const SpaceConstants k = measure_constants(spec, c.c_log);
  echo_thresholds(rep, spec, k);
  const MultiplierMode mode = c.mode == "h2kappa" ? MultiplierMode::h2kappa : MultiplierMode::norm_2l;
  double order = 0.0;
  if (c.order) {
    order = *c.order;
  } else if (mode == MultiplierMode::norm_2l) {
    order = std::floor(norm_2l_threshold(spec.scale, k) / 2.0) + 1.0;
  } else {
    order = std::floor(h2_kappa_threshold(spec.scale, k)) + 1.0;
  }
  const auto corpus = standard_corpus(g.dim());
  const auto r = multiplier_bound_check(corpus, g, factory, make_symbol(c), mode, order, c.c_log);
  rep.line(std::string(mode == MultiplierMode::norm_2l ? "2l = " : "kappa = ") + num(r.order) + " > " +
           num(r.threshold));
  rep.check(r.passes, "multiplier_bound", r.detail + ", violations " + std::to_string(r.violations));
  std::string csv = "function,ratio\n";
  for (std::size_t i = 0; i < r.ratios.size(); ++i) csv += corpus[i].name + "," + num(r.ratios[i]) + "\n";
  return finish(c, rep, {"multiplier_check.csv", csv}, out);
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"norm",          "analyze",    "verify",
                                                 "compare-pairs", "lift-check", "multiplier-check"};
  return names;
}

int run_command(const std::string& name, const RunConfig& c, std::ostream& out) {
  if (name == "norm") return cmd_norm(c, out);
  if (name == "analyze") return cmd_analyze(c, out);
  if (name == "verify") return cmd_verify(c, out);
  if (name == "compare-pairs") return cmd_compare_pairs(c, out);
  if (name == "lift-check") return cmd_lift_check(c, out);
  if (name == "multiplier-check") return cmd_multiplier_check(c, out);
  throw ConfigError("unknown command '" + name + "'");
}

}  // namespace varspace::cli
