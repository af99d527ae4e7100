#include "varspace/checks.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "varspace/error.hpp"
#include "varspace/lebesgue.hpp"
#include "varspace/operators.hpp"

namespace varspace {

namespace {

Grid refined(const Grid& grid) { return Grid(grid.dim(), 2 * grid.n()); }

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::isfinite(x) ? std::max(m, x) : kInfinity;
  return m;
}

bool stable(double c, double c_refined) {
  return std::isfinite(c) && std::isfinite(c_refined) && c > 0.0 && c_refined > 0.0 &&
         std::abs(std::log(c_refined / c)) < 0.3;
}

SpaceSpec with_weights(SpaceSpec s, WeightSequence w) {
  s.w = std::move(w);
  return s;
}

std::vector<double> corpus_ratios(const std::vector<CorpusEntry>& corpus, const Grid& grid, const RatioSetup& setup) {
  const auto ratio = setup(grid);
  std::vector<double> out;
  out.reserve(corpus.size());
  for (const auto& e : corpus) out.push_back(ratio(GridFunction::from_function(grid, e.f)));
  return out;
}

}  // namespace

EquivalenceReport refinement_report(const std::vector<CorpusEntry>& corpus, const Grid& grid, const RatioSetup& setup,
                                    double drift_limit) {
  std::vector<std::string> names;
  for (const auto& e : corpus) names.push_back(e.name);
  auto coarse = corpus_ratios(corpus, grid, setup);
  auto fine = corpus_ratios(corpus, refined(grid), setup);
  return make_equivalence_report(std::move(names), std::move(coarse), std::move(fine), drift_limit);
}

EquivalenceReport pair_independence_check(const std::vector<CorpusEntry>& corpus, const Grid& grid,
                                          const SpecFactory& a, const SpecFactory& b) {
  return refinement_report(corpus, grid, [&](const Grid& g) {
    const SpaceSpec sa = a(g), sb = b(g);
    return std::function<double(const GridFunction&)>(
        [sa, sb](const GridFunction& f) { return quasi_norm(f, sa) / quasi_norm(f, sb); });
  });
}

EquivalenceReport lifting_check(const std::vector<CorpusEntry>& corpus, const Grid& grid, const SpecFactory& spec,
                                double sigma) {
  return refinement_report(corpus, grid, [&](const Grid& g) {
    const SpaceSpec s = spec(g);
    const SpaceSpec shifted = with_weights(s, s.w.shifted(sigma));
    return std::function<double(const GridFunction&)>([s, shifted, sigma](const GridFunction& f) {
      return quasi_norm(lift(f, sigma), shifted) / quasi_norm(f, s);
    });
  });
}

double lifting_round_trip_error(const std::vector<GridFunction>& functions, double sigma) {
  double worst = 0.0;
  for (const auto& f : functions) {
    const double scale = f.max_abs();
    if (scale == 0.0) continue;
    worst = std::max(worst, (lift(lift(f, sigma), -sigma) - f).max_abs() / scale);
  }
  return worst;
}

MaximalCheckReport maximal_check(const std::vector<CorpusEntry>& corpus, const Grid& grid, const SpecFactory& spec,
                                 double a_offset, std::optional<double> c_log_override) {
  MaximalCheckReport r;
  {
    const SpaceSpec s = spec(grid);
    r.threshold = maximal_threshold(s.scale, measure_constants(s, c_log_override));
    r.a = r.threshold + a_offset;
  }
  bool dominated = true;
  r.ratios = refinement_report(corpus, grid, [&](const Grid& g) {
    const SpaceSpec s = spec(g);
    const SpaceConstants k = measure_constants(s, c_log_override);
    const double a = r.a;
    return std::function<double(const GridFunction&)>([s, k, a, &dominated](const GridFunction& f) {
      const auto F = analysis_sequence(f, s);
      const auto star = peetre_maximal(F, a);
      for (std::size_t j = 0; j < star.size(); ++j) {
        const auto mag = F[j].magnitudes();
        for (std::size_t i = 0; i < mag.size(); ++i)
          if (star[j][i] < mag[i]) dominated = false;
      }
      const auto norms = quasi_norm_maximal(f, s, a, k);
      return norms.maximal / norms.plain;
    });
  });
  r.pointwise_domination = dominated;
  return r;
}

LocalMeansCheckReport local_means_check(const std::vector<CorpusEntry>& corpus, const Grid& grid,
                                        const SpecFactory& spec, int laplace_order) {
  LocalMeansCheckReport r;
  r.laplace_order = laplace_order;
  {
    const SpaceSpec s = spec(grid);
    r.alpha2 = measure_constants(s).alpha2;
    const auto kernel = default_local_means_kernel(grid.dim());
    const LocalMeansSystem means(grid, kernel, kernel, laplace_order, s.J);
    const auto K = means.apply(GridFunction::constant(grid, Complex{1.0, 0.0}));
    for (std::size_t j = 1; j < K.size(); ++j) r.constant_tail = std::max(r.constant_tail, K[j].max_abs());
  }
  r.ratios = refinement_report(corpus, grid, [&](const Grid& g) {
    const SpaceSpec s = spec(g);
    const SpaceConstants k = measure_constants(s);
    const auto kernel = default_local_means_kernel(g.dim());
    auto means = std::make_shared<LocalMeansSystem>(g, kernel, kernel, laplace_order, s.J);
    return std::function<double(const GridFunction&)>([s, k, means](const GridFunction& f) {
      return quasi_norm_local_means(f, s, *means, k) / quasi_norm(f, s);
    });
  });
  return r;
}

double weight_ratio_condition(const SpaceSpec& source, const SpaceSpec& target) {
  if (source.scale != target.scale) throw PreconditionError("embedding condition needs equal scales");
  if (!(source.grid() == target.grid())) throw PreconditionError("embedding condition needs equal grids");
  const int J = std::min(source.J, target.J);
  const Grid& g = source.grid();
  LevelMagnitudes ratio(J + 1, std::vector<double>(g.size()));
  for (int j = 0; j <= J; ++j)
    for (std::size_t i = 0; i < g.size(); ++i) ratio[j][i] = target.w[j][i] / source.w[j][i];
  const double inv_q0_plus = source.q.bounded() ? 1.0 / source.q.p_plus() : 0.0;
  const auto inv_q1 = target.q.reciprocal();
  std::vector<double> q_star(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double inv = std::max(0.0, inv_q1[i] - inv_q0_plus);
    q_star[i] = inv > 0.0 ? 1.0 / inv : kInfinity;
  }
  const VariableExponent qs(g, std::move(q_star));
  const auto p_inf = VariableExponent::constant(g, kInfinity);
  return source.scale == Scale::B ? lq_lp_norm(ratio, p_inf, qs) : lp_lq_norm(ratio, p_inf, qs);
}

std::vector<EmbeddingReport> embedding_checks(const std::vector<CorpusEntry>& corpus, const Grid& grid,
                                              const std::vector<EmbeddingVariant>& variants) {
  std::vector<EmbeddingReport> out;
  for (const auto& v : variants) {
    EmbeddingReport r;
    r.name = v.name;
    const SpaceSpec src = v.source(grid), tgt = v.target(grid);
    r.skipped_reason = v.precondition ? v.precondition(src, tgt) : std::string{};
    if (!r.skipped_reason.empty()) {
      out.push_back(std::move(r));
      continue;
    }
    r.evaluated = true;
    if (src.scale == tgt.scale) r.condition = weight_ratio_condition(src, tgt);
    if (v.bound) r.bound = v.bound(src, tgt, r.condition);
    const RatioSetup setup = [&](const Grid& g) {
      const SpaceSpec s = v.source(g), t = v.target(g);
      return std::function<double(const GridFunction&)>(
          [s, t](const GridFunction& f) { return quasi_norm(f, t) / quasi_norm(f, s); });
    };
    const auto coarse = corpus_ratios(corpus, grid, setup);
    const auto fine = corpus_ratios(corpus, refined(grid), setup);
    r.constant = max_of(coarse);
    r.constant_refined = max_of(fine);
    if (r.bound) {
      const double limit = *r.bound * (1.0 + 1e-9);
      for (const auto* list : {&coarse, &fine})
        for (double x : *list)
          if (!(x <= limit)) ++r.violations;
    }
    r.passes = stable(r.constant, r.constant_refined) && r.violations == 0;
    out.push_back(std::move(r));
  }
  return out;
}

EmbeddingVariant q_monotone_variant(const SpecFactory& spec, const std::function<VariableExponent(const Grid&)>& q1) {
  EmbeddingVariant v;
  v.name = "q-monotone";
  v.source = spec;
  v.target = [spec, q1](const Grid& g) {
    SpaceSpec s = spec(g);
    s.q = q1(g);
    return s;
  };
  v.precondition = [](const SpaceSpec& s, const SpaceSpec& t) {
    return pointwise_leq(s.q, t.q) ? std::string{} : std::string("q0 <= q1 fails at some lattice point");
  };
  v.bound = [](const SpaceSpec&, const SpaceSpec&, double) { return std::optional<double>(1.0); };
  return v;
}

std::vector<EmbeddingVariant> sandwich_variants(const SpecFactory& f_spec) {
  auto with = [f_spec](Scale scale, bool use_min) {
    return SpecFactory([f_spec, scale, use_min](const Grid& g) {
      SpaceSpec s = f_spec(g);
      s.scale = scale;
      s.q = use_min ? pointwise_min(s.p, s.q) : pointwise_max(s.p, s.q);
      return s;
    });
  };
  auto require_f = [](const SpaceSpec& s, const SpaceSpec& t) {
    const SpaceSpec& f = s.scale == Scale::F ? s : t;
    if (f.scale != Scale::F) return std::string("sandwich needs an F-scale spec");
    if (!f.p.bounded() || !f.q.bounded()) return std::string("sandwich needs p+, q+ < inf");
    return std::string{};
  };
  EmbeddingVariant left{"B(min{p,q}) -> F", with(Scale::B, true), f_spec, require_f, {}};
  EmbeddingVariant right{"F -> B(max{p,q})", f_spec, with(Scale::B, false), require_f, {}};
  return {left, right};
}

EmbeddingVariant weight_ratio_variant(const SpecFactory& source, const SpecFactory& target) {
  EmbeddingVariant v;
  v.name = "weight-ratio";
  v.source = source;
  v.target = target;
  v.precondition = [](const SpaceSpec& s, const SpaceSpec& t) {
    if (s.scale != t.scale) return std::string("source and target scales differ");
    if (s.J != t.J) return std::string("source and target truncations differ");
    if (!(s.system.profile == t.system.profile && s.system.kind == t.system.kind))
      return std::string("source and target systems differ");
    return std::string{};
  };
  // The Hoelder bound is exact only for constant q; variable q gets no asserted bound.
  v.bound = [](const SpaceSpec& s, const SpaceSpec& t, double condition) -> std::optional<double> {
    if (!s.q.is_constant() || !t.q.is_constant() || !std::isfinite(condition)) return std::nullopt;
    return condition;
  };
  return v;
}

SchwartzReport schwartz_embedding_checks(const std::vector<CorpusEntry>& bumps, const Grid& grid,
                                         const SpecFactory& spec, int order) {
  SchwartzReport r;
  r.order = order;
  {
    const SpaceSpec s = spec(grid);
    const SpaceConstants k = measure_constants(s);
    r.threshold = k.alpha + k.dim / k.p_minus;
    if (!(order > r.threshold)) {
      std::ostringstream msg;
      msg << "seminorm order N = " << order << " must exceed alpha + n/p- = " << r.threshold;
      throw PreconditionError(msg.str());
    }
  }
  auto measure = [&](const Grid& g, double& c, double& c_pair) {
    const SpaceSpec s = spec(g);
    SpaceSpec sb = s;
    sb.scale = Scale::B;
    sb.q = VariableExponent::constant(g, kInfinity);
    const int dim = g.dim();
    const auto psi = GridFunction::from_function(g, [dim](const Point& x) {
      double v = 1.0;
      for (int a = 0; a < dim; ++a) {
        double t = 0.0;
        for (int m = -1; m <= 1; ++m) {
          const double u = x[a] - 0.5 + m;
          t += std::exp(-u * u / (2.0 * 0.01));
        }
        v *= t;
      }
      return Complex{v, 0.0};
    });
    c = c_pair = 0.0;
    for (const auto& e : bumps) {
      const auto f = GridFunction::from_function(g, e.f);
      const auto levels = level_norms(f, s);
      c = std::max(c, *std::max_element(levels.begin(), levels.end()) / p_N_seminorm(f, order));
      GridFunction prod = f;
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] *= std::conj(psi[i]);
      c_pair = std::max(c_pair, std::abs(quadrature(prod)) / quasi_norm(f, sb));
    }
  };
  measure(grid, r.constant, r.pairing_constant);
  measure(refined(grid), r.constant_refined, r.pairing_constant_refined);
  r.passes = stable(r.constant, r.constant_refined) && stable(r.pairing_constant, r.pairing_constant_refined);
  return r;
}

MultiplierCheckReport multiplier_bound_check(const std::vector<CorpusEntry>& corpus, const Grid& grid,
                                             const SpecFactory& spec, const Symbol& m, MultiplierMode mode,
                                             double order, std::optional<double> c_log_override) {
  MultiplierCheckReport r;
  r.mode = mode;
  const SpaceSpec base = spec(grid);
  const SpaceConstants k = measure_constants(base, c_log_override);
  std::ostringstream detail;
  if (mode == MultiplierMode::norm_2l) {
    if (!(order >= 1.0 && order == std::floor(order))) throw PreconditionError("multiplier order l must be an integer >= 1");
    r.order = 2.0 * order;
    r.threshold = norm_2l_threshold(base.scale, k);
  } else {
    r.order = order;
    r.threshold = h2_kappa_threshold(base.scale, k);
  }
  if (!(r.order > r.threshold)) {
    std::ostringstream msg;
    msg << (mode == MultiplierMode::norm_2l ? "2l = " : "kappa = ") << r.order << " must exceed the threshold "
        << r.threshold;
    throw PreconditionError(msg.str());
  }
  if (mode == MultiplierMode::norm_2l) {
    const auto rep = multiplier_norm_2l(m, static_cast<int>(order), grid);
    r.M = rep.value;
    r.M_unbounded = rep.unbounded;
  } else {
    r.M = h2_kappa_norm(m, order, max_levels(refined(grid)));
    r.M_unbounded = !std::isfinite(r.M);
  }
  if (r.M_unbounded || !(r.M > 0.0)) {
    detail << "multiplier norm M = " << r.M << " is not a finite positive number";
    r.detail = detail.str();
    return r;
  }
  const double M = r.M;
  const RatioSetup setup = [&](const Grid& g) {
    const SpaceSpec s = spec(g);
    const SpectralMask mask = m.sample(g);
    return std::function<double(const GridFunction&)>([s, mask, M](const GridFunction& f) {
      return quasi_norm(apply_multiplier(f, mask), s) / (M * quasi_norm(f, s));
    });
  };
  r.ratios = corpus_ratios(corpus, grid, setup);
  const auto fine = corpus_ratios(corpus, refined(grid), setup);
  r.constant = max_of(r.ratios);
  r.constant_refined = max_of(fine);
  const double limit = r.constant * std::exp(0.3);
  for (double x : fine)
    if (!(x <= limit)) ++r.violations;
  r.passes = std::isfinite(r.constant) && r.violations == 0 && stable(r.constant, r.constant_refined);
  detail << "C = " << r.constant << ", C(2N) = " << r.constant_refined << ", M = " << r.M;
  r.detail = detail.str();
  return r;
}

EquivalenceReport differentiation_check(const std::vector<CorpusEntry>& corpus, const Grid& grid,
                                        const SpecFactory& spec, const MultiIndex& gamma) {
  const int order = gamma[0] + gamma[1];
  return refinement_report(corpus, grid, [&](const Grid& g) {
    const SpaceSpec s = spec(g);
    const SpaceSpec source = with_weights(s, s.w.shifted(-order));
    return std::function<double(const GridFunction&)>([s, source, gamma](const GridFunction& f) {
      return quasi_norm(spectral_derivative(f, gamma), s) / quasi_norm(f, source);
    });
  });
}

EquivalenceReport derivative_sum_check(const std::vector<CorpusEntry>& corpus, const Grid& grid,
                                     const SpecFactory& spec, int kappa) {
  if (kappa < 0) throw PreconditionError("kappa must be >= 0");
  return refinement_report(corpus, grid, [&](const Grid& g) {
    const SpaceSpec s = spec(g);
    const SpaceSpec target = with_weights(s, s.w.shifted(kappa));
    return std::function<double(const GridFunction&)>([s, target, kappa](const GridFunction& f) {
      double sum = 0.0;
      for (int g1 = 0; g1 <= kappa; ++g1)
        for (int g2 = 0; g1 + g2 <= kappa; ++g2) {
          if (s.grid().dim() == 1 && g2 > 0) break;
          sum += quasi_norm(spectral_derivative(f, MultiIndex{g1, g2}), target);
        }
      return sum / quasi_norm(f, s);
    });
  });
}

QuasiTriangleReport quasi_triangle_constant(const std::vector<GridFunction>& functions, const SpaceSpec& spec) {
  QuasiTriangleReport r;
  const double m = std::min({spec.p.p_minus(), spec.q.p_minus(), 1.0});
  r.reference = std::max(1.0, std::exp2(1.0 / m - 1.0));
  r.measured = 0.0;
  for (std::size_t i = 0; i + 1 < functions.size(); ++i) {
    const double a = quasi_norm(functions[i], spec), b = quasi_norm(functions[i + 1], spec);
    if (a + b == 0.0) continue;
    r.measured = std::max(r.measured, quasi_norm(functions[i] + functions[i + 1], spec) / (a + b));
  }
  return r;
}

}  // namespace varspace
