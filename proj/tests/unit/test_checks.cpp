#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"
#include "varspace/checks.hpp"
#include "varspace/error.hpp"

namespace varspace {
namespace {

using testing::relative_error;

SpecFactory factory(Scale scale, double p, double q, double s, int J, std::string profile = "partition") {
  return [=](const Grid& g) {
    return SpaceSpec{scale, VariableExponent::constant(g, p), VariableExponent::constant(g, q),
                     make_variable_smoothness(g, std::vector<double>(g.size(), s), J),
                     build_admissible_pair(profile, g, J), J};
  };
}

std::vector<CorpusEntry> head(std::vector<CorpusEntry> c, std::size_t n) {
  c.resize(std::min(n, c.size()));
  return c;
}

std::vector<CorpusEntry> single_modes(std::initializer_list<int> ks) {
  std::vector<CorpusEntry> out;
  for (int k : ks)
    out.push_back({"mode " + std::to_string(k), [k](const Point& x) { return std::polar(1.0, 2 * kPi * k * x[0]); }});
  return out;
}

TEST(PairIndependence, IdenticalSystemsGiveOne) {
  const auto corpus = head(standard_corpus(1), 6);
  const auto r = pair_independence_check(corpus, Grid(1, 64), factory(Scale::F, 2.0, 1.5, 0.5, 5),
                                         factory(Scale::F, 2.0, 1.5, 0.5, 5));
  EXPECT_TRUE(r.passes);
  for (double v : r.ratios) EXPECT_EQ(v, 1.0);
  EXPECT_EQ(r.refinement_drift, 0.0);
}

TEST(PairIndependence, TwoProfilesStayComparable) {
  const auto corpus = head(standard_corpus(1), 8);
  const auto r = pair_independence_check(corpus, Grid(1, 128), factory(Scale::B, 2.0, 2.0, 0.5, 6, "partition"),
                                         factory(Scale::B, 2.0, 2.0, 0.5, 6, "logbump"));
  EXPECT_TRUE(r.passes) << r.refinement_drift;
  EXPECT_GT(r.ratio_min, 0.1);
  EXPECT_LT(r.ratio_max, 10.0);
}

TEST(Lifting, ZeroShiftIsIdentity) {
  const auto r = lifting_check(head(standard_corpus(1), 5), Grid(1, 64), factory(Scale::B, 2.0, 2.0, 1.0, 5), 0.0);
  for (double v : r.ratios) EXPECT_NEAR(v, 1.0, 1e-12);
}

TEST(Lifting, SingleModeRatiosLieInTheAnnulusBounds) {
  // Each active level j >= 1 has 2^{j-1} <= |xi0| <= 2^{j+1}, so (1 + |xi0|^2)^{1/2} / 2^j lies in [1/2, sqrt(4.25)].
  const auto r = lifting_check(single_modes({1, 3, 9, 20, 33}), Grid(1, 128), factory(Scale::B, 2.0, 2.0, 0.5, 6), 1.0);
  EXPECT_TRUE(r.passes);
  for (const auto* list : {&r.ratios, &r.ratios_refined})
    for (double v : *list) {
      EXPECT_GE(v, 0.5);
      EXPECT_LE(v, std::sqrt(4.25));
    }
}

TEST(Lifting, RoundTripIsExact) {
  const auto functions = sample_corpus(standard_corpus(1), Grid(1, 256));
  for (double sigma : {-2.0, 1.0, 0.5}) EXPECT_LE(lifting_round_trip_error(functions, sigma), 1e-9);
}

TEST(Maximal, ReportDominatesAndIsStable) {
  const auto r = maximal_check(head(standard_corpus(1), 5), Grid(1, 64), factory(Scale::F, 2.0, 2.0, 0.5, 5));
  EXPECT_NEAR(r.a, r.threshold + 1.0, 1e-15);
  EXPECT_TRUE(r.pointwise_domination);
  EXPECT_GE(r.ratios.ratio_min, 1.0);
  EXPECT_TRUE(r.ratios.passes) << r.ratios.refinement_drift;
}

TEST(LocalMeans, ConstantTailVanishes) {
  const auto r = local_means_check(head(standard_corpus(1), 5), Grid(1, 64), factory(Scale::B, 2.0, 2.0, 0.5, 5), 1);
  EXPECT_EQ(r.laplace_order, 1);
  EXPECT_NEAR(r.alpha2, 0.5, 1e-12);
  EXPECT_LE(r.constant_tail, 1e-10);
  EXPECT_TRUE(r.ratios.passes) << r.ratios.refinement_drift;
}

TEST(Embedding, EqualQGivesConstantOne) {
  const SpecFactory spec = factory(Scale::B, 2.0, 1.5, 0.5, 5);
  const auto reports = embedding_checks(head(standard_corpus(1), 5), Grid(1, 64),
                                        {q_monotone_variant(spec, [](const Grid& g) {
                                          return VariableExponent::constant(g, 1.5);
                                        })});
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_TRUE(reports[0].evaluated);
  EXPECT_NEAR(reports[0].constant, 1.0, 1e-12);
  EXPECT_TRUE(reports[0].passes);
}

TEST(Embedding, LargerQNeverIncreasesTheNorm) {
  const SpecFactory spec = factory(Scale::F, 2.0, 1.2, 0.5, 5);
  const auto reports = embedding_checks(head(standard_corpus(1), 8), Grid(1, 64),
                                        {q_monotone_variant(spec, [](const Grid& g) {
                                          return testing::smooth_exponent(g, 1.5, 3.0, 0.0);
                                        })});
  EXPECT_EQ(reports[0].violations, 0u);
  EXPECT_LE(reports[0].constant, 1.0 + 1e-9);
  EXPECT_TRUE(reports[0].passes);
}

TEST(Embedding, PreconditionFailureIsSkipped) {
  const SpecFactory spec = factory(Scale::B, 2.0, 3.0, 0.5, 5);
  const auto reports = embedding_checks(head(standard_corpus(1), 2), Grid(1, 64),
                                        {q_monotone_variant(spec, [](const Grid& g) {
                                          return VariableExponent::constant(g, 2.0);
                                        })});
  EXPECT_FALSE(reports[0].evaluated);
  EXPECT_FALSE(reports[0].skipped_reason.empty());
}

TEST(Embedding, SandwichVariantsAreEvaluated) {
  const SpecFactory f_spec = [](const Grid& g) {
    return SpaceSpec{Scale::F, testing::smooth_exponent(g, 1.5, 3.0, 0.0), testing::smooth_exponent(g, 1.2, 4.0, 0.4),
                     make_variable_smoothness(g, std::vector<double>(g.size(), 0.5), 5),
                     build_admissible_pair("partition", g, 5), 5};
  };
  const auto reports = embedding_checks(head(standard_corpus(1), 6), Grid(1, 64), sandwich_variants(f_spec));
  ASSERT_EQ(reports.size(), 2u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.evaluated) << r.name;
    EXPECT_FALSE(r.bound.has_value());
    EXPECT_TRUE(r.passes) << r.name << " C = " << r.constant << " C(2N) = " << r.constant_refined;
  }
}

TEST(Embedding, WeightRatioConditionForPowerWeights) {
  // v_j / w_j = 2^{-j/2} with q0 = q1 = 2 gives q* = inf, so the condition is sup_j 2^{-j/2} = 1.
  const Grid g(1, 64);
  const SpaceSpec src = factory(Scale::B, 2.0, 2.0, 1.0, 5)(g);
  const SpaceSpec tgt = factory(Scale::B, 2.0, 2.0, 0.5, 5)(g);
  EXPECT_NEAR(weight_ratio_condition(src, tgt), 1.0, 1e-12);
  // q0 = inf, q1 = 2 gives q* = 2: (sum_j 2^{-j})^{1/2}.
  SpaceSpec src_inf = src;
  src_inf.q = VariableExponent::constant(g, kInfinity);
  double sum = 0.0;
  for (int j = 0; j <= 5; ++j) sum += std::exp2(-j);
  EXPECT_NEAR(weight_ratio_condition(src_inf, tgt), std::sqrt(sum), 1e-12);

  const auto reports = embedding_checks(head(standard_corpus(1), 6), g,
                                        {weight_ratio_variant(factory(Scale::B, 2.0, 2.0, 1.0, 5),
                                                              factory(Scale::B, 2.0, 2.0, 0.5, 5))});
  ASSERT_TRUE(reports[0].bound.has_value());
  EXPECT_EQ(reports[0].violations, 0u);
  EXPECT_TRUE(reports[0].passes);
}

TEST(Schwartz, OrderThresholdAndStability) {
  const SpecFactory spec = factory(Scale::B, 2.0, 2.0, 0.5, 5);
  EXPECT_THROW(schwartz_embedding_checks(smooth_bump_corpus(1), Grid(1, 64), factory(Scale::B, 0.5, 2.0, 0.5, 5), 2),
               PreconditionError);
  const SchwartzReport r = schwartz_embedding_checks(smooth_bump_corpus(1), Grid(1, 64), spec, 2);
  EXPECT_NEAR(r.threshold, 0.5, 1e-12);
  EXPECT_GT(r.constant, 0.0);
  EXPECT_GT(r.pairing_constant, 0.0);
  EXPECT_TRUE(r.passes);
}

TEST(Multiplier, ConstantOneIsTight) {
  const auto r = multiplier_bound_check(head(standard_corpus(1), 6), Grid(1, 64), factory(Scale::F, 2.0, 2.0, 0.5, 5),
                                        Symbol::constant(1, 1.0), MultiplierMode::norm_2l, 1);
  EXPECT_EQ(r.M, 1.0);
  EXPECT_NEAR(r.constant, 1.0, 1e-12);
  EXPECT_EQ(r.violations, 0u);
  EXPECT_TRUE(r.passes) << r.detail;
  for (double v : r.ratios) EXPECT_NEAR(v, 1.0, 1e-12);
}

TEST(Multiplier, OrderBelowThresholdThrows) {
  // p = 1/2 raises the 2l-threshold to 1/p + n = 3.
  EXPECT_THROW(multiplier_bound_check(head(standard_corpus(1), 2), Grid(1, 64), factory(Scale::F, 0.5, 2.0, 0.5, 5),
                                      Symbol::constant(1, 1.0), MultiplierMode::norm_2l, 1),
               PreconditionError);
  EXPECT_THROW(multiplier_bound_check(head(standard_corpus(1), 2), Grid(1, 64), factory(Scale::F, 2.0, 2.0, 0.5, 5),
                                      Symbol::constant(1, 1.0), MultiplierMode::h2kappa, 0.5),
               PreconditionError);
}

TEST(Multiplier, GrowingSymbolIsNotEvaluated) {
  const auto r = multiplier_bound_check(head(standard_corpus(1), 2), Grid(1, 64), factory(Scale::F, 2.0, 2.0, 0.5, 5),
                                        Symbol::lifting(1, 0.5), MultiplierMode::norm_2l, 1);
  EXPECT_TRUE(r.M_unbounded);
  EXPECT_FALSE(r.passes);
  EXPECT_FALSE(r.detail.empty());
}

TEST(Differentiation, SingleModesWithinAnnulusBounds) {
  // |xi0| / 2^j over the active levels lies in [1/2, 2]; level 0 only for |xi0| <= 2, excluded here.
  const auto r = differentiation_check(single_modes({1, 4, 11, 30}), Grid(1, 128), factory(Scale::B, 2.0, 2.0, 0.5, 6),
                                       MultiIndex{1, 0});
  EXPECT_TRUE(r.passes);
  for (double v : r.ratios) {
    EXPECT_GE(v, 0.5 - 1e-12);
    EXPECT_LE(v, 2.0 + 1e-12);
  }
}

TEST(SumOfDerivatives, ZeroOrderIsIdentity) {
  const auto r = derivative_sum_check(head(standard_corpus(1), 5), Grid(1, 64), factory(Scale::F, 2.0, 2.0, 0.5, 5), 0);
  for (double v : r.ratios) EXPECT_NEAR(v, 1.0, 1e-12);
  EXPECT_THROW(derivative_sum_check(head(standard_corpus(1), 1), Grid(1, 64), factory(Scale::F, 2.0, 2.0, 0.5, 5), -1),
               PreconditionError);
}

TEST(SumOfDerivatives, OrderOneIsStable) {
  const auto r = derivative_sum_check(head(standard_corpus(1), 8), Grid(1, 64), factory(Scale::B, 2.0, 2.0, 0.5, 5), 1);
  EXPECT_TRUE(r.passes) << r.refinement_drift;
  EXPECT_GE(r.ratio_min, 1.0 - 1e-12);
}

TEST(QuasiTriangle, ReferenceConstant) {
  const Grid g(1, 64);
  const auto functions = sample_corpus(head(standard_corpus(1), 6), g);
  const auto banach = quasi_triangle_constant(functions, factory(Scale::B, 2.0, 2.0, 0.5, 5)(g));
  EXPECT_EQ(banach.reference, 1.0);
  EXPECT_LE(banach.measured, 1.0 + 1e-12);
  const auto quasi = quasi_triangle_constant(functions, factory(Scale::B, 0.5, 2.0, 0.5, 5)(g));
  EXPECT_EQ(quasi.reference, 2.0);
  EXPECT_GT(quasi.measured, 0.0);
}

}  // namespace
}  // namespace varspace
