#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "varspace/error.hpp"
#include "varspace/weights.hpp"

namespace varspace {
namespace {

std::vector<double> sample(const Grid& g, const std::function<double(const Point&)>& f) {
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(g.point(i));
  return v;
}

TEST(TwoMicrolocal, DeclaredClass) {
  const Grid g(1, 64);
  for (double sp : {-1.5, 0.0, 2.0}) {
    const WeightSequence w = make_2microlocal(g, 0.0, sp, {{0.25, 0.0}}, 4);
    EXPECT_EQ(w.declared().alpha, std::abs(sp));
    EXPECT_EQ(w.declared().alpha1, std::min(0.0, sp));
    EXPECT_EQ(w.declared().alpha2, std::max(0.0, sp));
    const AdmissibilityReport r = verify_admissible(w);
    EXPECT_TRUE(r.passes) << r.witness;
    EXPECT_TRUE(r.exhaustive);
  }
}

TEST(TwoMicrolocal, ZeroSecondExponentIsConstantInSpace) {
  const Grid g(2, 16);
  const WeightSequence w = make_2microlocal(g, 0.7, 0.0, {{0.5, 0.5}}, 3);
  for (int j = 0; j <= 3; ++j)
    for (double v : w[j]) EXPECT_DOUBLE_EQ(v, std::exp2(0.7 * j));
}

TEST(TwoMicrolocal, ValueAtTheCentre) {
  const Grid g(1, 32);
  const WeightSequence w = make_2microlocal(g, 1.25, -2.0, {{0.5, 0.0}}, 5);
  const std::size_t centre = g.index_of(16);
  for (int j = 0; j <= 5; ++j) EXPECT_DOUBLE_EQ(w[j][centre], std::exp2(1.25 * j));
}

TEST(VariableSmoothness, ConstantMatchesTwoMicrolocal) {
  const Grid g(1, 32);
  const WeightSequence a = make_variable_smoothness(g, std::vector<double>(g.size(), 0.8), 4);
  const WeightSequence b = make_2microlocal(g, 0.8, 0.0, {{0.0, 0.0}}, 4);
  for (int j = 0; j <= 4; ++j)
    for (std::size_t i = 0; i < g.size(); ++i) EXPECT_DOUBLE_EQ(a[j][i], b[j][i]);
  EXPECT_EQ(a.declared().alpha, 0.0);
}

TEST(VariableSmoothness, LevelZeroIsOne) {
  const Grid g(1, 32);
  const WeightSequence w = make_variable_smoothness(g, sample(g, [](const Point& x) { return std::sin(6 * x[0]); }), 3);
  for (double v : w[0]) EXPECT_EQ(v, 1.0);
}

TEST(VariableSmoothness, StepHasFiniteMeasuredAlpha) {
  const Grid g(1, 64);
  const double jump = 0.5;
  const WeightSequence w =
      make_variable_smoothness(g, sample(g, [&](const Point& x) { return x[0] < 0.5 ? 1.0 : 1.0 + jump; }), 12);
  const AdmissibilityReport r = verify_admissible(w);
  EXPECT_TRUE(r.passes) << r.witness;
  // c = e^{c_log} ~ 8.2 covers 2^{jump j} only up to j = 6, so alpha > 0 is needed at J = 12.
  EXPECT_GT(r.measured_alpha, 0.0);
  EXPECT_LE(r.measured_alpha, w.declared().alpha + 1e-9);
  // The declared alpha is the step times the largest log factor, log(e + N) at neighbouring cells.
  EXPECT_NEAR(w.declared().alpha, jump * std::log(std::exp(1.0) + 64.0), 1e-12);
  EXPECT_DOUBLE_EQ(r.measured_alpha1, 1.0);
  EXPECT_DOUBLE_EQ(r.measured_alpha2, 1.5);
}

TEST(Generalized, PowerSequence) {
  const Grid g(1, 16);
  std::vector<double> sigma;
  for (int j = 0; j <= 6; ++j) sigma.push_back(std::exp2(0.75 * j));
  const WeightSequence w = make_generalized(g, sigma);
  EXPECT_EQ(w.declared().alpha, 0.0);
  EXPECT_NEAR(w.declared().alpha1, 0.75, 1e-14);
  EXPECT_NEAR(w.declared().alpha2, 0.75, 1e-14);
  EXPECT_TRUE(verify_admissible(w).passes);
}

TEST(Generalized, LogarithmicCorrectionRatios) {
  const Grid g(1, 16);
  const double s = 0.5, b = 2.0;
  std::vector<double> sigma;
  for (int j = 0; j <= 7; ++j) sigma.push_back(std::exp2(j * s) * std::pow(1.0 + j, b));
  const WeightSequence w = make_generalized(g, sigma);
  double d1 = 1e300, d2 = 0.0;
  for (int j = 0; j < 7; ++j) {
    const double r = std::exp2(s) * std::pow((2.0 + j) / (1.0 + j), b);
    d1 = std::min(d1, r);
    d2 = std::max(d2, r);
  }
  EXPECT_NEAR(w.declared().alpha1, std::log2(d1), 1e-12);
  EXPECT_NEAR(w.declared().alpha2, std::log2(d2), 1e-12);
  EXPECT_TRUE(verify_admissible(w).passes);
}

TEST(Generalized, ConstantOneAndRejection) {
  const Grid g(1, 16);
  const WeightSequence w = make_generalized(g, std::vector<double>(5, 1.0));
  EXPECT_EQ(w.declared().alpha1, 0.0);
  EXPECT_EQ(w.declared().alpha2, 0.0);
  EXPECT_THROW(make_generalized(g, {1.0, 0.0, 2.0}), PreconditionError);
  EXPECT_THROW(make_generalized(g, {1.0, -1.0}), PreconditionError);
}

TEST(Weighted, ConstantRhoAndClass) {
  const Grid g(1, 32);
  const WeightSequence w = make_weighted(g, std::vector<double>(g.size(), 1.0), 0.5, 1.0, 4);
  EXPECT_EQ(w.declared().alpha, 1.0);
  EXPECT_EQ(w.declared().alpha1, 0.5);
  EXPECT_EQ(w.declared().alpha2, 0.5);
  for (int j = 0; j <= 4; ++j)
    for (double v : w[j]) EXPECT_DOUBLE_EQ(v, std::exp2(0.5 * j));
  EXPECT_TRUE(verify_admissible(w).passes);
}

TEST(Weighted, PolynomialRhoPassesWithDeclaredBeta) {
  const Grid g(1, 64);
  const double beta = 1.5;
  const auto rho = sample(g, [&](const Point& x) {
    const double d = distance_from_origin(x, 1);
    return std::pow(1.0 + d * d, beta / 2.0);
  });
  // Peetre's inequality (1 + |x|^2) <= 2 (1 + |y|^2)(1 + |x - y|^2) gives C = 2^{beta/2}.
  const WeightSequence w = make_weighted(g, rho, 0.0, beta, 3);
  const AdmissibilityReport r = verify_admissible(w);
  EXPECT_TRUE(r.passes) << r.witness;
}

TEST(Weighted, ViolationNamesTheWitnessPair) {
  const Grid g(1, 32);
  std::vector<double> rho(g.size(), 1.0);
  rho[7] = 100.0;
  try {
    make_weighted(g, rho, 0.0, 1.0, 2);
    FAIL() << "expected a precondition error";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("x index 7"), std::string::npos) << e.what();
  }
}

TEST(VerifyAdmissible, FlippedEntryFails) {
  const Grid g(1, 32);
  std::vector<std::vector<double>> e;
  for (int j = 0; j <= 4; ++j) e.emplace_back(g.size(), std::exp2(1.0 * j));
  for (double& v : e[1]) v = 1.0 / v;
  const WeightSequence w(g, e, WeightClass{0.0, 1.0, 1.0, 1.0}, "custom");
  const AdmissibilityReport r = verify_admissible(w);
  EXPECT_FALSE(r.passes);
  EXPECT_NE(r.witness.find("level 0"), std::string::npos) << r.witness;
  EXPECT_DOUBLE_EQ(r.measured_alpha1, -1.0);
  EXPECT_DOUBLE_EQ(r.measured_alpha2, 3.0);
}

TEST(VerifyAdmissible, PowerWeightsMeasureTheirExponent) {
  const Grid g(2, 16);
  const WeightSequence w = make_2microlocal(g, 1.3, 0.0, {{0.0, 0.0}}, 5);
  const AdmissibilityReport r = verify_admissible(w);
  EXPECT_TRUE(r.passes);
  EXPECT_NEAR(r.measured_alpha1, 1.3, 1e-12);
  EXPECT_NEAR(r.measured_alpha2, 1.3, 1e-12);
}

TEST(VerifyAdmissible, LargeGridsAreSampled) {
  const Grid g(2, 256);
  const WeightSequence w = make_2microlocal(g, 0.0, 1.0, {{0.5, 0.5}}, 2);
  const AdmissibilityReport r = verify_admissible(w);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_TRUE(r.passes) << r.witness;
}

TEST(Shift, ClassParametersMoveBySigma) {
  const Grid g(1, 64);
  const std::vector<WeightSequence> family{
      make_2microlocal(g, 0.5, -1.0, {{0.3, 0.0}}, 5),
      make_variable_smoothness(g, sample(g, [](const Point& x) { return 0.5 + 0.25 * std::cos(2 * kPi * x[0]); }), 5),
      make_generalized(g, {1.0, 2.0, 3.0, 5.0, 9.0, 16.0}),
  };
  for (const WeightSequence& w : family) {
    const AdmissibilityReport base = verify_admissible(w);
    for (double sigma : {-2.0, 1.0, 0.5}) {
      const WeightSequence s = w.shifted(sigma);
      EXPECT_EQ(s.declared().alpha, w.declared().alpha);
      EXPECT_EQ(s.declared().alpha1, w.declared().alpha1 - sigma);
      EXPECT_EQ(s.declared().alpha2, w.declared().alpha2 - sigma);
      const AdmissibilityReport r = verify_admissible(s);
      EXPECT_TRUE(r.passes) << w.family() << ": " << r.witness;
      EXPECT_NEAR(r.measured_alpha1, base.measured_alpha1 - sigma, 1e-12);
      EXPECT_NEAR(r.measured_alpha2, base.measured_alpha2 - sigma, 1e-12);
      EXPECT_NEAR(r.measured_alpha, base.measured_alpha, 1e-12);
    }
  }
}

TEST(Shift, TruncationKeepsTheClass) {
  const Grid g(1, 32);
  const WeightSequence w = make_2microlocal(g, 0.5, 1.0, {{0.3, 0.0}}, 6);
  const WeightSequence t = w.truncated(2);
  EXPECT_EQ(t.levels(), 2);
  EXPECT_EQ(t.declared().alpha2, w.declared().alpha2);
  EXPECT_THROW(w.truncated(7), PreconditionError);
}

}  // namespace
}  // namespace varspace
