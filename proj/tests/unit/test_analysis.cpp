#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <random>

#include "test_support.hpp"
#include "varspace/error.hpp"
#include "varspace/operators.hpp"
#include "varspace/profiles.hpp"
#include "varspace/symbol.hpp"
#include "varspace/systems.hpp"

namespace varspace {
namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

double integrate(const std::function<double(double)>& f, double a, double b) {
  return GK::integrate(f, a, b, 20, 1e-13);
}

/// 200 equal panels of 30-point Gauss-Legendre; fixed cost for oscillatory integrands.
double integrate_panels(const std::function<double(double)>& f, double a, double b) {
  const int panels = 200;
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i)
    sum += boost::math::quadrature::gauss<double, 30>::integrate(f, a + i * h, a + (i + 1) * h);
  return sum;
}

GridFunction mode(const Grid& g, int k1, int k2 = 0) {
  return GridFunction::from_function(g, [=](const Point& x) { return std::polar(1.0, 2 * kPi * (k1 * x[0] + k2 * x[1])); });
}

double max_diff(const GridFunction& a, const GridFunction& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

TEST(MaxLevels, TopAnnulusFitsTheGrid) {
  EXPECT_EQ(max_levels(Grid(1, 256)), 8);
  EXPECT_EQ(max_levels(Grid(1, 512)), 9);
  EXPECT_THROW(build_admissible_pair("partition", Grid(1, 64), max_levels(Grid(1, 64)) + 1), PreconditionError);
}

TEST(AdmissiblePair, BothProfilesPassTheAudit) {
  for (int dim : {1, 2}) {
    const Grid g(dim, dim == 1 ? 512 : 64);
    for (const auto& name : admissible_profile_names()) {
      const AnalysisSystem sys = build_admissible_pair(name, g, max_levels(g));
      const SystemAudit a = audit_system(sys);
      EXPECT_TRUE(a.passes) << name << ": " << a.detail;
      // The lattice minimum cannot undercut the continuum minimum over the positivity bands.
      const RadialPair pair = admissible_profile(name);
      double continuum = 1.0;
      for (int i = 0; i <= 100000; ++i) {
        const double t = i / 100000.0;
        continuum = std::min({continuum, pair.level0(t * 5.0 / 3.0), pair.annulus(0.6 + t * (5.0 / 3.0 - 0.6))});
      }
      EXPECT_GT(continuum, 0.0);
      EXPECT_GE(a.lower_bound, continuum - 1e-12);
      EXPECT_EQ(a.support_violation, 0.0);
    }
  }
}

TEST(AdmissiblePair, SatisfiesGeneralConditionsWithSixFifths) {
  const Grid g(1, 512);
  for (const auto& name : admissible_profile_names()) {
    const SystemAudit a = audit_general_conditions(build_admissible_pair(name, g, 7), 6.0 / 5.0, 25.0 / 18.0);
    EXPECT_TRUE(a.passes) << name << ": " << a.detail;
  }
}

TEST(AdmissiblePair, ProfilesDiffer) {
  const Grid g(1, 256);
  const AnalysisSystem a = build_admissible_pair("partition", g, 6);
  const AnalysisSystem b = build_admissible_pair("logbump", g, 6);
  double diff = 0.0;
  for (int j = 0; j <= 6; ++j)
    for (std::size_t i = 0; i < g.size(); ++i) diff = std::max(diff, std::abs(a.masks[j][i] - b.masks[j][i]));
  EXPECT_GT(diff, 0.1);
}

TEST(AdmissiblePair, HigherLevelsAreDilates) {
  const Grid g(1, 256);
  const RadialPair pair = admissible_profile("logbump");
  const AnalysisSystem sys = build_admissible_pair("logbump", g, 6);
  for (int j = 1; j <= 6; ++j)
    for (std::size_t i = 0; i < g.size(); ++i)
      EXPECT_DOUBLE_EQ(sys.masks[j][i].real(), pair.annulus(g.frequency_norm(i) / std::exp2(j - 1) / 2.0));
}

TEST(OtherSystems, AuditsPass) {
  for (int dim : {1, 2}) {
    const Grid g(dim, dim == 1 ? 256 : 64);
    const int J = max_levels(g);
    EXPECT_TRUE(audit_system(build_theta_partition(g, J)).passes);
    EXPECT_TRUE(audit_system(build_lambda_cover(g, J)).passes);
    const SystemAudit gp = audit_system(build_general_pair(g, J, 1.0, 1.5, 3));
    EXPECT_TRUE(gp.passes) << gp.detail;
  }
}

TEST(GeneralPair, MasksVanishIdenticallyNearZero) {
  const Grid g(1, 256);
  const double eps = 1.0;
  const AnalysisSystem sys = build_general_pair(g, 6, eps, 1.5, 4);
  for (int j = 1; j <= 6; ++j)
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g.frequency_norm(i) * std::exp2(-j) < eps / 4.0) EXPECT_EQ(sys.masks[j][i], Complex(0.0, 0.0));
  EXPECT_THROW(build_general_pair(g, 3, 1.0, 2.5, 1), PreconditionError);
}

TEST(LittlewoodPaley, ThetaPartitionSumsToTheFunction) {
  std::mt19937_64 rng(61);
  const Grid g(2, 64);
  const GridFunction f = testing::random_function(g, rng);
  const FunctionSequence F = littlewood_paley(f, build_theta_partition(g, max_levels(g)));
  GridFunction sum(g);
  for (const auto& e : F.entries()) sum += e;
  EXPECT_LE(max_diff(sum, f), 1e-10);
}

TEST(LittlewoodPaley, SingleModeSeesTheMaskValues) {
  const Grid g(1, 256);
  for (const auto& name : admissible_profile_names()) {
    const AnalysisSystem sys = build_admissible_pair(name, g, 7);
    const int k = 10;  // |xi| = 20 pi, just below 2^6
    const GridFunction f = mode(g, k);
    const FunctionSequence F = littlewood_paley(f, sys);
    const std::size_t idx = static_cast<std::size_t>(k);
    int active = 0, top = -1;
    for (int j = 0; j <= 7; ++j) {
      EXPECT_LE(max_diff(F[j], sys.masks[j][idx] * f), 1e-12);
      if (std::abs(sys.masks[j][idx]) > 0.0) {
        ++active;
        if (top < 0 || std::abs(sys.masks[j][idx]) > std::abs(sys.masks[top][idx])) top = j;
      }
    }
    EXPECT_LE(active, 2);
    EXPECT_EQ(top, 6) << name;
  }
}

TEST(LittlewoodPaley, ConstantLivesAtLevelZero) {
  const Grid g(1, 128);
  const FunctionSequence F = littlewood_paley(GridFunction::constant(g, 3.0), build_admissible_pair("partition", g, 6));
  EXPECT_NEAR(F[0][5].real(), 3.0, 1e-13);
  for (int j = 1; j <= 6; ++j) EXPECT_LE(F[j].max_abs(), 1e-13);
}

TEST(Peetre, DominatesAndIsExactOnConstants) {
  std::mt19937_64 rng(62);
  const Grid g(1, 128);
  const FunctionSequence F = littlewood_paley(testing::random_function(g, rng), build_admissible_pair("logbump", g, 5));
  const LevelMagnitudes P = peetre_maximal(F, 3.0);
  for (int j = 0; j <= 5; ++j) {
    const auto mag = F[j].magnitudes();
    for (std::size_t x = 0; x < g.size(); ++x) EXPECT_GE(P[j][x], mag[x]);
  }
  FunctionSequence C(g);
  C.push_back(GridFunction::constant(g, Complex(0.0, -2.5)));
  C.push_back(GridFunction::constant(g, 1.5));
  const LevelMagnitudes PC = peetre_maximal(C, 2.0);
  for (double v : PC[0]) EXPECT_DOUBLE_EQ(v, 2.5);
  for (double v : PC[1]) EXPECT_DOUBLE_EQ(v, 1.5);
}

TEST(Peetre, MatchesBruteForceAndComparesAcrossExponents) {
  std::mt19937_64 rng(63);
  const Grid g(1, 128);
  const FunctionSequence F = littlewood_paley(testing::random_function(g, rng), build_admissible_pair("partition", g, 5));
  const LevelMagnitudes P10 = peetre_maximal(F, 10.0);
  const LevelMagnitudes P50 = peetre_maximal(F, 50.0);
  for (int j = 0; j <= 5; ++j) {
    const auto mag = F[j].magnitudes();
    for (std::size_t x = 0; x < g.size(); ++x) {
      double o10 = 0.0, o50 = 0.0;
      for (std::size_t y = 0; y < g.size(); ++y) {
        const double t = std::exp2(j) * circle_distance(g.point(x)[0], g.point(y)[0]);
        o10 = std::max(o10, mag[y] / (1.0 + std::pow(t, 10.0)));
        o50 = std::max(o50, mag[y] / (1.0 + std::pow(t, 50.0)));
      }
      EXPECT_NEAR(P10[j][x], o10, 1e-14 * o10);
      EXPECT_NEAR(P50[j][x], o50, 1e-14 * o50);
      // 1 + t^50 >= (1 + t^10) / 2 for every t >= 0.
      EXPECT_LE(P50[j][x], 2.0 * P10[j][x]);
    }
  }
}

TEST(Lift, IdentityRoundTripAndSingleMode) {
  std::mt19937_64 rng(64);
  const Grid g(2, 32);
  const GridFunction f = testing::random_function(g, rng);
  EXPECT_EQ(max_diff(lift(f, 0.0), f), 0.0);
  for (double sigma : {-2.0, 1.0, 2.5}) EXPECT_LE(max_diff(lift(lift(f, sigma), -sigma), f), 1e-10);
  const GridFunction m = mode(g, 3, -2);
  const double xi2 = 4 * kPi * kPi * 13.0;
  EXPECT_LE(max_diff(lift(m, 1.5), std::pow(1.0 + xi2, 0.75) * m), 1e-9 * std::pow(1.0 + xi2, 0.75));
}

TEST(Lift, CommutesWithLittlewoodPaley) {
  std::mt19937_64 rng(65);
  const Grid g(1, 128);
  const GridFunction f = testing::random_function(g, rng);
  const AnalysisSystem sys = build_admissible_pair("logbump", g, 6);
  for (int j = 0; j <= 6; ++j) {
    const GridFunction a = convolve(lift(f, 1.3), sys.masks[j]);
    const GridFunction b = lift(convolve(f, sys.masks[j]), 1.3);
    EXPECT_LE(max_diff(a, b), 1e-10 * std::max(1.0, a.max_abs()));
  }
}

TEST(Multiplier, DefinitionalAgreements) {
  std::mt19937_64 rng(66);
  const Grid g(1, 64);
  const GridFunction f = testing::random_function(g, rng);
  EXPECT_LE(max_diff(apply_multiplier(f, SpectralMask(g, 1.0)), f), 1e-13);
  EXPECT_LE(max_diff(apply_multiplier(f, Symbol::lifting(1, 1.5).sample(g)), lift(f, 1.5)), 1e-9);
  // xi^2 against D^2: (i xi)^2 = -xi^2.
  const GridFunction d2 = spectral_derivative(f, {2, 0});
  const GridFunction m2 = apply_multiplier(f, Symbol::derivative(1, {2, 0}, 0.0).sample(g));
  EXPECT_LE(max_diff(-1.0 * m2, d2), 1e-9 * d2.max_abs());
  SpectralMask bad(g, 1.0);
  bad[3] = Complex(kInfinity, 0.0);
  EXPECT_THROW(apply_multiplier(f, bad), PreconditionError);
}

TEST(LocalMeans, DefaultKernelTransformAtZeroIsItsIntegral) {
  auto bump = [](double r) { return r < 1.0 ? std::exp(-1.0 / (1.0 - r * r)) : 0.0; };
  const double line = integrate([&](double y) { return bump(std::abs(y)); }, -1.0, 1.0);
  const double plane = 2.0 * kPi * integrate([&](double r) { return r * bump(r); }, 0.0, 1.0);
  EXPECT_NEAR(radial_fourier_transform(bump, 1, 0.0), line, 1e-12);
  EXPECT_NEAR(radial_fourier_transform(bump, 2, 0.0), plane, 1e-12);
  for (int dim : {1, 2}) EXPECT_NEAR(radial_fourier_transform(default_local_means_kernel(dim), dim, 0.0), 1.0, 1e-12);
}

TEST(LocalMeans, RadialTransformAgainstDirectQuadrature) {
  const RadialKernel k = default_local_means_kernel(1);
  const RadialKernel k2 = default_local_means_kernel(2);
  for (double omega : {0.7, 5.0, 40.0, 300.0}) {
    const double direct = integrate_panels([&](double y) { return k(std::abs(y)) * std::cos(omega * y); }, -1.0, 1.0);
    EXPECT_NEAR(radial_fourier_transform(k, 1, omega), direct, 1e-11);
    // 2D via the angular integral of cos(omega r cos t) instead of J0; the trapezoid rule on
    // 512 nodes is exact to roundoff for this periodic integrand while omega r <= 300.
    const double polar = integrate_panels(
        [&](double r) {
          double angular = 0.0;
          for (int i = 0; i < 512; ++i) angular += std::cos(omega * r * std::cos(2.0 * kPi * i / 512.0));
          return r * k2(r) * angular * (2.0 * kPi / 512.0);
        },
        0.0, 1.0);
    EXPECT_NEAR(radial_fourier_transform(k2, 2, omega), polar, 1e-9);
  }
}

TEST(LocalMeans, ConstantSignalKeepsOnlyLevelZero) {
  for (int dim : {1, 2}) {
    const Grid g(dim, dim == 1 ? 256 : 32);
    const int J = max_levels(g);
    const LocalMeansSystem lm(g, default_local_means_kernel(dim), default_local_means_kernel(dim), 2, J);
    const FunctionSequence F = lm.apply(GridFunction::constant(g, 1.75));
    EXPECT_NEAR(F[0][0].real(), 1.75 * lm.k0_hat_zero(), 1e-12);
    for (int j = 1; j <= J; ++j) EXPECT_LE(F[j].max_abs(), 1e-10);
  }
}

TEST(LocalMeans, SingleModeIsScaledByTheLaplacianTransform) {
  const Grid g(1, 256);
  const RadialKernel k = default_local_means_kernel(1);
  const int order = 2, J = 6, wave = 9;
  const LocalMeansSystem lm(g, k, k, order, J);
  const GridFunction f = mode(g, wave);
  const FunctionSequence F = lm.apply(f);
  const double xi = 2 * kPi * wave;
  for (int j = 1; j <= J; ++j) {
    const double u = xi * std::exp2(-j);
    const double hat = integrate([&](double y) { return k(std::abs(y)) * std::cos(u * y); }, -1.0, 1.0);
    const double expected = std::pow(-u * u, order) * hat;
    EXPECT_LE(max_diff(F[j], expected * f), 1e-10 * std::max(1.0, std::abs(expected)));
  }
}

TEST(LocalMeans, RejectsBadKernels) {
  const Grid g(1, 64);
  const RadialKernel wide = [](double r) { return r < 1.5 ? 1.0 : 0.0; };
  const RadialKernel zero_mean = [](double r) { return r < 1.0 ? 1.0 - 3.0 * r * r : 0.0; };
  const RadialKernel good = default_local_means_kernel(1);
  EXPECT_THROW(LocalMeansSystem(g, wide, good, 1, 3), PreconditionError);
  EXPECT_THROW(LocalMeansSystem(g, good, zero_mean, 1, 3), PreconditionError);
  EXPECT_NO_THROW(LocalMeansSystem(g, good, good, 1, 3));
}

TEST(PNSeminorm, TrivialCases) {
  const Grid g(2, 16);
  EXPECT_EQ(p_N_seminorm(GridFunction(g), 3), 0.0);
  EXPECT_DOUBLE_EQ(p_N_seminorm(GridFunction::constant(g, 1.0), 0), 1.0);
}

TEST(PNSeminorm, GaussianAgainstClosedFormDerivatives) {
  const Grid g(1, 256);
  const double s = 0.05;
  const auto f = GridFunction::from_function(g, [&](const Point& x) {
    const double d = x[0] < 0.5 ? x[0] : x[0] - 1.0;
    return std::exp(-d * d / (2 * s * s));
  });
  double oracle = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = g.point(i)[0] < 0.5 ? g.point(i)[0] : g.point(i)[0] - 1.0;
    const double e = std::exp(-x * x / (2 * s * s));
    const double d1 = std::abs(x) / (s * s) * e;
    const double d2 = std::abs(x * x / (s * s * s * s) - 1.0 / (s * s)) * e;
    oracle = std::max(oracle, std::pow(1.0 + std::abs(x), 2) * (e + d1 + d2));
  }
  EXPECT_NEAR(p_N_seminorm(f, 2), oracle, 1e-3 * oracle);
}

}  // namespace
}  // namespace varspace
