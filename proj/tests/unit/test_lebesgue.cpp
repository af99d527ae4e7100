#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <random>

#include "test_support.hpp"
#include "varspace/error.hpp"
#include "varspace/lebesgue.hpp"

namespace varspace {
namespace {

using testing::random_exponent;
using testing::relative_error;
using testing::uniform;

TEST(Modular, ConstantOneWithExponentTwo) {
  const Grid g(1, 64);
  EXPECT_DOUBLE_EQ(modular(GridFunction::constant(g, 1.0), VariableExponent::constant(g, 2.0)).value, 1.0);
}

TEST(Modular, InfiniteExponentRegion) {
  const Grid g(1, 64);
  const auto p = VariableExponent::from_function(g, [](const Point& x) { return x[0] < 0.5 ? kInfinity : 2.0; });
  const auto half = modular(GridFunction::constant(g, 0.5), p);
  EXPECT_FALSE(half.infinity_region_violated);
  EXPECT_DOUBLE_EQ(half.value, 0.5 * 0.25);
  const auto big = modular(GridFunction::constant(g, 1.5), p);
  EXPECT_TRUE(big.infinity_region_violated);
  EXPECT_TRUE(std::isinf(big.value));
}

TEST(Modular, PowerOfSawtoothAgainstQuadratureOracle) {
  const Grid g(1, 1024);
  const auto f = GridFunction::from_function(g, [](const Point& x) { return x[0]; });
  const auto p = VariableExponent::from_function(g, [](const Point& x) { return 1.0 + x[0]; });
  const double value = modular(f, p).value;
  const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [](double x) { return x > 0.0 ? std::pow(x, 1.0 + x) : 0.0; }, 0.0, 1.0, 15, 1e-14);
  // Left Riemann sum of a function jumping from f(1-) = 1 to f(0) = 0: the O(h) endpoint term is h/2.
  const double h = g.spacing();
  EXPECT_NEAR(value, integral - 0.5 * h, 1e-6);
}

TEST(Norm, ZeroAndConstantOne) {
  const Grid g(1, 128);
  std::mt19937_64 rng(31);
  const VariableExponent p = random_exponent(g, rng, 0.6, 6.0);
  EXPECT_EQ(norm(GridFunction(g), p), 0.0);
  EXPECT_NEAR(norm(GridFunction::constant(g, 1.0), p), 1.0, 1e-12);
}

TEST(Norm, HalfIndicatorInL2) {
  const Grid g(1, 64);
  const auto f = GridFunction::from_function(g, [](const Point& x) { return x[0] < 0.5 ? 1.0 : 0.0; });
  EXPECT_NEAR(norm(f, VariableExponent::constant(g, 2.0)), std::sqrt(0.5), 1e-12);
}

TEST(Norm, ConstantTwoAgainstRootFindOracle) {
  const Grid g(1, 256);
  const double h = g.spacing();
  const auto p = VariableExponent::from_function(g, [](const Point& x) { return 2.0 + x[0]; });
  const double computed = norm(GridFunction::constant(g, 2.0), p);
  // The lattice modular of 2/lambda is the geometric sum h c^2 sum_i c^{i h} with c = 2/lambda.
  auto lattice = [h](long double lambda) {
    const long double c = 2.0L / lambda;
    return h * c * c * (c - 1.0L) / (std::pow(c, static_cast<long double>(h)) - 1.0L) - 1.0L;
  };
  boost::uintmax_t iters = 200;
  const auto root = boost::math::tools::toms748_solve(lattice, 1.2L, 4.0L,
                                                      boost::math::tools::eps_tolerance<long double>(60), iters);
  const double oracle = static_cast<double>((root.first + root.second) / 2.0L);
  EXPECT_NEAR(computed, oracle, 1e-8 * oracle);
  // The continuum problem c^2 (c - 1) / log c = 1 differs by O(h).
  auto continuum = [](double lambda) {
    const double c = 2.0 / lambda;
    return c * c * (c - 1.0) / std::log(c) - 1.0;
  };
  iters = 200;
  const auto croot = boost::math::tools::toms748_solve(continuum, 1.2, 4.0,
                                                       boost::math::tools::eps_tolerance<double>(50), iters);
  EXPECT_NEAR(computed, 0.5 * (croot.first + croot.second), 4.0 * h);
}

TEST(Norm, UnitBallPropertyAndSandwich) {
  const Grid g(1, 256);
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const VariableExponent p = random_exponent(g, rng, 0.5, 8.0);
    const GridFunction f = testing::random_function(g, rng) * uniform(rng, 0.01, 100.0);
    const double n = norm(f, p);
    const double rho_at_norm = modular(f * (1.0 / n), p).value;
    EXPECT_GE(rho_at_norm, 1.0 - 1e-8);
    EXPECT_LE(rho_at_norm, 1.0);
    const SandwichBounds s = sandwich_bounds(modular(f, p).value, p.p_minus(), p.p_plus());
    EXPECT_GE(n, s.lower * (1.0 - 1e-9));
    EXPECT_LE(n, s.upper * (1.0 + 1e-9));
  }
}

TEST(Norm, Homogeneity) {
  const Grid g(1, 128);
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const VariableExponent p = random_exponent(g, rng, 0.5, 8.0);
    const GridFunction f = testing::random_function(g, rng);
    const Complex c{uniform(rng, -10, 10), uniform(rng, -10, 10)};
    EXPECT_LE(relative_error(norm(c * f, p), std::abs(c) * norm(f, p)), 1e-9);
  }
}

TEST(Norm, PowerIdentity) {
  const Grid g(1, 128);
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 30; ++trial) {
    const VariableExponent p = random_exponent(g, rng, 1.0, 6.0);
    const GridFunction f = testing::random_function(g, rng);
    const std::vector<double> a = f.magnitudes();
    for (double r : {0.5, 2.0}) {
      std::vector<double> ar(a);
      for (double& x : ar) x = std::pow(x, r);
      EXPECT_LE(relative_error(std::pow(norm(a, p), r), norm(ar, p.divided_by(r))), 1e-8);
    }
  }
}

TEST(Norm, LatticeProperty) {
  const Grid g(2, 16);
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    const VariableExponent p = random_exponent(g, rng, 0.5, 8.0);
    const std::vector<double> big = testing::random_magnitudes(g.size(), rng);
    std::vector<double> small(big);
    for (double& x : small) x *= uniform(rng, 0.0, 1.0);
    EXPECT_LE(norm(small, p), norm(big, p) + 1e-12);
  }
}

TEST(Norm, InfiniteExponentIsEssentialSup) {
  const Grid g(1, 64);
  std::mt19937_64 rng(36);
  const GridFunction f = testing::random_function(g, rng);
  EXPECT_NEAR(norm(f, VariableExponent::constant(g, kInfinity)), f.max_abs(), 1e-13 * f.max_abs());
}

TEST(Holder, ConstantsGiveTheFactorTwo) {
  const Grid g(1, 64);
  const auto one = GridFunction::constant(g, 1.0);
  const HolderPairing h = holder_pairing(one, one, VariableExponent::constant(g, 2.0));
  EXPECT_NEAR(h.lhs, 1.0, 1e-12);
  EXPECT_NEAR(h.rhs, 2.0, 1e-12);
  const HolderPairing z = holder_pairing(GridFunction(g), one, VariableExponent::constant(g, 2.0));
  EXPECT_EQ(z.lhs, 0.0);
  EXPECT_LE(z.lhs, z.rhs);
}

TEST(Holder, RandomPairsWithLinearExponent) {
  const Grid g(1, 128);
  std::mt19937_64 rng(37);
  const auto p = VariableExponent::from_function(g, [](const Point& x) { return 1.5 + x[0]; });
  for (int trial = 0; trial < 200; ++trial) {
    const HolderPairing h = holder_pairing(testing::random_function(g, rng), testing::random_function(g, rng), p);
    EXPECT_LE(h.lhs, h.rhs * (1.0 + 1e-9));
  }
}

TEST(Holder, RejectsExponentsBelowOne) {
  const Grid g(1, 16);
  const auto one = GridFunction::constant(g, 1.0);
  EXPECT_THROW(holder_pairing(one, one, VariableExponent::constant(g, 0.8)), PreconditionError);
}

TEST(Characteristic, ConstantExponentIsExact) {
  const Grid g(1, 64);
  const CharacteristicNormReport r = characteristic_norm_check(VariableExponent::constant(g, 2.0), 0.25);
  EXPECT_NEAR(r.ratio_min, 1.0, 1e-12);
  EXPECT_NEAR(r.ratio_max, 1.0, 1e-12);
}

TEST(Characteristic, SineProfileIsRefinementStable) {
  auto measure = [](std::size_t n) {
    const Grid g(1, n);
    const VariableExponent p = testing::smooth_exponent(g, 1.5, 2.5, 0.0);
    const CharacteristicNormReport r = characteristic_norm_check(p, 1.0 / 8.0);
    return r.ratio_max / r.ratio_min;
  };
  const double a = measure(256), b = measure(512);
  EXPECT_TRUE(std::isfinite(a));
  EXPECT_LE(std::abs(b / a - 1.0), 0.2);
}

TEST(Characteristic, SingleCellClosedForm) {
  const Grid g(1, 128);
  const VariableExponent p = testing::smooth_exponent(g, 1.2, 4.0, 0.3);
  const CharacteristicNormReport r = characteristic_norm_check(p, g.spacing());
  // One cell: modular of chi/lambda is h lambda^{-p(x)}, so the norm is h^{1/p(x)} = |Q|^{1/p(x)}.
  EXPECT_NEAR(r.ratio_min, 1.0, 1e-12);
  EXPECT_NEAR(r.ratio_max, 1.0, 1e-12);
  EXPECT_EQ(r.cube_side, g.spacing());
}

}  // namespace
}  // namespace varspace
