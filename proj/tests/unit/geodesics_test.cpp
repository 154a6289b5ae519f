#include "infogeo/geodesics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "infogeo/errors.hpp"
#include "oracles/oracles.hpp"

namespace infogeo {
namespace {

constexpr double kPi = std::numbers::pi;
const double kFigLambda = 2.0 / kPi;

ScenarioParams make(ProfileKind kind, double rate = 1.0, double lambda = kFigLambda) {
  return ScenarioParams::from_rate(kind, rate, lambda);
}

TEST(GeodesicRhs, Examples) {
  EXPECT_EQ(geodesic_rhs(make(ProfileKind::Constant), 3.0, 7.0), 0.0);
  EXPECT_DOUBLE_EQ(geodesic_rhs(make(ProfileKind::Exponential, 1.0, 0.3), 2.0, 1.0), 0.3);
  EXPECT_EQ(geodesic_rhs(make(ProfileKind::Oscillatory), 0.0, 5.0), 0.0);
  EXPECT_THROW(geodesic_rhs(make(ProfileKind::Oscillatory, 1.0, 1.0), kPi / 2, 1.0), SingularityError);
}

TEST(GeodesicRhs, MatchesFisherLogDerivative) {
  for (ProfileKind kind : kAllProfileKinds) {
    const auto s = make(kind, 0.9, 0.55);
    for (double theta : {0.0, 0.4, 1.3, 2.2}) {
      const double v = 1.7;
      const double expected =
          -fisher_closed_form_derivative(s, theta) / (2 * fisher_closed_form(s, theta)) * v * v;
      EXPECT_NEAR(geodesic_rhs(s, theta, v), expected, 1e-12 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST(GeodesicClosedForm, UnitRateCurvesFromOrigin) {
  const GeodesicInitialData origin{0.0, 1.0, 0.0};
  const auto c = geodesic_closed_form(make(ProfileKind::Constant), origin);
  const auto osc = geodesic_closed_form(make(ProfileKind::Oscillatory), origin);
  const auto osc_anchored = geodesic_closed_form(make(ProfileKind::Oscillatory), origin, OscillatoryForm::Anchored);
  const auto pl = geodesic_closed_form(make(ProfileKind::PowerLaw), origin);
  const auto ex = geodesic_closed_form(make(ProfileKind::Exponential), origin);
  for (double xi = 0.0; xi < 1.5; xi += 0.01) {
    EXPECT_NEAR(c.theta(xi), xi, 1e-15);
    EXPECT_NEAR(osc.theta(xi), kPi / 2 * std::asin(2 * xi / kPi), 1e-14);
    EXPECT_NEAR(osc_anchored.theta(xi), osc.theta(xi), 1e-14);
    EXPECT_NEAR(pl.theta(xi), kPi / 2 * xi / (kPi / 2 - xi), 1e-12 * (1 + pl.theta(xi)));
    EXPECT_NEAR(ex.theta(xi), kPi / 2 * std::log(1 / (1 - 2 * xi / kPi)), 1e-13);
  }
  EXPECT_NEAR(ex.theta(kPi / 4), 1.08879304515180107, 1e-15);
  EXPECT_NEAR(pl.theta(kPi / 4), kPi / 2, 1e-15);
  EXPECT_NEAR(pl.xi_max(), kPi / 2, 1e-15);
  EXPECT_NEAR(ex.xi_max(), kPi / 2, 1e-15);
  EXPECT_NEAR(osc.xi_max(), kPi / 2, 1e-15);
  EXPECT_EQ(c.xi_min(), 0.0);
  EXPECT_TRUE(std::isinf(c.xi_max()));
}

TEST(GeodesicClosedForm, InitialDataIsReproduced) {
  std::mt19937_64 gen = oracle::rng(5);
  std::uniform_real_distribution<double> theta0(0.0, 1.2);
  std::uniform_real_distribution<double> rate0(0.2, 2.0);
  std::uniform_real_distribution<double> xi0(-0.5, 0.5);
  for (ProfileKind kind : kAllProfileKinds) {
    for (int i = 0; i < 50; ++i) {
      const GeodesicInitialData init{theta0(gen), rate0(gen), xi0(gen)};
      const auto g = geodesic_closed_form(make(kind, 1.0, 0.9), init);
      EXPECT_NEAR(g.theta(init.xi0), init.theta0, 1e-12);
      EXPECT_NEAR(g.rate(init.xi0), init.theta_dot0, 1e-12);
      const double fd = static_cast<double>(oracle::derivative(
          [&](long double x) { return static_cast<long double>(g.theta(static_cast<double>(x))); },
          init.xi0, 1e-4L));
      EXPECT_NEAR(fd, init.theta_dot0, 1e-8);
    }
  }
}

TEST(GeodesicClosedForm, ResidualVanishesAcrossDomain) {
  std::mt19937_64 gen = oracle::rng(17);
  std::uniform_real_distribution<double> theta0(0.0, 3.0);
  std::uniform_real_distribution<double> rate0(0.3, 2.0);
  for (ProfileKind kind : kAllProfileKinds) {
    for (int trial = 0; trial < 20; ++trial) {
      const GeodesicInitialData init{theta0(gen), rate0(gen), 0.0};
      const auto s = make(kind, 1.0, 0.8);
      if (kind == ProfileKind::Oscillatory && std::abs(std::cos(0.8 * init.theta0)) < 0.05) continue;
      const auto g = geodesic_closed_form(s, init);
      const double lo = std::isfinite(g.xi_min()) ? g.xi_min() : -5.0;
      const double hi = std::isfinite(g.xi_max()) ? g.xi_max() : 5.0;
      for (int i = 1; i < 1000; ++i) {
        // Interior points inside 90% of the domain.
        const double xi = lo + (hi - lo) * (0.05 + 0.9 * i / 1000.0);
        ASSERT_LT(std::abs(g.residual(xi)), 1e-8) << to_string(kind) << " xi=" << xi;
      }
    }
  }
}

TEST(GeodesicClosedForm, AnalyticRateMatchesFiniteDifference) {
  for (ProfileKind kind : kAllProfileKinds) {
    const auto g = geodesic_closed_form(make(kind, 1.0, 0.7), {0.4, 1.3, 0.2});
    for (double xi : {0.25, 0.5, 0.9}) {
      const double fd = static_cast<double>(oracle::derivative(
          [&](long double x) { return static_cast<long double>(g.rate(static_cast<double>(x))); }, xi, 1e-4L));
      EXPECT_NEAR(g.acceleration(xi), fd, 1e-7 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST(GeodesicClosedForm, AnchoredOscillatoryFormFailsForGeneralData) {
  const auto s = make(ProfileKind::Oscillatory, 1.0, 0.8);
  const GeodesicInitialData init{0.5, 1.4, 0.3};
  const auto anchored = geodesic_closed_form(s, init, OscillatoryForm::Anchored);
  const auto exact = geodesic_closed_form(s, init, OscillatoryForm::Exact);
  double worst = 0.0;
  for (double xi = 0.35; xi < 0.9; xi += 0.05) worst = std::max(worst, std::abs(anchored.residual(xi)));
  EXPECT_GT(worst, 1e-3);
  for (double xi = 0.35; xi < 0.9; xi += 0.05) EXPECT_LT(std::abs(exact.residual(xi)), 1e-10);
}

TEST(GeodesicClosedForm, OscillatoryUpperBranch) {
  // lambda theta0 near pi: cos < 0, the path lives on the k = 1 branch.
  const auto s = make(ProfileKind::Oscillatory, 1.0, 1.0);
  const auto g = geodesic_closed_form(s, {3.0, 0.5, 0.0});
  EXPECT_NEAR(g.theta(0.0), 3.0, 1e-14);
  EXPECT_NEAR(g.rate(0.0), 0.5, 1e-14);
  const auto numeric = solve_geodesic_numeric(s, {3.0, 0.5, 0.0}, 0.5 * g.xi_max());
  for (const PathSample& p : numeric.samples) EXPECT_NEAR(p.theta, g.theta(p.xi), 1e-9);
}

TEST(GeodesicClosedForm, RejectsInvalidInput) {
  EXPECT_THROW(geodesic_closed_form(make(ProfileKind::Oscillatory, 1.0, 1.0), {kPi / 2, 1.0}), DomainError);
  EXPECT_THROW(geodesic_closed_form(make(ProfileKind::Constant), {-1.0, 1.0}), DomainError);
  EXPECT_THROW(geodesic_closed_form(make(ProfileKind::Constant), {1.0, 0.0}), DomainError);
  const auto ex = geodesic_closed_form(make(ProfileKind::Exponential), {0.0, 1.0});
  EXPECT_THROW(ex.theta(kPi / 2), DomainError);
  EXPECT_THROW(ex.theta(-0.1), DomainError);
}

TEST(SolveGeodesicNumeric, Examples) {
  const GeodesicInitialData origin{0.0, 1.0, 0.0};
  const auto c = solve_geodesic_numeric(make(ProfileKind::Constant), origin, 2.0);
  for (const PathSample& p : c.samples) EXPECT_NEAR(p.theta, p.xi, 1e-12);
  EXPECT_FALSE(c.domain_exit);
  EXPECT_DOUBLE_EQ(c.samples.back().xi, 2.0);

  const auto ex = solve_geodesic_numeric(make(ProfileKind::Exponential), origin, kPi / 4);
  EXPECT_NEAR(ex.samples.back().theta, 1.08879304515180107, 1e-6);
  const auto pl = solve_geodesic_numeric(make(ProfileKind::PowerLaw), origin, kPi / 4);
  EXPECT_NEAR(pl.samples.back().theta, kPi / 2, 1e-6);
}

TEST(SolveGeodesicNumeric, StopsAtSingularBoundary) {
  const GeodesicInitialData origin{0.0, 1.0, 0.0};
  for (ProfileKind kind : {ProfileKind::Oscillatory, ProfileKind::PowerLaw, ProfileKind::Exponential}) {
    const auto g = geodesic_closed_form(make(kind), origin);
    const auto numeric = solve_geodesic_numeric(make(kind), origin, 2.0);
    EXPECT_TRUE(numeric.domain_exit) << to_string(kind);
    EXPECT_LT(numeric.samples.back().xi, g.xi_max());
    EXPECT_GT(numeric.samples.back().xi, 0.9 * g.xi_max());
  }
}

TEST(SolveGeodesicNumeric, MatchesClosedFormsOnNinetyPercentOfDomain) {
  const GeodesicInitialData origin{0.0, 1.0, 0.0};
  for (ProfileKind kind : kAllProfileKinds) {
    const auto s = make(kind);
    const auto g = geodesic_closed_form(s, origin);
    const double end = std::isfinite(g.xi_max()) ? 0.9 * g.xi_max() : 10.0;
    const auto numeric = solve_geodesic_numeric(s, origin, end);
    ASSERT_FALSE(numeric.domain_exit);
    const double v0 = entropic_speed(s, origin.theta0, origin.theta_dot0);
    for (const PathSample& p : numeric.samples) {
      ASSERT_NEAR(p.theta, g.theta(p.xi), 1e-6) << to_string(kind) << " xi=" << p.xi;
      const double v = std::sqrt(metric_value(FisherFunction(s), p.theta)) * p.theta_dot;
      ASSERT_LT(std::abs(v - v0) / v0, 1e-6);
    }
  }
}

TEST(SolveGeodesicNumeric, CoarseStepIsRejected) {
  EXPECT_THROW(solve_geodesic_numeric(make(ProfileKind::Exponential, 1.0, 5.0), {0.0, 1.0}, 0.19, 0.05),
               StepTooLargeError);
  EXPECT_THROW(solve_geodesic_numeric(make(ProfileKind::Constant), {0.0, 1.0}, 0.0), DomainError);
}

TEST(EntropicSpeed, Examples) {
  EXPECT_EQ(entropic_speed(make(ProfileKind::Constant), 0.0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(entropic_speed(make(ProfileKind::Oscillatory, 0.7, 0.3), 0.0, 2.0),
                   entropic_speed(make(ProfileKind::Constant, 0.7), 0.0, 2.0));
  EXPECT_NEAR(entropic_speed(make(ProfileKind::Exponential, 0.5, 1 / kPi), 1.0, 1.0),
              0.363688674647608235, 1e-15);
  EXPECT_DOUBLE_EQ(entropic_speed(make(ProfileKind::Constant), 0.0, 1.0, MetricNormalization::RawFisher), 2.0);
}

TEST(EntropyProductionRate, ReferenceValues) {
  const double lambda = 1 / kPi;
  EXPECT_DOUBLE_EQ(entropy_production_rate(make(ProfileKind::Constant, 0.5, lambda), 1.0, 1.0), 0.25);
  EXPECT_NEAR(entropy_production_rate(make(ProfileKind::Oscillatory, 0.5, lambda), 1.0, 1.0),
              0.225513728528598964, 1e-15);
  EXPECT_NEAR(entropy_production_rate(make(ProfileKind::PowerLaw, 0.5, lambda), 1.0, 1.0),
              0.0827694316357046845, 1e-15);
  EXPECT_NEAR(entropy_production_rate(make(ProfileKind::Exponential, 0.5, lambda), 1.0, 1.0),
              0.132269452066933837, 1e-15);
}

TEST(EntropyProductionRate, IsSquareOfSpeed) {
  std::mt19937_64 gen = oracle::rng(3);
  std::uniform_real_distribution<double> u(0.01, 3.0);
  for (ProfileKind kind : kAllProfileKinds) {
    for (int i = 0; i < 200; ++i) {
      const auto s = make(kind, u(gen), u(gen));
      const double theta0 = u(gen);
      const double rate0 = u(gen);
      const double v = entropic_speed(s, theta0, rate0);
      EXPECT_EQ(entropy_production_rate(s, theta0, rate0), v * v);
    }
  }
}

TEST(EntropicEfficiency, Examples) {
  const std::vector<double> rates{0.25, 0.225513728528598964, 0.0827694316357046845, 0.132269452066933837};
  EXPECT_EQ(efficiency_normalizer(rates), 1);
  const double expected[] = {0.75, 0.774486271471401036, 0.917230568364295315, 0.867730547933066163};
  for (std::size_t i = 0; i < rates.size(); ++i) {
    EXPECT_NEAR(entropic_efficiency(rates, i), expected[i], 1e-15);
  }
  EXPECT_EQ(entropic_efficiency(std::vector<double>{1.0}, 0), 0.0);
  const std::vector<double> mixed{2.3, 0.5};
  EXPECT_EQ(efficiency_normalizer(mixed), 3);
  EXPECT_NEAR(entropic_efficiency(mixed, 0), 1 - 2.3 / 3, 1e-15);
  EXPECT_NEAR(entropic_efficiency(mixed, 1), 1 - 0.5 / 3, 1e-15);
}

TEST(EntropicEfficiency, SnapsNearIntegerRates) {
  EXPECT_EQ(efficiency_normalizer(std::vector<double>{2.0 + 1e-14}), 2);
  EXPECT_EQ(efficiency_normalizer(std::vector<double>{2.0 + 1e-9}), 3);
  EXPECT_EQ(efficiency_normalizer(std::vector<double>{1e-20}), 1);
}

TEST(EntropicEfficiency, BoundsHoldForRandomRates) {
  std::mt19937_64 gen = oracle::rng(99);
  std::uniform_real_distribution<double> rate(1e-6, 20.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> rates(1 + trial % 6);
    for (double& r : rates) r = rate(gen);
    const auto r = efficiency_normalizer(rates);
    EXPECT_GE(r, 1);
    for (std::size_t i = 0; i < rates.size(); ++i) {
      const double eta = entropic_efficiency(rates, i);
      EXPECT_GE(eta, 0.0);
      EXPECT_LT(eta, 1.0);
      EXPECT_EQ(eta, 1.0 - rates[i] / static_cast<double>(r));
    }
  }
}

TEST(EntropicEfficiency, RejectsBadInput) {
  EXPECT_THROW(efficiency_normalizer(std::vector<double>{}), DomainError);
  EXPECT_THROW(efficiency_normalizer(std::vector<double>{0.5, 0.0}), DomainError);
  EXPECT_THROW(entropic_efficiency(std::vector<double>{0.5}, 1), DomainError);
}

TEST(EntropicSummaries, ShareNormalizer) {
  std::vector<ScenarioParams> scenarios;
  for (ProfileKind kind : kAllProfileKinds) scenarios.push_back(make(kind, 2.0, 0.5));
  const auto rows = entropic_summaries(scenarios, 1.0, 1.0);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].rate, 4.0);
  for (const auto& row : rows) {
    EXPECT_EQ(row.normalizer, 4);
    EXPECT_EQ(row.rate, row.speed * row.speed);
  }
}

TEST(LambdaOfGamma, Examples) {
  const auto units = PhysicalConstants::dimensionless();
  EXPECT_NEAR(lambda_of_gamma(0.5, units), 1 / kPi, 1e-16);
  EXPECT_NEAR(lambda_of_gamma(units.h / 4 * 3.7, units), 3.7, 1e-15);
  const auto mksa = PhysicalConstants::mksa();
  EXPECT_NEAR(lambda_of_gamma(coupling_from_field(0.2, mksa), mksa), 37.3491582264328227, 1e-10);
}

TEST(SpeedRatio, Examples) {
  EXPECT_EQ(speed_ratio(3.0, 0.0), 1.0);
  EXPECT_NEAR(speed_ratio(1.0, 2.0), 0.821006233214516692, 1e-15);
  EXPECT_NEAR(speed_ratio(0.5, 6.0), 1.25534605769922923, 1e-14);
  EXPECT_NEAR(speed_ratio(4.0, 0.25), 0.679570457114761309, 1e-15);
  // Ratio of the two closed-form speeds at equal (Gamma, theta_dot0).
  for (double lambda : {0.1, 1.0, 6.0}) {
    for (double theta0 : {0.2, 1.0, 3.0}) {
      const double pl = entropic_speed(make(ProfileKind::PowerLaw, 1.0, lambda), theta0, 1.0);
      const double ex = entropic_speed(make(ProfileKind::Exponential, 1.0, lambda), theta0, 1.0);
      EXPECT_NEAR(speed_ratio(lambda, theta0), pl / ex, 1e-12 * pl / ex);
    }
  }
  EXPECT_THROW(speed_ratio(0.0, 1.0), DomainError);
}

TEST(RegionBoundary, RootAgreesWithLongDoubleBisection) {
  const long double oracle_root = oracle::bisect(
      [](long double z) { return std::exp(z) - (1 + z) * (1 + z); }, 1.0L, 4.0L);
  EXPECT_NEAR(region_boundary_root(), static_cast<double>(oracle_root), 1e-14);
  // 30-digit reference: 2.51286241725233935396547523322.
  EXPECT_NEAR(region_boundary_root(), 2.51286241725233935, 1e-14);
  EXPECT_LT(std::exp(2.51), 3.51 * 3.51);
  EXPECT_GT(std::exp(2.52), 3.52 * 3.52);
}

TEST(RegionMask, Examples) {
  const std::vector<double> lambdas{0.5, 1.0, 37.0};
  const std::vector<double> thetas{0.1, 1.0, 2.0, 5.0};
  const RegionGrid grid = region_mask(lambdas, thetas);
  EXPECT_FALSE(grid.in_region(2, 1));  // 37 >> z*
  EXPECT_TRUE(grid.in_region(1, 1));   // f_P(1) = e/4
  EXPECT_TRUE(grid.in_region(0, 0));
  EXPECT_FALSE(grid.in_region(1, 3));
  EXPECT_THROW(region_mask(std::vector<double>{1.0, 0.5}, thetas), DomainError);
  EXPECT_THROW(region_mask(lambdas, std::vector<double>{0.0, 1.0}), DomainError);
}

TEST(RegionMask, DefaultGridMatchesBoundaryCurve) {
  const RegionGrid grid = default_region_mask();
  ASSERT_EQ(grid.lambdas.size(), 512u);
  ASSERT_EQ(grid.thetas.size(), 512u);
  EXPECT_DOUBLE_EQ(grid.lambdas.front(), 1e-2);
  EXPECT_DOUBLE_EQ(grid.lambdas.back(), 1e2);
  EXPECT_DOUBLE_EQ(grid.thetas.back(), 5.0);
  for (std::size_t i = 0; i < grid.lambdas.size(); ++i) {
    for (std::size_t j = 0; j < grid.thetas.size(); ++j) {
      const double z = grid.lambdas[i] * grid.thetas[j];
      const std::size_t k = grid.index(i, j);
      ASSERT_EQ(grid.in_region(i, j), grid.ratios[k] < 1.0);
      ASSERT_EQ(grid.in_region(i, j), z < grid.boundary_root) << "z=" << z;
      ASSERT_EQ(grid.in_region(i, j), (1 + z) * (1 + z) > std::exp(z));
    }
  }
}

TEST(OrderingInequality, RestrictedRegimes) {
  for (int i = 0; i < 10000; ++i) {
    const double above = 2.52 + (700.0 - 2.52) * i / 9999.0;
    ASSERT_LE(std::exp(-above), 1 / ((1 + above) * (1 + above)));
    const double below = 2.51 * (i + 1) / 10000.0;
    ASSERT_GT(std::exp(-below), 1 / ((1 + below) * (1 + below)));
  }
}

}  // namespace
}  // namespace infogeo
