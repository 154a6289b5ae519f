#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "infogeo/info_geometry.hpp"

namespace infogeo {

/// theta'' = -(1/2F) (dF/dtheta) theta'^2 on the one-parameter manifold.
/// Throws SingularityError where F vanishes (oscillatory, cos(lambda theta) = 0).
double geodesic_rhs(const ScenarioParams& scenario, double theta,
                    double theta_dot);

struct GeodesicInitialData {
  double theta0;
  double theta_dot0;
  double xi0 = 0.0;
};

/// Anchored: theta = asin(lambda (xi - xi0)) / lambda + theta0, pinned to the
/// origin; it solves the geodesic equation only for theta0 = 0,
/// theta_dot0 = 1, xi0 = 0.
/// Exact: sin(lambda theta) affine in xi.
enum class OscillatoryForm { Anchored, Exact };

/// Closed-form optimum path theta(xi) with its validity domain
/// [xi_min, xi_max). Evaluation outside the domain throws DomainError.
class GeodesicSolution {
 public:
  const ScenarioParams& scenario() const noexcept { return scenario_; }
  const GeodesicInitialData& initial() const noexcept { return initial_; }
  OscillatoryForm form() const noexcept { return form_; }
  double xi_min() const noexcept { return xi_min_; }
  double xi_max() const noexcept { return xi_max_; }
  bool contains(double xi) const noexcept { return xi >= xi_min_ && xi < xi_max_; }

  double theta(double xi) const;
  /// Analytic d theta / d xi.
  double rate(double xi) const;
  /// Analytic d^2 theta / d xi^2.
  double acceleration(double xi) const;
  /// acceleration - geodesic_rhs(theta, rate).
  double residual(double xi) const;

 private:
  friend GeodesicSolution geodesic_closed_form(const ScenarioParams&,
                                               const GeodesicInitialData&,
                                               OscillatoryForm);
  GeodesicSolution(ScenarioParams scenario, GeodesicInitialData initial,
                   OscillatoryForm form);
  void require(double xi) const;

  ScenarioParams scenario_;
  GeodesicInitialData initial_;
  OscillatoryForm form_;
  double xi_min_;
  double xi_max_;
  // Oscillatory exact form: lambda theta = branch_ pi + sign_ asin(A(xi)).
  double branch_ = 0.0;
  double sign_ = 1.0;
};

/// Requires theta0 >= 0, theta_dot0 > 0; rejects oscillatory initial data
/// with cos(lambda theta0) = 0.
GeodesicSolution geodesic_closed_form(
    const ScenarioParams& scenario, const GeodesicInitialData& initial,
    OscillatoryForm form = OscillatoryForm::Exact);

struct GeodesicTrajectory {
  std::vector<PathSample> samples;
  /// Integration stopped before xi_max because the path ran into a
  /// singular boundary of the scenario.
  bool domain_exit = false;
};

inline constexpr double kDefaultGeodesicStep = 1e-4;

/// Fixed-step RK4 integration of geodesic_rhs from xi0 to xi_max. Each step
/// is checked against two half steps; a discrepancy above 1e-8 max(1,|theta|)
/// throws StepTooLargeError. When the velocity changes by more than 1% per
/// step after it has grown tenfold, the path is approaching a singular
/// boundary and integration stops with domain_exit set.
GeodesicTrajectory solve_geodesic_numeric(const ScenarioParams& scenario,
                                          const GeodesicInitialData& initial,
                                          double xi_max,
                                          double dxi = kDefaultGeodesicStep);

/// sqrt(g(theta0)) theta_dot0.
double entropic_speed(const ScenarioParams& scenario, double theta0,
                      double theta_dot0,
                      MetricNormalization normalization = MetricNormalization::FubiniStudy);

/// g(theta0) theta_dot0^2, computed as the square of entropic_speed.
double entropy_production_rate(
    const ScenarioParams& scenario, double theta0, double theta_dot0,
    MetricNormalization normalization = MetricNormalization::FubiniStudy);

/// r = max_i ceil(r_i), with rates within 1e-12 of an integer snapped to it.
std::int64_t efficiency_normalizer(std::span<const double> rates);

/// 1 - rates[index] / r.
double entropic_efficiency(std::span<const double> rates, std::size_t index);

struct EntropicSummary {
  ScenarioParams scenario;
  double speed;
  double rate;
  double efficiency;
  std::int64_t normalizer;
  std::optional<double> length;
  std::optional<double> divergence;
};

/// Speed, rate and efficiency of each scenario's geodesic through
/// (theta0, theta_dot0), sharing one normalizer.
std::vector<EntropicSummary> entropic_summaries(
    std::span<const ScenarioParams> scenarios, double theta0, double theta_dot0,
    MetricNormalization normalization = MetricNormalization::FubiniStudy);

/// lambda(Gamma) = 4 Gamma / h.
double lambda_of_gamma(double gamma, const PhysicalConstants& constants);

/// Gamma = |e| hbar B_perp / (2 m c).
double coupling_from_field(double b_perp, const PhysicalConstants& constants);

/// f_P = exp(lambda theta0) / (1 + lambda theta0)^2, the power-law to
/// exponential entropic speed ratio.
double speed_ratio(double lambda, double theta0);

/// Positive root z* of exp(z) = (1 + z)^2, by bisection.
double region_boundary_root();

struct RegionGrid {
  std::vector<double> lambdas;
  std::vector<double> thetas;
  /// Row-major over (lambda, theta0).
  std::vector<double> ratios;
  std::vector<std::uint8_t> mask;
  double boundary_root;

  std::size_t index(std::size_t i_lambda, std::size_t i_theta) const {
    return i_lambda * thetas.size() + i_theta;
  }
  bool in_region(std::size_t i_lambda, std::size_t i_theta) const {
    return mask[index(i_lambda, i_theta)] != 0;
  }
};

/// Cells where the exponential strategy is faster than the power law,
/// i.e. f_P < 1. Grids must be strictly positive and ascending.
RegionGrid region_mask(std::span<const double> lambdas,
                       std::span<const double> thetas);

std::vector<double> log_spaced(double lo, double hi, std::size_t n);
/// n points in (0, hi]: hi / n, 2 hi / n, ..., hi.
std::vector<double> positive_linear(double hi, std::size_t n);

/// 512 x 512: lambda log-spaced on [1e-2, 1e2], theta0 linear on (0, 5].
RegionGrid default_region_mask();

}  // namespace infogeo
