#pragma once

#include <cstddef>
#include <iterator>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "infogeo/constants.hpp"
#include "infogeo/geodesics.hpp"

namespace infogeo::cli {

/// Bad flag, bad config file entry or a parameter outside its domain.
/// Maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { Simulate, Fisher, Geodesic, Report, Region, Fields };
enum class OutputFormat { Csv, Json };
enum class UnitSystem { Dimensionless, Mksa };

std::string_view to_string(Command command);

struct RunConfig {
  Command command = Command::Simulate;
  std::vector<ProfileKind> scenarios{std::begin(kAllProfileKinds), std::end(kAllProfileKinds)};

  UnitSystem units = UnitSystem::Dimensionless;
  double gamma_over_hbar = 1.0;
  double lambda = 2.0 / std::numbers::pi;
  /// Alternatives to gamma_over_hbar, applied by resolve(): Gamma from a
  /// transverse field magnitude, or Gamma / (hbar lambda).
  std::optional<double> b_perp;
  std::optional<double> kappa;
  /// lambda = 4 Gamma / h, applied by resolve().
  bool lambda_from_gamma = false;
  double omega0 = -15.0 * std::numbers::pi;
  /// Precession rate override; unset means on resonance with omega0.
  std::optional<double> phase_rate;
  bool allow_off_resonance = false;

  double theta0 = 0.0;
  double theta_dot0 = 1.0;
  double xi0 = 0.0;

  double t_max = 10.0;
  double xi_max = 1.0;
  std::size_t grid = 101;
  double dt = kDefaultPropagatorStep;
  double dxi = kDefaultGeodesicStep;
  /// Fisher central-difference half width; unset picks 1e-5 max(1, theta).
  std::optional<double> h_step;

  double lambda_min = 1e-2;
  double lambda_max = 1e2;
  std::size_t lambda_count = 512;
  double theta_max = 5.0;
  std::size_t theta_count = 512;

  MetricNormalization normalization = MetricNormalization::FubiniStudy;
  OscillatoryForm form = OscillatoryForm::Exact;
  OutputFormat format = OutputFormat::Csv;
  std::string out;
  /// Unset uses the per-command default (1e-8 simulate, 1e-6 geodesic).
  std::optional<double> tolerance;
  int precision = 12;

  PhysicalConstants constants() const;
  /// Scenario with Gamma = hbar * gamma_over_hbar for the configured units.
  ScenarioParams scenario(ProfileKind kind) const;
};

/// Parses "2/pi", "pi/2", "-15*pi", "0.25" and plain numbers. Evaluated
/// left to right over * and /.
double parse_expression(std::string_view text);

/// Comma-separated profile names or "all".
std::vector<ProfileKind> parse_scenarios(std::string_view text);

/// Folds b_perp, lambda_from_gamma and kappa (in that order) into
/// gamma_over_hbar and lambda, then clears them.
void resolve(RunConfig& config);

/// Throws ConfigError on any violated invariant.
void validate(const RunConfig& config);

}  // namespace infogeo::cli
