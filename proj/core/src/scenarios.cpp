#include "infogeo/scenarios.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "infogeo/errors.hpp"

namespace infogeo {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

void require_theta(double theta) {
  if (!(theta >= 0.0)) {
    throw DomainError("theta must be non-negative, got " + std::to_string(theta));
  }
}

}  // namespace

ScenarioParams::ScenarioParams(FieldProfile profile, double hbar)
    : profile_(profile), hbar_(hbar) {
  if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
}

ScenarioParams ScenarioParams::from_rate(ProfileKind kind, double coupling_rate,
                                         double lambda, double hbar) {
  return ScenarioParams(FieldProfile::make(kind, coupling_rate * hbar, lambda), hbar);
}

ScenarioParams ScenarioParams::unit_peak(ProfileKind kind, double lambda,
                                         double hbar) {
  if (kind == ProfileKind::Constant) {
    throw DomainError("the unit-peak convention needs a modulation rate");
  }
  const double h = 2.0 * std::numbers::pi * hbar;
  return ScenarioParams(FieldProfile::make(kind, 0.25 * h * lambda, lambda), hbar);
}

std::optional<double> ScenarioParams::kappa() const {
  if (kind() == ProfileKind::Constant) return std::nullopt;
  return gamma() / (hbar_ * lambda());
}

double omega_h(const ScenarioParams& scenario, double t) {
  return scenario.profile().intensity(t);
}

double accumulated_phase(const ScenarioParams& scenario, double theta) {
  require_theta(theta);
  const double rate = scenario.coupling_rate();
  const double lambda = scenario.lambda();
  switch (scenario.kind()) {
    case ProfileKind::Constant:
      return rate * theta;
    case ProfileKind::Oscillatory:
      return rate / lambda * std::sin(lambda * theta);
    case ProfileKind::PowerLaw: {
      // 1 - 1/(1 + x) = x/(1 + x) avoids cancellation for small x.
      const double x = lambda * theta;
      return rate / lambda * (x / (1.0 + x));
    }
    case ProfileKind::Exponential:
      return rate / lambda * -std::expm1(-lambda * theta);
  }
  return 0.0;
}

ProbabilityPair success_probability(const ScenarioParams& scenario,
                                    double theta) {
  const double g = accumulated_phase(scenario, theta);
  const double s = std::sin(g);
  const double c = std::cos(g);
  const double s2 = s * s;
  const double c2 = c * c;
  if (s2 <= c2) return {s2, 1.0 - s2};
  return {1.0 - c2, c2};
}

PeakTheta peak_theta(const ScenarioParams& scenario) {
  constexpr double kTol = 1e-15;
  const double lambda = scenario.lambda();
  if (scenario.kind() == ProfileKind::Constant) {
    return {kHalfPi / scenario.coupling_rate(), false};
  }
  const double kappa = *scenario.kappa();
  // sup g = kappa for all three modulated kinds.
  if (kappa < kHalfPi * (1.0 - kTol)) {
    throw NoUnitPeakError("phase supremum " + std::to_string(kappa) +
                          " is below pi/2; p_w never reaches one");
  }
  const double target = std::min(1.0, kHalfPi / kappa);  // required g / kappa
  switch (scenario.kind()) {
    case ProfileKind::Oscillatory:
      return {std::asin(target) / lambda, false};
    case ProfileKind::PowerLaw:
      if (target >= 1.0 - kTol) return {std::numeric_limits<double>::infinity(), true};
      return {target / (1.0 - target) / lambda, false};
    case ProfileKind::Exponential:
      if (target >= 1.0 - kTol) return {std::numeric_limits<double>::infinity(), true};
      return {-std::log1p(-target) / lambda, false};
    case ProfileKind::Constant:
      break;
  }
  return {0.0, false};
}

}  // namespace infogeo
