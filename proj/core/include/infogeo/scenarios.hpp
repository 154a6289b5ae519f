#pragma once

#include <optional>

#include "infogeo/su2_dynamics.hpp"

namespace infogeo {

/// A driving scenario: field profile plus the hbar it is measured against.
class ScenarioParams {
 public:
  explicit ScenarioParams(FieldProfile profile, double hbar = 1.0);

  /// Gamma = hbar * coupling_rate.
  static ScenarioParams from_rate(ProfileKind kind, double coupling_rate,
                                  double lambda, double hbar = 1.0);
  /// Gamma = (h/4) lambda, so that kappa = pi/2 and the success probability
  /// peaks at exactly one.
  static ScenarioParams unit_peak(ProfileKind kind, double lambda,
                                  double hbar = 1.0);

  const FieldProfile& profile() const noexcept { return profile_; }
  ProfileKind kind() const noexcept { return profile_.kind(); }
  double hbar() const noexcept { return hbar_; }
  double gamma() const noexcept { return profile_.gamma(); }
  double lambda() const noexcept { return profile_.lambda(); }
  /// Gamma / hbar.
  double coupling_rate() const noexcept { return profile_.gamma() / hbar_; }
  /// Gamma / (hbar lambda); empty for Constant.
  std::optional<double> kappa() const;

 private:
  FieldProfile profile_;
  double hbar_;
};

struct ProbabilityPair {
  double success;  ///< p_w
  double failure;  ///< p_w_perp
};

/// omega_H(t).
double omega_h(const ScenarioParams& scenario, double t);

/// g(theta) = integral_0^theta omega_H(t) / hbar dt, in closed form.
double accumulated_phase(const ScenarioParams& scenario, double theta);

/// (sin^2 g, cos^2 g). The smaller member is evaluated directly and the
/// other as its complement, so the pair sums to one exactly.
ProbabilityPair success_probability(const ScenarioParams& scenario,
                                    double theta);

/// theta -> (p_w, p_w_perp) on theta >= 0.
class ProbabilityPath {
 public:
  explicit ProbabilityPath(ScenarioParams scenario)
      : scenario_(std::move(scenario)) {}

  const ScenarioParams& scenario() const noexcept { return scenario_; }
  ProbabilityPair operator()(double theta) const {
    return success_probability(scenario_, theta);
  }

 private:
  ScenarioParams scenario_;
};

struct PeakTheta {
  /// Smallest theta with p_w = 1; +infinity when only approached.
  double theta;
  bool asymptotic;
};

/// Throws NoUnitPeakError when sup g < pi/2.
PeakTheta peak_theta(const ScenarioParams& scenario);

}  // namespace infogeo
