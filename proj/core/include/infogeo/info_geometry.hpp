#pragma once

#include <functional>
#include <span>
#include <vector>

#include "infogeo/scenarios.hpp"

namespace infogeo {

/// RawFisher uses F itself as the metric; FubiniStudy uses g = F / 4, which
/// is the normalization the reference entropic speeds and rates use.
enum class MetricNormalization { RawFisher, FubiniStudy };

/// Closed-form Fisher information of the (p_w, p_w_perp) manifold:
/// 4 (Gamma/hbar)^2 times 1, cos^2(lambda theta), (1 + lambda theta)^-4 or
/// exp(-2 lambda theta).
double fisher_closed_form(const ScenarioParams& scenario, double theta);

/// dF/dtheta of the closed form.
double fisher_closed_form_derivative(const ScenarioParams& scenario,
                                     double theta);

class FisherFunction {
 public:
  explicit FisherFunction(
      ScenarioParams scenario,
      MetricNormalization normalization = MetricNormalization::FubiniStudy)
      : scenario_(std::move(scenario)), normalization_(normalization) {}

  const ScenarioParams& scenario() const noexcept { return scenario_; }
  MetricNormalization normalization() const noexcept { return normalization_; }

  double fisher(double theta) const {
    return fisher_closed_form(scenario_, theta);
  }

 private:
  ScenarioParams scenario_;
  MetricNormalization normalization_;
};

/// F under RawFisher, F / 4 under FubiniStudy.
double metric_value(const FisherFunction& fisher, double theta);

enum class DegeneratePolicy { Fallback, Throw };

struct NumericFisher {
  double value;
  /// True when the analytic value 4 omega_H^2 / hbar^2 was substituted.
  bool fallback;
};

inline constexpr double kProbabilityFloor = 1e-12;

/// sum_k (dp_k/dtheta)^2 / p_k with central differences of half-width
/// h_step. When p_w is within kProbabilityFloor of 0 or 1 the sum is
/// singular; the analytic value is returned (Fallback) or
/// NearDegenerateError is thrown (Throw). Requires theta > h_step > 0
/// otherwise.
NumericFisher fisher_numeric(const ProbabilityPath& path, double theta,
                             double h_step,
                             DegeneratePolicy policy = DegeneratePolicy::Fallback);

/// Same with h_step = 1e-5 max(1, |theta|).
NumericFisher fisher_numeric(const ProbabilityPath& path, double theta,
                             DegeneratePolicy policy = DegeneratePolicy::Fallback);

/// One point of a parametrized path theta(xi).
struct PathSample {
  double xi;
  double theta;
  double theta_dot;
};

/// Samples theta and its derivative on a uniform grid over [xi_begin,
/// xi_end] with spacing at most dxi (the grid always ends exactly on
/// xi_end).
std::vector<PathSample> sample_path(const std::function<double(double)>& theta,
                                    const std::function<double(double)>& theta_dot,
                                    double xi_begin, double xi_end, double dxi);

/// L = integral sqrt(theta_dot g(theta) theta_dot) dxi (composite Simpson).
/// Throws DomainError unless xi is strictly increasing with uniform spacing.
double entropic_length(const FisherFunction& fisher,
                       std::span<const PathSample> path);

/// I = integral theta_dot g(theta) theta_dot dxi (composite Simpson), the
/// unscaled divergence in thermodynamic time. Cauchy-Schwarz gives
/// tau * I >= L^2, i.e. I >= L^2 on a unit interval.
double entropic_divergence(const FisherFunction& fisher,
                           std::span<const PathSample> path);

struct PathFunctional {
  double length;
  double divergence;
  double tau;
  double dxi;

  /// tau * I - L^2, non-negative up to quadrature error.
  double cauchy_schwarz_gap() const { return tau * divergence - length * length; }
};

PathFunctional path_functional(const FisherFunction& fisher,
                               std::span<const PathSample> path);

}  // namespace infogeo
