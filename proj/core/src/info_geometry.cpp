#include "infogeo/info_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "infogeo/errors.hpp"
#include "infogeo/quadrature.hpp"

namespace infogeo {

namespace {

void require_theta(double theta) {
  if (!(theta >= 0.0)) {
    throw DomainError("theta must be non-negative, got " + std::to_string(theta));
  }
}

// Returns the uniform spacing of the samples, or throws.
double check_spacing(std::span<const PathSample> path) {
  if (path.size() < 2) return 0.0;
  const double h = path[1].xi - path[0].xi;
  if (!(h > 0.0)) throw DomainError("path samples must be strictly increasing in xi");
  const double span = path.back().xi - path.front().xi;
  const double tol = 1e-9 * std::max(std::abs(span), h);
  for (std::size_t i = 1; i < path.size(); ++i) {
    const double expected = path.front().xi + static_cast<double>(i) * h;
    const double step = path[i].xi - path[i - 1].xi;
    if (!(step > 0.0) || std::abs(path[i].xi - expected) > tol) {
      throw DomainError("path samples must have uniform, increasing xi spacing");
    }
  }
  return span / static_cast<double>(path.size() - 1);
}

std::vector<double> squared_speeds(const FisherFunction& fisher,
                                   std::span<const PathSample> path) {
  std::vector<double> out;
  out.reserve(path.size());
  for (const PathSample& s : path) {
    out.push_back(s.theta_dot * metric_value(fisher, s.theta) * s.theta_dot);
  }
  return out;
}

}  // namespace

double fisher_closed_form(const ScenarioParams& scenario, double theta) {
  require_theta(theta);
  const double f0 = 4.0 * scenario.coupling_rate() * scenario.coupling_rate();
  const double lambda = scenario.lambda();
  switch (scenario.kind()) {
    case ProfileKind::Constant:
      return f0;
    case ProfileKind::Oscillatory: {
      const double c = std::cos(lambda * theta);
      return f0 * c * c;
    }
    case ProfileKind::PowerLaw:
      return f0 / std::pow(1.0 + lambda * theta, 4);
    case ProfileKind::Exponential:
      return f0 * std::exp(-2.0 * lambda * theta);
  }
  return 0.0;
}

double fisher_closed_form_derivative(const ScenarioParams& scenario,
                                     double theta) {
  require_theta(theta);
  const double f0 = 4.0 * scenario.coupling_rate() * scenario.coupling_rate();
  const double lambda = scenario.lambda();
  switch (scenario.kind()) {
    case ProfileKind::Constant:
      return 0.0;
    case ProfileKind::Oscillatory:
      return -f0 * lambda * std::sin(2.0 * lambda * theta);
    case ProfileKind::PowerLaw:
      return -4.0 * f0 * lambda / std::pow(1.0 + lambda * theta, 5);
    case ProfileKind::Exponential:
      return -2.0 * lambda * f0 * std::exp(-2.0 * lambda * theta);
  }
  return 0.0;
}

double metric_value(const FisherFunction& fisher, double theta) {
  const double f = fisher.fisher(theta);
  return fisher.normalization() == MetricNormalization::FubiniStudy ? 0.25 * f : f;
}

NumericFisher fisher_numeric(const ProbabilityPath& path, double theta,
                             double h_step, DegeneratePolicy policy) {
  require_theta(theta);
  if (!(h_step > 0.0)) throw DomainError("finite-difference step must be positive");
  const ProbabilityPair p = path(theta);
  if (p.success < kProbabilityFloor || p.success > 1.0 - kProbabilityFloor) {
    if (policy == DegeneratePolicy::Throw) {
      throw NearDegenerateError("p_w = " + std::to_string(p.success) +
                                " is at a probability endpoint");
    }
    const double rate = omega_h(path.scenario(), theta) / path.scenario().hbar();
    return {4.0 * rate * rate, true};
  }
  if (!(theta > h_step)) {
    throw DomainError("central difference needs theta > h_step");
  }
  const ProbabilityPair up = path(theta + h_step);
  const ProbabilityPair down = path(theta - h_step);
  const double dw = (up.success - down.success) / (2.0 * h_step);
  const double dperp = (up.failure - down.failure) / (2.0 * h_step);
  return {dw * dw / p.success + dperp * dperp / p.failure, false};
}

NumericFisher fisher_numeric(const ProbabilityPath& path, double theta,
                             DegeneratePolicy policy) {
  return fisher_numeric(path, theta, 1e-5 * std::max(1.0, std::abs(theta)), policy);
}

std::vector<PathSample> sample_path(const std::function<double(double)>& theta,
                                    const std::function<double(double)>& theta_dot,
                                    double xi_begin, double xi_end, double dxi) {
  if (!(dxi > 0.0)) throw DomainError("dxi must be positive");
  if (!(xi_end >= xi_begin)) throw DomainError("path interval is reversed");
  const double span = xi_end - xi_begin;
  std::size_t n = static_cast<std::size_t>(std::ceil(span / dxi - 1e-9));
  if (n == 0) n = 1;
  const double h = span / static_cast<double>(n);
  std::vector<PathSample> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double xi = i == n ? xi_end : xi_begin + static_cast<double>(i) * h;
    out.push_back({xi, theta(xi), theta_dot(xi)});
  }
  return out;
}

double entropic_length(const FisherFunction& fisher,
                       std::span<const PathSample> path) {
  const double h = check_spacing(path);
  std::vector<double> integrand = squared_speeds(fisher, path);
  for (double& v : integrand) v = std::sqrt(v);
  return composite_simpson(integrand, h);
}

double entropic_divergence(const FisherFunction& fisher,
                           std::span<const PathSample> path) {
  const double h = check_spacing(path);
  return composite_simpson(squared_speeds(fisher, path), h);
}

PathFunctional path_functional(const FisherFunction& fisher,
                               std::span<const PathSample> path) {
  const double h = check_spacing(path);
  std::vector<double> squared = squared_speeds(fisher, path);
  std::vector<double> speeds(squared.size());
  std::transform(squared.begin(), squared.end(), speeds.begin(),
                 [](double v) { return std::sqrt(v); });
  const double tau = path.empty() ? 0.0 : path.back().xi - path.front().xi;
  return {composite_simpson(speeds, h), composite_simpson(squared, h), tau, h};
}

}  // namespace infogeo
