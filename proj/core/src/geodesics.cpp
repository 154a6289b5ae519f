#include "infogeo/geodesics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "infogeo/errors.hpp"
#include "infogeo/ode.hpp"

namespace infogeo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

// Below this |cos(lambda theta)| the oscillatory metric is treated as zero.
constexpr double kCosFloor = 1e-12;

}  // namespace

double geodesic_rhs(const ScenarioParams& scenario, double theta,
                    double theta_dot) {
  const double lambda = scenario.lambda();
  const double v2 = theta_dot * theta_dot;
  switch (scenario.kind()) {
    case ProfileKind::Constant:
      return 0.0;
    case ProfileKind::Oscillatory: {
      const double c = std::cos(lambda * theta);
      if (std::abs(c) < kCosFloor) {
        throw SingularityError("oscillatory Fisher information vanishes at lambda theta = " +
                               std::to_string(lambda * theta));
      }
      return lambda * std::sin(lambda * theta) / c * v2;
    }
    case ProfileKind::PowerLaw: {
      const double d = 1.0 + lambda * theta;
      if (!(d > 0.0)) throw SingularityError("power-law metric undefined for 1 + lambda theta <= 0");
      return 2.0 * lambda / d * v2;
    }
    case ProfileKind::Exponential:
      return lambda * v2;
  }
  return 0.0;
}

GeodesicSolution::GeodesicSolution(ScenarioParams scenario,
                                   GeodesicInitialData initial,
                                   OscillatoryForm form)
    : scenario_(std::move(scenario)), initial_(initial), form_(form) {
  const double t0 = initial_.theta0;
  const double v0 = initial_.theta_dot0;
  const double x0 = initial_.xi0;
  if (!(t0 >= 0.0) || !std::isfinite(t0)) throw DomainError("theta0 must be non-negative");
  if (!(v0 > 0.0) || !std::isfinite(v0)) throw DomainError("theta_dot0 must be positive");
  const double lambda = scenario_.lambda();

  // The lower end is where theta reaches the manifold boundary theta = 0.
  switch (scenario_.kind()) {
    case ProfileKind::Constant:
      xi_min_ = x0 - t0 / v0;
      xi_max_ = kInf;
      break;
    case ProfileKind::PowerLaw: {
      const double u0 = 1.0 + lambda * t0;
      xi_min_ = x0 - u0 * t0 / v0;
      xi_max_ = x0 + u0 / (lambda * v0);
      break;
    }
    case ProfileKind::Exponential:
      xi_min_ = x0 - std::expm1(lambda * t0) / (lambda * v0);
      xi_max_ = x0 + 1.0 / (lambda * v0);
      break;
    case ProfileKind::Oscillatory: {
      const double c0 = std::cos(lambda * t0);
      if (std::abs(c0) < kCosFloor) {
        throw DomainError("oscillatory initial data sits on a zero of the Fisher information");
      }
      if (form_ == OscillatoryForm::Exact) {
        const double k = std::round(lambda * t0 / kPi);
        branch_ = k;
        sign_ = std::fmod(k, 2.0) == 0.0 ? 1.0 : -1.0;
        const double s0 = std::sin(lambda * t0);
        const double slope = lambda * v0 * c0;  // dA/dxi; sign_ * slope > 0
        xi_max_ = x0 + (sign_ - s0) / slope;
        xi_min_ = x0 + (-sign_ - s0) / slope;
        if (k == 0.0) xi_min_ = std::max(xi_min_, x0 - s0 / slope);
      } else {
        if (std::abs(lambda * x0) > 1.0) {
          throw DomainError("anchored oscillatory form needs |lambda xi0| <= 1");
        }
        const double amp = std::sqrt(1.0 - lambda * lambda * x0 * x0) / lambda * v0;
        xi_max_ = 1.0 / lambda;
        xi_min_ = -1.0 / lambda;
        const double arg = std::asin(lambda * x0) - t0 / amp;
        if (arg >= -kHalfPi) xi_min_ = std::max(xi_min_, std::sin(arg) / lambda);
      }
      break;
    }
  }
}

GeodesicSolution geodesic_closed_form(const ScenarioParams& scenario,
                                      const GeodesicInitialData& initial,
                                      OscillatoryForm form) {
  return GeodesicSolution(scenario, initial, form);
}

void GeodesicSolution::require(double xi) const {
  if (!contains(xi)) {
    throw DomainError("xi = " + std::to_string(xi) + " outside geodesic domain [" +
                      std::to_string(xi_min_) + ", " + std::to_string(xi_max_) + ")");
  }
}

double GeodesicSolution::theta(double xi) const {
  require(xi);
  const double t0 = initial_.theta0;
  const double v0 = initial_.theta_dot0;
  const double s = xi - initial_.xi0;
  const double lambda = scenario_.lambda();
  switch (scenario_.kind()) {
    case ProfileKind::Constant:
      return t0 + v0 * s;
    case ProfileKind::PowerLaw: {
      const double u0 = 1.0 + lambda * t0;
      const double a = u0 / (lambda * v0);
      const double num = u0 * u0 + lambda * v0 * (s - a);
      const double den = lambda * lambda * v0 * (a - s);
      return num / den;
    }
    case ProfileKind::Exponential:
      return t0 - std::log1p(-lambda * v0 * s) / lambda;
    case ProfileKind::Oscillatory: {
      if (form_ == OscillatoryForm::Anchored) {
        const double x0 = initial_.xi0;
        const double amp = std::sqrt(1.0 - lambda * lambda * x0 * x0) / lambda * v0;
        return t0 + amp * (std::asin(lambda * xi) - std::asin(lambda * x0));
      }
      const double a = std::clamp(
          std::sin(lambda * t0) + lambda * v0 * std::cos(lambda * t0) * s, -1.0, 1.0);
      return (branch_ * kPi + sign_ * std::asin(a)) / lambda;
    }
  }
  return 0.0;
}

double GeodesicSolution::rate(double xi) const {
  require(xi);
  const double t0 = initial_.theta0;
  const double v0 = initial_.theta_dot0;
  const double s = xi - initial_.xi0;
  const double lambda = scenario_.lambda();
  switch (scenario_.kind()) {
    case ProfileKind::Constant:
      return v0;
    case ProfileKind::PowerLaw: {
      const double u0 = 1.0 + lambda * t0;
      const double d = u0 - lambda * v0 * s;
      return u0 * u0 * v0 / (d * d);
    }
    case ProfileKind::Exponential:
      return v0 / (1.0 - lambda * v0 * s);
    case ProfileKind::Oscillatory: {
      if (form_ == OscillatoryForm::Anchored) {
        const double x0 = initial_.xi0;
        return std::sqrt(1.0 - lambda * lambda * x0 * x0) * v0 /
               std::sqrt(1.0 - lambda * lambda * xi * xi);
      }
      const double slope = lambda * v0 * std::cos(lambda * t0);
      const double a = std::sin(lambda * t0) + slope * s;
      return sign_ * slope / (lambda * std::sqrt(1.0 - a * a));
    }
  }
  return 0.0;
}

double GeodesicSolution::acceleration(double xi) const {
  require(xi);
  const double t0 = initial_.theta0;
  const double v0 = initial_.theta_dot0;
  const double s = xi - initial_.xi0;
  const double lambda = scenario_.lambda();
  switch (scenario_.kind()) {
    case ProfileKind::Constant:
      return 0.0;
    case ProfileKind::PowerLaw: {
      const double u0 = 1.0 + lambda * t0;
      const double d = u0 - lambda * v0 * s;
      return 2.0 * lambda * u0 * u0 * v0 * v0 / (d * d * d);
    }
    case ProfileKind::Exponential: {
      const double d = 1.0 - lambda * v0 * s;
      return lambda * v0 * v0 / (d * d);
    }
    case ProfileKind::Oscillatory: {
      if (form_ == OscillatoryForm::Anchored) {
        const double x0 = initial_.xi0;
        const double q = 1.0 - lambda * lambda * xi * xi;
        return std::sqrt(1.0 - lambda * lambda * x0 * x0) * v0 * lambda * lambda * xi /
               (q * std::sqrt(q));
      }
      const double slope = lambda * v0 * std::cos(lambda * t0);
      const double a = std::sin(lambda * t0) + slope * s;
      const double q = 1.0 - a * a;
      return sign_ * slope * slope * a / (lambda * q * std::sqrt(q));
    }
  }
  return 0.0;
}

double GeodesicSolution::residual(double xi) const {
  return acceleration(xi) - geodesic_rhs(scenario_, theta(xi), rate(xi));
}

GeodesicTrajectory solve_geodesic_numeric(const ScenarioParams& scenario,
                                          const GeodesicInitialData& initial,
                                          double xi_max, double dxi) {
  if (!(xi_max > initial.xi0)) throw DomainError("xi_max must exceed xi0");
  if (!(dxi > 0.0)) throw DomainError("dxi must be positive");
  if (!(initial.theta0 >= 0.0)) throw DomainError("theta0 must be non-negative");
  if (!std::isfinite(initial.theta_dot0)) throw DomainError("theta_dot0 must be finite");
  // Rejects singular starting points.
  (void)geodesic_rhs(scenario, initial.theta0, initial.theta_dot0);

  using State = std::array<double, 2>;
  auto f = [&scenario](double, const State& y) {
    return State{y[1], geodesic_rhs(scenario, y[0], y[1])};
  };

  const double span = xi_max - initial.xi0;
  std::size_t n = static_cast<std::size_t>(std::ceil(span / dxi - 1e-9));
  if (n == 0) n = 1;
  const double h = span / static_cast<double>(n);
  const double v0 = std::abs(initial.theta_dot0);

  GeodesicTrajectory out;
  out.samples.reserve(n + 1);
  State y{initial.theta0, initial.theta_dot0};
  out.samples.push_back({initial.xi0, y[0], y[1]});
  for (std::size_t k = 0; k < n; ++k) {
    const double xi = initial.xi0 + static_cast<double>(k) * h;
    State full;
    State halves;
    try {
      const double accel = geodesic_rhs(scenario, y[0], y[1]);
      if (std::abs(accel) * h > 1e-2 * std::abs(y[1])) {
        if (std::abs(y[1]) >= 10.0 * v0) {
          out.domain_exit = true;
          break;
        }
        throw StepTooLargeError("geodesic velocity changes by more than 1% per step at xi = " +
                                std::to_string(xi));
      }
      full = rk4_step(f, xi, y, h);
      halves = rk4_step(f, xi + 0.5 * h, rk4_step(f, xi, y, 0.5 * h), 0.5 * h);
    } catch (const SingularityError&) {
      out.domain_exit = true;
      break;
    }
    if (!std::isfinite(full[0]) || !std::isfinite(full[1])) {
      out.domain_exit = true;
      break;
    }
    if (std::abs(full[0] - halves[0]) > 1e-8 * std::max(1.0, std::abs(full[0]))) {
      throw StepTooLargeError("geodesic local error check failed at xi = " +
                              std::to_string(xi));
    }
    y = full;
    const double next = k + 1 == n ? xi_max : initial.xi0 + static_cast<double>(k + 1) * h;
    out.samples.push_back({next, y[0], y[1]});
  }
  return out;
}

double entropic_speed(const ScenarioParams& scenario, double theta0,
                      double theta_dot0, MetricNormalization normalization) {
  if (!(theta_dot0 > 0.0)) throw DomainError("theta_dot0 must be positive");
  const FisherFunction fisher(scenario, normalization);
  return std::sqrt(metric_value(fisher, theta0)) * theta_dot0;
}

double entropy_production_rate(const ScenarioParams& scenario, double theta0,
                               double theta_dot0,
                               MetricNormalization normalization) {
  const double v = entropic_speed(scenario, theta0, theta_dot0, normalization);
  return v * v;
}

std::int64_t efficiency_normalizer(std::span<const double> rates) {
  if (rates.empty()) throw DomainError("efficiency needs at least one rate");
  std::int64_t r = 0;
  for (double rate : rates) {
    if (!(rate > 0.0) || !std::isfinite(rate)) {
      throw DomainError("entropy production rates must be positive and finite");
    }
    const double nearest = std::round(rate);
    const double ceiling = std::abs(rate - nearest) < 1e-12 && nearest >= 1.0
                               ? nearest
                               : std::ceil(rate);
    r = std::max(r, static_cast<std::int64_t>(ceiling));
  }
  return r;
}

double entropic_efficiency(std::span<const double> rates, std::size_t index) {
  const std::int64_t r = efficiency_normalizer(rates);
  if (index >= rates.size()) throw DomainError("efficiency index out of range");
  return 1.0 - rates[index] / static_cast<double>(r);
}

std::vector<EntropicSummary> entropic_summaries(
    std::span<const ScenarioParams> scenarios, double theta0, double theta_dot0,
    MetricNormalization normalization) {
  std::vector<double> rates;
  std::vector<double> speeds;
  for (const ScenarioParams& s : scenarios) {
    speeds.push_back(entropic_speed(s, theta0, theta_dot0, normalization));
    rates.push_back(speeds.back() * speeds.back());
  }
  const std::int64_t r = efficiency_normalizer(rates);
  std::vector<EntropicSummary> out;
  out.reserve(scenarios.size());
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    out.push_back({scenarios[i], speeds[i], rates[i],
                   1.0 - rates[i] / static_cast<double>(r), r, std::nullopt,
                   std::nullopt});
  }
  return out;
}

double lambda_of_gamma(double gamma, const PhysicalConstants& constants) {
  if (!(gamma > 0.0)) throw DomainError("Gamma must be positive");
  return 4.0 * gamma / constants.h;
}

double coupling_from_field(double b_perp, const PhysicalConstants& constants) {
  return constants.bohr_magneton * std::abs(b_perp);
}

double speed_ratio(double lambda, double theta0) {
  if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
  if (!(theta0 >= 0.0)) throw DomainError("theta0 must be non-negative");
  const double z = lambda * theta0;
  return std::exp(z - 2.0 * std::log1p(z));
}

double region_boundary_root() {
  // q(z) = z - 2 log(1 + z): negative on (0, z*), positive beyond.
  auto q = [](double z) { return z - 2.0 * std::log1p(z); };
  double lo = 1.0;
  double hi = 4.0;
  for (int i = 0; i < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (q(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

void require_positive_ascending(std::span<const double> grid, const char* name) {
  if (grid.empty()) throw DomainError(std::string(name) + " grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || (i > 0 && !(grid[i] > grid[i - 1]))) {
      throw DomainError(std::string(name) + " grid must be positive and strictly ascending");
    }
  }
}

}  // namespace

RegionGrid region_mask(std::span<const double> lambdas,
                       std::span<const double> thetas) {
  require_positive_ascending(lambdas, "lambda");
  require_positive_ascending(thetas, "theta0");
  RegionGrid grid;
  grid.lambdas.assign(lambdas.begin(), lambdas.end());
  grid.thetas.assign(thetas.begin(), thetas.end());
  grid.ratios.resize(lambdas.size() * thetas.size());
  grid.mask.resize(grid.ratios.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    for (std::size_t j = 0; j < thetas.size(); ++j) {
      const double ratio = speed_ratio(lambdas[i], thetas[j]);
      grid.ratios[grid.index(i, j)] = ratio;
      grid.mask[grid.index(i, j)] = ratio < 1.0 ? 1 : 0;
    }
  }
  grid.boundary_root = region_boundary_root();
  return grid;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) {
    throw DomainError("log_spaced needs 0 < lo < hi and n >= 2");
  }
  std::vector<double> out(n);
  const double step = std::log(hi / lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo * std::exp(step * static_cast<double>(i));
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> positive_linear(double hi, std::size_t n) {
  if (!(hi > 0.0) || n == 0) throw DomainError("positive_linear needs hi > 0 and n >= 1");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = hi * static_cast<double>(i + 1) / static_cast<double>(n);
  }
  return out;
}

RegionGrid default_region_mask() {
  const std::vector<double> lambdas = log_spaced(1e-2, 1e2, 512);
  const std::vector<double> thetas = positive_linear(5.0, 512);
  return region_mask(lambdas, thetas);
}

}  // namespace infogeo
