#include "infogeo/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "infogeo/errors.hpp"

namespace infogeo::cli {
namespace {

// Relative |tau I - L^2| / L^2 allowed along a closed-form geodesic.
constexpr double kGeodesicEqualityTolerance = 1e-8;

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  if (n == 1) return {lo};
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  out.back() = hi;
  return out;
}

// Smallest multiple of `multiple` that is >= ceil(span / step).
std::size_t aligned_steps(double span, double step, std::size_t multiple) {
  std::size_t n = static_cast<std::size_t>(std::ceil(span / step - 1e-9));
  n = std::max<std::size_t>(n, 1);
  if (multiple > 1) n = (n + multiple - 1) / multiple * multiple;
  return n;
}

std::string scenario_list(const RunConfig& config) {
  std::string out;
  for (ProfileKind kind : config.scenarios) {
    if (!out.empty()) out += ';';
    out += to_string(kind);
  }
  return out;
}

std::string_view normalization_name(MetricNormalization n) {
  return n == MetricNormalization::RawFisher ? "raw" : "fs";
}

std::string key(ProfileKind kind, std::string_view field) {
  return fmt::format("{}.{}", to_string(kind), field);
}

void add_scenario_meta(Table& table, const RunConfig& config) {
  table.add_meta("command", std::string(to_string(config.command)));
  table.add_meta("scenarios", scenario_list(config));
  table.add_meta("units", std::string(config.units == UnitSystem::Mksa ? "mksa" : "dimensionless"));
  table.add_meta("gamma_over_hbar", config.gamma_over_hbar);
  table.add_meta("lambda", config.lambda);
}

DrivingConfig driving(const RunConfig& config) {
  const PhysicalConstants c = config.constants();
  if (config.phase_rate) {
    return DrivingConfig::custom(*config.phase_rate, -0.5 * c.hbar * config.omega0);
  }
  return DrivingConfig::on_resonance(config.omega0, c);
}

void fail(CommandResult& result, std::string message) {
  result.passed = false;
  result.failures.push_back(std::move(message));
}

}  // namespace

std::string_view fisher_behavior(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::Constant: return "constant";
    case ProfileKind::Oscillatory: return "oscillatory";
    case ProfileKind::PowerLaw: return "power law decay";
    case ProfileKind::Exponential: return "exponential decay";
  }
  return "unknown";
}

std::string_view search_analogy(ProfileKind kind) {
  return kind == ProfileKind::Constant || kind == ProfileKind::Oscillatory ? "Grover-like"
                                                                            : "fixed-point-like";
}

CommandResult cmd_simulate(const RunConfig& config) {
  const double tolerance = config.tolerance.value_or(kSimulateTolerance);
  const PhysicalConstants constants = config.constants();
  const DrivingConfig drive = driving(config);

  CommandResult result;
  Table& table = result.table;
  add_scenario_meta(table, config);
  table.add_meta("omega0", config.omega0);
  table.add_meta("phase_rate", drive.phase_rate());
  table.add_meta("resonant", resonance_check(drive, constants));
  table.add_meta("t_max", config.t_max);
  table.add_meta("dt", config.dt);
  table.add_meta("grid", static_cast<std::int64_t>(config.grid));
  table.add_meta("tolerance", tolerance);
  table.columns = {"scenario", "t", "p_w_numeric", "p_w_closed", "p_wperp_closed", "abs_error"};

  for (ProfileKind kind : config.scenarios) {
    const ScenarioParams scenario = config.scenario(kind);
    std::vector<PropagatorState> states{PropagatorState{}};
    std::size_t stride = 1;
    if (config.grid > 1) {
      const std::size_t intervals = config.grid - 1;
      const std::size_t steps = aligned_steps(config.t_max, config.dt, intervals);
      PropagatorOptions options;
      options.allow_off_resonance = config.allow_off_resonance;
      states = integrate_propagator(scenario.profile(), drive, constants, config.t_max,
                                    config.t_max / static_cast<double>(steps), options);
      stride = steps / intervals;
    }
    double max_error = 0.0;
    for (std::size_t k = 0; k < states.size(); ++k) {
      const double numeric = transition_probability(states[k], 0.0);
      const ProbabilityPair closed = success_probability(scenario, states[k].t);
      const double error = std::abs(numeric - closed.success);
      max_error = std::max(max_error, error);
      if (k % stride == 0) {
        table.rows.push_back({std::string(to_string(kind)), states[k].t, numeric, closed.success,
                              closed.failure, error});
      }
    }
    table.add_meta(key(kind, "max_abs_error"), max_error);
    if (!(max_error <= tolerance)) {
      fail(result, fmt::format("{}: max |p_numeric - p_closed| = {:.3g} exceeds {:.3g}",
                               to_string(kind), max_error, tolerance));
    }
  }
  table.add_meta("status", std::string(result.passed ? "pass" : "fail"));
  return result;
}

CommandResult cmd_fisher(const RunConfig& config) {
  CommandResult result;
  Table& table = result.table;
  add_scenario_meta(table, config);
  table.add_meta("normalization", std::string(normalization_name(config.normalization)));
  if (config.h_step) {
    table.add_meta("h_step", *config.h_step);
  } else {
    table.add_meta("h_step", std::string("auto"));
  }
  table.columns = {"scenario", "theta", "f_closed", "f_numeric", "g_normalized", "fallback"};

  const std::vector<double> thetas = uniform_grid(0.0, config.t_max, config.grid);
  for (ProfileKind kind : config.scenarios) {
    const ScenarioParams scenario = config.scenario(kind);
    const ProbabilityPath path(scenario);
    const FisherFunction metric(scenario, config.normalization);
    double max_rel = 0.0;
    for (double theta : thetas) {
      const double closed = fisher_closed_form(scenario, theta);
      NumericFisher numeric{};
      try {
        numeric = config.h_step ? fisher_numeric(path, theta, *config.h_step) : fisher_numeric(path, theta);
      } catch (const DomainError&) {
        // theta inside the difference stencil of the boundary.
        const double w = omega_h(scenario, theta) / scenario.hbar();
        numeric = {4.0 * w * w, true};
      }
      if (!numeric.fallback && closed > 0.0) {
        max_rel = std::max(max_rel, std::abs(numeric.value - closed) / closed);
      }
      table.rows.push_back({std::string(to_string(kind)), theta, closed, numeric.value,
                            metric_value(metric, theta), numeric.fallback});
    }
    table.add_meta(key(kind, "max_rel_error"), max_rel);
  }
  return result;
}

CommandResult cmd_geodesic(const RunConfig& config) {
  const double tolerance = config.tolerance.value_or(kGeodesicTolerance);
  const GeodesicInitialData init{config.theta0, config.theta_dot0, config.xi0};

  CommandResult result;
  Table& table = result.table;
  add_scenario_meta(table, config);
  table.add_meta("theta0", config.theta0);
  table.add_meta("thetadot0", config.theta_dot0);
  table.add_meta("xi0", config.xi0);
  table.add_meta("xi_max", config.xi_max);
  table.add_meta("dxi", config.dxi);
  table.add_meta("grid", static_cast<std::int64_t>(config.grid));
  table.add_meta("form", std::string(config.form == OscillatoryForm::Anchored ? "anchored" : "exact"));
  table.add_meta("normalization", std::string(normalization_name(config.normalization)));
  table.add_meta("tolerance", tolerance);
  table.columns = {"scenario", "xi", "theta_closed", "theta_numeric", "speed", "abs_error"};

  for (ProfileKind kind : config.scenarios) {
    const ScenarioParams scenario = config.scenario(kind);
    const FisherFunction metric(scenario, config.normalization);
    const GeodesicSolution closed = geodesic_closed_form(scenario, init, config.form);
    if (!(config.xi_max < closed.xi_max())) {
      throw ConfigError(fmt::format("xi-max = {} lies outside the {} geodesic domain [{}, {})",
                                    config.xi_max, to_string(kind), closed.xi_min(),
                                    closed.xi_max()));
    }

    const std::size_t intervals = config.grid > 1 ? config.grid - 1 : 1;
    const double span = config.xi_max - config.xi0;
    const std::size_t steps = aligned_steps(span, config.dxi, intervals);
    const GeodesicTrajectory numeric =
        solve_geodesic_numeric(scenario, init, config.xi_max, span / static_cast<double>(steps));
    const std::size_t stride = steps / intervals;

    const double v0 = entropic_speed(scenario, config.theta0, config.theta_dot0, config.normalization);
    double max_error = 0.0;
    double max_speed_variation = 0.0;
    for (std::size_t k = 0; k < numeric.samples.size(); ++k) {
      const PathSample& p = numeric.samples[k];
      const double theta = closed.theta(p.xi);
      const double error = std::abs(p.theta - theta);
      const double speed = std::sqrt(metric_value(metric, p.theta)) * p.theta_dot;
      max_error = std::max(max_error, error);
      max_speed_variation = std::max(max_speed_variation, std::abs(speed - v0) / v0);
      if (k % stride == 0 && (config.grid > 1 || k == 0)) {
        table.rows.push_back({std::string(to_string(kind)), p.xi, theta, p.theta, speed, error});
      }
    }

    const auto path = sample_path([&](double xi) { return closed.theta(xi); },
                                  [&](double xi) { return closed.rate(xi); }, config.xi0,
                                  config.xi_max, config.dxi);
    const PathFunctional functional = path_functional(metric, path);
    const double equality = std::abs(functional.cauchy_schwarz_gap()) /
                            std::max(functional.length * functional.length, 1e-300);

    table.add_meta(key(kind, "v_E"), v0);
    table.add_meta(key(kind, "r_E"), v0 * v0);
    table.add_meta(key(kind, "L"), functional.length);
    table.add_meta(key(kind, "I"), functional.divergence);
    table.add_meta(key(kind, "tau"), functional.tau);
    table.add_meta(key(kind, "cs_gap"), functional.cauchy_schwarz_gap());
    table.add_meta(key(kind, "domain_min"), closed.xi_min());
    table.add_meta(key(kind, "domain_max"), closed.xi_max());
    table.add_meta(key(kind, "domain_exit"), numeric.domain_exit);
    table.add_meta(key(kind, "max_abs_error"), max_error);
    table.add_meta(key(kind, "max_speed_variation"), max_speed_variation);

    if (numeric.domain_exit) {
      fail(result, fmt::format("{}: numeric geodesic left the domain before xi-max", to_string(kind)));
    }
    if (!(max_error <= tolerance)) {
      fail(result, fmt::format("{}: max |theta_numeric - theta_closed| = {:.3g} exceeds {:.3g}",
                               to_string(kind), max_error, tolerance));
    }
    if (!(max_speed_variation <= tolerance)) {
      fail(result, fmt::format("{}: entropic speed varies by {:.3g} (relative)", to_string(kind),
                               max_speed_variation));
    }
    if (!(equality <= kGeodesicEqualityTolerance)) {
      fail(result, fmt::format("{}: |tau I - L^2| / L^2 = {:.3g} exceeds {:.3g}", to_string(kind),
                               equality, kGeodesicEqualityTolerance));
    }
  }
  table.add_meta("status", std::string(result.passed ? "pass" : "fail"));
  return result;
}

CommandResult cmd_report(const RunConfig& config) {
  std::vector<ScenarioParams> scenarios;
  for (ProfileKind kind : config.scenarios) scenarios.push_back(config.scenario(kind));
  std::vector<EntropicSummary> rows =
      entropic_summaries(scenarios, config.theta0, config.theta_dot0, config.normalization);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const EntropicSummary& a, const EntropicSummary& b) { return a.rate > b.rate; });

  CommandResult result;
  Table& table = result.table;
  add_scenario_meta(table, config);
  table.add_meta("theta0", config.theta0);
  table.add_meta("thetadot0", config.theta_dot0);
  table.add_meta("normalization", std::string(normalization_name(config.normalization)));
  table.add_meta("normalizer", rows.front().normalizer);
  table.columns = {"scenario", "fisher_behavior", "speed", "rate", "efficiency", "search_analogy"};
  for (const EntropicSummary& row : rows) {
    const ProfileKind kind = row.scenario.kind();
    table.rows.push_back({std::string(to_string(kind)), std::string(fisher_behavior(kind)), row.speed,
                          row.rate, row.efficiency, std::string(search_analogy(kind))});
  }
  return result;
}

CommandResult cmd_region(const RunConfig& config) {
  const RegionGrid grid = region_mask(log_spaced(config.lambda_min, config.lambda_max, config.lambda_count),
                                      positive_linear(config.theta_max, config.theta_count));
  CommandResult result;
  Table& table = result.table;
  table.add_meta("command", std::string(to_string(config.command)));
  table.add_meta("z_star", grid.boundary_root);
  table.add_meta("lambda_min", config.lambda_min);
  table.add_meta("lambda_max", config.lambda_max);
  table.add_meta("lambda_count", static_cast<std::int64_t>(config.lambda_count));
  table.add_meta("theta_max", config.theta_max);
  table.add_meta("theta_count", static_cast<std::int64_t>(config.theta_count));
  std::int64_t inside = 0;
  for (std::uint8_t m : grid.mask) inside += m;
  table.add_meta("in_region_cells", inside);
  table.columns = {"lambda", "theta0", "f_p", "in_region"};
  table.rows.reserve(grid.ratios.size());
  for (std::size_t i = 0; i < grid.lambdas.size(); ++i) {
    for (std::size_t j = 0; j < grid.thetas.size(); ++j) {
      table.rows.push_back({grid.lambdas[i], grid.thetas[j], grid.ratios[grid.index(i, j)],
                            grid.in_region(i, j)});
    }
  }
  return result;
}

CommandResult cmd_fields(const RunConfig& config) {
  const PhysicalConstants constants = config.constants();
  const DrivingConfig drive = driving(config);
  CommandResult result;
  Table& table = result.table;
  add_scenario_meta(table, config);
  table.add_meta("omega0", config.omega0);
  table.add_meta("phase_rate", drive.phase_rate());
  table.add_meta("bohr_magneton", constants.bohr_magneton);
  table.columns = {"scenario", "t", "bx", "by", "bz", "b_perp"};
  const std::vector<double> times = uniform_grid(0.0, config.t_max, config.grid);
  for (ProfileKind kind : config.scenarios) {
    const ScenarioParams scenario = config.scenario(kind);
    for (double t : times) {
      const MagneticField b = field_components(scenario.profile(), drive, constants, t);
      table.rows.push_back({std::string(to_string(kind)), t, b.bx, b.by, b.bz, b.b_perp});
    }
  }
  return result;
}

CommandResult run_command(const RunConfig& config) {
  switch (config.command) {
    case Command::Simulate: return cmd_simulate(config);
    case Command::Fisher: return cmd_fisher(config);
    case Command::Geodesic: return cmd_geodesic(config);
    case Command::Report: return cmd_report(config);
    case Command::Region: return cmd_region(config);
    case Command::Fields: return cmd_fields(config);
  }
  throw ConfigError("unknown command");
}

}  // namespace infogeo::cli
