#include "infogeo/cli/app.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>

#include "CLI11.hpp"
#include "infogeo/cli/commands.hpp"
#include "infogeo/errors.hpp"

namespace infogeo::cli {
namespace {

std::filesystem::path output_path(const std::string& out) {
  std::filesystem::path path(out);
  const char* dir = std::getenv("INFOGEO_OUTPUT_DIR");
  if (path.is_relative() && dir != nullptr && *dir != '\0') path = std::filesystem::path(dir) / path;
  return path;
}

void add_expression(CLI::App& app, const std::string& name, double& target, const std::string& help) {
  app.add_option_function<std::string>(name, [&target](const std::string& s) { target = parse_expression(s); },
                                       help);
}

void add_optional_expression(CLI::App& app, const std::string& name, std::optional<double>& target,
                             const std::string& help) {
  app.add_option_function<std::string>(name, [&target](const std::string& s) { target = parse_expression(s); },
                                       help);
}

void configure(CLI::App& app, RunConfig& config) {
  app.set_config("--config", "", "key = value file; command-line flags win");
  app.allow_config_extras(CLI::config_extras_mode::error);

  app.add_option_function<std::string>(
         "--scenario", [&config](const std::string& s) { config.scenarios = parse_scenarios(s); },
         "constant, oscillatory, power-law, exponential, a comma list or all")
      ->default_str("all")
      ->delimiter(',')
      ->multi_option_policy(CLI::MultiOptionPolicy::Join);
  app.add_option("--units", config.units, "Unit system")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, UnitSystem>{{"dimensionless", UnitSystem::Dimensionless},
                                            {"mksa", UnitSystem::Mksa}}));
  add_expression(app, "--gamma-over-hbar", config.gamma_over_hbar, "Coupling Gamma/hbar (default 1)");
  add_optional_expression(app, "--kappa", config.kappa, "Set Gamma/hbar = kappa * lambda");
  add_optional_expression(app, "--b-perp", config.b_perp, "Set Gamma from a transverse field magnitude");
  app.add_flag("--lambda-from-gamma", config.lambda_from_gamma, "Set lambda = 4 Gamma / h");
  add_expression(app, "--lambda", config.lambda, "Profile rate lambda (default 2/pi)");
  add_expression(app, "--omega0", config.omega0, "Precession frequency, negative (default -15*pi)");
  add_optional_expression(app, "--phase-rate", config.phase_rate, "Precession phase rate override");
  app.add_flag("--allow-off-resonance", config.allow_off_resonance, "Permit a detuned phase rate");

  add_expression(app, "--theta0", config.theta0, "Geodesic start theta0 (default 0)");
  add_expression(app, "--thetadot0", config.theta_dot0, "Geodesic start rate (default 1)");
  add_expression(app, "--xi0", config.xi0, "Affine parameter at the start (default 0)");
  add_expression(app, "--t-max", config.t_max, "End of the time / theta grid (default 10)");
  add_expression(app, "--xi-max", config.xi_max, "End of the affine parameter grid (default 1)");
  app.add_option("--grid", config.grid, "Output grid points (default 101)");
  add_expression(app, "--dt", config.dt, "Propagator step (default 1e-4)");
  add_expression(app, "--dxi", config.dxi, "Geodesic step (default 1e-4)");
  add_optional_expression(app, "--h-step", config.h_step, "Fisher finite-difference half width");

  add_expression(app, "--lambda-min", config.lambda_min, "Region grid: smallest lambda (default 1e-2)");
  add_expression(app, "--lambda-max", config.lambda_max, "Region grid: largest lambda (default 1e2)");
  app.add_option("--lambda-count", config.lambda_count, "Region grid: log-spaced lambdas (default 512)");
  add_expression(app, "--theta-max", config.theta_max, "Region grid: largest theta0 (default 5)");
  app.add_option("--theta-count", config.theta_count, "Region grid: theta0 points (default 512)");

  app.add_option("--normalization", config.normalization, "Metric g = F/4 (fs) or F (raw)")
      ->transform(CLI::CheckedTransformer(std::map<std::string, MetricNormalization>{
          {"fs", MetricNormalization::FubiniStudy}, {"raw", MetricNormalization::RawFisher}}));
  app.add_option("--form", config.form, "Oscillatory geodesic form")
      ->transform(CLI::CheckedTransformer(std::map<std::string, OscillatoryForm>{
          {"exact", OscillatoryForm::Exact}, {"anchored", OscillatoryForm::Anchored}}));
  app.add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}}));
  app.add_option("--out", config.out, "Output file (stdout when absent)");
  add_optional_expression(app, "--tolerance", config.tolerance, "Tolerance for the pass/fail checks");
  app.add_option("--precision", config.precision, "Significant digits, 6 to 17 (default 12)");

  app.require_subcommand(1);
  app.fallthrough();
  app.add_subcommand("simulate", "Propagator vs closed-form transition probabilities");
  app.add_subcommand("fisher", "Closed-form and finite-difference Fisher information");
  app.add_subcommand("geodesic", "Closed-form and numeric geodesics with path summaries");
  app.add_subcommand("report", "Entropic speed, rate and efficiency per scenario");
  app.add_subcommand("region", "Power-law vs exponential speed ratio over (lambda, theta0)");
  app.add_subcommand("fields", "Magnetic field components over time");
}

Command parsed_command(const CLI::App& app) {
  static const std::map<std::string, Command> names{
      {"simulate", Command::Simulate}, {"fisher", Command::Fisher}, {"geodesic", Command::Geodesic},
      {"report", Command::Report},     {"region", Command::Region}, {"fields", Command::Fields}};
  return names.at(app.get_subcommands().front()->get_name());
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Information-geometric analysis of driven two-level quantum evolutions", "infogeo"};
  configure(app, config);
  try {
    app.parse(argc, argv);
    config.command = parsed_command(app);
    resolve(config);
    validate(config);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  CommandResult result;
  try {
    result = run_command(config);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const UnitarityDriftError& e) {
    err << "tolerance failure: " << e.what() << '\n';
    return kExitTolerance;
  } catch (const StepTooLargeError& e) {
    err << "tolerance failure: " << e.what() << '\n';
    return kExitTolerance;
  } catch (const Error& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  if (config.out.empty()) {
    write_table(out, result.table, config.format, config.precision);
  } else {
    const std::filesystem::path path = output_path(config.out);
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "config error: cannot open " << path.string() << " for writing\n";
      return kExitConfig;
    }
    write_table(file, result.table, config.format, config.precision);
  }

  for (const std::string& message : result.failures) err << "tolerance failure: " << message << '\n';
  return result.passed ? kExitSuccess : kExitTolerance;
}

}  // namespace infogeo::cli
