#include "infogeo/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "infogeo/errors.hpp"

namespace infogeo::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_factor(std::string_view token, std::string_view whole) {
  token = trim(token);
  double sign = 1.0;
  if (!token.empty() && (token.front() == '-' || token.front() == '+')) {
    if (token.front() == '-') sign = -1.0;
    token.remove_prefix(1);
  }
  if (token == "pi") return sign * std::numbers::pi;
  double value = 0.0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw ConfigError("cannot parse number '" + std::string(whole) + "'");
  }
  return sign * value;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

bool positive(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

std::string_view to_string(Command command) {
  switch (command) {
    case Command::Simulate: return "simulate";
    case Command::Fisher: return "fisher";
    case Command::Geodesic: return "geodesic";
    case Command::Report: return "report";
    case Command::Region: return "region";
    case Command::Fields: return "fields";
  }
  return "unknown";
}

PhysicalConstants RunConfig::constants() const {
  return units == UnitSystem::Mksa ? PhysicalConstants::mksa() : PhysicalConstants::dimensionless();
}

ScenarioParams RunConfig::scenario(ProfileKind kind) const {
  const double hbar = constants().hbar;
  return ScenarioParams(FieldProfile::make(kind, hbar * gamma_over_hbar, lambda), hbar);
}

double parse_expression(std::string_view text) {
  const std::string_view whole = trim(text);
  double value = 0.0;
  char op = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= whole.size(); ++i) {
    if (i < whole.size() && whole[i] != '*' && whole[i] != '/') continue;
    const double factor = parse_factor(whole.substr(start, i - start), whole);
    if (op == 0) {
      value = factor;
    } else if (op == '*') {
      value *= factor;
    } else {
      require(factor != 0.0, "division by zero in '" + std::string(whole) + "'");
      value /= factor;
    }
    if (i < whole.size()) op = whole[i];
    start = i + 1;
  }
  return value;
}

std::vector<ProfileKind> parse_scenarios(std::string_view text) {
  text = trim(text);
  if (text == "all") return {std::begin(kAllProfileKinds), std::end(kAllProfileKinds)};
  std::vector<ProfileKind> kinds;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view name = trim(text.substr(start, comma - start));
    const auto kind = parse_profile_kind(name);
    require(kind.has_value(), "unknown scenario '" + std::string(name) + "'");
    kinds.push_back(*kind);
    start = comma + 1;
  }
  return kinds;
}

void resolve(RunConfig& config) {
  const PhysicalConstants c = config.constants();
  try {
    if (config.b_perp) {
      config.gamma_over_hbar = coupling_from_field(*config.b_perp, c) / c.hbar;
    }
    if (config.lambda_from_gamma) {
      config.lambda = lambda_of_gamma(config.gamma_over_hbar * c.hbar, c);
    }
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (config.kappa) config.gamma_over_hbar = *config.kappa * config.lambda;
  config.b_perp.reset();
  config.kappa.reset();
  config.lambda_from_gamma = false;
}

void validate(const RunConfig& config) {
  require(!config.scenarios.empty(), "at least one scenario is required");
  require(positive(config.gamma_over_hbar), "gamma-over-hbar must be positive");
  require(positive(config.lambda), "lambda must be positive");
  require(std::isfinite(config.omega0) && config.omega0 < 0.0, "omega0 must be negative");
  if (config.phase_rate) {
    require(std::isfinite(*config.phase_rate), "phase-rate must be finite");
    const bool resonant = std::abs(*config.phase_rate - config.omega0) <= 1e-12 * std::abs(config.omega0);
    require(resonant || config.allow_off_resonance,
            "phase-rate breaks the resonance condition; pass --allow-off-resonance to run anyway");
  }
  require(std::isfinite(config.theta0) && config.theta0 >= 0.0, "theta0 must be non-negative");
  require(positive(config.theta_dot0), "thetadot0 must be positive");
  require(std::isfinite(config.xi0), "xi0 must be finite");
  require(positive(config.t_max), "t-max must be positive");
  require(std::isfinite(config.xi_max) && config.xi_max > config.xi0, "xi-max must exceed xi0");
  require(config.grid >= 1, "grid must hold at least one point");
  require(positive(config.dt), "dt must be positive");
  require(positive(config.dxi), "dxi must be positive");
  if (config.h_step) require(positive(*config.h_step), "h-step must be positive");
  require(positive(config.lambda_min) && std::isfinite(config.lambda_max) &&
              config.lambda_max > config.lambda_min,
          "lambda range must satisfy 0 < lambda-min < lambda-max");
  require(config.lambda_count >= 2, "lambda-count must be at least 2");
  require(positive(config.theta_max), "theta-max must be positive");
  require(config.theta_count >= 1, "theta-count must be at least 1");
  if (config.tolerance) require(positive(*config.tolerance), "tolerance must be positive");
  require(config.precision >= 6 && config.precision <= 17, "precision must lie in [6, 17]");
}

}  // namespace infogeo::cli
