#pragma once

#include <string>
#include <vector>

#include "infogeo/cli/config.hpp"
#include "infogeo/cli/table.hpp"

namespace infogeo::cli {

struct CommandResult {
  Table table;
  /// False when a tolerance check failed; the table is still emitted.
  bool passed = true;
  std::vector<std::string> failures;
};

inline constexpr double kSimulateTolerance = 1e-8;
inline constexpr double kGeodesicTolerance = 1e-6;

/// Columns: scenario, t, p_w_numeric, p_w_closed, p_wperp_closed, abs_error.
CommandResult cmd_simulate(const RunConfig& config);
/// Columns: scenario, theta, f_closed, f_numeric, g_normalized, fallback.
CommandResult cmd_fisher(const RunConfig& config);
/// Columns: scenario, xi, theta_closed, theta_numeric, speed, abs_error.
CommandResult cmd_geodesic(const RunConfig& config);
/// Columns: scenario, fisher_behavior, speed, rate, efficiency, search_analogy.
CommandResult cmd_report(const RunConfig& config);
/// Columns: lambda, theta0, f_p, in_region.
CommandResult cmd_region(const RunConfig& config);
/// Columns: scenario, t, bx, by, bz, b_perp.
CommandResult cmd_fields(const RunConfig& config);

CommandResult run_command(const RunConfig& config);

std::string_view fisher_behavior(ProfileKind kind);
std::string_view search_analogy(ProfileKind kind);

}  // namespace infogeo::cli
