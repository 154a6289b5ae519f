#pragma once

#include <numbers>

namespace infogeo {

/// Physical constants. In dimensionless mode hbar = 1 and the charge, mass
/// and light speed are chosen so that the Bohr magneton is 1, i.e. field
/// magnitudes are measured in units of the coupling over mu_Bohr.
struct PhysicalConstants {
  double hbar;
  double h;
  double electron_mass;
  double elementary_charge;
  double light_speed;
  double bohr_magneton;
  bool dimensionless_mode;

  static constexpr PhysicalConstants make(double hbar, double mass,
                                          double charge, double c,
                                          bool dimensionless) {
    return PhysicalConstants{hbar,
                             2.0 * std::numbers::pi * hbar,
                             mass,
                             charge,
                             c,
                             charge * hbar / (2.0 * mass * c),
                             dimensionless};
  }

  static constexpr PhysicalConstants dimensionless() {
    return make(1.0, 0.5, 1.0, 1.0, true);
  }

  /// CODATA 2018 values. The magneton keeps the 1/c of the Gaussian-style
  /// coupling e*hbar/(2mc) used throughout the field relations.
  static constexpr PhysicalConstants mksa() {
    return make(1.054571817e-34, 9.1093837015e-31, 1.602176634e-19,
                299792458.0, false);
  }
};

}  // namespace infogeo
