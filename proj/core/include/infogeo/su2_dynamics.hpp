#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "infogeo/constants.hpp"

namespace infogeo {

enum class ProfileKind { Constant, Oscillatory, PowerLaw, Exponential };

inline constexpr ProfileKind kAllProfileKinds[] = {
    ProfileKind::Constant, ProfileKind::Oscillatory, ProfileKind::PowerLaw,
    ProfileKind::Exponential};

std::string_view to_string(ProfileKind kind);
std::optional<ProfileKind> parse_profile_kind(std::string_view name);

/// Transverse driving intensity omega_H(t) with amplitude Gamma and rate
/// lambda. Gamma is an energy (an angular frequency when hbar = 1).
class FieldProfile {
 public:
  static FieldProfile constant(double gamma);
  static FieldProfile oscillatory(double gamma, double lambda);
  static FieldProfile power_law(double gamma, double lambda);
  static FieldProfile exponential(double gamma, double lambda);
  /// Dispatches on kind; lambda is ignored for Constant.
  static FieldProfile make(ProfileKind kind, double gamma, double lambda);

  ProfileKind kind() const noexcept { return kind_; }
  double gamma() const noexcept { return gamma_; }
  /// Zero for Constant.
  double lambda() const noexcept { return lambda_; }

  /// omega_H(t); throws DomainError for t < 0.
  double intensity(double t) const;

 private:
  FieldProfile(ProfileKind kind, double gamma, double lambda);

  ProfileKind kind_;
  double gamma_;
  double lambda_;
};

/// Longitudinal field and precession phase phi(t) = phase_rate * t.
class DrivingConfig {
 public:
  /// Omega = -(hbar/2) omega0 with omega0 < 0; satisfies the generalized
  /// Rabi condition by construction.
  static DrivingConfig on_resonance(double omega0,
                                    const PhysicalConstants& constants);
  /// Arbitrary (phase rate, longitudinal field) pair, possibly off resonance.
  static DrivingConfig custom(double phase_rate, double longitudinal);

  double phase_rate() const noexcept { return phase_rate_; }
  double phase(double t) const noexcept { return phase_rate_ * t; }
  /// Omega(t), an energy. Time independent for both constructors.
  double longitudinal() const noexcept { return longitudinal_; }

 private:
  DrivingConfig(double phase_rate, double longitudinal)
      : phase_rate_(phase_rate), longitudinal_(longitudinal) {}

  double phase_rate_;
  double longitudinal_;
};

struct MagneticField {
  double bx;
  double by;
  double bz;
  double b_perp;
  double b_par;
};

/// Amplitudes of U = [[alpha, beta], [-conj(beta), conj(alpha)]] at time t.
struct PropagatorState {
  std::complex<double> alpha{1.0, 0.0};
  std::complex<double> beta{0.0, 0.0};
  double t = 0.0;

  double norm() const noexcept { return std::norm(alpha) + std::norm(beta); }
  double unitarity_defect() const noexcept { return norm() - 1.0; }
};

struct PropagatorOptions {
  bool allow_off_resonance = false;
  /// Number of equally spaced output intervals; 0 records every step.
  std::size_t output_intervals = 0;
  double drift_limit = 1e-6;
};

inline constexpr double kDefaultPropagatorStep = 1e-4;

MagneticField field_components(const FieldProfile& profile,
                               const DrivingConfig& config,
                               const PhysicalConstants& constants, double t);

/// True iff phase_rate + (2/hbar) Omega vanishes (relative tolerance 1e-12).
bool resonance_check(const DrivingConfig& config,
                     const PhysicalConstants& constants);

/// [Omega + (hbar/2) phi'] sigma_z + omega_H(t) sigma_x.
Eigen::Matrix2cd rotating_frame_hamiltonian(const FieldProfile& profile,
                                            const DrivingConfig& config,
                                            const PhysicalConstants& constants,
                                            double t);

/// Fixed-step RK4 solution of
///   i hbar alpha' = Omega alpha - omega conj(beta)
///   i hbar beta'  = omega conj(alpha) + Omega beta
/// with omega(t) = omega_H(t) exp(i phi(t)), alpha(0) = 1, beta(0) = 0.
/// The step is shrunk to t_max / n with n = ceil(t_max / dt), rounded up to
/// a multiple of output_intervals. No renormalization is applied; throws
/// UnitarityDriftError when the norm drifts by more than drift_limit.
std::vector<PropagatorState> integrate_propagator(
    const FieldProfile& profile, const DrivingConfig& config,
    const PhysicalConstants& constants, double t_max,
    double dt = kDefaultPropagatorStep, const PropagatorOptions& options = {});

/// |<w|U|s>|^2 for the source state s = x|w> + sqrt(1 - x^2)|w_perp>.
double transition_probability(const PropagatorState& state, double x);

/// Source/target overlap implied by the ratio of longitudinal to transverse
/// field magnitudes.
double quantum_overlap(double b_perp, double b_par);

/// <psi|H^2|psi> - <psi|H|psi>^2 for a normalized psi.
double operator_dispersion(const Eigen::Matrix2cd& hamiltonian,
                           const Eigen::Vector2cd& psi);

/// Quantum Fisher information 4 <Delta H'^2> / hbar^2 of the on-resonance
/// rotating-frame Hamiltonian at time theta, evaluated on |w_perp>.
double qfi_rotating_frame(const FieldProfile& profile,
                          const PhysicalConstants& constants, double theta);

}  // namespace infogeo
