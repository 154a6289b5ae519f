#include "infogeo/su2_dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "infogeo/errors.hpp"
#include "infogeo/ode.hpp"

namespace infogeo {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void require_time(double t) {
  if (!(t >= 0.0)) {
    throw DomainError("time must be non-negative, got " + std::to_string(t));
  }
}

}  // namespace

std::string_view to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::Constant:
      return "constant";
    case ProfileKind::Oscillatory:
      return "oscillatory";
    case ProfileKind::PowerLaw:
      return "power-law";
    case ProfileKind::Exponential:
      return "exponential";
  }
  return "unknown";
}

std::optional<ProfileKind> parse_profile_kind(std::string_view name) {
  for (ProfileKind kind : kAllProfileKinds) {
    if (name == to_string(kind)) return kind;
  }
  if (name == "powerlaw" || name == "power_law") return ProfileKind::PowerLaw;
  return std::nullopt;
}

FieldProfile::FieldProfile(ProfileKind kind, double gamma, double lambda)
    : kind_(kind), gamma_(gamma), lambda_(lambda) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError("field amplitude Gamma must be positive and finite");
  }
  if (kind != ProfileKind::Constant && (!(lambda > 0.0) || !std::isfinite(lambda))) {
    throw DomainError("modulation rate lambda must be positive and finite");
  }
}

FieldProfile FieldProfile::constant(double gamma) {
  return FieldProfile(ProfileKind::Constant, gamma, 0.0);
}
FieldProfile FieldProfile::oscillatory(double gamma, double lambda) {
  return FieldProfile(ProfileKind::Oscillatory, gamma, lambda);
}
FieldProfile FieldProfile::power_law(double gamma, double lambda) {
  return FieldProfile(ProfileKind::PowerLaw, gamma, lambda);
}
FieldProfile FieldProfile::exponential(double gamma, double lambda) {
  return FieldProfile(ProfileKind::Exponential, gamma, lambda);
}
FieldProfile FieldProfile::make(ProfileKind kind, double gamma, double lambda) {
  return FieldProfile(kind, gamma, kind == ProfileKind::Constant ? 0.0 : lambda);
}

double FieldProfile::intensity(double t) const {
  require_time(t);
  switch (kind_) {
    case ProfileKind::Constant:
      return gamma_;
    case ProfileKind::Oscillatory:
      return gamma_ * std::cos(lambda_ * t);
    case ProfileKind::PowerLaw: {
      const double d = 1.0 + lambda_ * t;
      if (!(d > 0.0)) throw DomainError("power-law denominator 1 + lambda t <= 0");
      return gamma_ / (d * d);
    }
    case ProfileKind::Exponential:
      return gamma_ * std::exp(-lambda_ * t);
  }
  return 0.0;
}

DrivingConfig DrivingConfig::on_resonance(double omega0,
                                          const PhysicalConstants& constants) {
  if (!(omega0 < 0.0) || !std::isfinite(omega0)) {
    throw DomainError("precession frequency omega0 must be negative");
  }
  return DrivingConfig(omega0, -0.5 * constants.hbar * omega0);
}

DrivingConfig DrivingConfig::custom(double phase_rate, double longitudinal) {
  return DrivingConfig(phase_rate, longitudinal);
}

MagneticField field_components(const FieldProfile& profile,
                               const DrivingConfig& config,
                               const PhysicalConstants& constants, double t) {
  require_time(t);
  // B = (2mc / |e| hbar) * (field energy) = energy / mu_Bohr.
  const double scale = 1.0 / constants.bohr_magneton;
  // Signed amplitude: the oscillatory profile changes sign, which the
  // components carry as a phase flip; b_perp stays a magnitude.
  const double amplitude = scale * profile.intensity(t);
  const double phi = config.phase(t);
  MagneticField field;
  field.bx = amplitude * std::cos(phi);
  field.by = -amplitude * std::sin(phi);
  field.bz = scale * config.longitudinal();
  field.b_perp = std::abs(amplitude);
  field.b_par = std::abs(field.bz);
  return field;
}

bool resonance_check(const DrivingConfig& config,
                     const PhysicalConstants& constants) {
  const double rate = config.phase_rate();
  const double field_rate = 2.0 * config.longitudinal() / constants.hbar;
  const double scale = std::max(std::abs(rate), std::abs(field_rate));
  if (scale == 0.0) return true;
  return std::abs(rate + field_rate) <= 1e-12 * scale;
}

Eigen::Matrix2cd rotating_frame_hamiltonian(const FieldProfile& profile,
                                            const DrivingConfig& config,
                                            const PhysicalConstants& constants,
                                            double t) {
  const double z = config.longitudinal() + 0.5 * constants.hbar * config.phase_rate();
  const double x = profile.intensity(t);
  Eigen::Matrix2cd h;
  h << z, x, x, -z;
  return h;
}

std::vector<PropagatorState> integrate_propagator(
    const FieldProfile& profile, const DrivingConfig& config,
    const PhysicalConstants& constants, double t_max, double dt,
    const PropagatorOptions& options) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw DomainError("t_max must be positive");
  }
  if (!(dt > 0.0) || dt > t_max) {
    throw DomainError("step must satisfy 0 < dt <= t_max");
  }
  if (!options.allow_off_resonance && !resonance_check(config, constants)) {
    throw OffResonanceError(
        "drive violates the generalized Rabi condition; closed forms do not "
        "apply (set allow_off_resonance to integrate anyway)");
  }

  std::size_t steps = static_cast<std::size_t>(std::ceil(t_max / dt - 1e-9));
  if (steps == 0) steps = 1;
  std::size_t stride = 1;
  if (options.output_intervals > 0) {
    stride = (steps + options.output_intervals - 1) / options.output_intervals;
    steps = stride * options.output_intervals;
  }
  const double h = t_max / static_cast<double>(steps);

  const double inv_hbar = 1.0 / constants.hbar;
  const double big_omega = config.longitudinal();
  auto rhs = [&](double t, const std::array<std::complex<double>, 2>& y) {
    const std::complex<double> omega =
        profile.intensity(t) * std::polar(1.0, config.phase(t));
    const std::complex<double>& a = y[0];
    const std::complex<double>& b = y[1];
    return std::array<std::complex<double>, 2>{
        -kI * inv_hbar * (big_omega * a - omega * std::conj(b)),
        -kI * inv_hbar * (omega * std::conj(a) + big_omega * b)};
  };

  std::vector<PropagatorState> out;
  out.reserve(steps / stride + 1);
  std::array<std::complex<double>, 2> y{std::complex<double>{1.0, 0.0},
                                        std::complex<double>{0.0, 0.0}};
  out.push_back(PropagatorState{y[0], y[1], 0.0});
  double max_drift = 0.0;
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * h;
    y = rk4_step(rhs, t, y, h);
    const double drift = std::abs(std::norm(y[0]) + std::norm(y[1]) - 1.0);
    max_drift = std::max(max_drift, drift);
    if (max_drift > options.drift_limit) {
      throw UnitarityDriftError(max_drift, options.drift_limit);
    }
    if ((k + 1) % stride == 0) {
      out.push_back(PropagatorState{y[0], y[1], static_cast<double>(k + 1) * h});
    }
  }
  return out;
}

double transition_probability(const PropagatorState& state, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("quantum overlap must lie in [0, 1]");
  }
  const double x2 = x * x;
  const double cross = 2.0 * std::real(state.alpha * std::conj(state.beta));
  const double p = std::norm(state.alpha) * x2 +
                   std::norm(state.beta) * (1.0 - x2) +
                   cross * x * std::sqrt(1.0 - x2);
  return std::clamp(p, 0.0, 1.0);
}

double quantum_overlap(double b_perp, double b_par) {
  if (!(b_perp > 0.0)) throw DomainError("transverse field must be positive");
  if (!(b_par >= 0.0)) throw DomainError("longitudinal field must be non-negative");
  const double ratio = b_par / b_perp;
  if (std::isinf(ratio)) return 1.0;
  return ratio / std::sqrt(1.0 + ratio * ratio);
}

double operator_dispersion(const Eigen::Matrix2cd& hamiltonian,
                           const Eigen::Vector2cd& psi) {
  const Eigen::Vector2cd h_psi = hamiltonian * psi;
  const double mean = std::real(psi.dot(h_psi));
  const double second = std::real(h_psi.dot(h_psi));
  return std::max(0.0, second - mean * mean);
}

double qfi_rotating_frame(const FieldProfile& profile,
                          const PhysicalConstants& constants, double theta) {
  // On resonance the sigma_z term cancels; any negative omega0 gives the
  // same rotating-frame Hamiltonian.
  const DrivingConfig config = DrivingConfig::on_resonance(-1.0, constants);
  const Eigen::Matrix2cd h = rotating_frame_hamiltonian(profile, config, constants, theta);
  const Eigen::Vector2cd w_perp(0.0, 1.0);
  return 4.0 * operator_dispersion(h, w_perp) / (constants.hbar * constants.hbar);
}

}  // namespace infogeo
