#pragma once

#include <stdexcept>
#include <string>

namespace infogeo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain on which an operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The propagator lost unitarity beyond the configured drift limit.
class UnitarityDriftError : public Error {
 public:
  UnitarityDriftError(double drift, double limit)
      : Error("unitarity drift " + std::to_string(drift) + " exceeds limit " +
              std::to_string(limit) + " (integration step too large?)"),
        drift_(drift) {}
  double drift() const noexcept { return drift_; }

 private:
  double drift_;
};

/// Integration was requested for a drive that violates the Rabi condition.
class OffResonanceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The success probability never reaches one.
class NoUnitPeakError : public Error {
 public:
  using Error::Error;
};

/// Finite-difference Fisher information at a probability endpoint.
class NearDegenerateError : public Error {
 public:
  using Error::Error;
};

/// Geodesic equation evaluated where the Fisher information vanishes.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The geodesic integrator's local error check failed.
class StepTooLargeError : public Error {
 public:
  using Error::Error;
};

}  // namespace infogeo
