#pragma once

#include <stdexcept>
#include <string>

namespace efimov {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain of an operation (nonpositive range, bad mesh size, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// No attractive Yamaguchi potential reproduces the requested low-energy data.
class InfeasibleRangeError : public Error {
 public:
  using Error::Error;
};

// Dimer requested for a potential that does not bind two particles.
class NoDimerError : public Error {
 public:
  using Error::Error;
};

// Amplitude evaluated exactly at the two-body pole.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, double kappa_d) : Error(what), kappa_d_(kappa_d) {}
  double kappa_d() const { return kappa_d_; }

 private:
  double kappa_d_;
};

// Trial binding not below the two-body threshold (nonpositive denominator).
class ThresholdViolation : public Error {
 public:
  using Error::Error;
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
};

// Spectator function requested outside the momentum range it was solved on.
class ExtrapolationError : public Error {
 public:
  using Error::Error;
};

// Binding momentum passed to spectator() is not an eigenvalue-one point.
class StaleLevelError : public Error {
 public:
  using Error::Error;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

}  // namespace efimov
