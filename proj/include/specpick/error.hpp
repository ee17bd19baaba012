#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace specpick {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point that must lie in the open unit disc (or a domain) does not.
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The root finder exhausted its budget; carries the worst residual seen.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double residual) : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// A rank or interpolation decision sits too close to its threshold.
class IllConditioned : public Error {
 public:
  using Error::Error;
};

/// Clustering of eigenvalues or fibre images cannot be decided at the tolerance.
class AmbiguityError : public Error {
 public:
  using Error::Error;
};

/// A fibre point of a correspondence left its target domain.
class ProperViolation : public Error {
 public:
  ProperViolation(const std::string& what, std::complex<double> z, std::complex<double> w)
      : Error(what), z_(z), w_(w) {}
  std::complex<double> z() const noexcept { return z_; }
  std::complex<double> w() const noexcept { return w_; }

 private:
  std::complex<double> z_, w_;
};

/// Example-construction constraints that failed, by name.
class ConstraintError : public Error {
 public:
  ConstraintError(const std::string& what, std::vector<std::string> failed)
      : Error(what), failed_(std::move(failed)) {}
  const std::vector<std::string>& failed() const noexcept { return failed_; }

 private:
  std::vector<std::string> failed_;
};

}  // namespace specpick
