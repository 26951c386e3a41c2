#pragma once

#include <stdexcept>
#include <string>

namespace lue {

// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A factorization or quadrature lost positivity / rank.
class ConditioningError : public std::runtime_error {
 public:
  explicit ConditioningError(const std::string& what) : std::runtime_error(what) {}
};

// Root finding, extended-precision determinant or similar numerical failure.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Requested operation is outside what a route supports (e.g. size guard).
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// Self-convergence check failed; both values are kept for the report.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double coarse, double fine)
      : std::runtime_error(what), coarse_(coarse), fine_(fine) {}
  double coarse() const noexcept { return coarse_; }
  double fine() const noexcept { return fine_; }

 private:
  double coarse_;
  double fine_;
};

// ODE integration could not continue (branch lost) at `location`.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double location)
      : std::runtime_error(what), location_(location) {}
  double location() const noexcept { return location_; }

 private:
  double location_;
};

}  // namespace lue
