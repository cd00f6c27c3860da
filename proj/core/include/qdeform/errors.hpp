#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace qdeform {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument that must be strictly positive was not.
class NonPositiveArgument : public Error {
 public:
  NonPositiveArgument(const std::string& what, double value)
      : Error(what), value_(value) {}

  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// A deformed-domain bracket such as 1 + (1-q)x was not positive.
///
/// `constraint()` is the offending bracket value. Operations that walk a
/// sequence (folds, drift expansion, per-point distributions) also report the
/// zero-based index of the first element that failed.
class DomainViolation : public Error {
 public:
  DomainViolation(const std::string& what, double constraint,
                  std::optional<std::size_t> index = std::nullopt)
      : Error(what), constraint_(constraint), index_(index) {}

  double constraint() const noexcept { return constraint_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  double constraint_;
  std::optional<std::size_t> index_;
};

/// Numerical integration left (0, y_max) or reached the analytic support edge.
class BlowupDetected : public Error {
 public:
  BlowupDetected(const std::string& what, double x) : Error(what), x_(x) {}

  /// Abscissa at which integration was halted.
  double x() const noexcept { return x_; }

 private:
  double x_;
};

/// The q-Gaussian has no finite normalization (q >= 3).
class UnnormalizableModel : public Error {
 public:
  using Error::Error;
};

}  // namespace qdeform
