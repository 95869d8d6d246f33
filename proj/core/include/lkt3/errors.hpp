#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace lkt3 {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (JSON syntax or schema).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A curve violates a structural invariant: closure, embeddedness or the
/// Legendrian condition. Carries the offending sample and the measured value.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::optional<std::size_t> index, double measured)
      : Error(what), index_(index), measured_(measured) {}

  std::optional<std::size_t> index() const { return index_; }
  double measured() const { return measured_; }

 private:
  std::optional<std::size_t> index_;
  double measured_;
};

/// The curve or one of its projections is not generic enough for the
/// requested computation. `parameter` names the offending t when known.
class GenericityError : public Error {
 public:
  explicit GenericityError(const std::string& what, std::optional<double> parameter = std::nullopt)
      : Error(what), parameter_(parameter) {}

  std::optional<double> parameter() const { return parameter_; }

 private:
  std::optional<double> parameter_;
};

/// A numeric winding did not snap to an integer within the allowed residual.
class WindingError : public Error {
 public:
  WindingError(const std::string& what, double residual) : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// The operation refuses the input (wrong ambient, missing precondition).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace lkt3
