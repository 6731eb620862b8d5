#pragma once

#include <stdexcept>
#include <string>

namespace permlab {

// Argument outside an operation's documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request exceeds a configured enumeration bound.
class SizeBoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Malformed tree or graph.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two points could not be compared by the order in use.
class IncomparablePairError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Quadrature did not reach the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double estimate, double error)
      : std::runtime_error(what), estimate_(estimate), error_(error) {}
  double estimate() const noexcept { return estimate_; }
  double error() const noexcept { return error_; }

 private:
  double estimate_;
  double error_;
};

}  // namespace permlab
