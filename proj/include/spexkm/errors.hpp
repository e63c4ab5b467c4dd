#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spexkm {

/// Precondition violated by the caller (bad parameters, invalid vertex sets).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested object exceeds a hard size limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed textual input. `offset()` is the byte position of the fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Iterative method failed to converge; carries the last residual.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double residual)
      : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace spexkm
