#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bezout {

enum class ErrorKind {
  InvalidArgument,
  DegreeZero,
  NonConvergence,
  CommonRoot,
  SeparationViolation,
  DegenerateArrangement,
  OriginInRegion,
  OriginTooClose,
  OnContour,
  NestedLoops,
  OpenLoop,
  ConstantPolynomial,
  SingularSystem,
  MultipleRoots,
  IllConditionedInterpolation,
  BadContour,
  QuadratureNotConverged,
  ZeroRoot,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries an ErrorKind so callers (and
/// the CLI exit-code mapping) can branch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bezout
