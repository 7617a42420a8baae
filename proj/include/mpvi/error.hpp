#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mpvi {

enum class ErrorKind {
  ParseError,
  ZeroNormal,
  DuplicateHyperplane,
  DimensionMismatch,
  NotNested,
  NonDivisible,
  NotAChain,
  NotIntersectionClosed,
  LogarithmicPole,
  DegreeCondition,
  InvalidExponent,
  NegativeExponentDetected,
  NotEssential,
  Decomposable,
  WitnessSearchFailed,
  IntegerDirection,
};

std::string_view to_string(ErrorKind kind);

// Validation errors map to CLI exit status 2, everything else to 3.
bool is_validation_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string subject = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        subject_(std::move(subject)) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Human-readable offending object, e.g. the basis of an edge with b_W = 0.
  const std::string& subject() const noexcept { return subject_; }

 private:
  ErrorKind kind_;
  std::string subject_;
};

}  // namespace mpvi
