#pragma once

#include <stdexcept>
#include <string>

namespace freelip {

/// Base class of all domain errors. `name()` is the stable identifier the
/// CLI reports in structured error JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& message)
      : Error("DimensionMismatch", message) {}
};

struct AsymmetricDistance : Error {
  AsymmetricDistance(int i, int j, const std::string& message)
      : Error("AsymmetricDistance", message), i(i), j(j) {}
  int i, j;
};

struct NonPositiveDistance : Error {
  NonPositiveDistance(int i, int j, const std::string& message)
      : Error("NonPositiveDistance", message), i(i), j(j) {}
  int i, j;
};

struct TriangleViolation : Error {
  TriangleViolation(int i, int j, int k, const std::string& message)
      : Error("TriangleViolation", message), i(i), j(j), k(k) {}
  int i, j, k;
};

struct UnknownPoint : Error {
  explicit UnknownPoint(const std::string& message)
      : Error("UnknownPoint", message) {}
};

struct DegeneratePair : Error {
  explicit DegeneratePair(const std::string& message)
      : Error("DegeneratePair", message) {}
};

struct SpaceMismatch : Error {
  explicit SpaceMismatch(const std::string& message)
      : Error("SpaceMismatch", message) {}
};

struct NotARepresentation : Error {
  explicit NotARepresentation(const std::string& message)
      : Error("NotARepresentation", message) {}
};

struct WeightOutOfRange : Error {
  explicit WeightOutOfRange(const std::string& message)
      : Error("WeightOutOfRange", message) {}
};

struct NotUnitNorm : Error {
  explicit NotUnitNorm(const std::string& message)
      : Error("NotUnitNorm", message) {}
};

struct InvalidFunction : Error {
  explicit InvalidFunction(const std::string& message)
      : Error("InvalidFunction", message) {}
};

/// Malformed input (JSON shape, rational syntax). The CLI maps this to
/// exit code 2 rather than 1.
struct ParseError : Error {
  explicit ParseError(const std::string& message)
      : Error("ParseError", message) {}
};

}  // namespace freelip
