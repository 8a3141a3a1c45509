#pragma once

#include <stdexcept>
#include <string>

namespace toric {

enum class ErrorKind {
  ZeroVector,
  RankMismatch,
  TorsionQuotient,
  WeightNotInDual,
  HasLineality,
  NonPointedMonoid,
  WeightOutsideMonoid,
  ConeNotInFan,
  RayOutsideSupport,
  NonPrimitiveRay,
  NotAFace,
  NonSmoothCone,
  WeightMismatch,
  DegreeTooLarge,
  BudgetExceeded,
  InvalidFan,
  MalformedSquare,
  NotStabilized,
  Unbounded,
  ParseError,
  ValidationError,
  UnknownCommand,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace toric
