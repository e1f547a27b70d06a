#pragma once

#include <stdexcept>
#include <string>

namespace strata {

enum class ErrorKind {
  EmptyInput,
  SimplexNotFound,
  NotPure,
  RidgeDegreeViolation,
  DimensionOutOfRange,
  MalformedFiltration,
  NoTopSimplex,
  NotPseudomanifold,
  DifferentCarrier,
  BoundaryPoint,
  NotClassical,
  NotClosed,
  NotValidated,
  PerversityViolation,
  UnsupportedCoefficients,
  KindMismatch,
  IncompatibleOrientations,
  IsomorphismMissing,
  SignClash,
  NoIsomorphism,
  CollarMissing,
  NotFull,
  UnknownName,
  ParseError,
  SubdivisionLimit,
  InvariantBreach,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace strata
