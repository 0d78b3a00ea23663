#pragma once

#include <stdexcept>
#include <string>

namespace kkit {

// Every failure mode in the library gets a stable code so callers (and the
// CLI exit-code mapping) can dispatch without string matching.
enum class Err {
  // generic / input
  InvalidArgument,
  ParseError,
  Overflow,
  // surface core
  NoetherViolation,
  NonAlgebraicPositivity,
  ParityViolation,
  DimensionMismatch,
  // curve configurations
  ComponentNotInDivisor,
  UnknownCurve,
  UnknownPoint,
  UnsupportedLocalType,
  NotMinusOneCurve,
  BadEpsilon,
  // Kodaira catalog
  UnknownType,
  // discriminant verifier
  NotMinimal,
  PropertyPFails,
  CensusViolation,
  MuOutOfRange,
  ExcludedCaseEncountered,
  ChainBroken,
  NotAlgebraicDimensionZero,
  InconsistentContext,
  InsufficientLocalData,
  // graded ring / Chern engine
  NormalFormFailure,
  UnsupportedRank,
  RingMismatch,
  ResidualNonzero,
  // deformation calculator
  NonIntegerResult,
  A0NonzeroC1,
  OutOfHypotheses,
};

const char* err_name(Err code);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& message)
      : std::runtime_error(std::string(err_name(code)) + ": " + message),
        code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace kkit
