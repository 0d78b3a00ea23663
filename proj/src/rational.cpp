#include "kkit/rational.hpp"

#include <numeric>
#include <ostream>

namespace kkit {

const char* err_name(Err code) {
  switch (code) {
    case Err::InvalidArgument: return "InvalidArgument";
    case Err::ParseError: return "ParseError";
    case Err::Overflow: return "Overflow";
    case Err::NoetherViolation: return "NoetherViolation";
    case Err::NonAlgebraicPositivity: return "NonAlgebraicPositivity";
    case Err::ParityViolation: return "ParityViolation";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::ComponentNotInDivisor: return "ComponentNotInDivisor";
    case Err::UnknownCurve: return "UnknownCurve";
    case Err::UnknownPoint: return "UnknownPoint";
    case Err::UnsupportedLocalType: return "UnsupportedLocalType";
    case Err::NotMinusOneCurve: return "NotMinusOneCurve";
    case Err::BadEpsilon: return "BadEpsilon";
    case Err::UnknownType: return "UnknownType";
    case Err::NotMinimal: return "NotMinimal";
    case Err::PropertyPFails: return "PropertyPFails";
    case Err::CensusViolation: return "CensusViolation";
    case Err::MuOutOfRange: return "MuOutOfRange";
    case Err::ExcludedCaseEncountered: return "ExcludedCaseEncountered";
    case Err::ChainBroken: return "ChainBroken";
    case Err::NotAlgebraicDimensionZero: return "NotAlgebraicDimensionZero";
    case Err::InconsistentContext: return "InconsistentContext";
    case Err::InsufficientLocalData: return "InsufficientLocalData";
    case Err::NormalFormFailure: return "NormalFormFailure";
    case Err::UnsupportedRank: return "UnsupportedRank";
    case Err::RingMismatch: return "RingMismatch";
    case Err::ResidualNonzero: return "ResidualNonzero";
    case Err::NonIntegerResult: return "NonIntegerResult";
    case Err::A0NonzeroC1: return "A0NonzeroC1";
    case Err::OutOfHypotheses: return "OutOfHypotheses";
  }
  return "UnknownError";
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) fail(Err::Overflow, "integer addition overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) fail(Err::Overflow, "integer subtraction overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) fail(Err::Overflow, "integer multiplication overflow");
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) fail(Err::InvalidArgument, "rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = checked_sub(0, num_);
    den_ = checked_sub(0, den_);
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

std::int64_t Rational::as_integer() const {
  if (den_ != 1) fail(Err::NonIntegerResult, "expected integer, got " + str());
  return num_;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = checked_sub(0, r.num_);
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  const std::int64_t g = std::gcd(den_, o.den_);
  const std::int64_t lhs = checked_mul(num_, o.den_ / g);
  const std::int64_t rhs = checked_mul(o.num_, den_ / g);
  num_ = checked_add(lhs, rhs);
  den_ = checked_mul(den_, o.den_ / g);
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  num_ = checked_mul(num_, o.num_);
  den_ = checked_mul(den_, o.den_);
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) fail(Err::InvalidArgument, "division by zero rational");
  num_ = checked_mul(num_, o.den_);
  den_ = checked_mul(den_, o.num_);
  normalize();
  return *this;
}

bool operator<(const Rational& a, const Rational& b) {
  // Denominators are positive after normalization.
  return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace kkit
