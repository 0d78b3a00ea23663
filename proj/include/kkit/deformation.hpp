#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kkit/rational.hpp"
#include "kkit/surface.hpp"

namespace kkit {

// Numeric front-end for the deformation count of a conic bundle f: X -> S
// with relative Picard number one over a non-algebraic Kaehler surface:
//   h^1(T_X) - h^2(T_X)
//     = h^0(T_X) + c2(E) - c1(E)c1(S) - 2 c1^2(S) + 7 chi(O_S),
// where E = f_*(K^*_{X/S}). All inputs are numeric invariants; c1(E)c1(S) =
// -c1_dot_K since c1(S) = -K_S.

enum class DeformationVerdict {
  PositiveStrict,
  NonnegWithEqualityConditions,
  ExceptionalCaseI,   // torus base, E numerically projectively flat
  ExceptionalCaseII,  // minimal properly elliptic base, c2(S) = 0
  OutOfHypotheses,
};

const char* verdict_name(DeformationVerdict v);

struct DeformationReport {
  std::int64_t h1_minus_h2 = 0;
  Rational banlep_lhs;          // c2(E) - c1(E)^2/3
  std::int64_t chern_gap = 0;   // c1(E)^2 - 3 c1(E)c1(S) - 4 c1(S)^2
  DeformationVerdict verdict = DeformationVerdict::OutOfHypotheses;
  std::vector<std::string> notes;
};

// The right-hand side above, evaluated in exact rationals and required to be
// an integer (NonIntegerResult otherwise; unreachable for surfaces that
// satisfy Noether).
std::int64_t h1_minus_h2(const SurfaceModel& surface, const BundleInvariants& bundle,
                         std::int64_t h0_TX);

// Bogomolov-Luebke: c2(E) - c1(E)^2/3 >= 0 on compact Kaehler surfaces. A
// negative value flags inconsistent input, it does not throw.
std::pair<Rational, bool> banlep_check(const BundleInvariants& bundle);

// c1(E)^2 - 3 c1(E)c1(S) - 4 c1(S)^2; for a(S) = 1 this is the discriminant
// inequality applied to Delta in |det E^*|. For a(S) = 0 the bundle's c1
// numerics must vanish (A0NonzeroC1).
std::int64_t chern_gap(const SurfaceModel& surface, const BundleInvariants& bundle);

// Full classification per the deformation theorems. Requires a non-algebraic
// Kaehler surface (OutOfHypotheses) and assumes relative Picard rank one.
DeformationReport classify(const SurfaceModel& surface, const BundleInvariants& bundle,
                           std::int64_t h0_TX);

}  // namespace kkit
