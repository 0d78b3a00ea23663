#include "kkit/deformation.hpp"

namespace kkit {

const char* verdict_name(DeformationVerdict v) {
  switch (v) {
    case DeformationVerdict::PositiveStrict: return "positive_strict";
    case DeformationVerdict::NonnegWithEqualityConditions:
      return "nonneg_with_equality_conditions";
    case DeformationVerdict::ExceptionalCaseI: return "exceptional_case_i";
    case DeformationVerdict::ExceptionalCaseII: return "exceptional_case_ii";
    case DeformationVerdict::OutOfHypotheses: return "out_of_hypotheses";
  }
  return "?";
}

std::int64_t h1_minus_h2(const SurfaceModel& surface, const BundleInvariants& bundle,
                         std::int64_t h0_TX) {
  if (bundle.rank != 3)
    fail(Err::InvalidArgument, "the pushforward of K^*_{X/S} has rank 3, got rank " +
                                   std::to_string(bundle.rank));
  if (h0_TX < 0) fail(Err::InvalidArgument, "h0(T_X) must be nonnegative");

  // h0 + (c2(E) - c1(E)c1(S) - 4/3 c1^2) - 2/3 c1^2 + 7 chi(O), with
  // c1(E)c1(S) = -c1_dot_K and c1^2(S) = k_squared.
  Rational value(h0_TX);
  value += Rational(bundle.c2);
  value += Rational(bundle.c1_dot_K);
  value -= Rational(4, 3) * Rational(surface.k_squared);
  value -= Rational(2, 3) * Rational(surface.k_squared);
  value += Rational(7) * Rational(surface.chi_O);
  return value.as_integer();  // NonIntegerResult on inconsistent invariants
}

std::pair<Rational, bool> banlep_check(const BundleInvariants& bundle) {
  const Rational lhs = Rational(bundle.c2) - Rational(bundle.c1_sq, 3);
  return {lhs, !(lhs < Rational(0))};
}

std::int64_t chern_gap(const SurfaceModel& surface, const BundleInvariants& bundle) {
  if (surface.alg_dim == 0 && (bundle.c1_sq != 0 || bundle.c1_dot_K != 0))
    fail(Err::A0NonzeroC1,
         "a(S) = 0 forces c1(E) = 0, got c1_sq = " + std::to_string(bundle.c1_sq) +
             ", c1_dot_K = " + std::to_string(bundle.c1_dot_K));
  // c1(E)^2 - 3 c1(E)c1(S) - 4 c1(S)^2 = c1_sq + 3 c1_dot_K - 4 k_squared.
  return checked_sub(checked_add(bundle.c1_sq, checked_mul(3, bundle.c1_dot_K)),
                     checked_mul(4, surface.k_squared));
}

DeformationReport classify(const SurfaceModel& surface, const BundleInvariants& bundle,
                           std::int64_t h0_TX) {
  if (surface.alg_dim >= 2 || !surface.kaehler)
    fail(Err::OutOfHypotheses,
         "the deformation estimate needs a non-algebraic compact Kaehler surface");

  DeformationReport report;
  report.notes.push_back("assumes a conic bundle with rho(X) = rho(S) + 1");

  const auto [banlep, banlep_ok] = banlep_check(bundle);
  report.banlep_lhs = banlep;
  if (!banlep_ok)
    fail(Err::OutOfHypotheses,
         "Bogomolov-Luebke fails (c2 - c1^2/3 = " + banlep.str() +
             " < 0); no such bundle exists on a compact Kaehler surface");

  report.chern_gap = chern_gap(surface, bundle);
  if (report.chern_gap < 0)
    fail(Err::OutOfHypotheses,
         "c1^2(E) >= 3c1(E)c1(S) + 4c1^2(S) fails (gap = " +
             std::to_string(report.chern_gap) +
             "); impossible for the discriminant of a conic bundle");

  report.h1_minus_h2 = h1_minus_h2(surface, bundle, h0_TX);
  report.notes.push_back("H^1(T_X) != 0 in all cases");

  if (report.h1_minus_h2 > 0) {
    report.verdict = DeformationVerdict::PositiveStrict;
    return report;
  }
  if (report.h1_minus_h2 < 0)
    fail(Err::OutOfHypotheses,
         "h1 - h2 < 0 is impossible under the stated hypotheses; input inconsistent");

  // Equality path: every summand must vanish.
  const bool vanishings = surface.k_squared == 0 && surface.c2 == 0 &&
                          bundle.c1_sq == 0 && bundle.c2 == 0 &&
                          bundle.c1_dot_K == 0 && h0_TX == 0;
  if (!vanishings) {
    report.verdict = DeformationVerdict::NonnegWithEqualityConditions;
    report.notes.push_back(
        "equality holds but the vanishing profile c1^2(S) = c2(S) = c1^2(E) = c2(E) = 0 "
        "fails; on a genuine non-algebraic surface c1(S).L = 0 for every line bundle, "
        "so the input is inconsistent");
    return report;
  }

  if (surface.kodaira_dim == 0) {
    report.verdict = DeformationVerdict::ExceptionalCaseI;
    report.notes.push_back(
        "torus profile: invariants are numerically consistent with projectively flat E");
    report.notes.push_back(
        "equality additionally requires X not isomorphic to P(V) for rank-2 V");
  } else if (surface.kodaira_dim == 1 && surface.minimal) {
    report.verdict = DeformationVerdict::ExceptionalCaseII;
    report.notes.push_back(
        "minimal properly elliptic profile: c2(S) = 0 is the numeric proxy for all "
        "singular fibers being multiples of smooth elliptic curves");
  } else {
    report.verdict = DeformationVerdict::NonnegWithEqualityConditions;
    report.notes.push_back(
        "equality profile with kappa(S) outside {0, 1 (minimal)}: no surface "
        "classification case matches, input likely inconsistent");
  }
  return report;
}

}  // namespace kkit
