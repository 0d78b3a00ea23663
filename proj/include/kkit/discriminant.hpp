#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kkit/curve_config.hpp"
#include "kkit/surface.hpp"

namespace kkit {

// Executable form of the discriminant inequality D.(D-3K) - 4K^2 >= 0 for
// property-(P) divisors on surfaces of algebraic dimension 1, run as the
// blow-down induction of the proof, with a machine-checkable certificate.

enum class CaseLabel {
  Ordinary,          // accepted on parse for hand-written steps
  Admissible,
  Mu3Excluded,
  Mu2Eps0Excluded,
  PimpExcluded,      // eps = 1 with mu < 2 contradicts property (P)
};

const char* case_label_name(CaseLabel label);
CaseLabel parse_case_label(const std::string& name);

// 4 + (mu - eps)(eps - mu - 3), the change of the inequality value across
// one blow-down.
std::int64_t step_increment(std::int64_t mu, std::int64_t eps);

// Classification of a (mu, eps) pair. Requires 0 <= mu <= 3 (reduced curves
// on elliptic surfaces have multiplicity at most 3; MuOutOfRange otherwise)
// and eps in {0, 1} (BadEpsilon). Admissible pairs are exactly (0,0), (1,0)
// and (2,1).
CaseLabel admissible_mu_eps(std::int64_t mu, std::int64_t eps);

struct InductionStep {
  std::string contracted;   // id of the (-1)-curve
  std::int64_t mu = 0;
  std::int64_t eps = 0;
  std::int64_t delta_value = 0;  // = step_increment(mu, eps)
  CaseLabel case_label = CaseLabel::Admissible;
};

struct Certificate {
  std::vector<InductionStep> chain;
  std::int64_t base_value = 0;   // inequality value on the minimal surface
  std::int64_t final_value = 0;  // base_value + sum of increments
  bool verdict = false;          // final_value >= 0
  // Independent route: D^2 and D.K read off the top configuration and fed
  // through the inequality directly; must equal final_value.
  std::int64_t d_squared_top = 0;
  std::int64_t d_dot_k_top = 0;
  std::int64_t two_path_value = 0;
};

// Base case of the induction: on a minimal elliptic surface a property-(P)
// divisor is numerically a sum of distinct (-2)-curves with D^2 = 0 and
// D.K = 0, so the inequality value is -4 K^2.
//  - NotMinimal unless the surface is minimal with alg_dim = 1
//  - PropertyPFails when D fails (P)
//  - CensusViolation when the configuration contradicts the minimal-elliptic
//    shape (components other than (-2)-rationals and fiber-like curves, or
//    D^2 != 0 for a (P)-divisor)
std::int64_t minimal_elliptic_base(const CurveConfiguration& cfg, const ReducedDivisor& D,
                                   const SurfaceModel& surface);

struct BlowDownChain {
  SurfaceModel base_surface;     // the minimal elliptic surface at the bottom
  CurveConfiguration top_config; // configuration on the fully blown-up surface
  ReducedDivisor divisor;        // D upstairs
  std::vector<std::string> contractions;  // (-1)-curves, contracted in order
};

// Runs the induction: re-checks property (P) at every stage, derives mu and
// eps from the configuration (user-supplied values are never trusted),
// rejects the excluded cases, contracts, and certifies the accumulated
// inequality value against the independent top-level computation.
Certificate verify_inductive(const BlowDownChain& chain);

struct A0Decision {
  bool holds = false;                  // D is the zero divisor
  std::optional<std::string> witness;  // (P)-violating component when D != 0
  std::string note;
};

// Algebraic dimension 0: property (P) forces D = 0, since nonzero curve
// configurations are forests of smooth rational curves and every such
// forest has a component with pair degree <= 1.
//  - NotAlgebraicDimensionZero unless alg_dim = 0
//  - InconsistentContext when D contains a cycle, a tangency or a
//    non-rational component (impossible when a(S) = 0)
A0Decision decide_a0(const SurfaceModel& surface, const CurveConfiguration& cfg,
                     const ReducedDivisor& D);

}  // namespace kkit
