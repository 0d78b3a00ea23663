#pragma once

#include <map>
#include <string>

#include "kkit/graded_ring.hpp"

namespace kkit {

// Symbolic Chern calculus for the conic-bundle pipeline.
//
// Generators (complex codimension in parentheses):
//   c1 (1), c2 (2)  Chern classes of the surface S,
//   e1 (1), e2 (2), e3 (3)  Chern classes of the rank-3 bundle E on S,
//   xi (1)  relative hyperplane class of P(E) -> S.
//
// P(E) is the bundle of one-dimensional quotients; O(1) is dual to the
// tautological sub, so the Grothendieck relation reads
//   xi^3 = e1*xi^2 - e2*xi + e3
// and the fiber integral is the xi^2 coefficient. The conic bundle X sits
// in |O(2) (x) pi^* det E^*|, i.e. [X] = 2*xi - e1.

// Formal cohomology of S: degree-3 monomials in {c1,c2,e1,e2} vanish; e3 is
// carried formally so grading bugs cannot hide a stray c3(E).
GradedRing surface_ring();

// Cohomology of P(E) for rank-3 E, truncated one degree above the fourfold.
// Only rank 3 is supported; anything else throws UnsupportedRank.
GradedRing projective_bundle_ring(int rank);

// ch = rank + c1 + (c1^2-2c2)/2 + (c1^3-3c1c2+3c3)/6 + ... via Newton's
// identities, computed from a total Chern class 1 + c1 + c2 + ...
RingElement chern_character(const RingElement& total_chern, int rank, int up_to);

// td = 1 + c1/2 + (c1^2+c2)/12 + c1c2/24 + (-c1^4+4c1^2c2+c1c3+3c2^2-c4)/720.
RingElement todd_class(const RingElement& tangent_chern, int up_to);

// pi_*: reads the xi^2 coefficient into the surface ring.
RingElement pushforward_to_S(const RingElement& on_P, const GradedRing& surface);

// Degree-2 part of a surface class: the formal surface number.
RingElement integral_S(const RingElement& on_S);

// Numeric evaluation of a formal surface number. Degree-2 monomials stand
// for intersection numbers, not products, so values are assigned per
// monomial as rendered by monomial_str ("c1^2", "c1*e1", "e2", ...). Every
// monomial with a nonzero coefficient must be assigned.
Rational evaluate_pairing(const RingElement& element,
                          const std::map<std::string, Rational>& monomial_values);

// The standard classes on P(E), shared by the operations below.
struct ConicBundleClasses {
  GradedRing ring;                 // projective_bundle_ring(3)
  RingElement xi, c1, c2, e1, e2, e3;
  RingElement hyperplane_section;  // [X] = 2*xi - e1

  RingElement total_chern_relative_tangent() const;  // 1 + (3xi-e1) + (3xi^2-2e1xi+e2)
  RingElement total_chern_surface_tangent() const;   // 1 + c1 + c2
  RingElement ch_relative_tangent() const;           // exp(xi)*ch(E^v) - 1
  RingElement ch_surface_tangent() const;
  RingElement todd_total_tangent() const;            // td(T_{P/S}) * td(pi^* T_S)
};

ConicBundleClasses conic_bundle_classes();

// ch(T_X) as a class on P(E) (restriction to X is implicit):
//   ch(T_{P/S}) + pi^* ch(T_S) - exp([X]).
RingElement conic_bundle_tangent(const ConicBundleClasses& g);

// Integral over X of a class extended to P(E): pi_*(cls . [X]).
RingElement integrate_over_X(const RingElement& cls, const ConicBundleClasses& g,
                             const GradedRing& surface);

// chi(O_{P(E)}) and chi(O_X) as formal surface numbers; both must equal
// chi(O_S) = (c1^2 + c2)/12.
RingElement chi_O_projective_bundle(const ConicBundleClasses& g,
                                    const GradedRing& surface);
RingElement chi_O_conic_bundle(const ConicBundleClasses& g,
                               const GradedRing& surface);

// c2(E) - c1(E)^2/3, the Bogomolov-Luebke discriminant as a formal class.
RingElement bogomolov_discriminant(const GradedRing& surface);

struct RieroReport {
  RingElement chi_TX;            // formal surface number, HRR route
  RingElement pushforward_full;  // full pi_* of the HRR integrand (all degrees)
  RingElement target;            // e2 - e1*c1 - 2*c1^2 + 7*chi(O_S)
  RingElement residual;          // (-chi_TX) - target
  Rational e3_coefficient;       // coefficient of e3 in the pushforward
  bool ok = false;               // residual == 0 and e3_coefficient == 0
};

// Recomputes the deformation-count identity by HRR on P(E) and reports the
// residual against the closed form. Never throws on a nonzero residual;
// check_riero() does.
RieroReport verify_riero();
void check_riero();  // throws ResidualNonzero with the offending monomials

}  // namespace kkit
