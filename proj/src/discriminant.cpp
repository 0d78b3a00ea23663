#include "kkit/discriminant.hpp"

#include "kkit/kodaira.hpp"
#include "kkit/rational.hpp"

namespace kkit {

const char* case_label_name(CaseLabel label) {
  switch (label) {
    case CaseLabel::Ordinary: return "ordinary";
    case CaseLabel::Admissible: return "admissible";
    case CaseLabel::Mu3Excluded: return "mu3_excluded";
    case CaseLabel::Mu2Eps0Excluded: return "mu2eps0_excluded";
    case CaseLabel::PimpExcluded: return "pimp_excluded";
  }
  return "?";
}

CaseLabel parse_case_label(const std::string& name) {
  if (name == "ordinary") return CaseLabel::Ordinary;
  if (name == "admissible") return CaseLabel::Admissible;
  if (name == "mu3_excluded") return CaseLabel::Mu3Excluded;
  if (name == "mu2eps0_excluded") return CaseLabel::Mu2Eps0Excluded;
  if (name == "pimp_excluded") return CaseLabel::PimpExcluded;
  fail(Err::ParseError, "unknown case label \"" + name + "\"");
}

std::int64_t step_increment(std::int64_t mu, std::int64_t eps) {
  const std::int64_t t = checked_sub(mu, eps);
  return checked_add(4, checked_mul(t, checked_sub(checked_sub(eps, mu), 3)));
}

CaseLabel admissible_mu_eps(std::int64_t mu, std::int64_t eps) {
  if (eps != 0 && eps != 1)
    fail(Err::BadEpsilon, "eps must be 0 or 1, got " + std::to_string(eps));
  if (mu < 0 || mu > 3)
    fail(Err::MuOutOfRange,
         "mu = " + std::to_string(mu) +
             "; reduced curves on elliptic surfaces have multiplicity at most 3");
  if (mu == 3) return CaseLabel::Mu3Excluded;
  if (mu == 2 && eps == 0) return CaseLabel::Mu2Eps0Excluded;
  if (eps == 1 && mu < 2) return CaseLabel::PimpExcluded;
  return CaseLabel::Admissible;
}

namespace {

bool fiber_like(const CurveNode& n) {
  // Whole singular or smooth fibers occurring irreducibly: self-intersection
  // zero and arithmetic genus one.
  return !n.rational_smooth && n.self_int == 0;
}

// Mirrors the case analysis for mu = 2: name the downstairs shape so the
// rejection message matches the contradiction the proof derives.
std::string mu2_shape(const CurveConfiguration& cfg, const std::string& c0,
                      const ReducedDivisor& D) {
  std::vector<std::pair<std::string, std::int64_t>> met;
  for (const auto& id : D.components)
    if (id != c0) {
      const std::int64_t v = cfg.pair_int(c0, id);
      if (v > 0) met.emplace_back(id, v);
    }
  if (met.size() == 1 && met[0].second == 2)
    return "the image is an irreducible curve with a double point (node or cusp) at "
           "p(C0); its strict transform " + met[0].first + " is smooth rational";
  if (met.size() == 2)
    return "the image consists of two curves through p(C0); their strict transforms " +
           met[0].first + " and " + met[1].first + " end a chain";
  return "insufficient local data to name the downstairs shape";
}

}  // namespace

std::int64_t minimal_elliptic_base(const CurveConfiguration& cfg, const ReducedDivisor& D,
                                   const SurfaceModel& surface) {
  if (!surface.minimal || surface.alg_dim != 1)
    fail(Err::NotMinimal, "base of the induction must be a minimal surface with a(S) = 1");

  const PropertyPResult p = property_P(cfg, D);
  if (!p.holds)
    fail(Err::PropertyPFails, "component " + *p.witness + " has pair degree " +
                                  std::to_string(p.witness_degree) + " < 2");

  // On a minimal elliptic surface every irreducible curve is a (-2)-curve or
  // fiber-like; anything else contradicts the claimed context.
  for (const auto& id : D.components) {
    const CurveNode& n = cfg.node(id);
    if (n.rational_smooth && n.self_int != -2)
      fail(Err::CensusViolation,
           "component " + id + " is smooth rational with self-intersection " +
               std::to_string(n.self_int) + "; expected -2 on a minimal elliptic surface");
    if (!n.rational_smooth && !fiber_like(n))
      fail(Err::CensusViolation, "component " + id + " is neither a (-2)-curve nor fiber-like");
  }

  const std::int64_t d_sq = divisor_self_intersection(cfg, D);
  if (d_sq != 0)
    fail(Err::CensusViolation, "property-(P) divisor with D^2 = " + std::to_string(d_sq) +
                                   " != 0 would falsify the census");
  const std::int64_t d_k = divisor_canonical_pairing(cfg, D);
  if (d_k != 0)
    fail(Err::CensusViolation, "property-(P) divisor with D.K = " + std::to_string(d_k) +
                                   " != 0 on a minimal elliptic surface");

  return checked_mul(-4, surface.k_squared);
}

Certificate verify_inductive(const BlowDownChain& chain) {
  Certificate cert;

  {
    const auto violations = validate(chain.top_config);
    if (!violations.empty())
      fail(Err::ChainBroken, "top configuration invalid: " + violations.front().kind +
                                 " " + violations.front().detail);
  }
  for (const auto& id : chain.divisor.components)
    if (!chain.top_config.has_node(id))
      fail(Err::ChainBroken, "divisor component " + id + " not in the configuration");

  // Independent route up top, before anything is contracted.
  cert.d_squared_top = divisor_self_intersection(chain.top_config, chain.divisor);
  cert.d_dot_k_top = divisor_canonical_pairing(chain.top_config, chain.divisor);
  const std::int64_t top_k_squared =
      checked_sub(chain.base_surface.k_squared,
                  static_cast<std::int64_t>(chain.contractions.size()));
  cert.two_path_value =
      inequality_value(top_k_squared, cert.d_squared_top, cert.d_dot_k_top);

  CurveConfiguration cfg = chain.top_config;
  ReducedDivisor divisor = chain.divisor;

  for (const auto& c0 : chain.contractions) {
    if (!cfg.has_node(c0)) fail(Err::ChainBroken, "contracted curve " + c0 + " missing");

    const PropertyPResult p = property_P(cfg, divisor);
    if (!p.holds)
      fail(Err::PropertyPFails,
           "property (P) fails before contracting " + c0 + ": component " + *p.witness +
               " has pair degree " + std::to_string(p.witness_degree));

    const std::int64_t eps = divisor.contains(c0) ? 1 : 0;
    std::int64_t mu = 0;
    for (const auto& id : divisor.components)
      if (id != c0) mu = checked_add(mu, cfg.pair_int(c0, id));

    // The contracted curve must be smooth rational with k >= 2 images only
    // where the merge table can express them.
    for (const auto& id : divisor.components)
      if (id != c0 && cfg.pair_int(c0, id) >= 2 && !cfg.node(id).rational_smooth)
        fail(Err::InsufficientLocalData,
             "component " + id + " is already singular and meets " + c0 +
                 " with multiplicity >= 2; the image genus is outside the vocabulary");

    CaseLabel label;
    try {
      label = admissible_mu_eps(mu, eps);
    } catch (const Error& e) {
      if (e.code() == Err::MuOutOfRange)
        fail(Err::ExcludedCaseEncountered,
             "contracting " + c0 + ": mu = " + std::to_string(mu) +
                 " exceeds 3, impossible for reduced divisors on elliptic surfaces");
      throw;
    }
    switch (label) {
      case CaseLabel::Mu3Excluded:
        fail(Err::ExcludedCaseEncountered,
             "contracting " + c0 + ": mu = 3 forces a triple point whose strict "
             "transforms violate property (P) (C_i.(D - C_i) = eps <= 1)");
      case CaseLabel::Mu2Eps0Excluded:
        fail(Err::ExcludedCaseEncountered,
             "contracting " + c0 + ": mu = 2 with " + c0 +
                 " not in D contradicts property (P); " + mu2_shape(cfg, c0, divisor));
      case CaseLabel::PimpExcluded:
        fail(Err::ExcludedCaseEncountered,
             "contracting " + c0 + ": " + c0 + " lies in D with C0.(D - C0) = " +
                 std::to_string(mu) + " < 2, violating property (P)");
      case CaseLabel::Ordinary:
      case CaseLabel::Admissible:
        break;
    }

    InductionStep step;
    step.contracted = c0;
    step.mu = mu;
    step.eps = eps;
    step.delta_value = step_increment(mu, eps);
    step.case_label = label;
    cert.chain.push_back(step);

    BlowDownResult down = blow_down(cfg, c0);  // throws NotMinusOneCurve
    cfg = std::move(down.config);
    divisor = divisor.without(c0);
  }

  cert.base_value = minimal_elliptic_base(cfg, divisor, chain.base_surface);
  cert.final_value = cert.base_value;
  for (const auto& step : cert.chain)
    cert.final_value = checked_add(cert.final_value, step.delta_value);
  cert.verdict = cert.final_value >= 0;

  if (cert.final_value != cert.two_path_value)
    fail(Err::ChainBroken,
         "two-path consistency failed: induction gives " +
             std::to_string(cert.final_value) + " but the top-level inequality gives " +
             std::to_string(cert.two_path_value));
  return cert;
}

A0Decision decide_a0(const SurfaceModel& surface, const CurveConfiguration& cfg,
                     const ReducedDivisor& D) {
  if (surface.alg_dim != 0)
    fail(Err::NotAlgebraicDimensionZero,
         "a(S) = " + std::to_string(surface.alg_dim) + ", expected 0");

  A0Decision out;
  if (D.empty()) {
    out.holds = true;
    out.note = "the zero divisor has property (P) vacuously";
    return out;
  }

  if (!is_tree_of_smooth_rationals(cfg, D))
    fail(Err::InconsistentContext,
         "nonzero curves on a surface with a(S) = 0 form forests of smooth rational "
         "curves; the given divisor contains a cycle, a tangency or a non-rational "
         "component");

  const PropertyPResult p = property_P(cfg, D);
  if (p.holds)
    // Unreachable for actual forests: every finite forest has a component of
    // pair degree <= 1.
    fail(Err::InconsistentContext, "forest satisfying property (P): data is inconsistent");
  out.holds = false;
  out.witness = p.witness;
  out.note = "component " + *p.witness + " meets the rest of D in " +
             std::to_string(p.witness_degree) + " point(s) < 2, so property (P) fails "
             "and the discriminant of a conic bundle must be empty";
  return out;
}

}  // namespace kkit
