#include "kkit/chern.hpp"

namespace kkit {

namespace {

constexpr int kSurfaceTruncation = 3;   // keeps e3 visible, kills c1^3 etc.
constexpr int kBundleTruncation = 4;    // dim P(E) = 4

RingElement gen(const GradedRing& r, const std::string& name) {
  return RingElement::generator(r, name);
}

RingElement cst(const GradedRing& r, const Rational& v) {
  return RingElement::constant(r, v);
}

}  // namespace

GradedRing surface_ring() {
  GradedRing ring({{"c1", 1}, {"c2", 2}, {"e1", 1}, {"e2", 2}, {"e3", 3}},
                  kSurfaceTruncation);
  return ring.with_vanishing_rule({"c1", "c2", "e1", "e2"}, 3);
}

GradedRing projective_bundle_ring(int rank) {
  if (rank != 3)
    fail(Err::UnsupportedRank, "projective bundle ring supports rank 3 only, got " +
                                   std::to_string(rank));
  GradedRing base({{"c1", 1}, {"c2", 2}, {"e1", 1}, {"e2", 2}, {"e3", 3}, {"xi", 1}},
                  kBundleTruncation);
  // xi^3 -> e1*xi^2 - e2*xi + e3
  const auto mono = [&](int c1e, int c2e, int e1e, int e2e, int e3e, int xie) {
    GradedRing::Monomial m(6, 0);
    m[base.index_of("c1")] = static_cast<std::uint8_t>(c1e);
    m[base.index_of("c2")] = static_cast<std::uint8_t>(c2e);
    m[base.index_of("e1")] = static_cast<std::uint8_t>(e1e);
    m[base.index_of("e2")] = static_cast<std::uint8_t>(e2e);
    m[base.index_of("e3")] = static_cast<std::uint8_t>(e3e);
    m[base.index_of("xi")] = static_cast<std::uint8_t>(xie);
    return m;
  };
  GradedRing::TermMap rhs;
  rhs.emplace(mono(0, 0, 1, 0, 0, 2), Rational(1));
  rhs.emplace(mono(0, 0, 0, 1, 0, 1), Rational(-1));
  rhs.emplace(mono(0, 0, 0, 0, 1, 0), Rational(1));
  return base.with_power_relation("xi", 3, rhs);
}

RingElement chern_character(const RingElement& total_chern, int rank, int up_to) {
  const GradedRing& r = total_chern.ring();
  const RingElement a = total_chern.graded_part(1);
  const RingElement b = total_chern.graded_part(2);
  const RingElement c = total_chern.graded_part(3);
  const RingElement d = total_chern.graded_part(4);

  // Newton power sums from elementary symmetric functions.
  const RingElement p1 = a;
  const RingElement p2 = a * a - b.scaled(Rational(2));
  const RingElement p3 = a * a * a - (a * b).scaled(Rational(3)) + c.scaled(Rational(3));
  const RingElement p4 = a.pow(4) - (a * a * b).scaled(Rational(4)) +
                         (a * c).scaled(Rational(4)) + (b * b).scaled(Rational(2)) -
                         d.scaled(Rational(4));

  RingElement ch = cst(r, Rational(rank));
  ch += p1;
  ch += p2.scaled(Rational(1, 2));
  ch += p3.scaled(Rational(1, 6));
  ch += p4.scaled(Rational(1, 24));

  RingElement out = RingElement::zero(r);
  for (int k = 0; k <= up_to; ++k) out += ch.graded_part(k);
  return out;
}

RingElement todd_class(const RingElement& tangent_chern, int up_to) {
  const GradedRing& r = tangent_chern.ring();
  const RingElement a = tangent_chern.graded_part(1);
  const RingElement b = tangent_chern.graded_part(2);
  const RingElement c = tangent_chern.graded_part(3);
  const RingElement d = tangent_chern.graded_part(4);

  RingElement td = cst(r, Rational(1));
  td += a.scaled(Rational(1, 2));
  td += (a * a + b).scaled(Rational(1, 12));
  td += (a * b).scaled(Rational(1, 24));
  td += (a.pow(4).scaled(Rational(-1)) + (a * a * b).scaled(Rational(4)) + a * c +
         (b * b).scaled(Rational(3)) - d)
            .scaled(Rational(1, 720));

  RingElement out = RingElement::zero(r);
  for (int k = 0; k <= up_to; ++k) out += td.graded_part(k);
  return out;
}

RingElement pushforward_to_S(const RingElement& on_P, const GradedRing& surface) {
  const GradedRing& rp = on_P.ring();
  const std::size_t xi = rp.index_of("xi");
  GradedRing::TermMap raw;
  for (const auto& [m, coeff] : on_P.terms()) {
    if (m[xi] != 2) continue;  // fiber integral of xi^2 is 1, lower powers die
    GradedRing::Monomial target(surface.generator_count(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == xi || m[i] == 0) continue;
      target[surface.index_of(rp.generators()[i].name)] = m[i];
    }
    auto it = raw.find(target);
    if (it == raw.end())
      raw.emplace(std::move(target), coeff);
    else
      it->second += coeff;
  }
  return RingElement::from_terms(surface, raw);
}

RingElement integral_S(const RingElement& on_S) { return on_S.graded_part(2); }

Rational evaluate_pairing(const RingElement& element,
                          const std::map<std::string, Rational>& monomial_values) {
  Rational total(0);
  for (const auto& [m, coeff] : element.terms()) {
    const std::string key = monomial_str(element.ring(), m);
    auto it = monomial_values.find(key);
    if (it == monomial_values.end())
      fail(Err::InvalidArgument, "no value assigned to monomial " + key);
    total += coeff * it->second;
  }
  return total;
}

ConicBundleClasses conic_bundle_classes() {
  GradedRing ring = projective_bundle_ring(3);
  ConicBundleClasses g{
      ring,
      gen(ring, "xi"),
      gen(ring, "c1"),
      gen(ring, "c2"),
      gen(ring, "e1"),
      gen(ring, "e2"),
      gen(ring, "e3"),
      RingElement::zero(ring),
  };
  g.hyperplane_section = g.xi.scaled(Rational(2)) - g.e1;
  return g;
}

RingElement ConicBundleClasses::total_chern_relative_tangent() const {
  // Euler sequence 0 -> O -> pi^*E^v (1) -> T_{P/S} -> 0; the degree-3 part
  // of c(pi^*E^v (1)) is the Grothendieck relation, hence zero here.
  RingElement out = RingElement::constant(ring, Rational(1));
  out += xi.scaled(Rational(3)) - e1;
  out += xi.pow(2).scaled(Rational(3)) - (e1 * xi).scaled(Rational(2)) + e2;
  return out;
}

RingElement ConicBundleClasses::total_chern_surface_tangent() const {
  RingElement out = RingElement::constant(ring, Rational(1));
  out += c1;
  out += c2;
  return out;
}

RingElement ConicBundleClasses::ch_relative_tangent() const {
  // ch(E^v) for rank-3 E: flip the sign of the odd Chern classes.
  RingElement total_dual = RingElement::constant(ring, Rational(1));
  total_dual -= e1;
  total_dual += e2;
  total_dual -= e3;
  const RingElement ch_dual = chern_character(total_dual, 3, ring.truncation_degree());
  return xi.exp() * ch_dual - RingElement::constant(ring, Rational(1));
}

RingElement ConicBundleClasses::ch_surface_tangent() const {
  return chern_character(total_chern_surface_tangent(), 2, ring.truncation_degree());
}

RingElement ConicBundleClasses::todd_total_tangent() const {
  const RingElement td_rel =
      todd_class(total_chern_relative_tangent(), ring.truncation_degree());
  const RingElement td_s =
      todd_class(total_chern_surface_tangent(), ring.truncation_degree());
  return td_rel * td_s;
}

RingElement conic_bundle_tangent(const ConicBundleClasses& g) {
  return g.ch_relative_tangent() + g.ch_surface_tangent() - g.hyperplane_section.exp();
}

RingElement integrate_over_X(const RingElement& cls, const ConicBundleClasses& g,
                             const GradedRing& surface) {
  return pushforward_to_S(cls * g.hyperplane_section, surface);
}

namespace {

// (1 - exp(-h)) = td(O(h))^{-1} . h; multiplying by it converts an integral
// over X into one over P(E).
RingElement restriction_factor(const ConicBundleClasses& g) {
  return RingElement::constant(g.ring, Rational(1)) - (-g.hyperplane_section).exp();
}

}  // namespace

RingElement chi_O_projective_bundle(const ConicBundleClasses& g,
                                    const GradedRing& surface) {
  return integral_S(pushforward_to_S(g.todd_total_tangent(), surface));
}

RingElement chi_O_conic_bundle(const ConicBundleClasses& g,
                               const GradedRing& surface) {
  return integral_S(
      pushforward_to_S(g.todd_total_tangent() * restriction_factor(g), surface));
}

RingElement bogomolov_discriminant(const GradedRing& surface) {
  const RingElement e1 = gen(surface, "e1");
  const RingElement e2 = gen(surface, "e2");
  return e2 - (e1 * e1).scaled(Rational(1, 3));
}

RieroReport verify_riero() {
  const ConicBundleClasses g = conic_bundle_classes();
  const GradedRing s = surface_ring();

  const RingElement integrand =
      conic_bundle_tangent(g) * g.todd_total_tangent() * restriction_factor(g);
  RieroReport report;
  report.pushforward_full = pushforward_to_S(integrand, s);
  report.chi_TX = integral_S(report.pushforward_full);

  const RingElement c1 = gen(s, "c1");
  const RingElement c2 = gen(s, "c2");
  const RingElement e1 = gen(s, "e1");
  const RingElement e2 = gen(s, "e2");
  const RingElement chi_OS = (c1 * c1 + c2).scaled(Rational(1, 12));
  report.target =
      e2 - e1 * c1 - (c1 * c1).scaled(Rational(2)) + chi_OS.scaled(Rational(7));

  report.residual = -report.chi_TX - report.target;
  report.e3_coefficient = report.pushforward_full.coefficient({{"e3", 1}});
  report.ok = report.residual.is_zero() && report.e3_coefficient.is_zero() &&
              !report.pushforward_full.mentions("e3");
  return report;
}

void check_riero() {
  const RieroReport report = verify_riero();
  if (!report.ok)
    fail(Err::ResidualNonzero, "residual = " + report.residual.str() +
                                   ", e3 coefficient = " + report.e3_coefficient.str());
}

}  // namespace kkit
