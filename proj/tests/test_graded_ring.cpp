#include <doctest.h>

#include <random>

#include "kkit/chern.hpp"
#include "kkit/graded_ring.hpp"

using namespace kkit;

TEST_CASE("surface ring normal form") {
  const GradedRing s = surface_ring();
  const RingElement c1 = RingElement::generator(s, "c1");
  const RingElement c2 = RingElement::generator(s, "c2");
  const RingElement e3 = RingElement::generator(s, "e3");

  CHECK((c1 * c1 * c1).is_zero());   // degree 3 on a surface
  CHECK((c1 * c2).is_zero());
  CHECK((c2 * c2).is_zero());
  CHECK_FALSE((c1 * c1).is_zero());
  CHECK_FALSE(e3.is_zero());         // carried formally
  CHECK((e3 * c1).is_zero());        // beyond the guard degree

  CHECK(integral_S(c1 * c1) == c1 * c1);
  CHECK(integral_S(c1).is_zero());
}

TEST_CASE("Grothendieck relation on the projective bundle ring") {
  const GradedRing p = projective_bundle_ring(3);
  const RingElement xi = RingElement::generator(p, "xi");
  const RingElement e1 = RingElement::generator(p, "e1");
  const RingElement e2 = RingElement::generator(p, "e2");
  const RingElement e3 = RingElement::generator(p, "e3");

  CHECK(xi.pow(3) == e1 * xi * xi - e2 * xi + e3);
  // xi^4 reduces through the relation twice: the xi^2 slot carries the
  // second Segre class e1^2 - e2.
  CHECK(xi.pow(4).coefficient({{"e1", 2}, {"xi", 2}}) == Rational(1));
  CHECK(xi.pow(4).coefficient({{"e2", 1}, {"xi", 2}}) == Rational(-1));

  CHECK_THROWS_WITH_AS(projective_bundle_ring(2), doctest::Contains("UnsupportedRank"),
                       Error);
}

TEST_CASE("pushforward reads the xi^2 coefficient") {
  const GradedRing p = projective_bundle_ring(3);
  const GradedRing s = surface_ring();
  const RingElement xi = RingElement::generator(p, "xi");
  const RingElement c1p = RingElement::generator(p, "c1");
  const RingElement one = RingElement::constant(p, Rational(1));

  CHECK(pushforward_to_S(xi * xi, s) == RingElement::constant(s, Rational(1)));
  CHECK(pushforward_to_S(c1p, s).is_zero());       // pulled back, codim <= 2
  CHECK(pushforward_to_S(c1p * c1p, s).is_zero());
  CHECK(pushforward_to_S(one, s).is_zero());
  // pi_*(xi^3) = s_1(E) = e1 under the quotient convention.
  CHECK(pushforward_to_S(xi.pow(3), s) == RingElement::generator(s, "e1"));
  // pi_*(xi^4) = s_2(E) = e1^2 - e2.
  const RingElement s2 = pushforward_to_S(xi.pow(4), s);
  const RingElement e1s = RingElement::generator(s, "e1");
  const RingElement e2s = RingElement::generator(s, "e2");
  CHECK(s2 == e1s * e1s - e2s);
}

TEST_CASE("normal form is idempotent and linear") {
  const GradedRing p = projective_bundle_ring(3);
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> exp(0, 2);
  std::uniform_int_distribution<std::int64_t> coeff(-6, 6);

  const auto random_raw = [&]() {
    GradedRing::TermMap raw;
    for (int t = 0; t < 6; ++t) {
      GradedRing::Monomial m(p.generator_count(), 0);
      for (std::size_t g = 0; g < p.generator_count(); ++g)
        m[g] = static_cast<std::uint8_t>(exp(rng));
      raw[m] += Rational(coeff(rng));
    }
    return raw;
  };

  for (int trial = 0; trial < 200; ++trial) {
    const auto raw_x = random_raw();
    const auto raw_y = random_raw();
    const RingElement x = RingElement::from_terms(p, raw_x);
    const RingElement y = RingElement::from_terms(p, raw_y);

    // nf(nf(x)) = nf(x): feeding normalized terms back through is a fixpoint.
    CHECK(RingElement::from_terms(p, x.terms()) == x);

    // nf(x + y) = nf(x) + nf(y).
    GradedRing::TermMap sum = raw_x;
    for (const auto& [m, c] : raw_y) sum[m] += c;
    CHECK(RingElement::from_terms(p, sum) == x + y);
  }
}

TEST_CASE("ring arithmetic basics") {
  const GradedRing s = surface_ring();
  const RingElement c1 = RingElement::generator(s, "c1");
  const RingElement a = RingElement::constant(s, Rational(2)) + c1;

  CHECK((a - a).is_zero());
  CHECK(a.graded_part(0) == RingElement::constant(s, Rational(2)));
  CHECK(a.graded_part(1) == c1);
  CHECK(a.max_degree() == 1);
  CHECK(RingElement::zero(s).max_degree() == -1);
  CHECK(a.str() == "2 + c1");
  CHECK((-a).str() == "-2 - c1");

  CHECK(c1.exp() == RingElement::constant(s, Rational(1)) + c1 +
                        (c1 * c1).scaled(Rational(1, 2)));
  CHECK_THROWS_AS(a.exp(), Error);

  const GradedRing other = surface_ring();
  CHECK_THROWS_WITH_AS(c1 + RingElement::generator(other, "c1"),
                       doctest::Contains("RingMismatch"), Error);
}

TEST_CASE("relations validate their right-hand side") {
  GradedRing r({{"x", 1}}, 4);
  GradedRing::TermMap bad;
  GradedRing::Monomial m(1, 0);
  m[0] = 2;
  bad.emplace(m, Rational(1));
  CHECK_THROWS_AS(r.with_power_relation("x", 2, bad), Error);  // x^2 -> x^2 loops
}
