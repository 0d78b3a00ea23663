#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "kkit/rational.hpp"

namespace kkit {

// Sparse element of a graded commutative Q-algebra, truncated in degree.
//
// A ring is described by named generators with integer degrees, a truncation
// degree (monomials above it vanish), an optional set of power relations
// g^p -> lower-order polynomial (the Grothendieck relation of a projective
// bundle is the one client), and optional vanishing rules that kill any
// monomial whose degree restricted to a generator subset reaches a bound
// (dimension relations of the base surface). Rewriting terminates because a
// relation's right-hand side has strictly smaller degree in its own
// generator; normal forms are unique on the monomial basis.
class GradedRing {
 public:
  struct Generator {
    std::string name;
    int degree;
  };

  // Exponent vector over the ring's generators, in declaration order.
  using Monomial = std::vector<std::uint8_t>;
  using TermMap = std::map<Monomial, Rational>;

  GradedRing() = default;
  GradedRing(std::vector<Generator> generators, int truncation_degree);

  // Extension steps; each returns a new ring sharing the generator layout.
  // The right-hand side of a power relation is given as a term map over this
  // ring's monomials and must have degree < power in `gen`.
  GradedRing with_power_relation(const std::string& gen, int power,
                                 const TermMap& rhs) const;
  GradedRing with_vanishing_rule(const std::vector<std::string>& gens,
                                 int degree_bound) const;

  bool valid() const { return impl_ != nullptr; }
  std::size_t generator_count() const;
  const std::vector<Generator>& generators() const;
  std::size_t index_of(const std::string& name) const;  // UnknownCurve-free: throws InvalidArgument
  int truncation_degree() const;
  int degree_of(const Monomial& m) const;

  bool same_ring(const GradedRing& other) const { return impl_ == other.impl_; }

  // Normal form of a raw term map: applies vanishing rules, power relations
  // and truncation. Throws NormalFormFailure if rewriting fails to settle.
  TermMap normal_form(const TermMap& raw) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

class RingElement {
 public:
  RingElement() = default;

  static RingElement zero(const GradedRing& ring);
  static RingElement constant(const GradedRing& ring, const Rational& value);
  static RingElement generator(const GradedRing& ring, const std::string& name);
  // Raw terms are normalized on entry.
  static RingElement from_terms(const GradedRing& ring, const GradedRing::TermMap& raw);

  const GradedRing& ring() const { return ring_; }
  const GradedRing::TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }

  RingElement scaled(const Rational& c) const;
  RingElement pow(int exponent) const;

  // Homogeneous part of the given degree.
  RingElement graded_part(int degree) const;
  int max_degree() const;  // -1 for zero

  // exp(x) truncated by the ring; x must have no degree-0 part.
  RingElement exp() const;

  // Coefficient of the monomial given as {generator name -> exponent}.
  Rational coefficient(const std::map<std::string, int>& monomial) const;
  // True if any surviving monomial uses the named generator.
  bool mentions(const std::string& generator_name) const;

  // Stable rendering: terms ordered by (degree, lexicographic monomial),
  // e.g. "5 + 7/2*c1 + 17/12*c1^2 - e2".
  std::string str() const;

  friend bool operator==(const RingElement& a, const RingElement& b);
  friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

 private:
  RingElement(GradedRing ring, GradedRing::TermMap terms)
      : ring_(std::move(ring)), terms_(std::move(terms)) {}
  void check_same_ring(const RingElement& o) const;

  GradedRing ring_;
  GradedRing::TermMap terms_;
};

// Monomial rendering helper shared with the JSON layer ("c1^2*e1").
std::string monomial_str(const GradedRing& ring, const GradedRing::Monomial& m);

}  // namespace kkit
