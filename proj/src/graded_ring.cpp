#include "kkit/graded_ring.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace kkit {

struct PowerRelation {
  std::size_t gen;
  int power;
  GradedRing::TermMap rhs;
};

struct VanishingRule {
  std::vector<std::size_t> gens;
  int degree_bound;
};

struct GradedRing::Impl {
  std::vector<Generator> generators;
  int truncation_degree = 0;
  std::vector<PowerRelation> relations;
  std::vector<VanishingRule> rules;
};

GradedRing::GradedRing(std::vector<Generator> generators, int truncation_degree) {
  if (truncation_degree < 0) fail(Err::InvalidArgument, "negative truncation degree");
  auto impl = std::make_shared<Impl>();
  for (const auto& g : generators) {
    if (g.degree <= 0) fail(Err::InvalidArgument, "generator degree must be positive");
    for (const auto& other : impl->generators)
      if (other.name == g.name)
        fail(Err::InvalidArgument, "duplicate generator name " + g.name);
    impl->generators.push_back(g);
  }
  impl->truncation_degree = truncation_degree;
  impl_ = std::move(impl);
}

std::size_t GradedRing::generator_count() const { return impl_->generators.size(); }

const std::vector<GradedRing::Generator>& GradedRing::generators() const {
  return impl_->generators;
}

std::size_t GradedRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < impl_->generators.size(); ++i)
    if (impl_->generators[i].name == name) return i;
  fail(Err::InvalidArgument, "unknown generator " + name);
}

int GradedRing::truncation_degree() const { return impl_->truncation_degree; }

int GradedRing::degree_of(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    d += static_cast<int>(m[i]) * impl_->generators[i].degree;
  return d;
}

GradedRing GradedRing::with_power_relation(const std::string& gen, int power,
                                           const TermMap& rhs) const {
  if (power < 1) fail(Err::InvalidArgument, "relation power must be >= 1");
  const std::size_t g = index_of(gen);
  for (const auto& [mono, coeff] : rhs) {
    (void)coeff;
    if (mono.size() != generator_count())
      fail(Err::InvalidArgument, "relation term over the wrong generator set");
    if (static_cast<int>(mono[g]) >= power)
      fail(Err::InvalidArgument, "relation rhs does not reduce the degree in " + gen);
  }
  GradedRing out;
  auto impl = std::make_shared<Impl>(*impl_);
  impl->relations.push_back(PowerRelation{g, power, rhs});
  out.impl_ = std::move(impl);
  return out;
}

GradedRing GradedRing::with_vanishing_rule(const std::vector<std::string>& gens,
                                           int degree_bound) const {
  VanishingRule rule;
  for (const auto& name : gens) rule.gens.push_back(index_of(name));
  rule.degree_bound = degree_bound;
  GradedRing out;
  auto impl = std::make_shared<Impl>(*impl_);
  impl->rules.push_back(std::move(rule));
  out.impl_ = std::move(impl);
  return out;
}

GradedRing::TermMap GradedRing::normal_form(const TermMap& raw) const {
  TermMap out;
  std::deque<std::pair<Monomial, Rational>> work(raw.begin(), raw.end());
  // Generous cap; every ring in this library settles in a handful of steps.
  std::size_t budget = 1u << 22;

  auto vanishes = [&](const Monomial& m) {
    if (degree_of(m) > impl_->truncation_degree) return true;
    for (const auto& rule : impl_->rules) {
      int d = 0;
      for (std::size_t g : rule.gens) d += static_cast<int>(m[g]) * impl_->generators[g].degree;
      if (d >= rule.degree_bound) return true;
    }
    return false;
  };

  while (!work.empty()) {
    if (budget-- == 0) fail(Err::NormalFormFailure, "rewriting did not terminate");
    auto [mono, coeff] = work.front();
    work.pop_front();
    if (coeff.is_zero()) continue;
    if (mono.size() != generator_count())
      fail(Err::InvalidArgument, "term over the wrong generator set");
    if (vanishes(mono)) continue;

    const PowerRelation* hit = nullptr;
    for (const auto& rel : impl_->relations)
      if (static_cast<int>(mono[rel.gen]) >= rel.power) {
        hit = &rel;
        break;
      }
    if (hit != nullptr) {
      Monomial rest = mono;
      rest[hit->gen] = static_cast<std::uint8_t>(rest[hit->gen] - hit->power);
      for (const auto& [rm, rc] : hit->rhs) {
        Monomial prod = rest;
        for (std::size_t i = 0; i < prod.size(); ++i)
          prod[i] = static_cast<std::uint8_t>(prod[i] + rm[i]);
        work.emplace_back(std::move(prod), coeff * rc);
      }
      continue;
    }

    auto it = out.find(mono);
    if (it == out.end()) {
      out.emplace(std::move(mono), coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

RingElement RingElement::zero(const GradedRing& ring) {
  return RingElement(ring, {});
}

RingElement RingElement::constant(const GradedRing& ring, const Rational& value) {
  GradedRing::TermMap t;
  if (!value.is_zero()) t.emplace(GradedRing::Monomial(ring.generator_count(), 0), value);
  return RingElement(ring, std::move(t));
}

RingElement RingElement::generator(const GradedRing& ring, const std::string& name) {
  GradedRing::Monomial m(ring.generator_count(), 0);
  m[ring.index_of(name)] = 1;
  GradedRing::TermMap raw;
  raw.emplace(std::move(m), Rational(1));
  return from_terms(ring, raw);
}

RingElement RingElement::from_terms(const GradedRing& ring,
                                    const GradedRing::TermMap& raw) {
  return RingElement(ring, ring.normal_form(raw));
}

void RingElement::check_same_ring(const RingElement& o) const {
  if (!ring_.same_ring(o.ring_))
    fail(Err::RingMismatch, "operands belong to different rings");
}

RingElement RingElement::operator-() const { return scaled(Rational(-1)); }

RingElement& RingElement::operator+=(const RingElement& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) { return *this += -o; }

RingElement& RingElement::operator*=(const RingElement& o) {
  check_same_ring(o);
  GradedRing::TermMap raw;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      GradedRing::Monomial prod(ma.size());
      for (std::size_t i = 0; i < ma.size(); ++i)
        prod[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
      auto it = raw.find(prod);
      if (it == raw.end())
        raw.emplace(std::move(prod), ca * cb);
      else
        it->second += ca * cb;
    }
  }
  terms_ = ring_.normal_form(raw);
  return *this;
}

RingElement RingElement::scaled(const Rational& c) const {
  if (c.is_zero()) return zero(ring_);
  GradedRing::TermMap t;
  for (const auto& [m, v] : terms_) t.emplace(m, v * c);
  return RingElement(ring_, std::move(t));
}

RingElement RingElement::pow(int exponent) const {
  if (exponent < 0) fail(Err::InvalidArgument, "negative power of a ring element");
  RingElement acc = constant(ring_, Rational(1));
  for (int i = 0; i < exponent; ++i) acc *= *this;
  return acc;
}

RingElement RingElement::graded_part(int degree) const {
  GradedRing::TermMap t;
  for (const auto& [m, c] : terms_)
    if (ring_.degree_of(m) == degree) t.emplace(m, c);
  return RingElement(ring_, std::move(t));
}

int RingElement::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    (void)c;
    d = std::max(d, ring_.degree_of(m));
  }
  return d;
}

RingElement RingElement::exp() const {
  if (!graded_part(0).is_zero())
    fail(Err::InvalidArgument, "exp requires a strictly positive-degree element");
  RingElement acc = constant(ring_, Rational(1));
  RingElement power = constant(ring_, Rational(1));
  Rational factorial(1);
  for (int k = 1; k <= ring_.truncation_degree(); ++k) {
    power *= *this;
    if (power.is_zero()) break;
    factorial *= Rational(k);
    acc += power.scaled(Rational(1) / factorial);
  }
  return acc;
}

Rational RingElement::coefficient(const std::map<std::string, int>& monomial) const {
  GradedRing::Monomial m(ring_.generator_count(), 0);
  for (const auto& [name, e] : monomial) {
    if (e < 0) fail(Err::InvalidArgument, "negative exponent");
    m[ring_.index_of(name)] = static_cast<std::uint8_t>(e);
  }
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool RingElement::mentions(const std::string& generator_name) const {
  const std::size_t g = ring_.index_of(generator_name);
  for (const auto& [m, c] : terms_) {
    (void)c;
    if (m[g] != 0) return true;
  }
  return false;
}

std::string monomial_str(const GradedRing& ring, const GradedRing::Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.generators()[i].name;
    if (m[i] > 1) out += "^" + std::to_string(static_cast<int>(m[i]));
  }
  return out.empty() ? "1" : out;
}

std::string RingElement::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<GradedRing::Monomial, Rational>> sorted(terms_.begin(),
                                                                terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const auto& a, const auto& b) {
                     const int da = ring_.degree_of(a.first);
                     const int db = ring_.degree_of(b.first);
                     if (da != db) return da < db;
                     return a.first < b.first;
                   });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    Rational shown = c;
    if (first) {
      if (c < Rational(0)) {
        os << "-";
        shown = -c;
      }
      first = false;
    } else if (c < Rational(0)) {
      os << " - ";
      shown = -c;
    } else {
      os << " + ";
    }
    const std::string ms = monomial_str(ring_, m);
    if (ms == "1") {
      os << shown.str();
    } else if (shown == Rational(1)) {
      os << ms;
    } else {
      os << shown.str() << "*" << ms;
    }
  }
  return os.str();
}

bool operator==(const RingElement& a, const RingElement& b) {
  // Elements are already in normal form; equal generator layouts make the
  // term maps directly comparable even across ring instances.
  if (!a.ring_.same_ring(b.ring_)) {
    if (!a.ring_.valid() || !b.ring_.valid()) return a.ring_.valid() == b.ring_.valid();
    const auto& ga = a.ring_.generators();
    const auto& gb = b.ring_.generators();
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
      if (ga[i].name != gb[i].name || ga[i].degree != gb[i].degree) return false;
  }
  return a.terms_ == b.terms_;
}

}  // namespace kkit
