#include <doctest.h>

#include <random>

#include "kkit/curve_config.hpp"
#include "kkit/kodaira.hpp"

using namespace kkit;

namespace {

CurveConfiguration i2_config() {
  return CurveConfiguration({CurveNode{"C1", -2, true, std::nullopt},
                             CurveNode{"C2", -2, true, std::nullopt}},
                            {PairEntry{"C1", "C2", 2, 2}}, {});
}

CurveConfiguration chain_config(int n) {
  std::vector<CurveNode> nodes;
  std::vector<PairEntry> pairs;
  for (int i = 1; i <= n; ++i)
    nodes.push_back(CurveNode{"C" + std::to_string(i), -2, true, std::nullopt});
  for (int i = 1; i < n; ++i)
    pairs.push_back(PairEntry{"C" + std::to_string(i), "C" + std::to_string(i + 1), 1, 1});
  return CurveConfiguration(std::move(nodes), std::move(pairs), {});
}

}  // namespace

TEST_CASE("validate accepts consistent configurations") {
  CHECK(validate(i2_config()).empty());
  CHECK(validate(fiber(make_fiber_type("IV", 0, 1)).config).empty());
}

TEST_CASE("validate flags inconsistent data") {
  // Pairwise total disagreeing with the marked-point contributions.
  CurveConfiguration bad({CurveNode{"A", -2, true, {}}, CurveNode{"B", -2, true, {}}},
                         {PairEntry{"A", "B", 2, 0}},
                         {MarkedPoint{"p", LocalType::Ordinary, {{"A", 1}, {"B", 1}}}});
  const auto v1 = validate(bad);
  REQUIRE_FALSE(v1.empty());
  CHECK(v1.front().kind == "InconsistentIntersection");

  // Asymmetric duplicate listing.
  CurveConfiguration asym({CurveNode{"A", -2, true, {}}, CurveNode{"B", -2, true, {}}},
                          {PairEntry{"A", "B", 1, 1}, PairEntry{"B", "A", 2, 2}}, {});
  bool saw_symmetry = false;
  for (const auto& v : validate(asym)) saw_symmetry |= v.kind == "SymmetryViolation";
  CHECK(saw_symmetry);

  // Type invariants of marked points.
  CurveConfiguration badpoint({CurveNode{"A", 0, false, std::string("cusp")}},
                              {},
                              {MarkedPoint{"p", LocalType::CuspOnCurve, {{"A", 1}}}});
  bool saw_point = false;
  for (const auto& v : validate(badpoint)) saw_point |= v.kind == "BadPointType";
  CHECK(saw_point);
}

TEST_CASE("pair_degree") {
  const FiberRecord i5 = fiber(make_fiber_type("In", 5, 1));
  const ReducedDivisor full = ReducedDivisor::all_of(i5.config);
  for (const auto& n : i5.config.nodes())
    CHECK(pair_degree(i5.config, full, n.id) == 2);  // every cycle node

  const CurveConfiguration chain = chain_config(4);
  const ReducedDivisor d = ReducedDivisor::all_of(chain);
  CHECK(pair_degree(chain, d, "C1") == 1);  // end of the chain
  CHECK(pair_degree(chain, d, "C2") == 2);

  const CurveConfiguration lone({CurveNode{"A", -2, true, {}}}, {}, {});
  CHECK(pair_degree(lone, ReducedDivisor::all_of(lone), "A") == 0);

  CHECK_THROWS_WITH_AS(pair_degree(chain, ReducedDivisor::of({"C1"}), "C2"),
                       doctest::Contains("ComponentNotInDivisor"), Error);
}

TEST_CASE("property (P)") {
  CHECK(property_P(i2_config(), ReducedDivisor{}).holds);  // zero divisor, vacuous
  CHECK(property_P(i2_config(), ReducedDivisor::all_of(i2_config())).holds);

  const CurveConfiguration chain = chain_config(4);
  const PropertyPResult r = property_P(chain, ReducedDivisor::all_of(chain));
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(pair_degree(chain, ReducedDivisor::all_of(chain), *r.witness) <= 1);
}

TEST_CASE("point multiplicity") {
  const FiberRecord iv = fiber(make_fiber_type("IV", 0, 1));
  const ReducedDivisor full = ReducedDivisor::all_of(iv.config);
  CHECK(point_multiplicity(iv.config, full, "p1") == 3);
  CHECK(point_multiplicity(iv.config, ReducedDivisor::of({"C1", "C2"}), "p1") == 2);
  CHECK(point_multiplicity(iv.config, ReducedDivisor{}, "p1") == 0);

  const FiberRecord ii = fiber(make_fiber_type("II", 0, 1));
  CHECK(point_multiplicity(ii.config, ReducedDivisor::all_of(ii.config), "p1") == 2);
}

TEST_CASE("blow-up at an ordinary crossing") {
  CurveConfiguration two({CurveNode{"A", 0, true, {}}, CurveNode{"B", 0, true, {}}},
                         {PairEntry{"A", "B", 1, 0}},
                         {MarkedPoint{"p", LocalType::Ordinary, {{"A", 1}, {"B", 1}}}});
  const BlowUpResult r = blow_up(two, "p");
  CHECK(validate(r.config).empty());
  CHECK(r.config.node("A").self_int == -1);
  CHECK(r.config.node("B").self_int == -1);
  CHECK(r.config.node(r.exceptional).self_int == -1);
  CHECK(r.config.pair_int("A", "B") == 0);
  CHECK(r.config.pair_int("A", r.exceptional) == 1);
  CHECK(r.config.pair_int("B", r.exceptional) == 1);
}

TEST_CASE("excess intersection oracle for ordinary points") {
  // For local multiplicities m1, m2 in {1,2,3}: the strict transforms lose
  // m1*m2 crossings and each meets the exceptional curve m_i times.
  for (std::int64_t m1 = 1; m1 <= 3; ++m1)
    for (std::int64_t m2 = 1; m2 <= 3; ++m2) {
      const std::int64_t before = m1 * m2 + 1;  // one extra crossing elsewhere
      CurveConfiguration cfg(
          {CurveNode{"A", 0, m1 == 1, {}}, CurveNode{"B", 0, m2 == 1, {}}},
          {PairEntry{"A", "B", before, 1}},
          {MarkedPoint{"p", LocalType::Ordinary, {{"A", m1}, {"B", m2}}}});
      const BlowUpResult r = blow_up(cfg, "p");
      CHECK(validate(r.config).empty());
      CHECK(r.config.pair_int("A", "B") == before - m1 * m2);
      CHECK(r.config.pair_int("A", r.exceptional) == m1);
      CHECK(r.config.pair_int("B", r.exceptional) == m2);
      CHECK(r.config.node("A").self_int == -m1 * m1);
      CHECK(r.config.node("B").self_int == -m2 * m2);
    }
}

TEST_CASE("blow-up of a triple point") {
  const FiberRecord iv = fiber(make_fiber_type("IV", 0, 1));
  const BlowUpResult r = blow_up(iv.config, "p1");
  CHECK(validate(r.config).empty());
  for (const auto id : {"C1", "C2", "C3"}) {
    CHECK(r.config.node(id).self_int == -3);
    CHECK(r.config.pair_int(id, r.exceptional) == 1);
  }
  CHECK(r.config.pair_int("C1", "C2") == 0);

  // Contracting the exceptional curve restores the fiber.
  const BlowDownResult down = blow_down(r.config, r.exceptional);
  CHECK(validate(down.config).empty());
  for (const auto id : {"C1", "C2", "C3"}) CHECK(down.config.node(id).self_int == -2);
  CHECK(down.config.pair_int("C1", "C2") == 1);
  REQUIRE(down.image_point.has_value());
  CHECK(down.config.point(*down.image_point).local_type == LocalType::TripleOrdinary);
}

TEST_CASE("blow-up of a node and the way back") {
  const FiberRecord i1 = fiber(make_fiber_type("In", 1, 1));
  const BlowUpResult r = blow_up(i1.config, "p1");
  CHECK(validate(r.config).empty());
  const CurveNode& c = r.config.node("C1");
  CHECK(c.self_int == -4);
  CHECK(c.rational_smooth);  // the node resolved
  CHECK_FALSE(c.genus_note.has_value());
  CHECK(r.config.pair_int("C1", r.exceptional) == 2);

  const BlowDownResult down = blow_down(r.config, r.exceptional);
  CHECK(validate(down.config).empty());
  CHECK(down.config.node("C1").self_int == 0);
  CHECK_FALSE(down.config.node("C1").rational_smooth);
  CHECK(down.config.node("C1").genus_note == std::string("node"));
}

TEST_CASE("blow-up of a cusp and a tangency") {
  const FiberRecord ii = fiber(make_fiber_type("II", 0, 1));
  const BlowUpResult r1 = blow_up(ii.config, "p1");
  CHECK(validate(r1.config).empty());
  CHECK(r1.config.node("C1").self_int == -4);
  CHECK(r1.config.node("C1").rational_smooth);
  CHECK(r1.config.pair_int("C1", r1.exceptional) == 2);
  REQUIRE(r1.config.points().size() == 1);
  CHECK(r1.config.points().front().local_type == LocalType::Tangential);

  // Blowing the tangency up gives a triple point with the new curve.
  const std::string tang = r1.config.points().front().id;
  const BlowUpResult r2 = blow_up(r1.config, tang);
  CHECK(validate(r2.config).empty());
  REQUIRE(r2.config.points().size() == 1);
  CHECK(r2.config.points().front().local_type == LocalType::TripleOrdinary);
  CHECK(r2.config.node("C1").self_int == -5);
  CHECK(r2.config.pair_int("C1", r2.exceptional) == 1);

  // And contracting back down restores the cusp.
  const BlowDownResult down = blow_down(r1.config, r1.exceptional);
  CHECK(validate(down.config).empty());
  CHECK(down.config.node("C1").self_int == 0);
  CHECK(down.config.node("C1").genus_note == std::string("cusp"));
}

TEST_CASE("blow-down formulas") {
  // C0 meets one curve transversally: the image gains self-intersection one.
  CurveConfiguration one({CurveNode{"C", -3, true, {}}, CurveNode{"E", -1, true, {}}},
                         {PairEntry{"C", "E", 1, 1}}, {});
  const BlowDownResult r1 = blow_down(one, "E");
  CHECK(r1.config.node("C").self_int == -2);
  CHECK_FALSE(r1.image_point.has_value());  // smooth point, nothing to mark

  // Two disjoint curves through C0 meet once downstairs.
  CurveConfiguration two({CurveNode{"A", -1, true, {}}, CurveNode{"B", -2, true, {}},
                          CurveNode{"E", -1, true, {}}},
                         {PairEntry{"A", "E", 1, 1}, PairEntry{"B", "E", 1, 1}}, {});
  const BlowDownResult r2 = blow_down(two, "E");
  CHECK(r2.config.pair_int("A", "B") == 1);
  CHECK(r2.config.node("A").self_int == 0);
  REQUIRE(r2.image_point.has_value());
  CHECK(r2.config.point(*r2.image_point).local_type == LocalType::Ordinary);

  // A curve disjoint from C0 is untouched.
  CurveConfiguration three({CurveNode{"A", -2, true, {}}, CurveNode{"E", -1, true, {}}},
                           {}, {});
  const BlowDownResult r3 = blow_down(three, "E");
  CHECK(r3.config.node("A").self_int == -2);

  CHECK_THROWS_WITH_AS(blow_down(three, "A"), doctest::Contains("NotMinusOneCurve"),
                       Error);
}

TEST_CASE("unmarked counts are derived when omitted") {
  CurveConfiguration cfg({CurveNode{"A", -2, true, {}}, CurveNode{"B", -2, true, {}}},
                         {PairEntry{"A", "B", 2, std::nullopt}},
                         {MarkedPoint{"p", LocalType::Ordinary, {{"A", 1}, {"B", 1}}}});
  CHECK(validate(cfg).empty());  // 2 = 1 marked + 1 derived unmarked

  CurveConfiguration under({CurveNode{"A", -2, true, {}}, CurveNode{"B", -2, true, {}}},
                           {PairEntry{"A", "B", 1, std::nullopt}},
                           {MarkedPoint{"p", LocalType::Tangential, {{"A", 1}, {"B", 1}}}});
  bool inconsistent = false;
  for (const auto& v : validate(under)) inconsistent |= v.kind == "InconsistentIntersection";
  CHECK(inconsistent);  // the tangency alone already contributes 2 > 1
}

TEST_CASE("blow-down fallback for merges outside the local-type vocabulary") {
  // E meets A twice and B once; the image point cannot be a node or a
  // tangency, so it is recorded as ordinary with multiplicities (2, 1).
  CurveConfiguration cfg({CurveNode{"A", -4, true, {}}, CurveNode{"B", -2, true, {}},
                          CurveNode{"E", -1, true, {}}},
                         {PairEntry{"A", "E", 2, 2}, PairEntry{"B", "E", 1, 1}}, {});
  const BlowDownResult r = blow_down(cfg, "E");
  CHECK(validate(r.config).empty());
  CHECK(r.config.node("A").self_int == 0);
  CHECK_FALSE(r.config.node("A").rational_smooth);  // double point downstairs
  CHECK(r.config.node("B").self_int == -1);
  CHECK(r.config.pair_int("A", "B") == 2);
  REQUIRE(r.image_point.has_value());
  const MarkedPoint& p = r.config.point(*r.image_point);
  CHECK(p.local_type == LocalType::Ordinary);
  CHECK(point_multiplicity(r.config, ReducedDivisor::of({"A", "B"}), p.id) == 3);
}

TEST_CASE("blow-up then blow-down round trip at an ordinary point") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> self(-4, 1);
  std::uniform_int_distribution<std::int64_t> extra(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::int64_t sa = self(rng), sb = self(rng), off = extra(rng);
    CurveConfiguration cfg(
        {CurveNode{"A", sa, true, {}}, CurveNode{"B", sb, true, {}}},
        {PairEntry{"A", "B", 1 + off, off}},
        {MarkedPoint{"p", LocalType::Ordinary, {{"A", 1}, {"B", 1}}}});
    const BlowUpResult up = blow_up(cfg, "p");
    const BlowDownResult down = blow_down(up.config, up.exceptional);
    CHECK(down.config.node("A").self_int == sa);
    CHECK(down.config.node("B").self_int == sb);
    CHECK(down.config.pair_int("A", "B") == 1 + off);
  }
}

TEST_CASE("round trip at an ordinary point of mixed multiplicities") {
  CurveConfiguration cfg(
      {CurveNode{"A", 0, false, std::string("node")}, CurveNode{"B", -2, true, {}}},
      {PairEntry{"A", "B", 2, 0}},
      {MarkedPoint{"p", LocalType::Ordinary, {{"A", 2}, {"B", 1}}}});
  const BlowUpResult up = blow_up(cfg, "p");
  CHECK(validate(up.config).empty());
  CHECK(up.config.node("A").self_int == -4);
  CHECK(up.config.node("B").self_int == -3);
  CHECK(up.config.pair_int("A", "B") == 0);
  CHECK(up.config.pair_int("A", up.exceptional) == 2);
  CHECK(up.config.pair_int("B", up.exceptional) == 1);

  const BlowDownResult down = blow_down(up.config, up.exceptional);
  CHECK(validate(down.config).empty());
  CHECK(down.config.node("A").self_int == 0);
  CHECK(down.config.node("B").self_int == -2);
  CHECK(down.config.pair_int("A", "B") == 2);
  REQUIRE(down.image_point.has_value());
  CHECK(down.config.point(*down.image_point).local_type == LocalType::Ordinary);
}

TEST_CASE("pullback_divisor") {
  // mu = 0, eps = 0: untouched.
  CHECK(pullback_divisor(5, 3, 0, 0).d_sq == 5);
  CHECK(pullback_divisor(5, 3, 0, 0).d_dot_k == 3);
  // mu = 2, eps = 1 and mu = 1, eps = 0 both shift by (1, 1).
  CHECK(pullback_divisor(0, 0, 2, 1).d_sq == -1);
  CHECK(pullback_divisor(0, 0, 2, 1).d_dot_k == 1);
  CHECK(pullback_divisor(0, 0, 1, 0).d_sq == -1);
  CHECK(pullback_divisor(0, 0, 1, 0).d_dot_k == 1);
  CHECK_THROWS_WITH_AS(pullback_divisor(0, 0, 1, 2), doctest::Contains("BadEpsilon"),
                       Error);
}

TEST_CASE("blow-down increment identity, numerically over all (mu, eps)") {
  // D.(D-3K) - 4K^2 = D'.(D'-3K') - 4K'^2 + 4 + (mu-eps)(eps-mu-3), where
  // the unprimed side lives on the blow-up (K^2 drops by one).
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> v(-9, 9);
  for (std::int64_t mu = 0; mu <= 3; ++mu)
    for (std::int64_t eps = 0; eps <= 1; ++eps)
      for (int trial = 0; trial < 50; ++trial) {
        const std::int64_t d2 = v(rng), dk = v(rng), k2 = v(rng);
        const DivisorNumerics up = pullback_divisor(d2, dk, mu, eps);
        const std::int64_t lhs = up.d_sq - 3 * up.d_dot_k - 4 * (k2 - 1);
        const std::int64_t rhs =
            (d2 - 3 * dk - 4 * k2) + 4 + (mu - eps) * (eps - mu - 3);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("property (P) is preserved under blow-down (randomized)") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> node_count(2, 10);
  std::uniform_int_distribution<std::int64_t> self(-4, 1);
  std::uniform_int_distribution<std::int64_t> pair_value(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> die(0, 5);

  int verified = 0;
  int attempts = 0;
  while (verified < 300 && attempts < 100000) {
    ++attempts;
    const int n = node_count(rng);
    std::vector<CurveNode> nodes;
    nodes.push_back(CurveNode{"C0", -1, true, {}});
    for (int i = 1; i < n; ++i) {
      CurveNode c;
      c.id = "C" + std::to_string(i);
      c.self_int = self(rng);
      c.rational_smooth = die(rng) < 4;
      nodes.push_back(c);
    }
    std::vector<PairEntry> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const std::int64_t v = die(rng) < 3 ? pair_value(rng) : 0;
        if (v > 0)
          pairs.push_back(
              PairEntry{"C" + std::to_string(i), "C" + std::to_string(j), v, v});
      }
    const CurveConfiguration cfg(std::move(nodes), std::move(pairs), {});

    std::vector<std::string> divisor_ids;
    if (coin(rng)) divisor_ids.push_back("C0");
    for (int i = 1; i < n; ++i)
      if (die(rng) < 4) divisor_ids.push_back("C" + std::to_string(i));
    const ReducedDivisor d = ReducedDivisor::of(std::move(divisor_ids));

    if (!property_P(cfg, d).holds) continue;
    ++verified;

    const BlowDownResult down = blow_down(cfg, "C0");
    const ReducedDivisor image = d.without("C0");
    const PropertyPResult after = property_P(down.config, image);
    CHECK(after.holds);
    if (!after.holds) break;
  }
  CHECK(verified == 300);
}

TEST_CASE("pimp: C0 in D with property (P) forces mu >= 2") {
  // Derived from catalog configurations: blow up points of fibers, put the
  // exceptional curve into D, and check the multiplicity downstairs.
  for (const char* name : {"In", "II", "III"}) {
    const FiberRecord rec =
        fiber(make_fiber_type(name, std::string(name) == "In" ? 1 : 0, 1));
    for (const auto& p : rec.config.points()) {
      const BlowUpResult up = blow_up(rec.config, p.id);
      ReducedDivisor d = ReducedDivisor::all_of(up.config);  // includes C0
      if (!property_P(up.config, d).holds) continue;
      std::int64_t mu = 0;
      for (const auto& id : d.components)
        if (id != up.exceptional)
          mu += up.config.pair_int(up.exceptional, id);
      CHECK(mu >= 2);
    }
  }
}
