#include "kkit/kodaira.hpp"

#include <algorithm>

#include "kkit/rational.hpp"

namespace kkit {

namespace {

CurveNode rational_m2(const std::string& id) {
  return CurveNode{id, -2, true, std::nullopt};
}

struct Builder {
  std::vector<CurveNode> nodes;
  std::vector<PairEntry> pairs;
  std::vector<MarkedPoint> points;
  std::map<std::string, std::int64_t> mult;

  void add(const CurveNode& n, std::int64_t m) {
    nodes.push_back(n);
    mult[n.id] = m;
  }
  void cross(const std::string& a, const std::string& b, std::int64_t count = 1) {
    pairs.push_back(PairEntry{a, b, count, count});
  }
  void chain(const std::vector<std::string>& ids) {
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) cross(ids[i], ids[i + 1]);
  }
};

FiberRecord finish(const FiberType& type, Builder&& b, std::int64_t euler) {
  FiberRecord rec;
  rec.type = type;
  rec.config = CurveConfiguration(std::move(b.nodes), std::move(b.pairs),
                                  std::move(b.points));
  rec.component_multiplicities = std::move(b.mult);
  rec.euler = euler;

  // Load-time gate: F = sum m_i C_i must satisfy F.C_j = 0 and F^2 = 0.
  std::int64_t f_sq = 0;
  for (const auto& n : rec.config.nodes()) {
    const std::int64_t mn = rec.component_multiplicities.at(n.id);
    f_sq = checked_add(f_sq, checked_mul(checked_mul(mn, mn), n.self_int));
    std::int64_t f_dot = checked_mul(mn, n.self_int);
    for (const auto& other : rec.config.nodes())
      if (other.id != n.id) {
        const std::int64_t mo = rec.component_multiplicities.at(other.id);
        const std::int64_t v = rec.config.pair_int(n.id, other.id);
        f_dot = checked_add(f_dot, checked_mul(mo, v));
        f_sq = checked_add(f_sq, checked_mul(checked_mul(mn, mo), v));
      }
    if (f_dot != 0)
      fail(Err::InvalidArgument, "catalog entry " + fiber_type_name(type) +
                                     " violates F.C = 0 on component " + n.id);
  }
  if (f_sq != 0)
    fail(Err::InvalidArgument,
         "catalog entry " + fiber_type_name(type) + " violates F^2 = 0");

  const auto violations = validate(rec.config);
  if (!violations.empty())
    fail(Err::InvalidArgument, "catalog entry " + fiber_type_name(type) +
                                   " is inconsistent: " + violations.front().kind +
                                   " " + violations.front().detail);
  return rec;
}

// Reduced I_n support shared by In and mIn. n = 0 is the smooth elliptic
// curve, n = 1 the nodal rational curve, n >= 2 the cycle.
Builder cycle_builder(int n, std::int64_t m) {
  Builder b;
  if (n == 0) {
    b.add(CurveNode{"C1", 0, false, std::nullopt}, m);
    return b;
  }
  if (n == 1) {
    b.add(CurveNode{"C1", 0, false, std::string("node")}, m);
    b.points.push_back(MarkedPoint{"p1", LocalType::Ordinary, {{"C1", 2}}});
    return b;
  }
  for (int i = 1; i <= n; ++i) b.add(rational_m2("C" + std::to_string(i)), m);
  if (n == 2) {
    b.cross("C1", "C2", 2);
    return b;
  }
  for (int i = 1; i <= n; ++i)
    b.cross("C" + std::to_string(i), "C" + std::to_string(i % n + 1));
  return b;
}

}  // namespace

std::string fiber_type_name(const FiberType& t) {
  switch (t.kind) {
    case FiberKind::I0: return "I0";
    case FiberKind::In: return "I" + std::to_string(t.n);
    case FiberKind::mIn:
      return std::to_string(t.m) + "I" + std::to_string(t.n);
    case FiberKind::II: return "II";
    case FiberKind::III: return "III";
    case FiberKind::IV: return "IV";
    case FiberKind::I0star: return "I0*";
    case FiberKind::Instar: return "I" + std::to_string(t.n) + "*";
    case FiberKind::IIstar: return "II*";
    case FiberKind::IIIstar: return "III*";
    case FiberKind::IVstar: return "IV*";
  }
  return "?";
}

FiberType make_fiber_type(const std::string& kind, int n, int m) {
  const auto is = [&](const char* plain, const char* star = nullptr) {
    return kind == plain || (star != nullptr && kind == star);
  };
  FiberType t;
  t.n = n;
  t.m = m;
  if (is("I0")) t.kind = FiberKind::I0;
  else if (is("In")) t.kind = FiberKind::In;
  else if (is("mIn")) t.kind = FiberKind::mIn;
  else if (is("II")) t.kind = FiberKind::II;
  else if (is("III")) t.kind = FiberKind::III;
  else if (is("IV")) t.kind = FiberKind::IV;
  else if (is("I0star", "I0*")) t.kind = FiberKind::I0star;
  else if (is("Instar", "In*")) t.kind = FiberKind::Instar;
  else if (is("IIstar", "II*")) t.kind = FiberKind::IIstar;
  else if (is("IIIstar", "III*")) t.kind = FiberKind::IIIstar;
  else if (is("IVstar", "IV*")) t.kind = FiberKind::IVstar;
  else fail(Err::UnknownType, "unknown fiber type \"" + kind + "\"");
  // Only mIn carries a multiplicity and only In/mIn/Instar carry n.
  if (t.kind != FiberKind::mIn) t.m = 1;
  if (t.kind != FiberKind::In && t.kind != FiberKind::mIn && t.kind != FiberKind::Instar)
    t.n = 0;
  return t;
}

FiberRecord fiber(const FiberType& type) {
  switch (type.kind) {
    case FiberKind::I0:
      return finish(type, cycle_builder(0, 1), 0);
    case FiberKind::In: {
      if (type.n < 1) fail(Err::UnknownType, "In needs n >= 1");
      return finish(type, cycle_builder(type.n, 1), type.n);
    }
    case FiberKind::mIn: {
      if (type.m < 2) fail(Err::UnknownType, "mIn needs m >= 2");
      if (type.n < 0) fail(Err::UnknownType, "mIn needs n >= 0");
      return finish(type, cycle_builder(type.n, type.m), type.n);
    }
    case FiberKind::II: {
      Builder b;
      b.add(CurveNode{"C1", 0, false, std::string("cusp")}, 1);
      b.points.push_back(MarkedPoint{"p1", LocalType::CuspOnCurve, {{"C1", 2}}});
      return finish(type, std::move(b), 2);
    }
    case FiberKind::III: {
      Builder b;
      b.add(rational_m2("C1"), 1);
      b.add(rational_m2("C2"), 1);
      b.points.push_back(MarkedPoint{"p1", LocalType::Tangential, {{"C1", 1}, {"C2", 1}}});
      b.pairs.push_back(PairEntry{"C1", "C2", 2, 0});
      return finish(type, std::move(b), 3);
    }
    case FiberKind::IV: {
      Builder b;
      for (int i = 1; i <= 3; ++i) b.add(rational_m2("C" + std::to_string(i)), 1);
      b.points.push_back(MarkedPoint{
          "p1", LocalType::TripleOrdinary, {{"C1", 1}, {"C2", 1}, {"C3", 1}}});
      b.pairs.push_back(PairEntry{"C1", "C2", 1, 0});
      b.pairs.push_back(PairEntry{"C1", "C3", 1, 0});
      b.pairs.push_back(PairEntry{"C2", "C3", 1, 0});
      return finish(type, std::move(b), 4);
    }
    case FiberKind::I0star: {
      Builder b;
      b.add(rational_m2("B1"), 2);
      for (int i = 1; i <= 4; ++i) {
        b.add(rational_m2("L" + std::to_string(i)), 1);
        b.cross("B1", "L" + std::to_string(i));
      }
      return finish(type, std::move(b), 6);
    }
    case FiberKind::Instar: {
      if (type.n < 1) fail(Err::UnknownType, "In* needs n >= 1 (use I0* otherwise)");
      Builder b;
      std::vector<std::string> spine;
      for (int i = 1; i <= type.n + 1; ++i) {
        spine.push_back("B" + std::to_string(i));
        b.add(rational_m2(spine.back()), 2);
      }
      b.chain(spine);
      for (int i = 1; i <= 4; ++i) b.add(rational_m2("L" + std::to_string(i)), 1);
      b.cross("B1", "L1");
      b.cross("B1", "L2");
      b.cross(spine.back(), "L3");
      b.cross(spine.back(), "L4");
      return finish(type, std::move(b), type.n + 6);
    }
    case FiberKind::IVstar: {
      // Affine E6: central multiplicity-3 curve, three arms 3-2-1.
      Builder b;
      b.add(rational_m2("Z"), 3);
      for (int i = 1; i <= 3; ++i) {
        const std::string mid = "M" + std::to_string(i);
        const std::string leaf = "L" + std::to_string(i);
        b.add(rational_m2(mid), 2);
        b.add(rational_m2(leaf), 1);
        b.cross("Z", mid);
        b.cross(mid, leaf);
      }
      return finish(type, std::move(b), 8);
    }
    case FiberKind::IIIstar: {
      // Affine E7: chain 1-2-3-4-3-2-1 with a 2 hanging off the center.
      Builder b;
      const std::int64_t mults[7] = {1, 2, 3, 4, 3, 2, 1};
      std::vector<std::string> spine;
      for (int i = 0; i < 7; ++i) {
        spine.push_back("A" + std::to_string(i + 1));
        b.add(rational_m2(spine.back()), mults[i]);
      }
      b.chain(spine);
      b.add(rational_m2("B"), 2);
      b.cross("A4", "B");
      return finish(type, std::move(b), 9);
    }
    case FiberKind::IIstar: {
      // Affine E8: chain 1-2-3-4-5-6-4-2 with a 3 hanging off the 6.
      Builder b;
      const std::int64_t mults[8] = {1, 2, 3, 4, 5, 6, 4, 2};
      std::vector<std::string> spine;
      for (int i = 0; i < 8; ++i) {
        spine.push_back("A" + std::to_string(i + 1));
        b.add(rational_m2(spine.back()), mults[i]);
      }
      b.chain(spine);
      b.add(rational_m2("B"), 3);
      b.cross("A6", "B");
      return finish(type, std::move(b), 10);
    }
  }
  fail(Err::UnknownType, "unhandled fiber kind");
}

void for_each_reduced_subdivisor(const FiberRecord& rec,
                                 const std::function<void(const ReducedDivisor&)>& fn) {
  const auto& nodes = rec.config.nodes();
  const std::size_t n = nodes.size();
  if (n > 25) fail(Err::InvalidArgument, "subdivisor enumeration limited to 25 components");
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) ids.push_back(nodes[i].id);
    fn(ReducedDivisor::of(std::move(ids)));
  }
}

std::vector<ReducedDivisor> enumerate_reduced_subdivisors(const FiberRecord& rec) {
  std::vector<ReducedDivisor> out;
  for_each_reduced_subdivisor(rec, [&](const ReducedDivisor& d) { out.push_back(d); });
  return out;
}

bool is_tree_of_smooth_rationals(const CurveConfiguration& cfg, const ReducedDivisor& D) {
  for (const auto& id : D.components)
    if (!cfg.node(id).rational_smooth) return false;

  // All pairwise intersections transversal and at most one; tangencies and
  // higher-multiplicity contacts disqualify.
  const std::size_t n = D.components.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int64_t v = cfg.pair_int(D.components[i], D.components[j]);
      if (v > 1) return false;
      if (v == 1) edges.emplace_back(i, j);
    }
  // Tangencies between D-components are caught by the count-2 rule above; a
  // cusp on a D-component is excluded by rational_smooth already.

  // Acyclicity via union-find.
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : edges) {
    const std::size_t ra = find(a), rb = find(b);
    if (ra == rb) return false;  // cycle
    parent[ra] = rb;
  }
  return true;
}

CensusReport property_p_census(int max_n) {
  if (max_n < 1) fail(Err::InvalidArgument, "census needs max_n >= 1");
  std::vector<FiberType> types;
  types.push_back(FiberType{FiberKind::I0, 0, 1});
  for (int n = 1; n <= max_n; ++n) types.push_back(FiberType{FiberKind::In, n, 1});
  for (int n = 0; n <= max_n; ++n) types.push_back(FiberType{FiberKind::mIn, n, 2});
  types.push_back(FiberType{FiberKind::II, 0, 1});
  types.push_back(FiberType{FiberKind::III, 0, 1});
  types.push_back(FiberType{FiberKind::IV, 0, 1});
  types.push_back(FiberType{FiberKind::I0star, 0, 1});
  for (int n = 1; n <= max_n; ++n) types.push_back(FiberType{FiberKind::Instar, n, 1});
  types.push_back(FiberType{FiberKind::IIstar, 0, 1});
  types.push_back(FiberType{FiberKind::IIIstar, 0, 1});
  types.push_back(FiberType{FiberKind::IVstar, 0, 1});

  const auto is_starred = [](FiberKind k) {
    return k == FiberKind::I0star || k == FiberKind::Instar || k == FiberKind::IIstar ||
           k == FiberKind::IIIstar || k == FiberKind::IVstar;
  };

  CensusReport report;
  for (const auto& t : types) {
    const FiberRecord rec = fiber(t);
    CensusEntry entry;
    entry.type = t;
    const std::size_t full = rec.config.nodes().size();
    for_each_reduced_subdivisor(rec, [&](const ReducedDivisor& d) {
      ++entry.subdivisors;
      if (!property_P(rec.config, d).holds) return;
      CensusDivisor cd;
      cd.divisor = d;
      cd.d_squared = divisor_self_intersection(rec.config, d);
      cd.is_full = d.components.size() == full;
      if (cd.d_squared != 0) report.all_squares_zero = false;
      if (!cd.is_full) report.only_full_fibers = false;
      entry.satisfying.push_back(std::move(cd));
    });
    // The starred fibers are trees; nothing may satisfy (P) there, and every
    // unstarred fiber must be satisfied exactly by its full reduction.
    if (is_starred(t.kind)) {
      if (!entry.satisfying.empty()) report.only_full_fibers = false;
    } else {
      if (entry.satisfying.size() != 1 || !entry.satisfying.front().is_full)
        report.only_full_fibers = false;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

void for_each_labeled_tree(
    int size, const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  if (size < 1) fail(Err::InvalidArgument, "tree size must be >= 1");
  if (size == 1) {
    fn({});
    return;
  }
  if (size == 2) {
    fn({{0, 1}});
    return;
  }
  // Enumerate Pruefer sequences of length size-2 over {0..size-1}.
  std::vector<int> seq(size - 2, 0);
  while (true) {
    // Decode the sequence into its unique labeled tree.
    std::vector<int> degree(size, 1);
    for (int v : seq) ++degree[v];
    std::vector<std::pair<int, int>> edges;
    std::vector<bool> used(size, false);
    for (int v : seq) {
      for (int leaf = 0; leaf < size; ++leaf) {
        if (degree[leaf] == 1 && !used[leaf]) {
          edges.emplace_back(leaf, v);
          used[leaf] = true;
          --degree[v];
          break;
        }
      }
    }
    int last_a = -1;
    for (int i = 0; i < size; ++i)
      if (!used[i] && degree[i] == 1) {
        if (last_a < 0)
          last_a = i;
        else
          edges.emplace_back(last_a, i);
      }
    fn(edges);

    // Next sequence.
    int pos = size - 3;
    while (pos >= 0 && seq[pos] == size - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
}

CurveConfiguration tree_configuration(int size,
                                      const std::vector<std::pair<int, int>>& edges) {
  std::vector<CurveNode> nodes;
  for (int i = 0; i < size; ++i) nodes.push_back(rational_m2("T" + std::to_string(i)));
  std::vector<PairEntry> pairs;
  for (const auto& [a, b] : edges)
    pairs.push_back(PairEntry{"T" + std::to_string(a), "T" + std::to_string(b), 1, 1});
  return CurveConfiguration(std::move(nodes), std::move(pairs), {});
}

}  // namespace kkit
