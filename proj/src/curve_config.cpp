#include "kkit/curve_config.hpp"

#include <algorithm>
#include <set>

#include "kkit/rational.hpp"

namespace kkit {

const char* local_type_name(LocalType t) {
  switch (t) {
    case LocalType::Ordinary: return "ordinary";
    case LocalType::Tangential: return "tangential";
    case LocalType::TripleOrdinary: return "triple_ordinary";
    case LocalType::CuspOnCurve: return "cusp_on_curve";
  }
  return "?";
}

LocalType parse_local_type(const std::string& name) {
  if (name == "ordinary") return LocalType::Ordinary;
  if (name == "tangential") return LocalType::Tangential;
  if (name == "triple_ordinary") return LocalType::TripleOrdinary;
  if (name == "cusp_on_curve") return LocalType::CuspOnCurve;
  fail(Err::UnsupportedLocalType, "unknown local point type \"" + name + "\"");
}

CurveConfiguration::CurveConfiguration(std::vector<CurveNode> nodes,
                                       std::vector<PairEntry> pairs,
                                       std::vector<MarkedPoint> points)
    : nodes_(std::move(nodes)), pairs_(std::move(pairs)), points_(std::move(points)) {}

bool CurveConfiguration::has_node(const std::string& id) const {
  for (const auto& n : nodes_)
    if (n.id == id) return true;
  return false;
}

const CurveNode& CurveConfiguration::node(const std::string& id) const {
  for (const auto& n : nodes_)
    if (n.id == id) return n;
  fail(Err::UnknownCurve, "no curve with id \"" + id + "\"");
}

const MarkedPoint& CurveConfiguration::point(const std::string& id) const {
  for (const auto& p : points_)
    if (p.id == id) return p;
  fail(Err::UnknownPoint, "no marked point with id \"" + id + "\"");
}

std::int64_t CurveConfiguration::pair_int(const std::string& a,
                                          const std::string& b) const {
  node(a);
  node(b);
  if (a == b) fail(Err::InvalidArgument, "pair_int is undefined on the diagonal");
  for (const auto& e : pairs_)
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.count;
  return 0;
}

std::int64_t CurveConfiguration::point_pair_contribution(const MarkedPoint& p,
                                                         const std::string& a,
                                                         const std::string& b) {
  std::int64_t ma = 0, mb = 0;
  for (const auto& inc : p.incidences) {
    if (inc.curve == a) ma += inc.mult;
    if (inc.curve == b) mb += inc.mult;
  }
  if (ma == 0 || mb == 0) return 0;
  // A simple tangency counts twice despite both branches being smooth.
  if (p.local_type == LocalType::Tangential) return 2;
  return checked_mul(ma, mb);
}

std::int64_t CurveConfiguration::marked_pair_contribution(const std::string& a,
                                                          const std::string& b) const {
  std::int64_t total = 0;
  for (const auto& p : points_) total = checked_add(total, point_pair_contribution(p, a, b));
  return total;
}

ReducedDivisor ReducedDivisor::of(std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ReducedDivisor{std::move(ids)};
}

ReducedDivisor ReducedDivisor::all_of(const CurveConfiguration& cfg) {
  std::vector<std::string> ids;
  ids.reserve(cfg.nodes().size());
  for (const auto& n : cfg.nodes()) ids.push_back(n.id);
  return of(std::move(ids));
}

bool ReducedDivisor::contains(const std::string& id) const {
  return std::binary_search(components.begin(), components.end(), id);
}

ReducedDivisor ReducedDivisor::without(const std::string& id) const {
  ReducedDivisor out = *this;
  out.components.erase(std::remove(out.components.begin(), out.components.end(), id),
                       out.components.end());
  return out;
}

std::vector<Violation> validate(const CurveConfiguration& cfg) {
  std::vector<Violation> out;
  const auto flag = [&](const std::string& kind, const std::string& detail) {
    out.push_back(Violation{kind, detail});
  };

  std::set<std::string> ids;
  for (const auto& n : cfg.nodes())
    if (!ids.insert(n.id).second) flag("DuplicateCurve", "curve id " + n.id);

  for (const auto& n : cfg.nodes())
    if (n.genus_note && *n.genus_note != "node" && *n.genus_note != "cusp")
      flag("BadGenusNote", n.id + ": \"" + *n.genus_note + "\"");

  // Pair entries: known ids, off-diagonal, nonnegative, no asymmetric or
  // duplicate listing of the same unordered pair.
  std::map<std::pair<std::string, std::string>, std::int64_t> seen;
  for (const auto& e : cfg.pairs()) {
    if (!ids.count(e.a) || !ids.count(e.b)) {
      flag("UnknownCurve", e.a + "/" + e.b);
      continue;
    }
    if (e.a == e.b) {
      flag("DiagonalPair", e.a);
      continue;
    }
    if (e.count < 0) flag("NegativeCount", e.a + "," + e.b);
    if (e.unmarked && *e.unmarked < 0) flag("NegativeCount", e.a + "," + e.b + " (unmarked)");
    const auto key = std::minmax(e.a, e.b);
    auto [it, fresh] = seen.emplace(key, e.count);
    if (!fresh && it->second != e.count)
      flag("SymmetryViolation", e.a + "," + e.b + ": " + std::to_string(e.count) +
                                    " vs " + std::to_string(it->second));
    else if (!fresh)
      flag("DuplicatePair", e.a + "," + e.b);
  }

  for (const auto& p : cfg.points()) {
    for (const auto& inc : p.incidences) {
      if (!ids.count(inc.curve)) flag("UnknownCurve", p.id + " -> " + inc.curve);
      if (inc.mult < 1) flag("BadMultiplicity", p.id + " -> " + inc.curve);
    }
    switch (p.local_type) {
      case LocalType::Ordinary:
        break;
      case LocalType::Tangential:
        if (p.incidences.size() != 2 || p.incidences[0].mult != 1 ||
            p.incidences[1].mult != 1)
          flag("BadPointType", p.id + ": tangential point needs two smooth branches");
        break;
      case LocalType::TripleOrdinary:
        if (p.incidences.size() != 3 ||
            std::any_of(p.incidences.begin(), p.incidences.end(),
                        [](const Incidence& i) { return i.mult != 1; }))
          flag("BadPointType", p.id + ": ordinary triple point needs three transversal branches");
        break;
      case LocalType::CuspOnCurve:
        if (p.incidences.size() != 1 || p.incidences[0].mult != 2)
          flag("BadPointType", p.id + ": cusp needs one incident curve of multiplicity 2");
        break;
    }
  }

  // Pair totals must equal marked-point contributions plus the unmarked
  // transversal count (derived nonnegative when not given).
  for (const auto& e : cfg.pairs()) {
    if (!ids.count(e.a) || !ids.count(e.b) || e.a == e.b) continue;
    const std::int64_t contrib = cfg.marked_pair_contribution(e.a, e.b);
    if (e.unmarked) {
      if (checked_add(contrib, *e.unmarked) != e.count)
        flag("InconsistentIntersection",
             e.a + "," + e.b + ": count " + std::to_string(e.count) + " != points " +
                 std::to_string(contrib) + " + unmarked " + std::to_string(*e.unmarked));
    } else if (contrib > e.count) {
      flag("InconsistentIntersection",
           e.a + "," + e.b + ": marked points contribute " + std::to_string(contrib) +
               " > count " + std::to_string(e.count));
    }
  }
  // Marked points between curves with no (zero) pair entry at all.
  for (const auto& p : cfg.points()) {
    for (std::size_t i = 0; i < p.incidences.size(); ++i)
      for (std::size_t j = i + 1; j < p.incidences.size(); ++j) {
        const auto& a = p.incidences[i].curve;
        const auto& b = p.incidences[j].curve;
        if (!ids.count(a) || !ids.count(b) || a == b) continue;
        bool listed = false;
        for (const auto& e : cfg.pairs())
          if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) listed = true;
        if (!listed)
          flag("InconsistentIntersection",
               a + "," + b + ": marked point " + p.id + " but no pair entry");
      }
  }
  return out;
}

std::int64_t pair_degree(const CurveConfiguration& cfg, const ReducedDivisor& D,
                         const std::string& c) {
  if (!D.contains(c))
    fail(Err::ComponentNotInDivisor, "component " + c + " is not in the divisor");
  std::int64_t total = 0;
  for (const auto& other : D.components)
    if (other != c) total = checked_add(total, cfg.pair_int(c, other));
  return total;
}

PropertyPResult property_P(const CurveConfiguration& cfg, const ReducedDivisor& D) {
  for (const auto& id : D.components) {
    const CurveNode& n = cfg.node(id);
    if (!n.rational_smooth) continue;
    const std::int64_t deg = pair_degree(cfg, D, id);
    if (deg < 2) return PropertyPResult{false, id, deg};
  }
  return PropertyPResult{true, std::nullopt, 0};
}

std::int64_t point_multiplicity(const CurveConfiguration& cfg, const ReducedDivisor& D,
                                const std::string& point_id) {
  const MarkedPoint& p = cfg.point(point_id);
  std::int64_t mu = 0;
  for (const auto& inc : p.incidences)
    if (D.contains(inc.curve)) mu = checked_add(mu, inc.mult);
  return mu;
}

std::int64_t divisor_self_intersection(const CurveConfiguration& cfg,
                                       const ReducedDivisor& D) {
  std::int64_t total = 0;
  for (const auto& id : D.components) total = checked_add(total, cfg.node(id).self_int);
  for (std::size_t i = 0; i < D.components.size(); ++i)
    for (std::size_t j = i + 1; j < D.components.size(); ++j)
      total = checked_add(
          total, checked_mul(2, cfg.pair_int(D.components[i], D.components[j])));
  return total;
}

std::int64_t divisor_canonical_pairing(const CurveConfiguration& cfg,
                                       const ReducedDivisor& D) {
  std::int64_t total = 0;
  for (const auto& id : D.components) {
    const CurveNode& n = cfg.node(id);
    const std::int64_t pa = n.rational_smooth ? 0 : 1;
    total = checked_add(total, checked_sub(checked_sub(2 * pa, 2), n.self_int));
  }
  return total;
}

namespace {

std::string fresh_id(const CurveConfiguration& cfg, const std::string& stem) {
  for (int k = 1;; ++k) {
    std::string candidate = stem + std::to_string(k);
    bool taken = cfg.has_node(candidate);
    for (const auto& p : cfg.points())
      if (p.id == candidate) taken = true;
    if (!taken) return candidate;
  }
}

// Rebuild pair entries from new totals, deriving the unmarked count as
// whatever the marked points do not explain.
std::vector<PairEntry> pairs_from_totals(
    const std::vector<MarkedPoint>& points,
    const std::map<std::pair<std::string, std::string>, std::int64_t>& totals) {
  std::vector<PairEntry> out;
  for (const auto& [key, total] : totals) {
    if (total == 0) continue;
    std::int64_t contrib = 0;
    for (const auto& p : points)
      contrib += CurveConfiguration::point_pair_contribution(p, key.first, key.second);
    if (contrib > total)
      fail(Err::InvalidArgument, "intersection bookkeeping for " + key.first + "," +
                                     key.second + " became inconsistent");
    out.push_back(PairEntry{key.first, key.second, total, total - contrib});
  }
  return out;
}

}  // namespace

BlowUpResult blow_up(const CurveConfiguration& cfg, const std::string& point_id) {
  const MarkedPoint p = cfg.point(point_id);

  std::vector<CurveNode> nodes = cfg.nodes();
  std::vector<MarkedPoint> points;
  for (const auto& q : cfg.points())
    if (q.id != point_id) points.push_back(q);

  const std::string e_id = fresh_id(cfg, "E");

  // Total local multiplicity per incident curve.
  std::map<std::string, std::int64_t> mult;
  for (const auto& inc : p.incidences) mult[inc.curve] += inc.mult;

  // Strict transforms: self-intersections drop by the squared multiplicity;
  // blowing up the singular point of a nodal/cuspidal rational curve leaves
  // a smooth rational curve.
  for (auto& n : nodes) {
    auto it = mult.find(n.id);
    if (it == mult.end()) continue;
    n.self_int = checked_sub(n.self_int, checked_mul(it->second, it->second));
    const bool resolves =
        it->second >= 2 && n.genus_note &&
        ((p.local_type == LocalType::CuspOnCurve && *n.genus_note == "cusp") ||
         (p.local_type == LocalType::Ordinary && *n.genus_note == "node"));
    if (resolves) {
      n.genus_note.reset();
      n.rational_smooth = true;
    }
  }

  CurveNode exceptional;
  exceptional.id = e_id;
  exceptional.self_int = -1;
  exceptional.rational_smooth = true;
  nodes.push_back(exceptional);

  // New pair totals: old ones lose the crossings concentrated at p, the
  // exceptional curve picks up one intersection per local multiplicity.
  std::map<std::pair<std::string, std::string>, std::int64_t> totals;
  for (const auto& e : cfg.pairs()) {
    std::int64_t drop = CurveConfiguration::point_pair_contribution(p, e.a, e.b);
    const std::int64_t total = checked_sub(e.count, drop);
    if (total < 0)
      fail(Err::InvalidArgument, "blow-up would make " + e.a + "." + e.b +
                                     " negative; configuration inconsistent");
    totals[std::minmax(e.a, e.b)] = total;
  }
  for (const auto& [curve, m] : mult)
    totals[std::minmax(curve, e_id)] = m;

  switch (p.local_type) {
    case LocalType::Ordinary:
    case LocalType::TripleOrdinary:
      // Branches with distinct tangents meet the exceptional curve in
      // separate transversal points; nothing stays marked.
      break;
    case LocalType::Tangential: {
      // Both strict transforms pass through the point of E fixed by their
      // shared tangent direction: an ordinary triple point remains.
      const std::string q_id = fresh_id(cfg, "p");
      const std::string& a = p.incidences[0].curve;
      const std::string& b = p.incidences[1].curve;
      points.push_back(MarkedPoint{
          q_id, LocalType::TripleOrdinary, {{a, 1}, {b, 1}, {e_id, 1}}});
      totals[std::minmax(a, b)] = checked_add(totals[std::minmax(a, b)], 1);
      break;
    }
    case LocalType::CuspOnCurve: {
      // y^2 = x^3: the strict transform meets E once, tangentially.
      const std::string q_id = fresh_id(cfg, "p");
      const std::string& a = p.incidences[0].curve;
      points.push_back(MarkedPoint{q_id, LocalType::Tangential, {{a, 1}, {e_id, 1}}});
      break;
    }
  }

  BlowUpResult out;
  std::vector<PairEntry> pairs = pairs_from_totals(points, totals);
  out.config = CurveConfiguration(std::move(nodes), std::move(pairs), std::move(points));
  out.exceptional = e_id;
  for (const auto& n : cfg.nodes()) out.strict_transform[n.id] = n.id;
  return out;
}

BlowDownResult blow_down(const CurveConfiguration& cfg, const std::string& c0) {
  const CurveNode& center = cfg.node(c0);
  if (center.self_int != -1 || !center.rational_smooth)
    fail(Err::NotMinusOneCurve,
         c0 + " is not a smooth rational curve of self-intersection -1");

  // C0 . C_i for every other curve.
  std::map<std::string, std::int64_t> k;
  for (const auto& n : cfg.nodes())
    if (n.id != c0) {
      const std::int64_t v = cfg.pair_int(c0, n.id);
      if (v > 0) k[n.id] = v;
    }

  std::vector<CurveNode> nodes;
  for (const auto& n : cfg.nodes()) {
    if (n.id == c0) continue;
    CurveNode img = n;
    auto it = k.find(n.id);
    if (it != k.end()) {
      img.self_int = checked_add(img.self_int, checked_mul(it->second, it->second));
      if (it->second >= 2) img.rational_smooth = false;
    }
    nodes.push_back(img);
  }

  // Determine the image point's local type from the data upstairs.
  std::vector<MarkedPoint> points;
  for (const auto& p : cfg.points()) {
    bool touches_c0 = false;
    for (const auto& inc : p.incidences) touches_c0 |= (inc.curve == c0);
    if (!touches_c0) points.push_back(p);
  }

  std::optional<MarkedPoint> image;
  const auto tangency_with_c0 = [&](const std::string& id) {
    for (const auto& p : cfg.points())
      if (p.local_type == LocalType::Tangential && p.incidences.size() == 2 &&
          ((p.incidences[0].curve == c0 && p.incidences[1].curve == id) ||
           (p.incidences[1].curve == c0 && p.incidences[0].curve == id)))
        return true;
    return false;
  };
  const auto triple_with_c0 = [&](const std::string& a, const std::string& b) {
    for (const auto& p : cfg.points()) {
      if (p.local_type != LocalType::TripleOrdinary) continue;
      bool has_c0 = false, has_a = false, has_b = false;
      for (const auto& inc : p.incidences) {
        has_c0 |= inc.curve == c0;
        has_a |= inc.curve == a;
        has_b |= inc.curve == b;
      }
      if (has_c0 && has_a && has_b) return true;
    }
    return false;
  };

  if (k.size() == 1) {
    const auto& [id, kk] = *k.begin();
    if (kk == 2) {
      if (tangency_with_c0(id)) {
        image = MarkedPoint{"", LocalType::CuspOnCurve, {{id, 2}}};
        for (auto& n : nodes)
          if (n.id == id) n.genus_note = "cusp";
      } else {
        image = MarkedPoint{"", LocalType::Ordinary, {{id, 2}}};
        for (auto& n : nodes)
          if (n.id == id) n.genus_note = "node";
      }
    } else if (kk >= 3) {
      image = MarkedPoint{"", LocalType::Ordinary, {{id, kk}}};
    }
    // k == 1: the image is a smooth point, nothing to record.
  } else if (k.size() == 2) {
    auto it = k.begin();
    const auto [a, ka] = *it++;
    const auto [b, kb] = *it;
    if (ka == 1 && kb == 1 && triple_with_c0(a, b)) {
      image = MarkedPoint{"", LocalType::Tangential, {{a, 1}, {b, 1}}};
    } else {
      image = MarkedPoint{
          "", LocalType::Ordinary, {{a, ka}, {b, kb}}};
    }
  } else if (k.size() >= 3) {
    std::vector<Incidence> incs;
    bool all_simple = true;
    for (const auto& [id, kk] : k) {
      incs.push_back(Incidence{id, kk});
      all_simple &= (kk == 1);
    }
    image = MarkedPoint{"", k.size() == 3 && all_simple ? LocalType::TripleOrdinary
                                                        : LocalType::Ordinary,
                        incs};
  }

  std::string image_id;
  if (image) {
    image_id = fresh_id(cfg, "p");
    image->id = image_id;
    points.push_back(*image);
  }

  // New pair totals: images pick up (C0.C_i)(C0.C_j) extra crossings, all of
  // them concentrated at the image point. Whatever the surviving marked
  // points do not explain is booked as unmarked (for exotic merges this
  // includes the excess the ordinary fallback cannot express).
  std::map<std::pair<std::string, std::string>, std::int64_t> totals;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const std::string& a = nodes[i].id;
      const std::string& b = nodes[j].id;
      const std::int64_t ka = k.count(a) ? k.at(a) : 0;
      const std::int64_t kb = k.count(b) ? k.at(b) : 0;
      const std::int64_t total = checked_add(cfg.pair_int(a, b), checked_mul(ka, kb));
      if (total != 0) totals[std::minmax(a, b)] = total;
    }

  BlowDownResult out;
  std::vector<PairEntry> pairs = pairs_from_totals(points, totals);
  out.config = CurveConfiguration(std::move(nodes), std::move(pairs), std::move(points));
  for (const auto& n : cfg.nodes())
    if (n.id != c0) out.pushforward[n.id] = n.id;
  if (image) out.image_point = image_id;
  return out;
}

DivisorNumerics pullback_divisor(std::int64_t dprime_sq, std::int64_t dprime_dot_k,
                                 std::int64_t mu, std::int64_t eps) {
  if (eps != 0 && eps != 1)
    fail(Err::BadEpsilon, "eps must be 0 or 1 (the divisor is reduced), got " +
                              std::to_string(eps));
  const std::int64_t t = checked_sub(mu, eps);
  DivisorNumerics out;
  out.d_sq = checked_sub(dprime_sq, checked_mul(t, t));
  out.d_dot_k = checked_add(dprime_dot_k, t);
  return out;
}

}  // namespace kkit
