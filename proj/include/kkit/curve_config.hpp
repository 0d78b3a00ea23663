#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kkit/error.hpp"

namespace kkit {

// Weighted intersection graph of irreducible curves on a surface, with
// marked singular/intersection points carrying local multiplicity data.
// Everything is a value; operations return new configurations.

struct CurveNode {
  std::string id;
  std::int64_t self_int = 0;
  bool rational_smooth = false;
  // Set for singular irreducible rational curves: "node" or "cusp".
  std::optional<std::string> genus_note;
};

enum class LocalType { Ordinary, Tangential, TripleOrdinary, CuspOnCurve };

const char* local_type_name(LocalType t);
LocalType parse_local_type(const std::string& name);

struct Incidence {
  std::string curve;
  std::int64_t mult = 1;
};

struct MarkedPoint {
  std::string id;
  LocalType local_type = LocalType::Ordinary;
  std::vector<Incidence> incidences;
};

// Pairwise intersection record: `count` is the global C_a . C_b. The part
// not explained by marked points is `unmarked` (simple transversal
// crossings); when absent it is derived as count minus point contributions.
struct PairEntry {
  std::string a;
  std::string b;
  std::int64_t count = 0;
  std::optional<std::int64_t> unmarked;
};

struct Violation {
  std::string kind;    // e.g. "InconsistentIntersection", "SymmetryViolation"
  std::string detail;
};

class CurveConfiguration {
 public:
  CurveConfiguration() = default;
  CurveConfiguration(std::vector<CurveNode> nodes, std::vector<PairEntry> pairs,
                     std::vector<MarkedPoint> points);

  const std::vector<CurveNode>& nodes() const { return nodes_; }
  const std::vector<PairEntry>& pairs() const { return pairs_; }
  const std::vector<MarkedPoint>& points() const { return points_; }

  bool has_node(const std::string& id) const;
  const CurveNode& node(const std::string& id) const;  // UnknownCurve
  const MarkedPoint& point(const std::string& id) const;  // UnknownPoint

  // Global C_a . C_b (0 when no entry); throws UnknownCurve for bad ids.
  std::int64_t pair_int(const std::string& a, const std::string& b) const;

  // Contribution of one marked point to the pair (a, b).
  static std::int64_t point_pair_contribution(const MarkedPoint& p,
                                              const std::string& a,
                                              const std::string& b);
  // Sum over all marked points.
  std::int64_t marked_pair_contribution(const std::string& a,
                                        const std::string& b) const;

 private:
  std::vector<CurveNode> nodes_;
  std::vector<PairEntry> pairs_;
  std::vector<MarkedPoint> points_;
};

// Component subset with implicit coefficient 1 everywhere. The empty set is
// the zero divisor.
struct ReducedDivisor {
  std::vector<std::string> components;  // kept sorted and unique

  static ReducedDivisor of(std::vector<std::string> ids);
  static ReducedDivisor all_of(const CurveConfiguration& cfg);
  bool contains(const std::string& id) const;
  bool empty() const { return components.empty(); }
  ReducedDivisor without(const std::string& id) const;
};

// Structural validation; an empty list means every invariant holds.
std::vector<Violation> validate(const CurveConfiguration& cfg);

// C.(D - C) for a component c of D.
std::int64_t pair_degree(const CurveConfiguration& cfg, const ReducedDivisor& D,
                         const std::string& c);

struct PropertyPResult {
  bool holds = false;
  // Violating component and its pair degree when the property fails.
  std::optional<std::string> witness;
  std::int64_t witness_degree = 0;
};

// Property (P): every smooth rational component C of D has C.(D-C) >= 2.
// The zero divisor passes vacuously.
PropertyPResult property_P(const CurveConfiguration& cfg, const ReducedDivisor& D);

// Multiplicity of the divisor D at a marked point: sum of local
// multiplicities of the D-components incident to it.
std::int64_t point_multiplicity(const CurveConfiguration& cfg, const ReducedDivisor& D,
                                const std::string& point_id);

// D^2 from the configuration data.
std::int64_t divisor_self_intersection(const CurveConfiguration& cfg,
                                       const ReducedDivisor& D);

// D.K_S via adjunction: sum of 2 p_a(C) - 2 - C^2 with p_a read from the
// component flags (0 for smooth rational, 1 otherwise).
std::int64_t divisor_canonical_pairing(const CurveConfiguration& cfg,
                                       const ReducedDivisor& D);

struct BlowUpResult {
  CurveConfiguration config;
  std::string exceptional;  // id of the new (-1)-curve
  std::map<std::string, std::string> strict_transform;  // old id -> new id
};

// Blow up at a marked point. Strict transforms keep their ids; the marked
// point is consumed and replaced by the local structure on the exceptional
// curve (tangential point resolves to a triple point, cusp to a tangency).
BlowUpResult blow_up(const CurveConfiguration& cfg, const std::string& point_id);

struct BlowDownResult {
  CurveConfiguration config;
  std::map<std::string, std::string> pushforward;  // surviving id -> image id
  std::optional<std::string> image_point;          // marked point at p(C0), if any
};

// Contract a (-1)-curve c0: images satisfy C'_i . C'_j = C_i.C_j +
// (C0.C_i)(C0.C_j) and C'_i^2 = C_i^2 + (C0.C_i)^2. The image point's local
// type is recorded when determinable (node/cusp/tangency/triple), otherwise
// as ordinary with the computed multiplicities.
BlowDownResult blow_down(const CurveConfiguration& cfg, const std::string& c0);

struct DivisorNumerics {
  std::int64_t d_sq = 0;
  std::int64_t d_dot_k = 0;
};

// Numerical pullback along one blow-down step: for D = p^*D' + (eps-mu)C0
// and K = p^*K' + C0,
//   D^2 = D'^2 - (mu-eps)^2,   D.K = D'.K' + (mu-eps).
// eps must be 0 or 1 (D is reduced); throws BadEpsilon otherwise.
DivisorNumerics pullback_divisor(std::int64_t dprime_sq, std::int64_t dprime_dot_k,
                                 std::int64_t mu, std::int64_t eps);

}  // namespace kkit
