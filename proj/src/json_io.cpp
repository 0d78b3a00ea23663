#include "kkit/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace kkit {

namespace {

const Json& require(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(Err::ParseError, where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(Err::ParseError, where + "." + key + ": missing");
  return *it;
}

std::int64_t require_int(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_number_integer()) fail(Err::ParseError, where + "." + key + ": expected integer");
  return v.get<std::int64_t>();
}

bool require_bool(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_boolean()) fail(Err::ParseError, where + "." + key + ": expected boolean");
  return v.get<bool>();
}

std::string require_string(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_string()) fail(Err::ParseError, where + "." + key + ": expected string");
  return v.get<std::string>();
}

const Json& require_array(const Json& j, const std::string& key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_array()) fail(Err::ParseError, where + "." + key + ": expected array");
  return v;
}

Json rational_to_json(const Rational& r) {
  if (r.is_integer()) return Json(r.numerator());
  return Json(r.str());
}

}  // namespace

Json surface_to_json(const SurfaceModel& s) {
  Json j;
  j["schema"] = kSchema;
  j["k_squared"] = s.k_squared;
  j["c2"] = s.c2;
  j["picard_rank"] = s.picard_rank;
  j["alg_dim"] = s.alg_dim;
  j["kodaira_dim"] = s.kodaira_dim;
  j["minimal"] = s.minimal;
  j["kaehler"] = s.kaehler;
  j["chi_O"] = s.chi_O;
  return j;
}

SurfaceModel surface_from_json(const Json& j) {
  return make_surface(require_int(j, "k_squared", "surface"),
                      require_int(j, "c2", "surface"),
                      require_int(j, "picard_rank", "surface"),
                      static_cast<int>(require_int(j, "alg_dim", "surface")),
                      static_cast<int>(require_int(j, "kodaira_dim", "surface")),
                      require_bool(j, "minimal", "surface"),
                      require_bool(j, "kaehler", "surface"));
}

Json bundle_to_json(const BundleInvariants& b) {
  Json j;
  j["schema"] = kSchema;
  j["rank"] = b.rank;
  j["c1_sq"] = b.c1_sq;
  j["c1_dot_K"] = b.c1_dot_K;
  j["c2"] = b.c2;
  return j;
}

BundleInvariants bundle_from_json(const Json& j) {
  return make_bundle(require_int(j, "rank", "bundle"), require_int(j, "c1_sq", "bundle"),
                     require_int(j, "c1_dot_K", "bundle"), require_int(j, "c2", "bundle"));
}

Json config_to_json(const CurveConfiguration& cfg) {
  Json j;
  j["schema"] = kSchema;
  j["nodes"] = Json::array();
  for (const auto& n : cfg.nodes()) {
    Json node;
    node["id"] = n.id;
    node["self_int"] = n.self_int;
    node["rational_smooth"] = n.rational_smooth;
    if (n.genus_note) node["genus_note"] = *n.genus_note;
    j["nodes"].push_back(std::move(node));
  }
  j["pairwise"] = Json::array();
  for (const auto& e : cfg.pairs()) {
    Json pair;
    pair["a"] = e.a;
    pair["b"] = e.b;
    pair["count"] = e.count;
    if (e.unmarked) pair["unmarked"] = *e.unmarked;
    j["pairwise"].push_back(std::move(pair));
  }
  j["points"] = Json::array();
  for (const auto& p : cfg.points()) {
    Json point;
    point["id"] = p.id;
    point["local_type"] = local_type_name(p.local_type);
    point["incidences"] = Json::array();
    for (const auto& inc : p.incidences) {
      Json i;
      i["curve"] = inc.curve;
      i["mult"] = inc.mult;
      point["incidences"].push_back(std::move(i));
    }
    j["points"].push_back(std::move(point));
  }
  return j;
}

CurveConfiguration config_from_json(const Json& j) {
  std::vector<CurveNode> nodes;
  for (const auto& n : require_array(j, "nodes", "config")) {
    CurveNode node;
    node.id = require_string(n, "id", "config.nodes[]");
    node.self_int = require_int(n, "self_int", "config.nodes[]");
    node.rational_smooth = require_bool(n, "rational_smooth", "config.nodes[]");
    if (n.contains("genus_note"))
      node.genus_note = require_string(n, "genus_note", "config.nodes[]");
    nodes.push_back(std::move(node));
  }
  std::vector<PairEntry> pairs;
  if (j.contains("pairwise")) {
    for (const auto& e : require_array(j, "pairwise", "config")) {
      PairEntry pair;
      pair.a = require_string(e, "a", "config.pairwise[]");
      pair.b = require_string(e, "b", "config.pairwise[]");
      pair.count = require_int(e, "count", "config.pairwise[]");
      if (e.contains("unmarked"))
        pair.unmarked = require_int(e, "unmarked", "config.pairwise[]");
      pairs.push_back(std::move(pair));
    }
  }
  std::vector<MarkedPoint> points;
  if (j.contains("points")) {
    for (const auto& p : require_array(j, "points", "config")) {
      MarkedPoint point;
      point.id = require_string(p, "id", "config.points[]");
      point.local_type = parse_local_type(require_string(p, "local_type", "config.points[]"));
      for (const auto& inc : require_array(p, "incidences", "config.points[]")) {
        Incidence i;
        i.curve = require_string(inc, "curve", "config.points[].incidences[]");
        i.mult = require_int(inc, "mult", "config.points[].incidences[]");
        point.incidences.push_back(std::move(i));
      }
      points.push_back(std::move(point));
    }
  }
  return CurveConfiguration(std::move(nodes), std::move(pairs), std::move(points));
}

Json divisor_to_json(const ReducedDivisor& d) {
  Json j = Json::array();
  for (const auto& id : d.components) j.push_back(id);
  return j;
}

ReducedDivisor divisor_from_json(const Json& j) {
  if (!j.is_array()) fail(Err::ParseError, "divisor: expected array of component ids");
  std::vector<std::string> ids;
  for (const auto& v : j) {
    if (!v.is_string()) fail(Err::ParseError, "divisor[]: expected string id");
    ids.push_back(v.get<std::string>());
  }
  return ReducedDivisor::of(std::move(ids));
}

BlowDownChain chain_from_json(const Json& j) {
  BlowDownChain chain;
  chain.base_surface = surface_from_json(require(j, "surface", "chain"));
  chain.top_config = config_from_json(require(j, "config", "chain"));
  chain.divisor = divisor_from_json(require(j, "divisor", "chain"));
  for (const auto& c : require_array(j, "contract", "chain")) {
    if (!c.is_string()) fail(Err::ParseError, "chain.contract[]: expected string id");
    chain.contractions.push_back(c.get<std::string>());
  }
  return chain;
}

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["schema"] = kSchema;
  j["verdict"] = c.verdict;
  j["base_value"] = c.base_value;
  j["final_value"] = c.final_value;
  j["d_squared"] = c.d_squared_top;
  j["d_dot_k"] = c.d_dot_k_top;
  j["two_path_value"] = c.two_path_value;
  j["chain"] = Json::array();
  for (const auto& s : c.chain) {
    Json step;
    step["contracted"] = s.contracted;
    step["mu"] = s.mu;
    step["eps"] = s.eps;
    step["delta_value"] = s.delta_value;
    step["case_label"] = case_label_name(s.case_label);
    j["chain"].push_back(std::move(step));
  }
  return j;
}

Json fiber_record_to_json(const FiberRecord& rec) {
  Json j;
  j["schema"] = kSchema;
  j["type"] = fiber_type_name(rec.type);
  j["n"] = rec.type.n;
  j["m"] = rec.type.m;
  j["euler"] = rec.euler;
  j["multiplicities"] = Json::object();
  for (const auto& [id, m] : rec.component_multiplicities) j["multiplicities"][id] = m;
  j["config"] = config_to_json(rec.config);
  return j;
}

Json census_entry_to_json(const CensusEntry& entry) {
  Json j;
  j["schema"] = kSchema;
  j["type"] = fiber_type_name(entry.type);
  j["subdivisors"] = entry.subdivisors;
  j["satisfying"] = Json::array();
  for (const auto& d : entry.satisfying) {
    Json s;
    s["divisor"] = divisor_to_json(d.divisor);
    s["d_squared"] = d.d_squared;
    s["is_full"] = d.is_full;
    j["satisfying"].push_back(std::move(s));
  }
  return j;
}

Json deformation_report_to_json(const DeformationReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["h1_minus_h2"] = r.h1_minus_h2;
  j["banlep_lhs"] = rational_to_json(r.banlep_lhs);
  j["chern_gap"] = r.chern_gap;
  j["verdict"] = verdict_name(r.verdict);
  j["notes"] = Json::array();
  for (const auto& n : r.notes) j["notes"].push_back(n);
  return j;
}

Json ring_element_to_json(const RingElement& e) {
  Json terms = Json::array();
  // RingElement::str() orders by degree then monomial; mirror that here.
  std::vector<std::pair<GradedRing::Monomial, Rational>> sorted(e.terms().begin(),
                                                                e.terms().end());
  std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
    const int da = e.ring().degree_of(a.first);
    const int db = e.ring().degree_of(b.first);
    if (da != db) return da < db;
    return a.first < b.first;
  });
  for (const auto& [m, c] : sorted) {
    Json t;
    t["monomial"] = monomial_str(e.ring(), m);
    t["coeff"] = rational_to_json(c);
    terms.push_back(std::move(t));
  }
  Json j;
  j["expr"] = e.str();
  j["terms"] = std::move(terms);
  return j;
}

Json riero_report_to_json(const RieroReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["ok"] = r.ok;
  j["chi_TX"] = ring_element_to_json(r.chi_TX);
  j["target"] = ring_element_to_json(r.target);
  j["residual"] = ring_element_to_json(r.residual);
  j["e3_coefficient"] = rational_to_json(r.e3_coefficient);
  return j;
}

Json property_p_to_json(const PropertyPResult& r, const ReducedDivisor& d) {
  Json j;
  j["schema"] = kSchema;
  j["holds"] = r.holds;
  j["divisor"] = divisor_to_json(d);
  if (!r.holds) {
    j["witness"] = *r.witness;
    j["witness_pair_degree"] = r.witness_degree;
  }
  return j;
}

Json violations_to_json(const std::vector<Violation>& v) {
  Json j = Json::array();
  for (const auto& violation : v) {
    Json entry;
    entry["kind"] = violation.kind;
    entry["detail"] = violation.detail;
    j.push_back(std::move(entry));
  }
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ParseError, "cannot open " + path);
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(Err::ParseError, path + ": malformed JSON");
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace kkit
