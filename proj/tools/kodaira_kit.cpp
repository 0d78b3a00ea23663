// kodaira-kit: exact-arithmetic toolkit for conic-bundle discriminant
// geometry -- property-(P) checks, blow-up/blow-down calculus, the Kodaira
// fiber census, discriminant-inequality certificates, the symbolic
// Riemann-Roch identity and the deformation count.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kkit/json_io.hpp"

namespace {

using kkit::Json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInputError = 2;

struct CommonOpts {
  bool json = false;
};

kkit::ReducedDivisor divisor_or_all(const kkit::CurveConfiguration& cfg,
                                    const std::string& arg) {
  if (arg.empty()) return kkit::ReducedDivisor::all_of(cfg);
  if (arg == "0" || arg == "zero") return kkit::ReducedDivisor{};
  std::vector<std::string> ids;
  std::string current;
  for (char ch : arg) {
    if (ch == ',') {
      if (!current.empty()) ids.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) ids.push_back(current);
  return kkit::ReducedDivisor::of(std::move(ids));
}

int run_check_p(const std::string& config_path, const std::string& divisor_arg,
                bool as_json) {
  const kkit::CurveConfiguration cfg =
      kkit::config_from_json(kkit::load_json_file(config_path));
  const auto violations = kkit::validate(cfg);
  if (!violations.empty()) {
    std::cerr << "invalid configuration: " << violations.front().kind << " "
              << violations.front().detail << "\n";
    if (as_json) std::cout << kkit::dump(kkit::violations_to_json(violations));
    return kExitInputError;
  }
  const kkit::ReducedDivisor d = divisor_or_all(cfg, divisor_arg);
  const kkit::PropertyPResult r = kkit::property_P(cfg, d);
  if (as_json) {
    std::cout << kkit::dump(kkit::property_p_to_json(r, d));
  } else if (r.holds) {
    std::cout << "property (P) holds\n";
  } else {
    std::cout << "property (P) fails: component " << *r.witness << " has C.(D-C) = "
              << r.witness_degree << " < 2\n";
  }
  return r.holds ? kExitTrue : kExitFalse;
}

int run_blow_up(const std::string& config_path, const std::string& point_id) {
  const kkit::CurveConfiguration cfg =
      kkit::config_from_json(kkit::load_json_file(config_path));
  const kkit::BlowUpResult r = kkit::blow_up(cfg, point_id);
  Json j = kkit::config_to_json(r.config);
  j["exceptional"] = r.exceptional;
  std::cout << kkit::dump(j);
  return kExitTrue;
}

int run_blow_down(const std::string& config_path, const std::string& curve_id) {
  const kkit::CurveConfiguration cfg =
      kkit::config_from_json(kkit::load_json_file(config_path));
  const kkit::BlowDownResult r = kkit::blow_down(cfg, curve_id);
  Json j = kkit::config_to_json(r.config);
  if (r.image_point) j["image_point"] = *r.image_point;
  std::cout << kkit::dump(j);
  return kExitTrue;
}

int run_enumerate_fibers(const std::string& type, int n, int m, bool census_p,
                         bool as_json) {
  const kkit::FiberRecord rec = kkit::fiber(kkit::make_fiber_type(type, n, m));
  Json j = kkit::fiber_record_to_json(rec);
  if (census_p) {
    Json satisfying = Json::array();
    bool all_zero = true;
    kkit::for_each_reduced_subdivisor(rec, [&](const kkit::ReducedDivisor& d) {
      if (!kkit::property_P(rec.config, d).holds) return;
      Json s;
      s["divisor"] = kkit::divisor_to_json(d);
      const std::int64_t dsq = kkit::divisor_self_intersection(rec.config, d);
      s["d_squared"] = dsq;
      all_zero &= (dsq == 0);
      satisfying.push_back(std::move(s));
    });
    j["census_p"] = std::move(satisfying);
    j["all_squares_zero"] = all_zero;
  }
  if (as_json) {
    std::cout << j.dump() << "\n";  // one record per line
  } else {
    std::cout << "fiber " << kkit::fiber_type_name(rec.type) << ": "
              << rec.config.nodes().size() << " component(s), euler " << rec.euler
              << "\n";
    if (census_p) std::cout << kkit::dump(j["census_p"]);
  }
  return kExitTrue;
}

int run_census(int max_n, int max_components, bool as_json) {
  const kkit::CensusReport report = kkit::property_p_census(max_n);
  bool ok = report.all_squares_zero && report.only_full_fibers;
  if (as_json) {
    for (const auto& entry : report.entries)
      std::cout << kkit::census_entry_to_json(entry).dump() << "\n";
  } else {
    for (const auto& entry : report.entries)
      std::cout << kkit::fiber_type_name(entry.type) << ": " << entry.satisfying.size()
                << " of " << entry.subdivisors << " sub-divisor(s) satisfy (P)\n";
  }

  // Optional exhaustive sweep: every tree of smooth rational curves up to
  // the given size must fail (P).
  if (max_components > 0) {
    std::size_t trees = 0;
    bool trees_ok = true;
    for (int size = 1; size <= max_components && trees_ok; ++size) {
      kkit::for_each_labeled_tree(size, [&](const std::vector<std::pair<int, int>>& edges) {
        ++trees;
        const kkit::CurveConfiguration cfg = kkit::tree_configuration(size, edges);
        const kkit::ReducedDivisor d = kkit::ReducedDivisor::all_of(cfg);
        if (kkit::property_P(cfg, d).holds) trees_ok = false;
      });
    }
    ok &= trees_ok;
    std::cerr << "trees checked: " << trees << (trees_ok ? " (all fail (P))" : " (VIOLATION)")
              << "\n";
  }
  std::cerr << (ok ? "census clean" : "census VIOLATION") << "\n";
  return ok ? kExitTrue : kExitFalse;
}

int run_discriminant(const std::string& chain_path, const std::string& surface_path,
                     const std::string& config_path, const std::string& divisor_arg,
                     bool as_json) {
  if (!chain_path.empty()) {
    const kkit::BlowDownChain chain =
        kkit::chain_from_json(kkit::load_json_file(chain_path));
    const kkit::Certificate cert = kkit::verify_inductive(chain);
    if (as_json) {
      std::cout << kkit::dump(kkit::certificate_to_json(cert));
    } else {
      std::cout << "base " << cert.base_value << ", final " << cert.final_value
                << ", verdict " << (cert.verdict ? "true" : "false") << "\n";
      for (const auto& s : cert.chain)
        std::cout << "  contract " << s.contracted << ": mu = " << s.mu
                  << ", eps = " << s.eps << ", delta = " << s.delta_value << " ("
                  << kkit::case_label_name(s.case_label) << ")\n";
    }
    return cert.verdict ? kExitTrue : kExitFalse;
  }

  // Without a chain: decide the a(S) = 0 case or the minimal elliptic base.
  const kkit::SurfaceModel surface =
      kkit::surface_from_json(kkit::load_json_file(surface_path));
  const kkit::CurveConfiguration cfg =
      kkit::config_from_json(kkit::load_json_file(config_path));
  const kkit::ReducedDivisor d = divisor_or_all(cfg, divisor_arg);
  if (surface.alg_dim == 0) {
    const kkit::A0Decision decision = kkit::decide_a0(surface, cfg, d);
    if (as_json) {
      Json j;
      j["schema"] = kkit::kSchema;
      j["holds"] = decision.holds;
      if (decision.witness) j["witness"] = *decision.witness;
      j["note"] = decision.note;
      std::cout << kkit::dump(j);
    } else {
      std::cout << decision.note << "\n";
    }
    return decision.holds ? kExitTrue : kExitFalse;
  }
  const std::int64_t base = kkit::minimal_elliptic_base(cfg, d, surface);
  if (as_json) {
    Json j;
    j["schema"] = kkit::kSchema;
    j["base_value"] = base;
    j["verdict"] = base >= 0;
    std::cout << kkit::dump(j);
  } else {
    std::cout << "inequality value " << base << " on the minimal surface\n";
  }
  return base >= 0 ? kExitTrue : kExitFalse;
}

int run_verify_riero(bool as_json) {
  const auto start = std::chrono::steady_clock::now();
  const kkit::RieroReport report = kkit::verify_riero();
  const auto elapsed = std::chrono::duration<double>(
      std::chrono::steady_clock::now() - start);
  if (as_json) {
    std::cout << kkit::dump(kkit::riero_report_to_json(report));
  } else {
    std::cout << "chi(T_X)   = " << report.chi_TX.str() << "\n"
              << "target RHS = " << report.target.str() << "\n"
              << "residual   = " << report.residual.str() << "\n"
              << "e3 coeff   = " << report.e3_coefficient.str() << "\n"
              << (report.ok ? "identity verified" : "IDENTITY FAILED") << " ("
              << elapsed.count() << " s)\n";
  }
  return report.ok ? kExitTrue : kExitFalse;
}

int run_deform_count(const std::string& surface_path, const std::string& bundle_path,
                     std::int64_t h0, bool as_json) {
  const kkit::SurfaceModel surface =
      kkit::surface_from_json(kkit::load_json_file(surface_path));
  const kkit::BundleInvariants bundle =
      kkit::bundle_from_json(kkit::load_json_file(bundle_path));
  const kkit::DeformationReport report = kkit::classify(surface, bundle, h0);
  if (as_json) {
    std::cout << kkit::dump(kkit::deformation_report_to_json(report));
  } else {
    std::cout << "h1(T_X) - h2(T_X) = " << report.h1_minus_h2 << "\n"
              << "verdict: " << kkit::verdict_name(report.verdict) << "\n";
    for (const auto& n : report.notes) std::cout << "  note: " << n << "\n";
  }
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact intersection-theoretic toolkit for conic bundle discriminants"};
  app.require_subcommand(1);
  app.fallthrough();  // --json may follow the subcommand

  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON on stdout");

  std::string config_path, divisor_arg, point_id, curve_id;
  auto* check_p = app.add_subcommand("check-p", "test property (P) on a configuration");
  check_p->add_option("--config", config_path, "configuration JSON")->required();
  check_p->add_option("--divisor", divisor_arg,
                      "comma-separated component ids (default: all; \"0\" for the zero divisor)");

  auto* blow_up_cmd = app.add_subcommand("blow-up", "blow up at a marked point");
  blow_up_cmd->add_option("--config", config_path, "configuration JSON")->required();
  blow_up_cmd->add_option("--point", point_id, "marked point id")->required();

  auto* blow_down_cmd = app.add_subcommand("blow-down", "contract a (-1)-curve");
  blow_down_cmd->add_option("--config", config_path, "configuration JSON")->required();
  blow_down_cmd->add_option("--curve", curve_id, "curve id")->required();

  std::string fiber_type;
  int fiber_n = 0, fiber_m = 2;
  bool census_p = false;
  auto* enumerate =
      app.add_subcommand("enumerate-fibers", "emit a Kodaira fiber configuration");
  enumerate->add_option("--type", fiber_type, "I0, In, mIn, II, III, IV, I0*, In*, II*, III*, IV*")
      ->required();
  enumerate->add_option("--n", fiber_n, "cycle/chain parameter");
  enumerate->add_option("--m", fiber_m, "multiplicity for mIn (default 2)");
  enumerate->add_flag("--census-p", census_p, "list the property-(P) sub-divisors");

  int census_n = 12, max_components = 0;
  auto* census = app.add_subcommand("census", "property-(P) census over the fiber catalog");
  census->add_option("--n", census_n, "largest In / In* parameter (default 12)");
  census->add_option("--max-components", max_components,
                     "also sweep all labeled trees up to this size");

  std::string chain_path, surface_path, bundle_path;
  auto* discriminant = app.add_subcommand(
      "discriminant", "certify the discriminant inequality along a blow-down chain");
  discriminant->add_option("--chain", chain_path, "chain JSON");
  discriminant->add_option("--surface", surface_path, "surface JSON (chainless modes)");
  discriminant->add_option("--config", config_path, "configuration JSON (chainless modes)");
  discriminant->add_option("--divisor", divisor_arg, "component ids (default: all)");

  auto* riero = app.add_subcommand("verify-riero",
                                   "re-derive the deformation-count identity symbolically");

  std::int64_t h0 = 0;
  auto* deform = app.add_subcommand("deform-count", "evaluate the deformation count");
  deform->add_option("--surface", surface_path, "surface JSON")->required();
  deform->add_option("--bundle", bundle_path, "bundle JSON")->required();
  deform->add_option("--h0", h0, "h0(T_X) (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitTrue : kExitInputError;
  }

  try {
    if (check_p->parsed()) return run_check_p(config_path, divisor_arg, as_json);
    if (blow_up_cmd->parsed()) return run_blow_up(config_path, point_id);
    if (blow_down_cmd->parsed()) return run_blow_down(config_path, curve_id);
    if (enumerate->parsed())
      return run_enumerate_fibers(fiber_type, fiber_n, fiber_m, census_p, as_json);
    if (census->parsed()) return run_census(census_n, max_components, as_json);
    if (discriminant->parsed()) {
      if (chain_path.empty() && (surface_path.empty() || config_path.empty())) {
        std::cerr << "discriminant needs --chain, or --surface together with --config\n";
        return kExitInputError;
      }
      return run_discriminant(chain_path, surface_path, config_path, divisor_arg, as_json);
    }
    if (riero->parsed()) return run_verify_riero(as_json);
    if (deform->parsed()) return run_deform_count(surface_path, bundle_path, h0, as_json);
  } catch (const kkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
