#pragma once

#include <string>

#include <json.hpp>

#include "kkit/chern.hpp"
#include "kkit/curve_config.hpp"
#include "kkit/deformation.hpp"
#include "kkit/discriminant.hpp"
#include "kkit/kodaira.hpp"
#include "kkit/surface.hpp"

namespace kkit {

// JSON interchange. All documents carry "schema": "kodaira-kit/1"; key order
// is fixed so identical inputs serialize byte-identically. Parse errors throw
// ParseError naming the offending field.

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "kodaira-kit/1";

Json surface_to_json(const SurfaceModel& s);
SurfaceModel surface_from_json(const Json& j);  // chi_O is ignored on read

Json bundle_to_json(const BundleInvariants& b);
BundleInvariants bundle_from_json(const Json& j);

Json config_to_json(const CurveConfiguration& cfg);
CurveConfiguration config_from_json(const Json& j);

Json divisor_to_json(const ReducedDivisor& d);
ReducedDivisor divisor_from_json(const Json& j);

BlowDownChain chain_from_json(const Json& j);
Json certificate_to_json(const Certificate& c);

Json fiber_record_to_json(const FiberRecord& rec);
Json census_entry_to_json(const CensusEntry& entry);

Json deformation_report_to_json(const DeformationReport& r);

Json ring_element_to_json(const RingElement& e);
Json riero_report_to_json(const RieroReport& r);

Json property_p_to_json(const PropertyPResult& r, const ReducedDivisor& d);
Json violations_to_json(const std::vector<Violation>& v);

// File helpers for the CLI.
Json load_json_file(const std::string& path);
std::string dump(const Json& j);  // 2-space indent, trailing newline

}  // namespace kkit
