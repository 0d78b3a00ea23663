#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kkit/curve_config.hpp"

namespace kkit {

// Kodaira's classification of elliptic fibers as curve configurations, plus
// enumeration over reduced sub-divisors. Every catalog entry is gated at
// construction by F.C_j = 0 for all components and F^2 = 0, so a table
// transcription error cannot pass silently.

enum class FiberKind { I0, In, mIn, II, III, IV, I0star, Instar, IIstar, IIIstar, IVstar };

struct FiberType {
  FiberKind kind = FiberKind::I0;
  int n = 0;  // cycle length for In/mIn/Instar
  int m = 1;  // multiplicity for mIn (m >= 2)
};

std::string fiber_type_name(const FiberType& t);
// Accepts "I0", "In", "mIn", "II", "III", "IV", "I0*"/"I0star", "In*"/"Instar",
// "II*"/"IIstar", "III*"/"IIIstar", "IV*"/"IVstar".
FiberType make_fiber_type(const std::string& kind, int n, int m);

struct FiberRecord {
  FiberType type;
  CurveConfiguration config;  // the reduced fiber
  std::map<std::string, std::int64_t> component_multiplicities;
  std::int64_t euler = 0;
};

// Catalog lookup; throws UnknownType for parameters outside the table.
FiberRecord fiber(const FiberType& type);

// All nonempty component subsets, each exactly once.
void for_each_reduced_subdivisor(const FiberRecord& rec,
                                 const std::function<void(const ReducedDivisor&)>& fn);
std::vector<ReducedDivisor> enumerate_reduced_subdivisors(const FiberRecord& rec);

// True iff every component of D is smooth rational, all pairwise
// intersections within D are transversal and at most 1, and the intersection
// graph of D is acyclic (connectedness is not required).
bool is_tree_of_smooth_rationals(const CurveConfiguration& cfg, const ReducedDivisor& D);

struct CensusDivisor {
  ReducedDivisor divisor;
  std::int64_t d_squared = 0;
  bool is_full = false;  // equals the whole reduced fiber
};

struct CensusEntry {
  FiberType type;
  std::size_t subdivisors = 0;
  std::vector<CensusDivisor> satisfying;  // sub-divisors with property (P)
};

struct CensusReport {
  std::vector<CensusEntry> entries;
  bool all_squares_zero = true;      // every (P)-divisor has D^2 = 0
  bool only_full_fibers = true;      // (P)-divisors are exactly the full
                                     // reduced configurations of the
                                     // unstarred types
};

// Property-(P) census across the catalog for all types with parameter
// n <= max_n (I0, I1..In, mI0..mIn, II, III, IV, I0*, I1*..In*, II*, III*, IV*).
CensusReport property_p_census(int max_n);

// Drives a callback over all labeled trees on `size` vertices (via Pruefer
// sequences); used by the exhaustive tree sweeps.
void for_each_labeled_tree(int size,
                           const std::function<void(const std::vector<std::pair<int, int>>&)>& fn);

// Builds the configuration of smooth rational (-2)-curves with the given
// edge set (one transversal crossing per edge).
CurveConfiguration tree_configuration(int size,
                                      const std::vector<std::pair<int, int>>& edges);

}  // namespace kkit
