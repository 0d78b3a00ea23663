#pragma once

#include <cstdint>
#include <vector>

#include "kkit/error.hpp"

namespace kkit {

// Numerical model of a compact complex surface. Only numbers are kept; no
// attempt is made to represent the complex structure. chi_O is always
// derived from Noether's formula, never free input.
struct SurfaceModel {
  std::int64_t k_squared = 0;   // K_S^2
  std::int64_t c2 = 0;          // topological Euler number c_2(S)
  std::int64_t chi_O = 0;       // chi(O_S) = (K^2 + c2)/12, derived
  std::int64_t picard_rank = 0; // rho(S)
  int alg_dim = 0;              // a(S) in {0,1,2}
  int kodaira_dim = 0;          // kappa(S) in {-1,0,1,2}
  bool minimal = true;
  bool kaehler = true;
};

// Validated constructor.
//  - NoetherViolation unless k_squared + c2 = 0 (mod 12)
//  - NonAlgebraicPositivity when a Kaehler surface with a(S) < 2 claims
//    K^2 > 0 or chi(O) < 0
SurfaceModel make_surface(std::int64_t k_squared, std::int64_t c2,
                          std::int64_t picard_rank, int alg_dim, int kodaira_dim,
                          bool minimal, bool kaehler);

// chi(L) = chi(O_S) + (L^2 - L.K)/2; throws ParityViolation when L^2 - L.K
// is odd.
std::int64_t riemann_roch_line(const SurfaceModel& surface, std::int64_t l_sq,
                               std::int64_t l_dot_k);

// Left-hand side of the discriminant inequality: D.(D - 3K) - 4K^2.
std::int64_t inequality_value(const SurfaceModel& surface, std::int64_t d_sq,
                              std::int64_t d_dot_k);
std::int64_t inequality_value(std::int64_t k_squared, std::int64_t d_sq,
                              std::int64_t d_dot_k);

// Integer symmetric bilinear form on a divisor lattice of fixed rank.
// The matrix is frozen at construction.
class IntersectionForm {
 public:
  IntersectionForm(std::size_t rank, std::vector<std::int64_t> matrix);

  std::size_t rank() const { return rank_; }
  std::int64_t at(std::size_t i, std::size_t j) const { return matrix_[i * rank_ + j]; }

 private:
  std::size_t rank_;
  std::vector<std::int64_t> matrix_;  // row-major, validated symmetric
};

struct DivisorClass {
  std::vector<std::int64_t> coeffs;
};

// a^T M b; symmetric in its arguments. DimensionMismatch when lengths differ
// from the form rank.
std::int64_t intersect(const DivisorClass& a, const DivisorClass& b,
                       const IntersectionForm& form);

// Rank and Chern numbers of a vector bundle on a surface. For the conic
// bundle pipeline the bundle is E = f_*(K^*_{X/S}) and rank = 3. Note
// c1(E).c1(S) = -c1_dot_K since c1(S) = -K_S.
struct BundleInvariants {
  std::int64_t rank = 3;
  std::int64_t c1_sq = 0;     // c1(E)^2
  std::int64_t c1_dot_K = 0;  // c1(E).K_S
  std::int64_t c2 = 0;        // c2(E)
};

BundleInvariants make_bundle(std::int64_t rank, std::int64_t c1_sq,
                             std::int64_t c1_dot_K, std::int64_t c2);

}  // namespace kkit
