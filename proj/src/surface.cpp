#include "kkit/surface.hpp"

#include "kkit/rational.hpp"

namespace kkit {

SurfaceModel make_surface(std::int64_t k_squared, std::int64_t c2,
                          std::int64_t picard_rank, int alg_dim, int kodaira_dim,
                          bool minimal, bool kaehler) {
  if (picard_rank < 0) fail(Err::InvalidArgument, "picard_rank must be nonnegative");
  if (alg_dim < 0 || alg_dim > 2) fail(Err::InvalidArgument, "alg_dim must be in {0,1,2}");
  if (kodaira_dim < -1 || kodaira_dim > 2)
    fail(Err::InvalidArgument, "kodaira_dim must be in {-1,0,1,2}");

  const std::int64_t sum = checked_add(k_squared, c2);
  // Noether: chi(O) = (K^2 + c2)/12 must be an integer.
  if (((sum % 12) + 12) % 12 != 0)
    fail(Err::NoetherViolation,
         "k_squared + c2 = " + std::to_string(sum) + " is not divisible by 12");

  SurfaceModel s;
  s.k_squared = k_squared;
  s.c2 = c2;
  s.chi_O = sum / 12;
  s.picard_rank = picard_rank;
  s.alg_dim = alg_dim;
  s.kodaira_dim = kodaira_dim;
  s.minimal = minimal;
  s.kaehler = kaehler;

  // Non-algebraic Kaehler surfaces have K^2 <= 0 and chi(O) >= 0.
  if (kaehler && alg_dim < 2 && (s.k_squared > 0 || s.chi_O < 0))
    fail(Err::NonAlgebraicPositivity,
         "non-algebraic Kaehler surface requires k_squared <= 0 and chi_O >= 0, got "
         "k_squared = " + std::to_string(k_squared) + ", chi_O = " + std::to_string(s.chi_O));
  return s;
}

std::int64_t riemann_roch_line(const SurfaceModel& surface, std::int64_t l_sq,
                               std::int64_t l_dot_k) {
  const std::int64_t diff = checked_sub(l_sq, l_dot_k);
  if (((diff % 2) + 2) % 2 != 0)
    fail(Err::ParityViolation, "L^2 - L.K = " + std::to_string(diff) + " is odd");
  return checked_add(surface.chi_O, diff / 2);
}

std::int64_t inequality_value(std::int64_t k_squared, std::int64_t d_sq,
                              std::int64_t d_dot_k) {
  return checked_sub(checked_sub(d_sq, checked_mul(3, d_dot_k)),
                     checked_mul(4, k_squared));
}

std::int64_t inequality_value(const SurfaceModel& surface, std::int64_t d_sq,
                              std::int64_t d_dot_k) {
  return inequality_value(surface.k_squared, d_sq, d_dot_k);
}

IntersectionForm::IntersectionForm(std::size_t rank, std::vector<std::int64_t> matrix)
    : rank_(rank), matrix_(std::move(matrix)) {
  if (rank_ == 0) fail(Err::InvalidArgument, "intersection form rank must be positive");
  if (matrix_.size() != rank_ * rank_)
    fail(Err::DimensionMismatch, "intersection form matrix size does not match rank");
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = i + 1; j < rank_; ++j)
      if (at(i, j) != at(j, i))
        fail(Err::InvalidArgument, "intersection form matrix is not symmetric");
}

std::int64_t intersect(const DivisorClass& a, const DivisorClass& b,
                       const IntersectionForm& form) {
  if (a.coeffs.size() != form.rank() || b.coeffs.size() != form.rank())
    fail(Err::DimensionMismatch, "divisor class length does not match form rank");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < form.rank(); ++i) {
    if (a.coeffs[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < form.rank(); ++j)
      row = checked_add(row, checked_mul(form.at(i, j), b.coeffs[j]));
    total = checked_add(total, checked_mul(a.coeffs[i], row));
  }
  return total;
}

BundleInvariants make_bundle(std::int64_t rank, std::int64_t c1_sq,
                             std::int64_t c1_dot_K, std::int64_t c2) {
  if (rank < 1) fail(Err::InvalidArgument, "bundle rank must be >= 1");
  return BundleInvariants{rank, c1_sq, c1_dot_K, c2};
}

}  // namespace kkit
