#ifndef G9_MOLIEN_HPP
#define G9_MOLIEN_HPP

// Equivariant Molien series
//   Phi(t) = (1/|G|) sum_g tr(rho(g^-1)) / det(I - t g)
// for the natural 2-dimensional action, truncated at t^cutoff.

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "g9/group.hpp"
#include "g9/reps.hpp"

namespace g9 {

inline constexpr std::size_t kDefaultCutoff = 64;

struct PowerSeries {
  std::vector<Rat> coeffs;  // coeffs[k] multiplies t^k, k = 0..cutoff
  std::size_t cutoff() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  Rat at(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : Rat(0); }
};

using IntPoly = std::vector<mpz_class>;  // IntPoly[k] multiplies t^k

struct MolienResult {
  PowerSeries series;
  IntPoly numerator;  // empty when the cutoff is too small to certify it
};

// Summed per conjugacy class. Throws Error(MolienInconsistency) if a
// coefficient is not a non-negative integer.
MolienResult molien_series(const Representation& r, const GroupTable& t, std::size_t cutoff = kDefaultCutoff);

// Same sum taken over every element; independent cross-check.
PowerSeries molien_series_elementwise(const Representation& r, const GroupTable& t, std::size_t cutoff);

// Multiplies by (1 - t^8)(1 - t^24). Requires cutoff >= 60 and that every
// coefficient above cutoff - 32 vanishes, else Error(CutoffTooSmall).
IntPoly numerator_of(const PowerSeries& series);

// Expansion of p / ((1 - t^8)(1 - t^24)) up to t^cutoff.
PowerSeries hilbert_series(const IntPoly& numerator, std::size_t cutoff);

// "t^3 + 2t^11 + 3t^19", the first `max_terms` nonzero terms.
std::string series_head(const PowerSeries& s, std::size_t max_terms);
std::string intpoly_to_string(const IntPoly& p);

}  // namespace g9

#endif  // G9_MOLIEN_HPP
