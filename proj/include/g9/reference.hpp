#ifndef G9_REFERENCE_HPP
#define G9_REFERENCE_HPP

// Published values for G9 that the verification suite compares against:
// the reference table character table, the generator degrees, determinant
// exponents and series heads for every irreducible representation.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g9/cyclo.hpp"

namespace g9::reference {

struct CharTableData {
  std::vector<std::size_t> orders;         // per class column
  std::vector<std::size_t> sizes;          // per class column
  std::vector<std::vector<CycNum>> rows;   // rows[i] is chi_{i+1}
};
const CharTableData& character_table();

// (coefficient, exponent) pairs, ascending exponent.
using SeriesHead = std::vector<std::pair<long, unsigned>>;

enum class TauPattern {
  None,
  Symmetric3,   // (f, g, tau f), tau g = g
  Skew3,        // (f, g, -tau f), tau g = -g
  Plus4,        // (f, g, tau g, tau f)
  Minus4,       // (f, g, -tau g, -tau f)
};

struct RepData {
  int id = 0;
  std::size_t dim = 0;
  std::vector<unsigned> degrees;  // generator degrees, ascending
  unsigned e = 0;                 // exponent of Delta in the determinant
  unsigned k = 0;                 // exponent of Gamma in the determinant
  std::optional<long> c;          // published constant, normalization-dependent
  SeriesHead series;              // displayed head of the Molien series
  TauPattern tau = TauPattern::None;
};

// Index 0 holds rho_1.
const std::vector<RepData>& reps();
const RepData& rep(int id);

// The one-dimensional generators Gamma^a Delta^b, index 0 holds rho_1.
struct GammaDelta {
  unsigned a;
  unsigned b;
};
const std::vector<GammaDelta>& linear_generators();

}  // namespace g9::reference

#endif  // G9_REFERENCE_HPP
