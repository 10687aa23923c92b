#ifndef G9_COVARIANTS_HPP
#define G9_COVARIANTS_HPP

// Modules of covariants M(rho) = { F : F(g x) = rho(g) F(x) } over the
// invariant ring R = C[theta, phi], computed one homogeneous degree at a time.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g9/group.hpp"
#include "g9/molien.hpp"
#include "g9/poly.hpp"
#include "g9/reference.hpp"
#include "g9/reps.hpp"

namespace g9 {

inline constexpr unsigned kExtractionDegree = 54;
inline constexpr unsigned kFreenessCutoff = 64;

struct CovariantSlice {
  int rep_id = 0;
  unsigned degree = 0;
  std::vector<VecPoly> basis;  // rows of the reduced echelon form of the coefficient space
};

// Coefficient matrix S of f -> f(g x) on degree-d forms, in the monomial
// order x^d, x^(d-1) y, ..., y^d: substitute(e_b, g) = sum_a S(a, b) e_a.
Mat substitution_matrix(const Mat& g, unsigned d);

// The covariants of degree d, constrained by the generators T and D only.
// No Molien cross-check.
CovariantSlice solve_degree(const Representation& r, unsigned d);

// Per-representation cache of slices, cross-checked against the Molien
// series as they are produced.
class CovariantEngine {
 public:
  CovariantEngine(const Representation& r, const GroupTable& t);

  const Representation& rep() const { return rep_; }
  // Throws Error(CrossCheckFailure) if the dimension differs from the
  // Molien coefficient.
  const CovariantSlice& slice(unsigned d);
  const PowerSeries& molien(std::size_t cutoff);

 private:
  Representation rep_;
  const GroupTable* group_;
  PowerSeries molien_;
  std::map<unsigned, CovariantSlice> slices_;
};

struct GeneratorSet {
  int rep_id = 0;
  std::vector<VecPoly> gens;  // ascending degree, ties in extraction order
  std::vector<unsigned> degrees() const;
};

// Degree by degree, a complement of theta M_{d-8} + phi M_{d-24} in M_d.
// Throws Error(FreenessSuspect) for more than dim rho generators and
// Error(FreenessFailure) for fewer.
GeneratorSet extract_generators(CovariantEngine& e, unsigned d_max = kExtractionDegree);

struct FreenessReport {
  unsigned cutoff = 0;
  std::size_t vectors_checked = 0;
  std::string message;
};

// For each d <= n the products theta^a phi^b g_j of degree d are
// independent, their count equals the Molien coefficient, and the generated
// Hilbert series equals the Molien series. Throws Error(FreenessFailure).
FreenessReport verify_free(CovariantEngine& e, const GeneratorSet& g, unsigned n = kFreenessCutoff);

// det of the dim x dim matrix with the generators as columns.
BiPoly generator_determinant(const GeneratorSet& g);

struct DetRelation {
  unsigned e = 0;   // exponent of Delta
  unsigned k = 0;   // exponent of Gamma
  CycNum c;         // remaining constant
  int degree = 0;
  BiPoly det;
};

// Factors the generator determinant as c Delta^e Gamma^k. Throws
// Error(FactorizationFailure) when the cofactor is not a nonzero constant.
DetRelation det_relation(const GeneratorSet& g);

enum class TauOutcome { Found, NotFound, NotApplicable };
std::string tau_outcome_name(TauOutcome o);

struct TauGeneratorResult {
  unsigned degree = 0;
  TauOutcome outcome = TauOutcome::NotApplicable;
  std::optional<VecPoly> witness;  // a generator of this degree in pattern form
};

struct TauReport {
  int rep_id = 0;
  reference::TauPattern pattern = reference::TauPattern::None;
  std::vector<TauGeneratorResult> per_generator;
  bool all_found() const;
};

std::string tau_pattern_name(reference::TauPattern p);
// The component relations the pattern imposes, as rows acting on coeffs().
Mat tau_pattern_constraints(reference::TauPattern p, unsigned degree);

// For each generator degree, looks for generators modulo decomposables whose
// components follow the pattern of the representation. Not finding one is
// reported, never thrown.
TauReport check_tau_structure(CovariantEngine& e, const GeneratorSet& g);

struct LinearGeneratorRow {
  int rep_id = 0;
  unsigned a = 0;  // Gamma exponent
  unsigned b = 0;  // Delta exponent
  VecPoly generator;
  bool matches = false;
};

// Each of rho_1..rho_8 is generated by Gamma^a Delta^b. Throws
// Error(TheoremFailure) on the first mismatch.
std::vector<LinearGeneratorRow> verify_linear_generators(const std::vector<Representation>& reps, const GroupTable& t);

// F(g x) = rho(g) F(x) for every element of t.
bool is_covariant_for_group(const VecPoly& f, const Representation& r, const GroupTable& t);

}  // namespace g9

#endif  // G9_COVARIANTS_HPP
