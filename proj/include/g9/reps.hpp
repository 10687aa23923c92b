#ifndef G9_REPS_HPP
#define G9_REPS_HPP

// The 32 irreducible representations of G9, specified by the images of
// the generators T and D, together with the character table.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "g9/group.hpp"
#include "g9/linalg.hpp"

namespace g9 {

enum class RecipeKind { Linear, Natural, Twist, Extract };

struct Recipe {
  RecipeKind kind = RecipeKind::Natural;
  // Linear: images T -> t_value, D -> d_value.
  CycNum t_value;
  CycNum d_value;
  // Twist: linear (x) base. Extract: subspace of parent_a (x) parent_b.
  int linear_id = 0;
  int base_id = 0;
  int parent_a = 0;
  int parent_b = 0;
  std::vector<std::vector<CycNum>> span;  // coordinates in the lex tensor basis

  std::string describe() const;
};

struct Representation {
  int id = 0;
  std::size_t dim = 0;
  Mat imgT;
  Mat imgD;
  Recipe recipe;
};

struct SubRep {
  Mat imgT;
  Mat imgD;
};

// Restriction of (parentT, parentD) to span(vectors). Throws
// Error(ExtractionFailure) if the span is not stable or not independent.
SubRep extract_subrep(const Mat& parentT, const Mat& parentD, const std::vector<std::vector<CycNum>>& span);

// Image of a group element: product of generator images along its word.
Mat evaluate(const Representation& r, const GroupElement& g);
Mat evaluate_word(const Representation& r, const std::string& word);
// Images of every element of t, indexed by position.
std::vector<Mat> all_images(const Representation& r, const GroupTable& t);

// Builds rho_1..rho_32 (index 0 holds rho_1).
std::vector<Representation> build_all(const GroupTable& t);

using CharRow = std::vector<CycNum>;

// Traces at the class representatives, in the table's class order.
CharRow character(const Representation& r, const GroupTable& t);

// (1/|G|) sum_C |C| a(C) conj(b(C)). Throws Error(InternalError) if the
// value is not rational.
Rat inner_product(const CharRow& a, const CharRow& b, const GroupTable& t);

struct CharacterTable {
  std::vector<std::string> class_labels;
  std::vector<std::size_t> orders;
  std::vector<std::size_t> sizes;
  std::vector<CharRow> rows;  // rows[i] is chi_{i+1}
};

CharacterTable character_table(const std::vector<Representation>& reps, const GroupTable& t);

struct CensusReport {
  std::array<std::size_t, 5> count_by_dim{};  // index = dimension
  std::size_t sum_of_squares = 0;
  std::size_t pairs_checked = 0;
  bool passed = false;
  std::string message;
};

// Dimension census and full orthonormality. Throws Error(CensusFailure)
// naming the first offending item.
CensusReport verify_census(const std::vector<Representation>& reps, const GroupTable& t);

// rho(g) rho(h) == rho(gh) for every ordered pair; returns the number of
// pairs checked or throws Error(InternalError) at the first failure.
std::size_t verify_homomorphism(const Representation& r, const GroupTable& t);

// Classes of mutually equivalent representations among `candidates`
// (equal characters), each listed by id.
std::vector<std::vector<int>> equivalence_classes(const std::vector<Representation>& candidates,
                                                  const GroupTable& t);

Representation twist(const Representation& linear, const Representation& base, int id);

}  // namespace g9

#endif  // G9_REPS_HPP
