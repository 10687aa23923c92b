#ifndef G9_GROUP_HPP
#define G9_GROUP_HPP

// Finite matrix groups by brute-force closure, with conjugacy classes
// arranged in the five scalar families z^k I, z^k D^2, z^k D, z^k T, z^k TD.

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "g9/linalg.hpp"

namespace g9 {

struct Generator {
  char name;
  Mat mat;
};

struct GroupElement {
  Mat mat;
  std::string word;  // left-to-right product of generators equals mat
};

// Exact hashable key: the reduced rational components of every entry.
using MatKey = std::vector<Rat>;
MatKey mat_key(const Mat& m);

struct MatKeyHash {
  std::size_t operator()(const MatKey& k) const;
};

struct ClassInfo {
  std::size_t rep;    // element position
  std::string label;  // "I", "z^3TD", ...
  std::size_t size;
  std::size_t order;
  std::vector<std::size_t> members;
};

class GroupTable {
 public:
  static constexpr std::size_t kMaxElements = 10000;

  // Breadth-first closure; elements are stored in BFS discovery order and
  // carry shortest words. Throws Error(NotFinitelyClosed) past kMaxElements.
  static GroupTable closure(const std::vector<Generator>& gens);

  std::size_t size() const { return elements_.size(); }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<Generator>& generators() const { return gens_; }

  // Position of a matrix, or npos when it is not in the group.
  std::size_t find(const Mat& m) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t product(std::size_t a, std::size_t b) const {
    return mul_[a * size() + b];
  }
  std::size_t inverse_of(std::size_t a) const { return inv_[a]; }
  std::size_t identity() const { return 0; }
  std::size_t order(std::size_t a) const { return orders_[a]; }

  // Brute-force orbits under conjugation, in order of first member.
  void compute_classes();
  bool has_classes() const { return !class_of_.empty(); }
  std::size_t class_count() const { return classes_.size(); }
  const ClassInfo& class_info(std::size_t c) const { return classes_[c]; }
  const std::vector<ClassInfo>& classes() const { return classes_; }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }

  // Reorders classes into the scalar-family column order. Requires
  // generators named 'T' and 'D'. Throws Error(ReferenceMismatch) if a
  // representative is missing or two representatives are conjugate.
  void match_family_classes();
  bool family_ordered() const { return family_ordered_; }

 private:
  std::vector<Generator> gens_;
  std::vector<GroupElement> elements_;
  std::unordered_map<MatKey, std::size_t, MatKeyHash> index_;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> inv_;
  std::vector<std::size_t> orders_;
  std::vector<ClassInfo> classes_;
  std::vector<std::size_t> class_of_;
  bool family_ordered_ = false;
};

// Least k >= 1 with m^k = I (bounded by kMaxElements).
std::size_t element_order(const Mat& m);
Mat evaluate_word(const std::string& word, const std::vector<Generator>& gens);

Mat g9_T();
Mat g9_D();
std::vector<Generator> g9_generators();

// Builds, classifies and family-orders the group generated by T and D.
GroupTable build_g9();

// Family representatives in column order, with their labels.
struct FamilyRep {
  std::string label;
  Mat mat;
};
std::vector<FamilyRep> family_class_representatives();

}  // namespace g9

#endif  // G9_GROUP_HPP
