#include "g9/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "g9/error.hpp"

namespace g9 {

MatKey mat_key(const Mat& m) {
  MatKey k;
  k.reserve(m.entries().size() * 4);
  for (const auto& x : m.entries())
    for (std::size_t c = 0; c < 4; ++c) k.push_back(x[c]);
  return k;
}

std::size_t MatKeyHash::operator()(const MatKey& k) const {
  std::size_t h = k.size();
  for (const auto& r : k) {
    const std::size_t v = std::hash<long>{}(mpz_get_si(r.get_num_mpz_t())) * 31 +
                          std::hash<long>{}(mpz_get_si(r.get_den_mpz_t()));
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Mat evaluate_word(const std::string& word, const std::vector<Generator>& gens) {
  if (gens.empty()) throw Error(Errc::ShapeMismatch, "no generators");
  Mat m = Mat::identity(gens.front().mat.rows());
  for (char ch : word) {
    auto it = std::find_if(gens.begin(), gens.end(), [ch](const Generator& g) { return g.name == ch; });
    if (it == gens.end()) throw Error(Errc::ParseError, std::string("unknown generator '") + ch + "'");
    m = m * it->mat;
  }
  return m;
}

std::size_t element_order(const Mat& m) {
  const Mat id = Mat::identity(m.rows());
  Mat p = m;
  for (std::size_t k = 1; k <= GroupTable::kMaxElements; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  throw Error(Errc::NotFinitelyClosed, "element order exceeds bound");
}

GroupTable GroupTable::closure(const std::vector<Generator>& gens) {
  if (gens.empty()) throw Error(Errc::ShapeMismatch, "closure needs at least one generator");
  const std::size_t n = gens.front().mat.rows();
  for (const auto& g : gens) {
    if (!g.mat.square() || g.mat.rows() != n)
      throw Error(Errc::ShapeMismatch, "generators must be square of equal size");
    if (det(g.mat).is_zero()) throw Error(Errc::Singular, "generator is singular");
  }
  GroupTable t;
  t.gens_ = gens;
  auto add = [&t](Mat m, std::string w) {
    auto key = mat_key(m);
    if (t.index_.contains(key)) return false;
    t.index_.emplace(std::move(key), t.elements_.size());
    t.elements_.push_back({std::move(m), std::move(w)});
    if (t.elements_.size() > kMaxElements)
      throw Error(Errc::NotFinitelyClosed, "closure exceeds " + std::to_string(kMaxElements) + " elements");
    return true;
  };
  add(Mat::identity(n), "");
  for (std::size_t head = 0; head < t.elements_.size(); ++head) {
    for (const auto& g : gens) {
      // copy: push_back may reallocate
      const GroupElement cur = t.elements_[head];
      add(cur.mat * g.mat, cur.word + g.name);
    }
  }

  const std::size_t sz = t.elements_.size();
  t.mul_.assign(sz * sz, npos);
  for (std::size_t a = 0; a < sz; ++a)
    for (std::size_t b = 0; b < sz; ++b) {
      const std::size_t p = t.find(t.elements_[a].mat * t.elements_[b].mat);
      if (p == npos) throw Error(Errc::InternalError, "closure is not closed under products");
      t.mul_[a * sz + b] = p;
    }
  t.inv_.assign(sz, npos);
  for (std::size_t a = 0; a < sz; ++a)
    for (std::size_t b = 0; b < sz; ++b)
      if (t.mul_[a * sz + b] == 0) {
        t.inv_[a] = b;
        break;
      }
  t.orders_.assign(sz, 0);
  for (std::size_t a = 0; a < sz; ++a) {
    std::size_t k = 1;
    for (std::size_t p = a; p != 0; p = t.product(p, a)) ++k;
    t.orders_[a] = k;
  }
  return t;
}

std::size_t GroupTable::find(const Mat& m) const {
  auto it = index_.find(mat_key(m));
  return it == index_.end() ? npos : it->second;
}

void GroupTable::compute_classes() {
  const std::size_t sz = size();
  class_of_.assign(sz, npos);
  classes_.clear();
  for (std::size_t g = 0; g < sz; ++g) {
    if (class_of_[g] != npos) continue;
    ClassInfo info;
    for (std::size_t h = 0; h < sz; ++h) {
      const std::size_t c = product(product(h, g), inverse_of(h));
      if (class_of_[c] == npos) {
        class_of_[c] = classes_.size();
        info.members.push_back(c);
      }
    }
    std::sort(info.members.begin(), info.members.end());
    info.rep = info.members.front();
    info.size = info.members.size();
    info.order = orders_[info.rep];
    classes_.push_back(std::move(info));
  }
  family_ordered_ = false;
}

Mat g9_T() {
  const CycNum s = CycNum::sqrt2().inverse();
  return Mat{{s, s}, {s, -s}};
}

Mat g9_D() { return Mat{{1, 0}, {0, CycNum::i()}}; }

std::vector<Generator> g9_generators() { return {{'T', g9_T()}, {'D', g9_D()}}; }

std::vector<FamilyRep> family_class_representatives() {
  const Mat T = g9_T();
  const Mat D = g9_D();
  const Mat I = Mat::identity(2);
  struct Family {
    const char* name;
    Mat base;
    int count;
  };
  const std::vector<Family> families = {
      {"I", I, 8}, {"D^2", D * D, 4}, {"D", D, 8}, {"T", T, 4}, {"TD", T * D, 8}};
  std::vector<FamilyRep> reps;
  for (const auto& f : families) {
    for (int k = 0; k < f.count; ++k) {
      std::string label = (k == 0) ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
      label += f.name;
      reps.push_back({label, CycNum::zeta(k) * f.base});
    }
  }
  return reps;
}

void GroupTable::match_family_classes() {
  if (!has_classes()) compute_classes();
  const auto reps = family_class_representatives();
  if (reps.size() != classes_.size()) {
    throw Error(Errc::ReferenceMismatch, "group has " + std::to_string(classes_.size()) +
                                         " classes, families give " + std::to_string(reps.size()));
  }
  std::vector<ClassInfo> ordered;
  std::vector<std::size_t> remap(classes_.size(), npos);
  for (const auto& r : reps) {
    const std::size_t pos = find(r.mat);
    if (pos == npos) throw Error(Errc::ReferenceMismatch, "representative " + r.label + " not in group");
    const std::size_t c = class_of_[pos];
    if (remap[c] != npos) {
      throw Error(Errc::ReferenceMismatch, "representative " + r.label + " is conjugate to " +
                                           ordered[remap[c]].label);
    }
    remap[c] = ordered.size();
    ClassInfo info = classes_[c];
    info.rep = pos;
    info.label = r.label;
    ordered.push_back(std::move(info));
  }
  for (auto& c : class_of_) c = remap[c];
  classes_ = std::move(ordered);
  family_ordered_ = true;
}

GroupTable build_g9() {
  GroupTable t = GroupTable::closure(g9_generators());
  t.compute_classes();
  t.match_family_classes();
  return t;
}

}  // namespace g9
