#include "g9/reps.hpp"

#include <algorithm>

#include "g9/error.hpp"

namespace g9 {

std::string Recipe::describe() const {
  switch (kind) {
    case RecipeKind::Linear:
      return "linear(" + t_value.to_string() + "," + d_value.to_string() + ")";
    case RecipeKind::Natural:
      return "natural";
    case RecipeKind::Twist:
      return "twist(rho" + std::to_string(linear_id) + ",rho" + std::to_string(base_id) + ")";
    case RecipeKind::Extract:
      return "extract(rho" + std::to_string(parent_a) + "(x)rho" + std::to_string(parent_b) + "," +
             std::to_string(span.size()) + " vectors)";
  }
  return "?";
}

SubRep extract_subrep(const Mat& parentT, const Mat& parentD, const std::vector<std::vector<CycNum>>& span) {
  const std::size_t n = parentT.rows();
  const std::size_t k = span.size();
  if (k == 0) throw Error(Errc::ExtractionFailure, "empty span");
  Mat v(n, k);
  for (std::size_t j = 0; j < k; ++j) {
    if (span[j].size() != n) throw Error(Errc::ShapeMismatch, "span vector has wrong length");
    for (std::size_t i = 0; i < n; ++i) v(i, j) = span[j][i];
  }
  auto restrict_to = [&](const Mat& img, const char* name) {
    // Solve v * m = img * v through rref([v | img v]).
    const Mat w = img * v;
    Mat aug(n, 2 * k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        aug(i, j) = v(i, j);
        aug(i, k + j) = w(i, j);
      }
    std::vector<std::size_t> piv;
    const Mat red = rref(aug, &piv);
    for (std::size_t p = 0; p < piv.size(); ++p) {
      if (piv[p] != p) {
        throw Error(Errc::ExtractionFailure,
                    p < k && piv[p] >= k
                        ? std::string("span is not ") + name + "-stable"
                        : std::string("span vectors are dependent"));
      }
    }
    if (piv.size() != k) throw Error(Errc::ExtractionFailure, "span vectors are dependent");
    Mat m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = red(i, k + j);
    return m;
  };
  return {restrict_to(parentT, "T"), restrict_to(parentD, "D")};
}

Mat evaluate_word(const Representation& r, const std::string& word) {
  Mat m = Mat::identity(r.dim);
  for (char ch : word) {
    if (ch == 'T') {
      m = m * r.imgT;
    } else if (ch == 'D') {
      m = m * r.imgD;
    } else {
      throw Error(Errc::ParseError, std::string("unknown generator '") + ch + "'");
    }
  }
  return m;
}

Mat evaluate(const Representation& r, const GroupElement& g) { return evaluate_word(r, g.word); }

std::vector<Mat> all_images(const Representation& r, const GroupTable& t) {
  std::vector<Mat> out;
  out.reserve(t.size());
  for (const auto& g : t.elements()) out.push_back(evaluate(r, g));
  return out;
}

namespace {

Representation linear_rep(int id, CycNum tv, CycNum dv) {
  Representation r;
  r.id = id;
  r.dim = 1;
  r.imgT = Mat{{tv}};
  r.imgD = Mat{{dv}};
  r.recipe.kind = RecipeKind::Linear;
  r.recipe.t_value = std::move(tv);
  r.recipe.d_value = std::move(dv);
  return r;
}

std::vector<CycNum> basis_combo(std::size_t n, std::initializer_list<std::size_t> ones) {
  std::vector<CycNum> v(n);
  for (auto i : ones) v[i] = 1;
  return v;
}

Representation extracted(int id, const Representation& a, const Representation& b,
                         std::vector<std::vector<CycNum>> span) {
  const SubRep s = extract_subrep(kron(a.imgT, b.imgT), kron(a.imgD, b.imgD), span);
  Representation r;
  r.id = id;
  r.dim = span.size();
  r.imgT = s.imgT;
  r.imgD = s.imgD;
  r.recipe.kind = RecipeKind::Extract;
  r.recipe.parent_a = a.id;
  r.recipe.parent_b = b.id;
  r.recipe.span = std::move(span);
  return r;
}

}  // namespace

Representation twist(const Representation& linear, const Representation& base, int id) {
  if (linear.dim != 1) throw Error(Errc::ShapeMismatch, "twist needs a linear representation");
  Representation r;
  r.id = id;
  r.dim = base.dim;
  r.imgT = linear.imgT(0, 0) * base.imgT;
  r.imgD = linear.imgD(0, 0) * base.imgD;
  r.recipe.kind = RecipeKind::Twist;
  r.recipe.linear_id = linear.id;
  r.recipe.base_id = base.id;
  return r;
}

std::vector<Representation> build_all(const GroupTable& t) {
  (void)t;
  std::vector<Representation> reps(32);
  auto at = [&reps](int id) -> Representation& { return reps[id - 1]; };

  const CycNum i = CycNum::i();
  const std::array<std::pair<long, CycNum>, 8> linear = {{
      {1, 1}, {1, -1}, {1, i}, {1, -i}, {-1, 1}, {-1, -1}, {-1, i}, {-1, -i}}};
  for (int k = 1; k <= 8; ++k) at(k) = linear_rep(k, linear[k - 1].first, linear[k - 1].second);

  Representation nat;
  nat.id = 9;
  nat.dim = 2;
  nat.imgT = g9_T();
  nat.imgD = g9_D();
  nat.recipe.kind = RecipeKind::Natural;
  at(9) = nat;

  // (eps, eta) pairs (+1,1),(+1,i),(+1,-1),(+1,-i),(-1,1),(-1,i),(-1,-1),(-1,-i):
  // the linear representation with T -> eps and D -> eta.
  const std::array<int, 8> faithful_twist = {1, 3, 2, 4, 5, 7, 6, 8};
  for (int k = 2; k <= 8; ++k) at(8 + k) = twist(at(faithful_twist[k - 1]), nat, 8 + k);

  at(21) = extracted(21, at(9), at(9),
                     {basis_combo(4, {0}), basis_combo(4, {1, 2}), basis_combo(4, {3})});
  for (int k = 1; k <= 7; ++k) at(21 + k) = twist(at(k + 1), at(21), 21 + k);

  at(29) = extracted(29, at(9), at(21),
                     {basis_combo(6, {0}), basis_combo(6, {1, 3}), basis_combo(6, {2, 4}),
                      basis_combo(6, {5})});
  for (int k = 2; k <= 4; ++k) at(28 + k) = twist(at(k), at(29), 28 + k);

  // The stable plane of rho9 (x) rho29 carries the character of row 19;
  // rows 17, 18, 20 are its twists by rho2, rho3, rho4.
  at(19) = extracted(19, at(9), at(29), {basis_combo(8, {0, 7}), basis_combo(8, {2, 5})});
  at(17) = twist(at(2), at(19), 17);
  at(18) = twist(at(3), at(19), 18);
  at(20) = twist(at(4), at(19), 20);

  return reps;
}

CharRow character(const Representation& r, const GroupTable& t) {
  CharRow row;
  row.reserve(t.class_count());
  for (const auto& c : t.classes()) row.push_back(evaluate(r, t.element(c.rep)).trace());
  return row;
}

Rat inner_product(const CharRow& a, const CharRow& b, const GroupTable& t) {
  if (a.size() != t.class_count() || b.size() != t.class_count())
    throw Error(Errc::ShapeMismatch, "character row length");
  CycNum sum;
  for (std::size_t c = 0; c < a.size(); ++c) {
    CycNum term = a[c] * b[c].conj();
    term *= Rat(static_cast<long>(t.class_info(c).size));
    sum += term;
  }
  sum *= Rat(1) / Rat(static_cast<long>(t.size()));
  if (!sum.is_rational()) throw Error(Errc::InternalError, "non-rational inner product " + sum.to_string());
  return sum[0];
}

CharacterTable character_table(const std::vector<Representation>& reps, const GroupTable& t) {
  CharacterTable ct;
  for (const auto& c : t.classes()) {
    ct.class_labels.push_back(c.label);
    ct.orders.push_back(c.order);
    ct.sizes.push_back(c.size);
  }
  for (const auto& r : reps) ct.rows.push_back(character(r, t));
  return ct;
}

CensusReport verify_census(const std::vector<Representation>& reps, const GroupTable& t) {
  CensusReport rep;
  for (const auto& r : reps) {
    if (r.dim == 0 || r.dim > 4) throw Error(Errc::CensusFailure, "rho" + std::to_string(r.id) + " has dimension " + std::to_string(r.dim));
    ++rep.count_by_dim[r.dim];
    rep.sum_of_squares += r.dim * r.dim;
  }
  const std::array<std::size_t, 5> expected = {0, 8, 12, 8, 4};
  if (rep.count_by_dim != expected) throw Error(Errc::CensusFailure, "dimension multiset differs from {1^8,2^12,3^8,4^4}");
  if (rep.sum_of_squares != t.size()) throw Error(Errc::CensusFailure, "sum of squared dimensions differs from |G|");
  std::vector<CharRow> rows;
  for (const auto& r : reps) rows.push_back(character(r, t));
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < rows.size(); ++b) {
      const Rat ip = inner_product(rows[a], rows[b], t);
      if (ip != (a == b ? 1 : 0)) {
        throw Error(Errc::CensusFailure, "<chi" + std::to_string(reps[a].id) + ",chi" + std::to_string(reps[b].id) +
                                             "> = " + ip.get_str());
      }
      ++rep.pairs_checked;
    }
  rep.passed = true;
  rep.message = "dimensions {1^8,2^12,3^8,4^4}, sum of squares " + std::to_string(rep.sum_of_squares) + ", " +
                std::to_string(rep.pairs_checked) + " orthonormality pairs";
  return rep;
}

std::size_t verify_homomorphism(const Representation& r, const GroupTable& t) {
  const auto img = all_images(r, t);
  std::size_t checked = 0;
  for (std::size_t g = 0; g < t.size(); ++g)
    for (std::size_t h = 0; h < t.size(); ++h) {
      if (img[g] * img[h] != img[t.product(g, h)]) {
        throw Error(Errc::InternalError, "rho" + std::to_string(r.id) + " fails on (" + t.element(g).word + ", " +
                                             t.element(h).word + ")");
      }
      ++checked;
    }
  return checked;
}

std::vector<std::vector<int>> equivalence_classes(const std::vector<Representation>& candidates,
                                                  const GroupTable& t) {
  std::vector<std::vector<int>> groups;
  std::vector<CharRow> seen;
  for (const auto& r : candidates) {
    const CharRow row = character(r, t);
    auto it = std::find(seen.begin(), seen.end(), row);
    if (it == seen.end()) {
      seen.push_back(row);
      groups.push_back({r.id});
    } else {
      groups[static_cast<std::size_t>(it - seen.begin())].push_back(r.id);
    }
  }
  return groups;
}

}  // namespace g9
