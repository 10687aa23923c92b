#include <doctest.h>

#include "reference_file.hpp"
#include "errc_check.hpp"
#include "g9/reps.hpp"

using g9::CycNum;
using g9::Mat;
using g9::Rat;

namespace {

struct Fixture {
  g9::GroupTable t = g9::build_g9();
  std::vector<g9::Representation> reps = g9::build_all(t);
};

const Fixture& fx() {
  static const Fixture f;
  return f;
}

const g9::Representation& rho(int i) { return fx().reps.at(static_cast<std::size_t>(i - 1)); }

}  // namespace

TEST_CASE("dimensions") {
  const std::vector<std::size_t> expect = {1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2,
                                           2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4};
  for (int i = 1; i <= 32; ++i) {
    CHECK(rho(i).id == i);
    CHECK(rho(i).dim == expect[static_cast<std::size_t>(i - 1)]);
    CHECK(rho(i).imgT.rows() == rho(i).dim);
  }
}

TEST_CASE("generator images") {
  CHECK(rho(3).imgT == Mat{{1}});
  CHECK(rho(3).imgD == Mat{{CycNum::i()}});
  CHECK(rho(9).imgT == g9::g9_T());
  // psi(eps, eta): T -> eps T, D -> eta D, in the order of the faithful table.
  CHECK(rho(10).imgT == g9::g9_T());
  CHECK(rho(10).imgD == CycNum::i() * g9::g9_D());
  CHECK(rho(11).imgD == CycNum(-1) * g9::g9_D());
  CHECK(rho(13).imgT == CycNum(-1) * g9::g9_T());
  // The extracted plane of rho9 (x) rho29.
  const Rat h = g9::make_rat(1, 2);
  CHECK(rho(19).imgT == Mat{{CycNum(h), CycNum(3 * h)}, {CycNum(h), CycNum(-h)}});
  CHECK(rho(19).imgD == Mat{{1, 0}, {0, -1}});
  CHECK(rho(17).recipe.kind == g9::RecipeKind::Twist);
  CHECK(rho(17).recipe.base_id == 19);
}

TEST_CASE("every representation is a homomorphism") {
  for (int i : {9, 19, 21, 29}) CHECK(g9::verify_homomorphism(rho(i), fx().t) == 36864);
}

TEST_CASE("twisting multiplies characters") {
  const auto& t = fx().t;
  const auto a = g9::character(rho(3), t);
  const auto b = g9::character(rho(21), t);
  const auto c = g9::character(rho(23), t);
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(c[k] == a[k] * b[k]);
}

TEST_CASE("inner product against a direct element sum") {
  // Oracle: sum over all 192 elements instead of over classes.
  const auto& t = fx().t;
  auto direct = [&](int i, int j) {
    CycNum s;
    for (const auto& g : t.elements()) s += g9::evaluate(rho(i), g).trace() * g9::evaluate(rho(j), g).trace().conj();
    return s * CycNum(g9::make_rat(1, 192));
  };
  const auto c9 = g9::character(rho(9), t);
  const auto c15 = g9::character(rho(15), t);
  CHECK(g9::inner_product(c9, c15, t) == 0);
  CHECK(direct(9, 15) == CycNum());
  CHECK(g9::inner_product(c9, c9, t) == 1);
  CHECK(direct(29, 29) == CycNum(1));
}

TEST_CASE("census") {
  const auto rep = g9::verify_census(fx().reps, fx().t);
  CHECK(rep.passed);
  CHECK(rep.sum_of_squares == 192);
  CHECK(rep.pairs_checked == 1024);
  auto bad = fx().reps;
  bad[20] = bad[21];
  CHECK_ERRC(g9::verify_census(bad, fx().t), g9::Errc::CensusFailure);
}

TEST_CASE("character table against the reference file") {
  const auto f = load_reference_file();
  const auto ct = g9::character_table(fx().reps, fx().t);
  REQUIRE(f.chi.size() == 32);
  CHECK(ct.rows[8][24] == -CycNum::zeta(3));
  for (int i = 1; i <= 32; ++i) {
    if (i >= 29 && i <= 31) continue;
    CAPTURE(i);
    CHECK(ct.rows[static_cast<std::size_t>(i - 1)] == f.chi[static_cast<std::size_t>(i - 1)]);
  }
  // Computed rows 29, 30, 31 appear in the reference table as rows 31, 29, 30.
  CHECK(ct.rows[28] == f.chi[30]);
  CHECK(ct.rows[29] == f.chi[28]);
  CHECK(ct.rows[30] == f.chi[29]);
}

TEST_CASE("extraction") {
  const auto& r9 = rho(9);
  const Mat t2 = g9::kron(r9.imgT, r9.imgT);
  const Mat d2 = g9::kron(r9.imgD, r9.imgD);
  const auto sym = g9::extract_subrep(t2, d2, {{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}});
  CHECK(sym.imgD == Mat::diag({1, CycNum::i(), -1}));
  CHECK_ERRC(g9::extract_subrep(t2, d2, {{1, 0, 0, 0}}), g9::Errc::ExtractionFailure);
  CHECK_ERRC(g9::extract_subrep(t2, d2, {{1, 0, 0, 0}, {2, 0, 0, 0}}), g9::Errc::ExtractionFailure);
  CHECK_ERRC(g9::extract_subrep(t2, d2, {{1, 0}}), g9::Errc::ShapeMismatch);
}

TEST_CASE("twists are identified by characters") {
  const auto groups = g9::equivalence_classes({rho(9), g9::twist(rho(1), rho(9), 100), rho(10)}, fx().t);
  CHECK(groups == std::vector<std::vector<int>>{{9, 100}, {10}});
  CHECK_ERRC(g9::twist(rho(9), rho(9), 1), g9::Errc::ShapeMismatch);
}

TEST_CASE("word evaluation") {
  CHECK(g9::evaluate_word(rho(9), "TD") == g9::g9_T() * g9::g9_D());
  CHECK(g9::evaluate_word(rho(9), "") == Mat::identity(2));
  CHECK_ERRC(g9::evaluate_word(rho(9), "TX"), g9::Errc::ParseError);
}
