#include <doctest.h>

#include <random>

#include "errc_check.hpp"
#include "g9/group.hpp"
#include "g9/poly.hpp"

using g9::BiPoly;
using g9::CycNum;
using g9::Mat;
using g9::VecPoly;

namespace {

const g9::FundamentalInvariants& inv() { return g9::fundamental_invariants(); }

const BiPoly X = BiPoly::x();
const BiPoly Y = BiPoly::y();

BiPoly random_form(std::mt19937& gen, unsigned d) {
  std::uniform_int_distribution<long> c(-4, 4);
  BiPoly f;
  for (unsigned b = 0; b <= d; ++b) f.add_term(d - b, b, CycNum(c(gen)) + CycNum(c(gen)) * CycNum::zeta(1));
  return f;
}

}  // namespace

TEST_CASE("fundamental invariants") {
  CHECK(inv().gamma == -X.pow(5) * Y + X * Y.pow(5));
  CHECK(inv().theta == X.pow(8) + CycNum(14) * X.pow(4) * Y.pow(4) + Y.pow(8));
  CHECK(inv().delta.degree() == 12);
  CHECK(inv().phi == inv().delta * inv().delta + CycNum(66) * inv().gamma.pow(4));
}

TEST_CASE("theta and phi are fixed by the whole group") {
  const auto t = g9::GroupTable::closure(g9::g9_generators());
  for (const auto& g : t.elements()) {
    CHECK(g9::substitute(inv().theta, g.mat) == inv().theta);
    CHECK(g9::substitute(inv().phi, g.mat) == inv().phi);
  }
}

TEST_CASE("Gamma and Delta transform by linear characters") {
  const Mat T = g9::g9_T();
  const Mat D = g9::g9_D();
  CHECK(g9::substitute(inv().gamma, T) == inv().gamma);
  CHECK(g9::substitute(inv().gamma, D) == CycNum::i() * inv().gamma);
  CHECK(g9::substitute(inv().delta, T) == -inv().delta);
  CHECK(g9::substitute(inv().delta, D) == inv().delta);
}

TEST_CASE("substitution composes") {
  std::mt19937 gen(4);
  const Mat a = g9::g9_T() * g9::g9_D();
  const Mat b = Mat{{1, 2}, {CycNum::i(), -1}};
  for (unsigned d : {0u, 1u, 5u, 9u}) {
    const BiPoly f = random_form(gen, d);
    CHECK(g9::substitute(g9::substitute(f, a), b) == g9::substitute(f, a * b));
  }
  CHECK(g9::substitute(X * Y, Mat{{0, 1}, {1, 0}}) == X * Y);
  CHECK_ERRC(g9::substitute(X, Mat::identity(3)), g9::Errc::ShapeMismatch);
}

TEST_CASE("tau") {
  std::mt19937 gen(8);
  const BiPoly f = random_form(gen, 4);
  const BiPoly g = random_form(gen, 3);
  CHECK(g9::tau(f * g) == g9::tau(f) * g9::tau(g));
  CHECK(g9::tau(g9::tau(f)) == f);
  CHECK(g9::tau(f) == g9::substitute(f, Mat{{0, 1}, {1, 0}}));
  CHECK(g9::tau(inv().gamma) == -inv().gamma);
  CHECK(g9::tau(inv().theta) == inv().theta);
}

TEST_CASE("ring operations") {
  CHECK((X + Y) * (X - Y) == X.pow(2) - Y.pow(2));
  CHECK((X + Y).pow(3).coeff(2, 1) == CycNum(3));
  CHECK(BiPoly(0).is_zero());
  CHECK(BiPoly().degree() == -1);
  CHECK(BiPoly(5).is_constant());
  CHECK((X + Y * Y).is_homogeneous() == false);
  CHECK((X * Y + Y * Y).leading().first == g9::Monomial{1, 1});
  CHECK((X - X).is_zero());
}

TEST_CASE("exact division") {
  const auto& i = inv();
  CHECK(g9::divide_exact(i.theta * i.gamma, i.gamma) == i.theta);
  CHECK(g9::divide_exact(X.pow(2) - Y.pow(2), X + Y) == X - Y);
  CHECK_ERRC(g9::divide_exact(i.theta, i.gamma), g9::Errc::NotDivisible);
  CHECK_ERRC(g9::divide_exact(i.theta, BiPoly()), g9::Errc::DivisionByZero);
  BiPoly co;
  CHECK(g9::multiplicity(CycNum(3) * i.delta.pow(2) * i.gamma.pow(3), i.delta, &co) == 2);
  CHECK(g9::multiplicity(co, i.gamma, &co) == 3);
  CHECK(co == BiPoly(3));
}

TEST_CASE("text form") {
  CHECK(inv().theta.to_string() == "x^8+14*x^4*y^4+y^8");
  CHECK(inv().delta.to_string() == "x^12-33*x^8*y^4-33*x^4*y^8+y^12");
  CHECK(BiPoly().to_string() == "0");
  const BiPoly f = CycNum::sqrt2() * X.pow(2) + CycNum(-3) * X * Y + CycNum::i() * Y;
  CHECK(BiPoly::parse(f.to_string()) == f);
  CHECK(BiPoly::parse("x^5*y - x*y^5") == -inv().gamma);
  CHECK_ERRC(BiPoly::parse(""), g9::Errc::ParseError);
  CHECK_ERRC(BiPoly::parse("x^"), g9::Errc::ParseError);
}

TEST_CASE("vector polynomials") {
  const VecPoly v({X * X, CycNum(2) * X * Y, BiPoly()}, 2);
  const auto c = v.coeffs();
  CHECK(c.size() == 9);
  CHECK(c[0] == CycNum(1));
  CHECK(c[4] == CycNum(2));
  CHECK(VecPoly::from_coeffs(c, 3, 2) == v);
  CHECK((CycNum(3) * X * X == (VecPoly({CycNum(3) * X * X}, 2)[0])));
  const VecPoly w({CycNum(0), CycNum(4) * Y}, 1);
  CHECK(w.leading_coeff() == CycNum(4));
  CHECK(w.normalized()[1] == Y);
  CHECK((v * inv().theta).degree() == 10);
  CHECK(g9::tau(v)[0] == Y * Y);
  CHECK(g9::apply(Mat{{0, 1}, {1, 0}}, VecPoly({X, Y}, 1)) == VecPoly({Y, X}, 1));
  CHECK_ERRC(VecPoly({X, Y * Y}, 1), g9::Errc::ShapeMismatch);
  CHECK_ERRC(VecPoly::from_coeffs({1, 2, 3}, 2, 1), g9::Errc::ShapeMismatch);
}
