#ifndef G9_POLY_HPP
#define G9_POLY_HPP

// Sparse bivariate polynomials over Q(z) in variables x, y.

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "g9/cyclo.hpp"
#include "g9/linalg.hpp"

namespace g9 {

struct Monomial {
  unsigned x = 0;
  unsigned y = 0;
  unsigned degree() const { return x + y; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic with x > y, largest first.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.x > b.x;
  }
};

class BiPoly {
 public:
  using Terms = std::map<Monomial, CycNum, GrlexDescending>;

  BiPoly() = default;
  BiPoly(const CycNum& c);  // NOLINT: constants convert implicitly
  BiPoly(long c) : BiPoly(CycNum(c)) {}  // NOLINT

  static BiPoly x();
  static BiPoly y();
  static BiPoly monomial(unsigned a, unsigned b, CycNum c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  CycNum coeff(unsigned a, unsigned b) const;
  void add_term(unsigned a, unsigned b, const CycNum& c);

  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  // Leading term in grlex order; requires a nonzero polynomial.
  const std::pair<const Monomial, CycNum>& leading() const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& b);
  BiPoly& operator-=(const BiPoly& b);
  BiPoly& operator*=(const CycNum& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const CycNum& c, BiPoly a) { return a *= c; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  BiPoly pow(unsigned e) const;

  // "x^8+14*x^4*y^4+y^8"; compound coefficients are parenthesized.
  std::string to_string() const;
  static BiPoly parse(std::string_view text);

 private:
  Terms terms_;
};

// Dense coefficients of (alpha x + beta y)^k for k = 0..kmax, indexed by
// the y exponent.
std::vector<std::vector<CycNum>> linear_form_powers(const CycNum& alpha, const CycNum& beta, unsigned kmax);

// f(g11 x + g12 y, g21 x + g22 y): the action f -> f(g x).
BiPoly substitute(const BiPoly& f, const Mat& g);
// (x, y) -> (y, x)
BiPoly tau(const BiPoly& f);
// q with f = q g; throws Error(NotDivisible) or Error(DivisionByZero).
BiPoly divide_exact(const BiPoly& f, const BiPoly& g);
// Largest e with g^e | f (f nonzero, g non-constant).
unsigned multiplicity(const BiPoly& f, const BiPoly& g, BiPoly* cofactor = nullptr);

struct FundamentalInvariants {
  BiPoly gamma;  // degree 6
  BiPoly theta;  // degree 8
  BiPoly delta;  // degree 12
  BiPoly phi;    // degree 24
};
const FundamentalInvariants& fundamental_invariants();

// An m-tuple of homogeneous polynomials of a common degree.
class VecPoly {
 public:
  VecPoly() = default;
  VecPoly(std::vector<BiPoly> comps, unsigned degree);

  // Coordinates component-major; within a component the monomials are
  // x^d, x^(d-1) y, ..., y^d (grlex descending).
  static VecPoly from_coeffs(const std::vector<CycNum>& coeffs, std::size_t m, unsigned degree);
  std::vector<CycNum> coeffs() const;

  std::size_t size() const { return comps_.size(); }
  unsigned degree() const { return degree_; }
  const BiPoly& operator[](std::size_t i) const { return comps_[i]; }
  const std::vector<BiPoly>& components() const { return comps_; }
  bool is_zero() const;

  // First nonzero coordinate in coeffs() order; zero for the zero vector.
  CycNum leading_coeff() const;
  VecPoly normalized() const;

  VecPoly operator*(const BiPoly& f) const;  // f homogeneous
  friend VecPoly operator+(const VecPoly& a, const VecPoly& b);
  friend bool operator==(const VecPoly& a, const VecPoly& b) = default;

  std::string to_string() const;

 private:
  std::vector<BiPoly> comps_;
  unsigned degree_ = 0;
};

VecPoly substitute(const VecPoly& f, const Mat& g);
VecPoly tau(const VecPoly& f);
// Matrix-vector product rho * F.
VecPoly apply(const Mat& rho, const VecPoly& f);

}  // namespace g9

#endif  // G9_POLY_HPP
