#ifndef G9_CYCLO_HPP
#define G9_CYCLO_HPP

// Exact arithmetic in the cyclotomic field Q(z), z = exp(i*pi/4).
//
// Elements are stored as c0 + c1 z + c2 z^2 + c3 z^3 reduced modulo
// z^4 + 1, with each coefficient an eagerly-canonicalized GMP rational.
// In this basis z^2 = i and z - z^3 = sqrt(2).

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace g9 {

using Rat = mpq_class;

Rat make_rat(long num, long den = 1);
std::string rat_to_string(const Rat& r);  // "n/d" with explicit "/1"
Rat rat_from_string(std::string_view s);

class CycNum {
 public:
  CycNum() = default;
  CycNum(long n) : c_{Rat(n), Rat(0), Rat(0), Rat(0)} {}  // NOLINT: implicit by intent
  CycNum(const Rat& r) : c_{r, Rat(0), Rat(0), Rat(0)} {}  // NOLINT
  CycNum(Rat c0, Rat c1, Rat c2, Rat c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  // z^k for any integer k (reduced mod 8).
  static CycNum zeta(int k);
  static CycNum sqrt2();
  static CycNum i() { return zeta(2); }

  const Rat& operator[](std::size_t k) const { return c_[k]; }
  const std::array<Rat, 4>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_one() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& b);
  CycNum& operator-=(const CycNum& b);
  CycNum& operator*=(const CycNum& b);
  CycNum& operator*=(const Rat& r);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b) {
    return a * b.inverse();
  }
  friend bool operator==(const CycNum& a, const CycNum& b) {
    return a.c_ == b.c_;
  }

  // Throws Error(DivisionByZero) for zero.
  CycNum inverse() const;
  // Complex conjugation, the automorphism z -> z^7 = -z^3.
  CycNum conj() const;
  // Floating-point evaluation; display only.
  std::complex<double> approx() const;
  CycNum pow(unsigned e) const;

  // Integer combination of z powers, highest first: "-z^3+z", "2*z^2+1".
  std::string to_string() const;
  // Inverse of to_string; also accepts "i" for z^2 and whitespace.
  static CycNum parse(std::string_view text);

  std::size_t hash() const;

  friend void fma_into(CycNum& acc, const CycNum& a, const CycNum& b);

 private:
  std::array<Rat, 4> c_{};
};

// In-place accumulate acc += a * b without a temporary CycNum.
void fma_into(CycNum& acc, const CycNum& a, const CycNum& b);

struct CycNumHash {
  std::size_t operator()(const CycNum& a) const { return a.hash(); }
};

}  // namespace g9

#endif  // G9_CYCLO_HPP
