#include "g9/cyclo.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <numbers>

#include "g9/error.hpp"

namespace g9 {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::Singular: return "Singular";
    case Errc::NotFinitelyClosed: return "NotFinitelyClosed";
    case Errc::ReferenceMismatch: return "ReferenceMismatch";
    case Errc::ExtractionFailure: return "ExtractionFailure";
    case Errc::InternalError: return "InternalError";
    case Errc::CensusFailure: return "CensusFailure";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::MolienInconsistency: return "MolienInconsistency";
    case Errc::CutoffTooSmall: return "CutoffTooSmall";
    case Errc::CrossCheckFailure: return "CrossCheckFailure";
    case Errc::FreenessSuspect: return "FreenessSuspect";
    case Errc::FreenessFailure: return "FreenessFailure";
    case Errc::FactorizationFailure: return "FactorizationFailure";
    case Errc::TheoremFailure: return "TheoremFailure";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rat make_rat(long num, long den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(std::string_view s) {
  Rat r;
  if (s.empty() || r.set_str(std::string(s), 10) != 0) {
    throw Error(Errc::ParseError, "bad rational '" + std::string(s) + "'");
  }
  if (r.get_den() == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  r.canonicalize();
  return r;
}

CycNum CycNum::zeta(int k) {
  k = ((k % 8) + 8) % 8;
  CycNum out;
  out.c_[k % 4] = (k < 4) ? 1 : -1;
  return out;
}

CycNum CycNum::sqrt2() { return CycNum(0, 1, 0, -1); }

bool CycNum::is_zero() const {
  return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 &&
         sgn(c_[3]) == 0;
}

bool CycNum::is_rational() const {
  return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool CycNum::is_one() const { return is_rational() && c_[0] == 1; }

CycNum CycNum::operator-() const {
  return CycNum(-c_[0], -c_[1], -c_[2], -c_[3]);
}

CycNum& CycNum::operator+=(const CycNum& b) {
  for (int k = 0; k < 4; ++k) {
    if (sgn(b.c_[k]) != 0) c_[k] += b.c_[k];
  }
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& b) {
  for (int k = 0; k < 4; ++k) {
    if (sgn(b.c_[k]) != 0) c_[k] -= b.c_[k];
  }
  return *this;
}

void fma_into(CycNum& acc, const CycNum& a, const CycNum& b) {
  // Direct GMP calls: this is the inner loop of every elimination.
  static thread_local mpq_class tmp;
  auto& out = acc.c_;
  for (int i = 0; i < 4; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (sgn(b[j]) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      const int k = i + j;
      if (k < 4) {
        mpq_add(out[k].get_mpq_t(), out[k].get_mpq_t(), tmp.get_mpq_t());
      } else {
        mpq_sub(out[k - 4].get_mpq_t(), out[k - 4].get_mpq_t(),
                tmp.get_mpq_t());
      }
    }
  }
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  CycNum out;
  fma_into(out, a, b);
  return out;
}

CycNum& CycNum::operator*=(const CycNum& b) {
  *this = *this * b;
  return *this;
}

CycNum& CycNum::operator*=(const Rat& r) {
  for (auto& c : c_) {
    if (sgn(c) != 0) c *= r;
  }
  return *this;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (is_rational()) return CycNum(Rat(1) / c_[0]);
  // Columns of m are the coordinates of a * z^j; solve m x = e0.
  std::array<std::array<Rat, 5>, 4> m;
  for (int j = 0; j < 4; ++j) {
    const CycNum col = *this * zeta(j);
    for (int k = 0; k < 4; ++k) m[k][j] = col.c_[k];
  }
  for (int k = 0; k < 4; ++k) m[k][4] = (k == 0) ? 1 : 0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    while (piv < 4 && sgn(m[piv][col]) == 0) ++piv;
    if (piv == 4) throw Error(Errc::InternalError, "singular multiplication matrix");
    std::swap(m[piv], m[col]);
    const Rat inv = Rat(1) / m[col][col];
    for (int c = col; c < 5; ++c) m[col][c] *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const Rat f = m[r][col];
      for (int c = col; c < 5; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return CycNum(m[0][4], m[1][4], m[2][4], m[3][4]);
}

CycNum CycNum::conj() const {
  // z -> -z^3, z^2 -> -z^2, z^3 -> -z
  return CycNum(c_[0], -c_[3], -c_[2], -c_[1]);
}

std::complex<double> CycNum::approx() const {
  std::complex<double> out{0.0, 0.0};
  for (int k = 0; k < 4; ++k) {
    out += c_[k].get_d() * std::polar(1.0, k * std::numbers::pi / 4.0);
  }
  return out;
}

CycNum CycNum::pow(unsigned e) const {
  CycNum base = *this;
  CycNum out(1);
  while (e != 0) {
    if (e & 1U) out = out * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return out;
}

std::string CycNum::to_string() const {
  std::string out;
  for (int k = 3; k >= 0; --k) {
    const Rat& c = c_[k];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    const Rat mag = abs(c);
    if (neg) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const std::string mag_str = mag.get_str();
    if (k == 0) {
      out += mag_str;
      continue;
    }
    if (mag != 1) out += mag_str + "*";
    out += 'z';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

CycNum CycNum::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw Error(Errc::ParseError, "empty CycNum text");
  CycNum out;
  std::size_t p = 0;
  auto fail = [&](const char* why) {
    throw Error(Errc::ParseError, std::string(why) + " in '" + s + "'");
  };
  while (p < s.size()) {
    int sign = 1;
    if (s[p] == '+' || s[p] == '-') {
      sign = (s[p] == '-') ? -1 : 1;
      ++p;
    } else if (p != 0) {
      fail("expected sign");
    }
    Rat coef(1);
    const std::size_t num_start = p;
    while (p < s.size() && (std::isdigit(static_cast<unsigned char>(s[p])) || s[p] == '/')) ++p;
    const bool has_num = p > num_start;
    if (has_num) coef = rat_from_string(std::string_view(s).substr(num_start, p - num_start));
    if (p < s.size() && s[p] == '*') {
      if (!has_num) fail("dangling '*'");
      ++p;
    }
    int power = 0;
    if (p < s.size() && s[p] == 'z') {
      ++p;
      power = 1;
      if (p < s.size() && s[p] == '^') {
        ++p;
        const std::size_t e0 = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == e0) fail("missing exponent");
        power = std::stoi(s.substr(e0, p - e0));
      }
    } else if (p < s.size() && s[p] == 'i') {
      ++p;
      power = 2;
    } else if (!has_num) {
      fail("expected term");
    }
    CycNum term = zeta(power);
    term *= coef;
    if (sign < 0) term = -term;
    out += term;
  }
  return out;
}

std::size_t CycNum::hash() const {
  std::size_t h = 0;
  for (const auto& c : c_) {
    const std::size_t hn = std::hash<long>{}(mpz_get_si(c.get_num_mpz_t()));
    const std::size_t hd = std::hash<long>{}(mpz_get_si(c.get_den_mpz_t()));
    h ^= hn + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= hd + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace g9
