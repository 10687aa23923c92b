#include "g9/poly.hpp"

#include <cctype>

#include "g9/error.hpp"

namespace g9 {

BiPoly::BiPoly(const CycNum& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0}, c);
}

BiPoly BiPoly::x() { return monomial(1, 0); }
BiPoly BiPoly::y() { return monomial(0, 1); }

BiPoly BiPoly::monomial(unsigned a, unsigned b, CycNum c) {
  BiPoly p;
  if (!c.is_zero()) p.terms_.emplace(Monomial{a, b}, std::move(c));
  return p;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

CycNum BiPoly::coeff(unsigned a, unsigned b) const {
  auto it = terms_.find(Monomial{a, b});
  return it == terms_.end() ? CycNum() : it->second;
}

void BiPoly::add_term(unsigned a, unsigned b, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Monomial{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int BiPoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

bool BiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

const std::pair<const Monomial, CycNum>& BiPoly::leading() const {
  if (terms_.empty()) throw Error(Errc::InternalError, "leading term of zero polynomial");
  return *terms_.begin();
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& b) {
  for (const auto& [m, c] : b.terms_) add_term(m.x, m.y, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& b) {
  for (const auto& [m, c] : b.terms_) add_term(m.x, m.y, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const CycNum& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v = v * c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      auto [it, inserted] = out.terms_.try_emplace(Monomial{ma.x + mb.x, ma.y + mb.y});
      fma_into(it->second, ca, cb);
    }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly out(1);
  BiPoly base = *this;
  while (e != 0) {
    if (e & 1U) out = out * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return out;
}

namespace {

int nonzero_components(const CycNum& c) {
  int n = 0;
  for (std::size_t k = 0; k < 4; ++k) n += sgn(c[k]) != 0;
  return n;
}

std::string monomial_text(const Monomial& m) {
  std::string s;
  auto var = [&s](char v, unsigned e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  var('x', m.x);
  var('y', m.y);
  return s;
}

}  // namespace

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const std::string mono = monomial_text(m);
    std::string coef;
    bool negative = false;
    if (nonzero_components(c) == 1) {
      std::size_t k = 0;
      while (sgn(c[k]) == 0) ++k;
      negative = sgn(c[k]) < 0;
      coef = (negative ? -c : c).to_string();
    } else {
      coef = "(" + c.to_string() + ")";
    }
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (mono.empty()) {
      out += coef;
    } else if (coef == "1") {
      out += mono;
    } else {
      out += coef + "*" + mono;
    }
  }
  return out;
}

BiPoly BiPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error(Errc::ParseError, "empty polynomial text");
  if (s == "0") return {};

  auto parse_factor = [&s](const std::string& f) -> BiPoly {
    if (f.empty()) throw Error(Errc::ParseError, "empty factor in '" + s + "'");
    if (f.front() == '(') {
      if (f.back() != ')') throw Error(Errc::ParseError, "unbalanced parentheses in '" + s + "'");
      return BiPoly(CycNum::parse(f.substr(1, f.size() - 2)));
    }
    if (f.front() == 'x' || f.front() == 'y') {
      unsigned e = 1;
      if (f.size() > 1) {
        if (f[1] != '^' || f.size() < 3) throw Error(Errc::ParseError, "bad power '" + f + "'");
        e = static_cast<unsigned>(std::stoul(f.substr(2)));
      }
      return f.front() == 'x' ? monomial(e, 0) : monomial(0, e);
    }
    return BiPoly(CycNum::parse(f));
  };

  BiPoly out;
  std::size_t p = 0;
  while (p < s.size()) {
    bool negative = false;
    if (s[p] == '+' || s[p] == '-') {
      negative = s[p] == '-';
      ++p;
    }
    // one term: factors joined by '*' at depth 0, up to the next +/- at depth 0
    BiPoly term(1);
    std::string factor;
    int depth = 0;
    for (; p < s.size(); ++p) {
      const char ch = s[p];
      if (depth == 0 && (ch == '+' || ch == '-')) break;
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (depth == 0 && ch == '*') {
        term = term * parse_factor(factor);
        factor.clear();
      } else {
        factor += ch;
      }
    }
    term = term * parse_factor(factor);
    out += negative ? -term : term;
  }
  return out;
}

std::vector<std::vector<CycNum>> linear_form_powers(const CycNum& alpha, const CycNum& beta, unsigned kmax) {
  std::vector<std::vector<CycNum>> pw(kmax + 1);
  pw[0] = {CycNum(1)};
  for (unsigned k = 1; k <= kmax; ++k) {
    pw[k].assign(k + 1, CycNum());
    for (unsigned j = 0; j < k; ++j) {
      if (pw[k - 1][j].is_zero()) continue;
      fma_into(pw[k][j], pw[k - 1][j], alpha);
      fma_into(pw[k][j + 1], pw[k - 1][j], beta);
    }
  }
  return pw;
}

BiPoly substitute(const BiPoly& f, const Mat& g) {
  if (g.rows() != 2 || g.cols() != 2) throw Error(Errc::ShapeMismatch, "substitution needs a 2x2 matrix");
  if (f.is_zero()) return f;
  unsigned max_x = 0;
  unsigned max_y = 0;
  for (const auto& [m, c] : f.terms()) {
    max_x = std::max(max_x, m.x);
    max_y = std::max(max_y, m.y);
  }
  const auto px = linear_form_powers(g(0, 0), g(0, 1), max_x);
  const auto py = linear_form_powers(g(1, 0), g(1, 1), max_y);
  BiPoly out;
  for (const auto& [m, c] : f.terms()) {
    const auto& u = px[m.x];
    const auto& v = py[m.y];
    std::vector<CycNum> prod(m.x + m.y + 1);
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i].is_zero()) continue;
      const CycNum cu = c * u[i];
      for (std::size_t j = 0; j < v.size(); ++j) fma_into(prod[i + j], cu, v[j]);
    }
    const unsigned d = m.x + m.y;
    for (unsigned j = 0; j <= d; ++j) out.add_term(d - j, j, prod[j]);
  }
  return out;
}

BiPoly tau(const BiPoly& f) {
  BiPoly out;
  for (const auto& [m, c] : f.terms()) out.add_term(m.y, m.x, c);
  return out;
}

BiPoly divide_exact(const BiPoly& f, const BiPoly& g) {
  if (g.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");
  const auto& [gm, gc] = g.leading();
  const CycNum gc_inv = gc.inverse();
  BiPoly rem = f;
  BiPoly q;
  while (!rem.is_zero()) {
    const auto [rm, rc] = rem.leading();
    if (rm.x < gm.x || rm.y < gm.y) throw Error(Errc::NotDivisible, g.to_string() + " does not divide " + f.to_string());
    const BiPoly t = BiPoly::monomial(rm.x - gm.x, rm.y - gm.y, rc * gc_inv);
    q += t;
    rem -= t * g;
  }
  return q;
}

unsigned multiplicity(const BiPoly& f, const BiPoly& g, BiPoly* cofactor) {
  if (f.is_zero() || g.is_constant()) throw Error(Errc::InternalError, "multiplicity needs nonzero f and non-constant g");
  unsigned e = 0;
  BiPoly cur = f;
  for (;;) {
    try {
      cur = divide_exact(cur, g);
      ++e;
    } catch (const Error& err) {
      if (err.code() != Errc::NotDivisible) throw;
      break;
    }
  }
  if (cofactor) *cofactor = cur;
  return e;
}

const FundamentalInvariants& fundamental_invariants() {
  static const FundamentalInvariants inv = [] {
    using P = BiPoly;
    FundamentalInvariants r;
    r.gamma = P::monomial(5, 1, -1) + P::monomial(1, 5);
    r.theta = P::monomial(8, 0) + P::monomial(4, 4, 14) + P::monomial(0, 8);
    r.delta = P::monomial(12, 0) + P::monomial(8, 4, -33) + P::monomial(4, 8, -33) + P::monomial(0, 12);
    r.phi = P::monomial(24, 0) + P::monomial(16, 8, 759) + P::monomial(12, 12, 2576) + P::monomial(8, 16, 759) +
            P::monomial(0, 24);
    return r;
  }();
  return inv;
}

VecPoly::VecPoly(std::vector<BiPoly> comps, unsigned degree) : comps_(std::move(comps)), degree_(degree) {
  for (const auto& c : comps_) {
    if (!c.is_zero() && (!c.is_homogeneous() || c.degree() != static_cast<int>(degree)))
      throw Error(Errc::ShapeMismatch, "component is not homogeneous of degree " + std::to_string(degree));
  }
}

VecPoly VecPoly::from_coeffs(const std::vector<CycNum>& coeffs, std::size_t m, unsigned degree) {
  const std::size_t stride = degree + 1;
  if (coeffs.size() != m * stride) throw Error(Errc::ShapeMismatch, "coefficient vector length");
  std::vector<BiPoly> comps(m);
  for (std::size_t i = 0; i < m; ++i)
    for (unsigned b = 0; b <= degree; ++b) comps[i].add_term(degree - b, b, coeffs[i * stride + b]);
  return VecPoly(std::move(comps), degree);
}

std::vector<CycNum> VecPoly::coeffs() const {
  const std::size_t stride = degree_ + 1;
  std::vector<CycNum> out(comps_.size() * stride);
  for (std::size_t i = 0; i < comps_.size(); ++i)
    for (const auto& [m, c] : comps_[i].terms()) out[i * stride + m.y] = c;
  return out;
}

bool VecPoly::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

CycNum VecPoly::leading_coeff() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return c.leading().second;
  return {};
}

VecPoly VecPoly::normalized() const {
  const CycNum lc = leading_coeff();
  if (lc.is_zero()) return *this;
  const CycNum inv = lc.inverse();
  VecPoly out = *this;
  for (auto& c : out.comps_) c *= inv;
  return out;
}

VecPoly VecPoly::operator*(const BiPoly& f) const {
  if (!f.is_homogeneous()) throw Error(Errc::ShapeMismatch, "scaling by a non-homogeneous polynomial");
  std::vector<BiPoly> comps;
  comps.reserve(comps_.size());
  for (const auto& c : comps_) comps.push_back(c * f);
  return VecPoly(std::move(comps), degree_ + static_cast<unsigned>(std::max(f.degree(), 0)));
}

VecPoly operator+(const VecPoly& a, const VecPoly& b) {
  if (a.size() != b.size() || a.degree() != b.degree()) throw Error(Errc::ShapeMismatch, "VecPoly sum");
  std::vector<BiPoly> comps;
  for (std::size_t i = 0; i < a.size(); ++i) comps.push_back(a[i] + b[i]);
  return VecPoly(std::move(comps), a.degree());
}

std::string VecPoly::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) s += ", ";
    s += comps_[i].to_string();
  }
  return s + ")";
}

VecPoly substitute(const VecPoly& f, const Mat& g) {
  std::vector<BiPoly> comps;
  for (const auto& c : f.components()) comps.push_back(substitute(c, g));
  return VecPoly(std::move(comps), f.degree());
}

VecPoly tau(const VecPoly& f) {
  std::vector<BiPoly> comps;
  for (const auto& c : f.components()) comps.push_back(tau(c));
  return VecPoly(std::move(comps), f.degree());
}

VecPoly apply(const Mat& rho, const VecPoly& f) {
  if (rho.cols() != f.size()) throw Error(Errc::ShapeMismatch, "representation size vs VecPoly length");
  std::vector<BiPoly> comps(rho.rows());
  for (std::size_t i = 0; i < rho.rows(); ++i)
    for (std::size_t j = 0; j < rho.cols(); ++j)
      if (!rho(i, j).is_zero()) comps[i] += rho(i, j) * f[j];
  return VecPoly(std::move(comps), f.degree());
}

}  // namespace g9
