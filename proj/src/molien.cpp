#include "g9/molien.hpp"

#include "g9/error.hpp"

namespace g9 {

namespace {

// Series of 1 / (1 - tr t + det t^2) by the two-term recurrence.
std::vector<CycNum> inverse_char_poly(const Mat& g, std::size_t cutoff) {
  const CycNum tr = g.trace();
  const CycNum dt = det(g);
  std::vector<CycNum> a(cutoff + 1);
  a[0] = 1;
  if (cutoff >= 1) a[1] = tr;
  for (std::size_t n = 2; n <= cutoff; ++n) a[n] = tr * a[n - 1] - dt * a[n - 2];
  return a;
}

PowerSeries finish(std::vector<CycNum> acc, std::size_t group_order, const Representation& r) {
  PowerSeries s;
  s.coeffs.reserve(acc.size());
  const Rat scale = Rat(1) / Rat(static_cast<long>(group_order));
  for (std::size_t k = 0; k < acc.size(); ++k) {
    acc[k] *= scale;
    if (!acc[k].is_rational() || acc[k][0].get_den() != 1 || sgn(acc[k][0]) < 0) {
      throw Error(Errc::MolienInconsistency, "rho" + std::to_string(r.id) + ": coefficient of t^" +
                                                 std::to_string(k) + " is " + acc[k].to_string());
    }
    s.coeffs.push_back(acc[k][0]);
  }
  return s;
}

}  // namespace

MolienResult molien_series(const Representation& r, const GroupTable& t, std::size_t cutoff) {
  if (!t.has_classes()) throw Error(Errc::InternalError, "conjugacy classes not computed");
  std::vector<CycNum> acc(cutoff + 1);
  for (const auto& c : t.classes()) {
    const Mat& g = t.element(c.rep).mat;
    CycNum weight = evaluate(r, t.element(t.inverse_of(c.rep))).trace();
    if (weight.is_zero()) continue;
    weight *= Rat(static_cast<long>(c.size));
    const auto inv = inverse_char_poly(g, cutoff);
    for (std::size_t k = 0; k <= cutoff; ++k) fma_into(acc[k], weight, inv[k]);
  }
  MolienResult res;
  res.series = finish(std::move(acc), t.size(), r);
  if (cutoff >= 60) res.numerator = numerator_of(res.series);
  return res;
}

PowerSeries molien_series_elementwise(const Representation& r, const GroupTable& t, std::size_t cutoff) {
  std::vector<CycNum> acc(cutoff + 1);
  for (std::size_t e = 0; e < t.size(); ++e) {
    const CycNum weight = evaluate(r, t.element(t.inverse_of(e))).trace();
    if (weight.is_zero()) continue;
    const auto inv = inverse_char_poly(t.element(e).mat, cutoff);
    for (std::size_t k = 0; k <= cutoff; ++k) fma_into(acc[k], weight, inv[k]);
  }
  return finish(std::move(acc), t.size(), r);
}

IntPoly numerator_of(const PowerSeries& series) {
  const std::size_t n = series.cutoff();
  if (n < 60) throw Error(Errc::CutoffTooSmall, "numerator needs cutoff >= 60, got " + std::to_string(n));
  std::vector<Rat> p(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Rat v = series.coeffs[k];
    if (k >= 8) v -= series.coeffs[k - 8];
    if (k >= 24) v -= series.coeffs[k - 24];
    if (k >= 32) v += series.coeffs[k - 32];
    p[k] = v;
  }
  IntPoly out;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > n - 32) {
      if (sgn(p[k]) != 0) throw Error(Errc::CutoffTooSmall, "residual term at t^" + std::to_string(k));
      continue;
    }
    if (p[k].get_den() != 1 || sgn(p[k]) < 0)
      throw Error(Errc::MolienInconsistency, "numerator coefficient of t^" + std::to_string(k) + " is " + p[k].get_str());
    out.push_back(p[k].get_num());
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

PowerSeries hilbert_series(const IntPoly& numerator, std::size_t cutoff) {
  // 1/(1 - t^8)(1 - t^24) = sum over 8a + 24b
  std::vector<Rat> base(cutoff + 1);
  for (std::size_t a = 0; 8 * a <= cutoff; ++a)
    for (std::size_t b = 0; 8 * a + 24 * b <= cutoff; ++b) base[8 * a + 24 * b] += 1;
  PowerSeries s;
  s.coeffs.assign(cutoff + 1, Rat(0));
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    if (numerator[i] == 0) continue;
    for (std::size_t k = i; k <= cutoff; ++k) s.coeffs[k] += Rat(numerator[i]) * base[k - i];
  }
  return s;
}

std::string series_head(const PowerSeries& s, std::size_t max_terms) {
  std::string out;
  std::size_t n = 0;
  for (std::size_t k = 0; k < s.coeffs.size() && n < max_terms; ++k) {
    if (sgn(s.coeffs[k]) == 0) continue;
    if (!out.empty()) out += " + ";
    const std::string c = s.coeffs[k].get_str();
    if (k == 0) {
      out += c;
    } else {
      if (c != "1") out += c;
      out += (k == 1) ? "t" : "t^" + std::to_string(k);
    }
    ++n;
  }
  return out.empty() ? "0" : out;
}

std::string intpoly_to_string(const IntPoly& p) {
  PowerSeries s;
  for (const auto& c : p) s.coeffs.emplace_back(c);
  return series_head(s, p.size());
}

}  // namespace g9
