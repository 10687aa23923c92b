#include "g9/covariants.hpp"

#include <algorithm>
#include <mutex>

#include "g9/error.hpp"

namespace g9 {

namespace {

std::string rho(int id) { return "rho" + std::to_string(id); }

const Mat& t_substitution(unsigned d) {
  static std::mutex mu;
  static std::map<unsigned, Mat> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, substitution_matrix(g9_T(), d)).first;
  return it->second;
}

std::vector<BiPoly> invariant_basis(unsigned d) {
  // theta^a phi^b with 8a + 24b = d, in increasing b.
  const auto& inv = fundamental_invariants();
  std::vector<BiPoly> out;
  if (d % 8 != 0) return out;
  for (unsigned b = 0; 24 * b <= d; ++b) out.push_back(inv.theta.pow((d - 24 * b) / 8) * inv.phi.pow(b));
  return out;
}

// Coefficient vectors of theta M_{d-8} + phi M_{d-24}.
RowEchelon decomposables(CovariantEngine& e, unsigned d) {
  const auto& inv = fundamental_invariants();
  RowEchelon u(e.rep().dim * (d + 1));
  if (d >= 8)
    for (const auto& v : e.slice(d - 8).basis) u.insert((v * inv.theta).coeffs());
  if (d >= 24)
    for (const auto& v : e.slice(d - 24).basis) u.insert((v * inv.phi).coeffs());
  return u;
}

BiPoly laplace_det(const std::vector<std::vector<BiPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  BiPoly sum;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<BiPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BiPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    BiPoly term = m[0][j] * laplace_det(minor);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

}  // namespace

Mat substitution_matrix(const Mat& g, unsigned d) {
  if (g.rows() != 2 || g.cols() != 2) throw Error(Errc::ShapeMismatch, "substitution needs a 2x2 matrix");
  const auto p1 = linear_form_powers(g(0, 0), g(0, 1), d);
  const auto p2 = linear_form_powers(g(1, 0), g(1, 1), d);
  Mat s(d + 1, d + 1);
  for (unsigned b = 0; b <= d; ++b) {
    const auto& f = p1[d - b];
    const auto& h = p2[b];
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i].is_zero()) continue;
      for (std::size_t j = 0; j < h.size(); ++j) fma_into(s(i + j, b), f[i], h[j]);
    }
  }
  return s;
}

CovariantSlice solve_degree(const Representation& r, unsigned d) {
  const std::size_t m = r.dim;
  const std::size_t n = d + 1;
  CovariantSlice out;
  out.rep_id = r.id;
  out.degree = d;

  // D acts diagonally on monomials: x^(d-b) y^b -> i^b x^(d-b) y^b, so the D
  // condition splits into the m x m systems (i^b - rho(D)) c_b = 0.
  struct Column {
    std::size_t b;
    std::vector<CycNum> v;
  };
  std::vector<Column> cols;
  for (std::size_t b = 0; b < n; ++b) {
    Mat a = Mat::identity(m);
    a *= CycNum::zeta(static_cast<int>(2 * (b % 4)));
    a = a - r.imgD;
    for (const auto& v : nullspace(a)) {
      Column c{b, std::vector<CycNum>(m)};
      for (std::size_t j = 0; j < m; ++j) c.v[j] = v(j, 0);
      cols.push_back(std::move(c));
    }
  }
  if (cols.empty()) return out;

  // T condition on the D-solutions: (I (x) S - rho(T) (x) I) c = 0.
  const Mat& s = t_substitution(d);
  Mat a(m * n, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto& c = cols[k];
    for (std::size_t j = 0; j < m; ++j) {
      if (c.v[j].is_zero()) continue;
      for (std::size_t row = 0; row < n; ++row)
        if (!s(row, c.b).is_zero()) fma_into(a(j * n + row, k), s(row, c.b), c.v[j]);
    }
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l)
        if (!r.imgT(j, l).is_zero() && !c.v[l].is_zero()) {
          CycNum t = -r.imgT(j, l);
          fma_into(a(j * n + c.b, k), t, c.v[l]);
        }
  }

  RowEchelon basis(m * n);
  for (const auto& w : nullspace(a)) {
    std::vector<CycNum> f(m * n);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (w(k, 0).is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!cols[k].v[j].is_zero()) fma_into(f[j * n + cols[k].b], w(k, 0), cols[k].v[j]);
    }
    basis.insert(std::move(f));
  }
  for (const auto& row : basis.rows()) out.basis.push_back(VecPoly::from_coeffs(row, m, d));
  return out;
}

CovariantEngine::CovariantEngine(const Representation& r, const GroupTable& t) : rep_(r), group_(&t) {}

const PowerSeries& CovariantEngine::molien(std::size_t cutoff) {
  if (molien_.coeffs.empty() || molien_.cutoff() < cutoff)
    molien_ = molien_series(rep_, *group_, std::max(cutoff, kDefaultCutoff)).series;
  return molien_;
}

const CovariantSlice& CovariantEngine::slice(unsigned d) {
  auto it = slices_.find(d);
  if (it != slices_.end()) return it->second;
  CovariantSlice s = solve_degree(rep_, d);
  const Rat expected = molien(d).at(d);
  if (Rat(static_cast<long>(s.basis.size())) != expected) {
    throw Error(Errc::CrossCheckFailure, rho(rep_.id) + " degree " + std::to_string(d) + ": solver dimension " +
                                             std::to_string(s.basis.size()) + ", Molien coefficient " +
                                             expected.get_str());
  }
  return slices_.emplace(d, std::move(s)).first->second;
}

std::vector<unsigned> GeneratorSet::degrees() const {
  std::vector<unsigned> d;
  for (const auto& g : gens) d.push_back(g.degree());
  return d;
}

GeneratorSet extract_generators(CovariantEngine& e, unsigned d_max) {
  const Representation& r = e.rep();
  GeneratorSet out;
  out.rep_id = r.id;
  for (unsigned d = 0; d <= d_max; ++d) {
    const auto& m = e.slice(d).basis;
    if (m.empty()) continue;
    RowEchelon u = decomposables(e, d);
    if (u.rank() == m.size()) continue;
    for (const auto& v : m) {
      auto rem = u.reduce(v.coeffs());
      if (std::all_of(rem.begin(), rem.end(), [](const CycNum& c) { return c.is_zero(); })) continue;
      u.insert(rem);
      out.gens.push_back(VecPoly::from_coeffs(rem, r.dim, d).normalized());
      if (out.gens.size() > r.dim) {
        throw Error(Errc::FreenessSuspect, rho(r.id) + ": generator " + std::to_string(out.gens.size()) +
                                               " found in degree " + std::to_string(d));
      }
    }
  }
  if (out.gens.size() < r.dim) {
    throw Error(Errc::FreenessFailure, rho(r.id) + ": only " + std::to_string(out.gens.size()) +
                                           " generators up to degree " + std::to_string(d_max));
  }
  return out;
}

FreenessReport verify_free(CovariantEngine& e, const GeneratorSet& g, unsigned n) {
  const Representation& r = e.rep();
  const PowerSeries& series = e.molien(n);
  FreenessReport rep;
  rep.cutoff = n;
  std::map<unsigned, std::vector<BiPoly>> ring;
  for (unsigned d = 0; d <= n; ++d) {
    RowEchelon span(r.dim * (d + 1));
    std::size_t count = 0;
    for (const auto& gen : g.gens) {
      if (gen.degree() > d) continue;
      const unsigned rest = d - gen.degree();
      if (rest % 8 != 0) continue;
      auto it = ring.find(rest);
      if (it == ring.end()) it = ring.emplace(rest, invariant_basis(rest)).first;
      for (const auto& f : it->second) {
        ++count;
        if (!span.insert((gen * f).coeffs())) {
          throw Error(Errc::FreenessFailure, rho(r.id) + ": dependent products in degree " + std::to_string(d));
        }
      }
    }
    if (Rat(static_cast<long>(count)) != series.at(d)) {
      throw Error(Errc::FreenessFailure, rho(r.id) + ": degree " + std::to_string(d) + " has " +
                                             std::to_string(count) + " products, Molien coefficient " +
                                             series.at(d).get_str());
    }
    rep.vectors_checked += count;
  }
  IntPoly num;
  for (unsigned d : g.degrees()) {
    if (num.size() <= d) num.resize(d + 1);
    num[d] += 1;
  }
  const PowerSeries h = hilbert_series(num, n);
  for (unsigned d = 0; d <= n; ++d)
    if (h.at(d) != series.at(d))
      throw Error(Errc::FreenessFailure, rho(r.id) + ": Hilbert series differs at t^" + std::to_string(d));
  rep.message = std::to_string(rep.vectors_checked) + " products independent and spanning through degree " +
                std::to_string(n);
  return rep;
}

BiPoly generator_determinant(const GeneratorSet& g) {
  const std::size_t n = g.gens.size();
  if (n == 0) throw Error(Errc::FactorizationFailure, "no generators");
  std::vector<std::vector<BiPoly>> m(n, std::vector<BiPoly>(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (g.gens[j].size() != n) throw Error(Errc::ShapeMismatch, "generator count differs from dimension");
    for (std::size_t i = 0; i < n; ++i) m[i][j] = g.gens[j][i];
  }
  return laplace_det(m);
}

DetRelation det_relation(const GeneratorSet& g) {
  const auto& inv = fundamental_invariants();
  DetRelation out;
  out.det = generator_determinant(g);
  if (out.det.is_zero()) throw Error(Errc::FactorizationFailure, rho(g.rep_id) + ": determinant vanishes");
  out.degree = out.det.degree();
  BiPoly q1;
  BiPoly q2;
  out.e = multiplicity(out.det, inv.delta, &q1);
  out.k = multiplicity(q1, inv.gamma, &q2);
  if (!q2.is_constant()) {
    throw Error(Errc::FactorizationFailure, rho(g.rep_id) + ": det / (Delta^" + std::to_string(out.e) + " Gamma^" +
                                                std::to_string(out.k) + ") has degree " +
                                                std::to_string(q2.degree()));
  }
  out.c = q2.coeff(0, 0);
  if (static_cast<int>(12 * out.e + 6 * out.k) != out.degree)
    throw Error(Errc::FactorizationFailure, rho(g.rep_id) + ": degree bookkeeping");
  return out;
}

std::string tau_outcome_name(TauOutcome o) {
  switch (o) {
    case TauOutcome::Found:
      return "found";
    case TauOutcome::NotFound:
      return "not-found";
    case TauOutcome::NotApplicable:
      return "not-applicable";
  }
  return "?";
}

std::string tau_pattern_name(reference::TauPattern p) {
  using reference::TauPattern;
  switch (p) {
    case TauPattern::None:
      return "none";
    case TauPattern::Symmetric3:
      return "(f, g, tau f), g symmetric";
    case TauPattern::Skew3:
      return "(f, g, -tau f), g skew";
    case TauPattern::Plus4:
      return "(f, g, tau g, tau f)";
    case TauPattern::Minus4:
      return "(f, g, -tau g, -tau f)";
  }
  return "?";
}

bool TauReport::all_found() const {
  return std::all_of(per_generator.begin(), per_generator.end(),
                     [](const TauGeneratorResult& r) { return r.outcome == TauOutcome::Found; });
}

Mat tau_pattern_constraints(reference::TauPattern p, unsigned degree) {
  using reference::TauPattern;
  const std::size_t n = degree + 1;
  // (target component, source component, sign): F_target = sign * tau(F_source).
  struct Rel {
    std::size_t target, source;
    long sign;
  };
  std::vector<Rel> rels;
  std::size_t m = 0;
  switch (p) {
    case TauPattern::None:
      return Mat(0, 0);
    case TauPattern::Symmetric3:
      m = 3;
      rels = {{2, 0, 1}, {1, 1, 1}};
      break;
    case TauPattern::Skew3:
      m = 3;
      rels = {{2, 0, -1}, {1, 1, -1}};
      break;
    case TauPattern::Plus4:
      m = 4;
      rels = {{3, 0, 1}, {2, 1, 1}};
      break;
    case TauPattern::Minus4:
      m = 4;
      rels = {{3, 0, -1}, {2, 1, -1}};
      break;
  }
  Mat c(rels.size() * n, m * n);
  std::size_t row = 0;
  for (const auto& rel : rels)
    for (std::size_t b = 0; b < n; ++b, ++row) {
      c(row, rel.target * n + b) += CycNum(1);
      c(row, rel.source * n + (n - 1 - b)) -= CycNum(rel.sign);
    }
  return c;
}

TauReport check_tau_structure(CovariantEngine& e, const GeneratorSet& g) {
  const Representation& r = e.rep();
  TauReport rep;
  rep.rep_id = r.id;
  rep.pattern = (r.id >= 1 && r.id <= 32) ? reference::rep(r.id).tau : reference::TauPattern::None;
  if (rep.pattern == reference::TauPattern::None || r.dim < 3) {
    rep.pattern = reference::TauPattern::None;
    for (const auto& gen : g.gens) rep.per_generator.push_back({gen.degree(), TauOutcome::NotApplicable, {}});
    return rep;
  }
  std::map<unsigned, std::size_t> per_degree;
  for (const auto& gen : g.gens) ++per_degree[gen.degree()];
  std::map<unsigned, std::vector<VecPoly>> witnesses;
  for (const auto& [d, count] : per_degree) {
    const auto& m = e.slice(d).basis;
    // Pattern subspace P of M_d: solve C (B w) = 0 for the slice basis B.
    const Mat c = tau_pattern_constraints(rep.pattern, d);
    Mat b(r.dim * (d + 1), m.size());
    for (std::size_t j = 0; j < m.size(); ++j) {
      const auto v = m[j].coeffs();
      for (std::size_t i = 0; i < v.size(); ++i) b(i, j) = v[i];
    }
    const Mat cb = c * b;
    RowEchelon u = decomposables(e, d);
    auto& found = witnesses[d];
    for (const auto& w : nullspace(cb)) {
      if (found.size() == count) break;
      const Mat f = b * w;
      std::vector<CycNum> v(f.entries().begin(), f.entries().end());
      if (u.insert(v)) found.push_back(VecPoly::from_coeffs(v, r.dim, d).normalized());
    }
  }
  std::map<unsigned, std::size_t> used;
  for (const auto& gen : g.gens) {
    const unsigned d = gen.degree();
    const auto& found = witnesses[d];
    std::size_t& k = used[d];
    if (k < found.size()) {
      rep.per_generator.push_back({d, TauOutcome::Found, found[k]});
    } else {
      rep.per_generator.push_back({d, TauOutcome::NotFound, {}});
    }
    ++k;
  }
  return rep;
}

std::vector<LinearGeneratorRow> verify_linear_generators(const std::vector<Representation>& reps, const GroupTable& t) {
  const auto& inv = fundamental_invariants();
  std::vector<LinearGeneratorRow> rows;
  for (int i = 1; i <= 8; ++i) {
    const auto& ab = reference::linear_generators()[static_cast<std::size_t>(i - 1)];
    CovariantEngine e(reps.at(static_cast<std::size_t>(i - 1)), t);
    const GeneratorSet g = extract_generators(e);
    const BiPoly expected = inv.gamma.pow(ab.a) * inv.delta.pow(ab.b);
    LinearGeneratorRow row;
    row.rep_id = i;
    row.a = ab.a;
    row.b = ab.b;
    row.generator = g.gens.at(0);
    row.matches = g.gens.size() == 1 &&
                  row.generator == VecPoly({expected}, static_cast<unsigned>(expected.degree())).normalized();
    if (!row.matches) {
      throw Error(Errc::TheoremFailure, rho(i) + " generator " + row.generator.to_string() + " is not Gamma^" +
                                            std::to_string(ab.a) + " Delta^" + std::to_string(ab.b));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool is_covariant_for_group(const VecPoly& f, const Representation& r, const GroupTable& t) {
  for (const auto& g : t.elements())
    if (substitute(f, g.mat) != apply(evaluate(r, g), f)) return false;
  return true;
}

}  // namespace g9
