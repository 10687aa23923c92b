#include "g9/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "g9/error.hpp"
#include "g9/molien.hpp"
#include "g9/reference.hpp"

namespace g9 {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

const std::vector<std::string>& verify_families() {
  static const std::vector<std::string> f = {"group",      "chartable", "census",      "homomorphism",
                                             "molien",     "solver",    "generators",  "freeness",
                                             "determinant", "identities", "tau"};
  return f;
}

Workspace::Workspace() : group_(build_g9()), reps_(build_all(group_)), engines_(32), gens_(32) {}

const Representation& Workspace::rep(int id) {
  if (id < 1 || id > static_cast<int>(reps_.size()))
    throw Error(Errc::ParseError, "representation index " + std::to_string(id) + " out of range");
  return reps_[static_cast<std::size_t>(id - 1)];
}

CovariantEngine& Workspace::engine(int id) {
  auto& slot = engines_[static_cast<std::size_t>(rep(id).id - 1)];
  if (!slot) slot = std::make_unique<CovariantEngine>(rep(id), group_);
  return *slot;
}

const GeneratorSet& Workspace::generators(int id) {
  auto& slot = gens_[static_cast<std::size_t>(rep(id).id - 1)];
  if (!slot) slot = extract_generators(engine(id));
  return *slot;
}

std::vector<int> match_reference_rows(const CharacterTable& ct) {
  const auto& ref = reference::character_table();
  std::vector<int> out;
  for (const auto& row : ct.rows) {
    int hit = 0;
    for (std::size_t j = 0; j < ref.rows.size() && !hit; ++j)
      if (ref.rows[j] == row) hit = static_cast<int>(j + 1);
    out.push_back(hit);
  }
  return out;
}

namespace {

std::string rho(int id) { return "rho" + std::to_string(id); }

std::string join(const std::vector<unsigned>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

class Runner {
 public:
  Runner(Workspace& ws, const VerifyOptions& opt) : ws_(ws), opt_(opt) {}

  VerifyReport run() {
    const std::vector<std::pair<std::string, std::function<void()>>> families = {
        {"group", [this] { group(); }},
        {"chartable", [this] { chartable(); }},
        {"census", [this] { census(); }},
        {"homomorphism", [this] { homomorphism(); }},
        {"molien", [this] { molien(); }},
        {"solver", [this] { solver(); }},
        {"generators", [this] { generators(); }},
        {"freeness", [this] { freeness(); }},
        {"determinant", [this] { determinant(); }},
        {"identities", [this] { identities(); }},
        {"tau", [this] { tau(); }},
    };
    for (const auto& [name, fn] : families) {
      if (!opt_.only.empty() && std::find(opt_.only.begin(), opt_.only.end(), name) == opt_.only.end()) continue;
      family_ = name;
      fn();
    }
    return std::move(report_);
  }

 private:
  void record(std::string name, bool ok, std::string detail = {}) {
    report_.checks.push_back({family_, std::move(name), ok, std::move(detail)});
  }

  // Runs fn, turning a thrown Error into a failed check.
  void guarded(const std::string& name, const std::function<std::string()>& fn) {
    try {
      record(name, true, fn());
    } catch (const Error& e) {
      record(name, false, e.what());
    }
  }

  void group() {
    const GroupTable& t = ws_.group();
    const auto& ref = reference::character_table();
    record("closure of {T, D} has 192 elements", t.size() == 192, std::to_string(t.size()) + " elements");
    record("32 conjugacy classes", t.class_count() == 32, std::to_string(t.class_count()) + " classes");
    std::string bad;
    for (std::size_t c = 0; c < t.class_count() && c < ref.orders.size(); ++c) {
      const auto& info = t.class_info(c);
      if (info.order != ref.orders[c] || info.size != ref.sizes[c]) {
        bad = "C" + std::to_string(c + 1) + " (" + info.label + "): ord " + std::to_string(info.order) + ", size " +
              std::to_string(info.size);
        break;
      }
    }
    record("class orders and sizes match the reference table", bad.empty() && t.class_count() == ref.orders.size(), bad);
  }

  void chartable() {
    const CharacterTable ct = character_table(ws_.reps(), ws_.group());
    const auto& ref = reference::character_table();
    const auto where = match_reference_rows(ct);
    for (std::size_t i = 0; i < ct.rows.size(); ++i) {
      std::string detail;
      const bool ok = ct.rows[i] == ref.rows[i];
      if (!ok) {
        std::size_t c = 0;
        while (ct.rows[i][c] == ref.rows[i][c]) ++c;
        detail = "C" + std::to_string(c + 1) + " (" + ct.class_labels[c] + "): computed " +
                 ct.rows[i][c].to_string() + ", reference " + ref.rows[i][c].to_string();
        if (where[i]) detail += "; equals reference row chi" + std::to_string(where[i]);
      }
      record("chi" + std::to_string(i + 1) + " equals the reference row", ok, detail);
    }
  }

  void census() {
    guarded("dimensions {1^8,2^12,3^8,4^4}, sum of squares 192, orthonormal characters",
            [this] { return verify_census(ws_.reps(), ws_.group()).message; });
  }

  void homomorphism() {
    for (const auto& r : ws_.reps()) {
      guarded(rho(r.id) + "(g) " + rho(r.id) + "(h) = " + rho(r.id) + "(gh) for all pairs", [&] {
        return std::to_string(verify_homomorphism(r, ws_.group())) + " pairs";
      });
    }
  }

  void molien() {
    for (const auto& r : ws_.reps()) {
      const auto& ref = reference::rep(r.id);
      guarded(rho(r.id) + " Molien series head", [&] {
        const PowerSeries& s = ws_.engine(r.id).molien(kDefaultCutoff);
        // Displayed terms are the leading nonzero terms, in order.
        std::size_t k = 0;
        for (const auto& [coef, exp] : ref.series) {
          for (; k < exp; ++k)
            if (sgn(s.at(k)) != 0)
              throw Error(Errc::ReferenceMismatch, "unexpected term " + s.at(k).get_str() + "t^" + std::to_string(k));
          if (s.at(k) != coef)
            throw Error(Errc::ReferenceMismatch, "coefficient of t^" + std::to_string(exp) + " is " + s.at(k).get_str());
          ++k;
        }
        return series_head(s, std::max<std::size_t>(ref.series.size(), 5));
      });
      guarded(rho(r.id) + " numerator", [&] {
        const IntPoly num = numerator_of(ws_.engine(r.id).molien(kDefaultCutoff));
        mpz_class total = 0;
        for (const auto& c : num) {
          if (c < 0) throw Error(Errc::MolienInconsistency, "negative numerator coefficient");
          total += c;
        }
        if (total != static_cast<long>(r.dim))
          throw Error(Errc::MolienInconsistency, "coefficients sum to " + total.get_str());
        if (r.dim == 1) {
          IntPoly expect(ref.degrees[0] + 1, 0);
          expect.back() = 1;
          if (num != expect) throw Error(Errc::ReferenceMismatch, "numerator is not t^" + std::to_string(ref.degrees[0]));
        }
        return intpoly_to_string(num);
      });
      guarded(rho(r.id) + " class sum equals element sum", [&] {
        const PowerSeries a = ws_.engine(r.id).molien(kDefaultCutoff);
        const PowerSeries b = molien_series_elementwise(r, ws_.group(), a.cutoff());
        if (a.coeffs != b.coeffs) throw Error(Errc::MolienInconsistency, "class and element sums differ");
        return "through t^" + std::to_string(a.cutoff());
      });
    }
  }

  void solver() {
    for (const auto& r : ws_.reps()) {
      guarded("dim M(" + rho(r.id) + ")_d equals the Molien coefficient for d <= 40", [&] {
        std::size_t total = 0;
        for (unsigned d = 0; d <= 40; ++d) total += ws_.engine(r.id).slice(d).basis.size();
        return std::to_string(total) + " basis vectors";
      });
    }
  }

  void generators() {
    const auto& inv = fundamental_invariants();
    for (const auto& r : ws_.reps()) {
      const auto& ref = reference::rep(r.id);
      guarded(rho(r.id) + " generator degrees " + join(ref.degrees), [&] {
        const auto d = ws_.generators(r.id).degrees();
        std::vector<unsigned> sorted = d;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != ref.degrees) throw Error(Errc::ReferenceMismatch, "extracted " + join(d));
        return join(d);
      });
      if (r.dim == 1) {
        const auto& ab = reference::linear_generators()[static_cast<std::size_t>(r.id - 1)];
        guarded(rho(r.id) + " generated by Gamma^" + std::to_string(ab.a) + " Delta^" + std::to_string(ab.b), [&] {
          const BiPoly p = inv.gamma.pow(ab.a) * inv.delta.pow(ab.b);
          const VecPoly want = VecPoly({p}, static_cast<unsigned>(p.degree())).normalized();
          const auto& g = ws_.generators(r.id).gens;
          if (g.size() != 1 || !(g[0] == want))
            throw Error(Errc::TheoremFailure, "generator " + g.at(0).to_string());
          return g[0].to_string();
        });
      }
    }
  }

  void freeness() {
    for (const auto& r : ws_.reps()) {
      guarded("M(" + rho(r.id) + ") free, Hilbert series equals Molien to degree 64", [&] {
        return verify_free(ws_.engine(r.id), ws_.generators(r.id), kFreenessCutoff).message;
      });
    }
  }

  void determinant() {
    for (const auto& r : ws_.reps()) {
      const auto& ref = reference::rep(r.id);
      guarded(rho(r.id) + " det = c Delta^" + std::to_string(ref.e) + " Gamma^" + std::to_string(ref.k), [&] {
        const auto& g = ws_.generators(r.id);
        const DetRelation rel = det_relation(g);
        const auto d = g.degrees();
        const int sum = static_cast<int>(std::accumulate(d.begin(), d.end(), 0u));
        if (rel.e != ref.e || rel.k != ref.k)
          throw Error(Errc::ReferenceMismatch,
                      "found e=" + std::to_string(rel.e) + " k=" + std::to_string(rel.k));
        if (rel.degree != sum) throw Error(Errc::FactorizationFailure, "deg det differs from the degree sum");
        if (r.dim == 2 && sum != static_cast<int>(12 + 6 * ref.k))
          throw Error(Errc::TheoremFailure, "deg u1 + deg u2 != 12 + 6k");
        if (r.dim == 4 && rel.degree != 60) throw Error(Errc::TheoremFailure, "deg det != 60");
        return "c = " + rel.c.to_string() + ", degree " + std::to_string(rel.degree);
      });
    }
  }

  void identities() {
    const auto& inv = fundamental_invariants();
    BiPoly delta = inv.delta;
    if (opt_.corrupt_delta) delta.add_term(8, 4, CycNum(1));
    const BiPoly& gamma = inv.gamma;
    const GroupTable& t = ws_.group();
    auto fixed = [&](const BiPoly& f) {
      return std::all_of(t.elements().begin(), t.elements().end(),
                         [&](const GroupElement& g) { return substitute(f, g.mat) == f; });
    };
    record("phi = Delta^2 + 66*Gamma^4", inv.phi == delta * delta + CycNum(66) * gamma.pow(4));
    record("theta fixed by all 192 elements", fixed(inv.theta));
    record("phi fixed by all 192 elements", fixed(inv.phi));
    record("Gamma is a rho3-covariant",
           is_covariant_for_group(VecPoly({gamma}, 6), ws_.rep(3), t));
    record("Delta is a rho5-covariant",
           is_covariant_for_group(VecPoly({delta}, 12), ws_.rep(5), t));
    record("tau(Gamma) = -Gamma", g9::tau(gamma) == -gamma);
    record("tau(theta) = theta", g9::tau(inv.theta) == inv.theta);
  }

  void tau() {
    for (int id = 21; id <= 32; ++id) {
      const auto pattern = reference::rep(id).tau;
      guarded(rho(id) + " generators of the form " + tau_pattern_name(pattern), [&] {
        const TauReport rep = check_tau_structure(ws_.engine(id), ws_.generators(id));
        std::string detail;
        for (const auto& g : rep.per_generator)
          detail += (detail.empty() ? "" : ", ") + std::string("deg ") + std::to_string(g.degree) + " " +
                    tau_outcome_name(g.outcome);
        if (!rep.all_found()) throw Error(Errc::TheoremFailure, detail);
        return detail;
      });
    }
  }

  Workspace& ws_;
  const VerifyOptions& opt_;
  VerifyReport report_;
  std::string family_;
};

}  // namespace

VerifyReport run_verification(Workspace& ws, const VerifyOptions& opt) {
  for (const auto& f : opt.only)
    if (std::find(verify_families().begin(), verify_families().end(), f) == verify_families().end())
      throw Error(Errc::ParseError, "unknown verification family '" + f + "'");
  return Runner(ws, opt).run();
}

}  // namespace g9
