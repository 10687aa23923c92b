#include "g9/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "g9/covariants.hpp"
#include "g9/error.hpp"
#include "g9/group.hpp"
#include "g9/molien.hpp"
#include "g9/reps.hpp"
#include "g9/verify.hpp"

namespace g9 {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> selected_reps(const RunConfig& cfg) {
  if (cfg.rep == "all") {
    std::vector<int> all(32);
    for (int i = 0; i < 32; ++i) all[static_cast<std::size_t>(i)] = i + 1;
    return all;
  }
  int id = 0;
  std::size_t used = 0;
  try {
    id = std::stoi(cfg.rep, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != cfg.rep.size() || id < 1 || id > 32)
    throw UsageError("--rep must be 1..32 or all, got '" + cfg.rep + "'");
  return {id};
}

void require_format(const RunConfig& cfg, std::initializer_list<Format> allowed) {
  for (Format f : allowed)
    if (f == cfg.format) return;
  throw UsageError("format " + format_name(cfg.format) + " is not available for " + cfg.command);
}

json mat_text(const Mat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

json vecpoly_json(const VecPoly& v) {
  json comps = json::array();
  for (const auto& c : v.components()) comps.push_back(c.to_string());
  return comps;
}

// "-Gamma", "1/7*Delta*Gamma^3", "3".
std::string factored(const CycNum& c, unsigned e, unsigned k) {
  std::string body;
  auto power = [&](const char* name, unsigned n) {
    if (n == 0) return;
    if (!body.empty()) body += "*";
    body += name;
    if (n > 1) body += "^" + std::to_string(n);
  };
  power("Delta", e);
  power("Gamma", k);
  if (body.empty()) return c.to_string();
  if (c.is_one()) return body;
  if (c == CycNum(-1)) return "-" + body;
  const std::string cs = c.to_string();
  const bool simple = c.is_rational();
  return (simple ? cs : "(" + cs + ")") + "*" + body;
}

}  // namespace

int cmd_group(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {Format::Text, Format::Json});
  const GroupTable t = build_g9();
  if (cfg.format == Format::Json) {
    json j;
    j["order"] = t.size();
    json els = json::array();
    for (std::size_t e = 0; e < t.size(); ++e)
      els.push_back({{"index", e}, {"word", t.element(e).word}, {"matrix", mat_text(t.element(e).mat)}});
    j["elements"] = els;
    json cls = json::array();
    for (std::size_t c = 0; c < t.class_count(); ++c) {
      const auto& info = t.class_info(c);
      cls.push_back({{"index", c + 1},
                     {"rep", info.label},
                     {"word", t.element(info.rep).word},
                     {"ord", info.order},
                     {"size", info.size}});
    }
    j["classes"] = cls;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "order " << t.size() << "\nclasses " << t.class_count() << "\n";
  for (std::size_t c = 0; c < t.class_count(); ++c) {
    const auto& info = t.class_info(c);
    out << "C" << (c < 9 ? "0" : "") << c + 1 << "  " << info.label << "  ord " << info.order << "  size "
        << info.size << "  word " << (t.element(info.rep).word.empty() ? "1" : t.element(info.rep).word) << "\n";
  }
  return kExitOk;
}

int cmd_chartable(const RunConfig& cfg, std::ostream& out) {
  const GroupTable t = build_g9();
  out << render_chartable(character_table(build_all(t), t), cfg.format);
  return kExitOk;
}

int cmd_molien(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {Format::Text, Format::Json, Format::Csv});
  const auto ids = selected_reps(cfg);
  if (cfg.terms < 1) throw UsageError("--terms must be at least 1");
  const GroupTable t = build_g9();
  const auto reps = build_all(t);
  json all = json::array();
  if (cfg.format == Format::Csv) out << "rep,degree,coefficient\n";
  for (int id : ids) {
    const auto& r = reps[static_cast<std::size_t>(id - 1)];
    const std::size_t cutoff = cfg.numerator ? std::max<std::size_t>(cfg.terms, kDefaultCutoff) : cfg.terms;
    const MolienResult m = molien_series(r, t, cutoff);
    PowerSeries shown = m.series;
    shown.coeffs.resize(cfg.terms + 1);
    const std::string head = series_head(shown, shown.coeffs.size());
    if (cfg.format == Format::Json) {
      json coeffs = json::array();
      for (const auto& c : shown.coeffs) coeffs.push_back(c.get_num().get_si());
      json j = {{"rep", id}, {"cutoff", cfg.terms}, {"coefficients", coeffs}, {"series", head}};
      if (cfg.numerator) {
        json num = json::array();
        for (const auto& c : m.numerator) num.push_back(c.get_si());
        j["numerator"] = num;
        j["numerator_text"] = intpoly_to_string(m.numerator);
      }
      all.push_back(j);
    } else if (cfg.format == Format::Csv) {
      for (std::size_t k = 0; k < shown.coeffs.size(); ++k)
        if (sgn(shown.coeffs[k]) != 0) out << id << "," << k << "," << shown.coeffs[k].get_str() << "\n";
    } else {
      out << "rho" << id << ": " << head << "\n";
      if (cfg.numerator) out << "rho" << id << " numerator: " << intpoly_to_string(m.numerator) << "\n";
    }
  }
  if (cfg.format == Format::Json) out << (ids.size() == 1 ? all[0] : all).dump(2) << "\n";
  return kExitOk;
}

int cmd_covariants(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {Format::Text, Format::Json});
  const auto ids = selected_reps(cfg);
  const GroupTable t = build_g9();
  const auto reps = build_all(t);
  json all = json::array();
  for (int id : ids) {
    CovariantEngine e(reps[static_cast<std::size_t>(id - 1)], t);
    const auto& s = e.slice(cfg.degree);
    if (cfg.format == Format::Json) {
      json basis = json::array();
      for (const auto& v : s.basis) basis.push_back(vecpoly_json(v));
      all.push_back({{"rep", id}, {"degree", cfg.degree}, {"dimension", s.basis.size()}, {"basis", basis}});
    } else {
      out << "rho" << id << " degree " << cfg.degree << ": dimension " << s.basis.size() << "\n";
      for (const auto& v : s.basis) out << "  " << v.to_string() << "\n";
    }
  }
  if (cfg.format == Format::Json) out << (ids.size() == 1 ? all[0] : all).dump(2) << "\n";
  return kExitOk;
}

int cmd_generators(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {Format::Text, Format::Json});
  const auto ids = selected_reps(cfg);
  const GroupTable t = build_g9();
  const auto reps = build_all(t);
  json all = json::array();
  for (int id : ids) {
    CovariantEngine e(reps[static_cast<std::size_t>(id - 1)], t);
    const GeneratorSet g = extract_generators(e);
    const DetRelation rel = det_relation(g);
    const TauReport tr = check_tau_structure(e, g);
    const std::string det_text = factored(rel.c, rel.e, rel.k);
    if (cfg.format == Format::Json) {
      json gens = json::array();
      for (std::size_t j = 0; j < g.gens.size(); ++j) {
        json item = {{"degree", g.gens[j].degree()}, {"components", vecpoly_json(g.gens[j])}};
        if (tr.pattern != reference::TauPattern::None) {
          item["tau"] = tau_outcome_name(tr.per_generator[j].outcome);
          if (tr.per_generator[j].witness) item["tau_witness"] = vecpoly_json(*tr.per_generator[j].witness);
        }
        gens.push_back(item);
      }
      json j = {{"rep", id},
                {"degrees", g.degrees()},
                {"generators", gens},
                {"det", {{"e", rel.e}, {"k", rel.k}, {"c", rel.c.to_string()}, {"degree", rel.degree}, {"text", det_text}}}};
      if (tr.pattern != reference::TauPattern::None) j["tau_pattern"] = tau_pattern_name(tr.pattern);
      all.push_back(j);
      continue;
    }
    out << "rho" << id << ": " << g.gens.size() << (g.gens.size() == 1 ? " generator" : " generators")
        << ", degrees";
    for (unsigned d : g.degrees()) out << " " << d;
    out << "\n";
    for (std::size_t j = 0; j < g.gens.size(); ++j) {
      out << "  [" << j + 1 << "] degree " << g.gens[j].degree() << ": " << g.gens[j].to_string() << "\n";
    }
    if (g.gens.size() == 1) out << "  generator = " << det_text << "\n";
    out << "  det = " << det_text << "  (e=" << rel.e << ", k=" << rel.k << ", c=" << rel.c.to_string()
        << ", degree " << rel.degree << ")\n";
    if (tr.pattern != reference::TauPattern::None) {
      out << "  tau pattern " << tau_pattern_name(tr.pattern) << ":";
      for (const auto& p : tr.per_generator) out << " " << tau_outcome_name(p.outcome);
      out << "\n";
      for (std::size_t j = 0; j < tr.per_generator.size(); ++j)
        if (tr.per_generator[j].witness)
          out << "    [" << j + 1 << "] " << tr.per_generator[j].witness->to_string() << "\n";
    }
  }
  if (cfg.format == Format::Json) out << (ids.size() == 1 ? all[0] : all).dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {Format::Text, Format::Json});
  VerifyOptions opt;
  for (const auto& item : cfg.only) {
    std::stringstream ss(item);
    for (std::string f; std::getline(ss, f, ',');)
      if (!f.empty()) opt.only.push_back(f);
  }
  for (const auto& f : opt.only)
    if (std::find(verify_families().begin(), verify_families().end(), f) == verify_families().end())
      throw UsageError("unknown family '" + f + "' for --only");
  if (!cfg.inject_fault.empty()) {
    if (cfg.inject_fault != "delta") throw UsageError("unknown fault '" + cfg.inject_fault + "'");
    opt.corrupt_delta = true;
  }
  Workspace ws;
  const VerifyReport rep = run_verification(ws, opt);
  const CheckResult* first = rep.first_failure();
  std::size_t failed = 0;
  for (const auto& c : rep.checks) failed += c.passed ? 0 : 1;
  if (cfg.format == Format::Json) {
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"family", c.family}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    json j = {{"passed", rep.passed()}, {"total", rep.checks.size()}, {"failed", failed}, {"checks", checks}};
    if (first) j["first_failure"] = {{"family", first->family}, {"name", first->name}};
    out << j.dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks) {
      out << (c.passed ? "PASS" : "FAIL") << " [" << c.family << "] " << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
    if (rep.passed()) {
      out << "all checks passed (" << rep.checks.size() << ")\n";
    } else {
      out << failed << " of " << rep.checks.size() << " checks failed; first failure: [" << first->family << "] "
          << first->name << "\n";
    }
  }
  return rep.passed() ? kExitOk : kExitVerifyFailed;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for the complex reflection group G9", "g9cli"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "text | json | csv | latex")->check(CLI::IsMember({"text", "json", "csv", "latex"}));
  app.add_option("--out", cfg.out, "Write output to this file");

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text | json | csv | latex")
        ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
    sub->add_option("--out", cfg.out, "Write output to this file");
  };
  auto* group = app.add_subcommand("group", "Elements and conjugacy classes");
  auto* chartable = app.add_subcommand("chartable", "Character table in reference order");
  auto* molien = app.add_subcommand("molien", "Equivariant Molien series");
  molien->add_option("--rep", cfg.rep, "1..32 or all");
  molien->add_option("--terms", cfg.terms, "Series cutoff degree");
  molien->add_flag("--numerator", cfg.numerator, "Also print the numerator over (1-t^8)(1-t^24)");
  auto* covariants = app.add_subcommand("covariants", "Basis of a homogeneous covariant space");
  covariants->add_option("--rep", cfg.rep, "1..32 or all")->required();
  covariants->add_option("--degree", cfg.degree, "Total degree")->required();
  auto* generators = app.add_subcommand("generators", "Module generators and determinant factorization");
  generators->add_option("--rep", cfg.rep, "1..32 or all")->required();
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--only", cfg.only, "Comma-separated families");
  verify->add_option("--inject-fault", cfg.inject_fault)->group("");
  for (auto* sub : {group, chartable, molien, covariants, generators, verify}) add_format(sub);

  if (argc <= 1) {
    err << app.help();
    return kExitUsage;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.format = *parse_format(format);
  cfg.command = app.get_subcommands().front()->get_name();

  std::ostringstream buffer;
  std::ostream& sink = cfg.out.empty() ? out : buffer;
  int code = kExitOk;
  try {
    if (cfg.command == "group") {
      code = cmd_group(cfg, sink);
    } else if (cfg.command == "chartable") {
      code = cmd_chartable(cfg, sink);
    } else if (cfg.command == "molien") {
      code = cmd_molien(cfg, sink);
    } else if (cfg.command == "covariants") {
      code = cmd_covariants(cfg, sink);
    } else if (cfg.command == "generators") {
      code = cmd_generators(cfg, sink);
    } else {
      code = cmd_verify(cfg, sink);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << cfg.out << "\n";
      return kExitUsage;
    }
    f << buffer.str();
  }
  return code;
}

}  // namespace g9
