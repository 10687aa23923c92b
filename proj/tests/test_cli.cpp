#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "g9/commands.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "g9cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = g9::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  const auto empty = run({});
  CHECK(empty.code == 2);
  CHECK(empty.err.find("Usage") != std::string::npos);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"molien", "--rep", "33"}).code == 2);
  CHECK(run({"molien", "--rep", "x9"}).code == 2);
  CHECK(run({"group", "--format", "yaml"}).code == 2);
  CHECK(run({"group", "--format", "latex"}).code == 2);
  CHECK(run({"covariants", "--rep", "9"}).code == 2);
  CHECK(run({"verify", "--only", "nosuchfamily"}).code == 2);
  CHECK(run({"verify", "--only", "group", "--inject-fault", "theta"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("group") {
  const auto r = run({"group", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == 192);
  CHECK(j["elements"].size() == 192);
  REQUIRE(j["classes"].size() == 32);
  CHECK(j["classes"][24]["rep"] == "TD");
  CHECK(j["classes"][24]["ord"] == 24);
  CHECK(j["classes"][24]["size"] == 8);
  const auto text = run({"group"});
  CHECK(text.out.rfind("order 192\nclasses 32\n", 0) == 0);
}

TEST_CASE("chartable formats") {
  const auto latex = run({"chartable", "--format", "latex"});
  REQUIRE(latex.code == 0);
  CHECK(latex.out.rfind("\\begin{array}{c|*{16}{c}}", 0) == 0);
  CHECK(latex.out.find("\\mathfrak{C}_{25}") != std::string::npos);
  CHECK(latex.out.find("& \\zeta I ") != std::string::npos);
  const auto csv = run({"chartable", "--format", "csv"});
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line.rfind("row,I,zI,z^2I", 0) == 0);
  std::size_t n = 1;
  while (std::getline(lines, line)) ++n;
  CHECK(n == 35);
  const auto j = nlohmann::json::parse(run({"chartable", "--format", "json"}).out);
  CHECK(j["rows"][8]["values"][24] == "-z^3");
}

TEST_CASE("molien") {
  const auto r = run({"molien", "--rep", "29", "--terms", "40"});
  CHECK(r.code == 0);
  CHECK(r.out == "rho29: t^3 + 2t^11 + 3t^19 + 5t^27 + 6t^35\n");
  const auto n = run({"molien", "--rep", "31", "--terms", "20", "--numerator"});
  CHECK(n.out == "rho31: 2t^9 + 3t^17\nrho31 numerator: 2t^9 + t^17 + t^25\n");
  const auto j = nlohmann::json::parse(run({"molien", "--rep", "9", "--terms", "17", "--format", "json"}).out);
  CHECK(j["coefficients"].size() == 18);
  CHECK(j["coefficients"][17] == 2);
  const auto all = run({"molien", "--terms", "8", "--format", "csv"});
  CHECK(all.out.find("\n1,0,1\n") != std::string::npos);
  CHECK(run({"molien", "--rep", "1", "--terms", "0"}).code == 2);
}

TEST_CASE("covariants and generators") {
  const auto c = run({"covariants", "--rep", "9", "--degree", "1"});
  CHECK(c.out == "rho9 degree 1: dimension 1\n  (x, y)\n");
  const auto z = run({"covariants", "--rep", "9", "--degree", "5", "--format", "json"});
  CHECK(nlohmann::json::parse(z.out)["dimension"] == 0);
  const auto g = run({"generators", "--rep", "3"});
  CHECK(g.code == 0);
  CHECK(g.out.find("1 generator, degrees 6") != std::string::npos);
  CHECK(g.out.find("generator = -Gamma") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"generators", "--rep", "21", "--format", "json"}).out);
  CHECK(j["degrees"] == nlohmann::json::array({2, 10, 18}));
  CHECK(j["det"]["e"] == 1);
  CHECK(j["det"]["k"] == 3);
  CHECK(j["generators"][0]["tau"] == "found");
}

TEST_CASE("output is deterministic and --out writes a file") {
  CHECK(run({"chartable"}).out == run({"chartable"}).out);
  CHECK(run({"generators", "--rep", "30", "--format", "json"}).out ==
        run({"generators", "--rep", "30", "--format", "json"}).out);
  const std::string path = "test_cli_out.txt";
  const auto r = run({"molien", "--rep", "9", "--terms", "9", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == "rho9: t + t^9\n");
  std::remove(path.c_str());
}

TEST_CASE("verify families and fault injection") {
  const auto m = run({"verify", "--only", "molien"});
  CHECK(m.code == 0);
  CHECK(m.out.find("all checks passed") != std::string::npos);
  CHECK(m.out.find("[group]") == std::string::npos);

  const auto ok = run({"verify", "--only", "identities"});
  CHECK(ok.code == 0);
  const auto bad = run({"verify", "--only", "identities", "--inject-fault", "delta"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("first failure: [identities] phi = Delta^2 + 66*Gamma^4") != std::string::npos);

  const auto j = nlohmann::json::parse(run({"verify", "--only", "group,census", "--format", "json"}).out);
  CHECK(j["passed"] == true);
  CHECK(j["total"] == 4);
}

TEST_CASE("full verification reports the reference row permutation") {
  const auto r = run({"verify"});
  CHECK(r.code == 1);
  CHECK(r.out.find("3 of ") != std::string::npos);
  CHECK(r.out.find("first failure: [chartable] chi29 equals the reference row") != std::string::npos);
  CHECK(r.out.find("equals reference row chi31") != std::string::npos);
  CHECK(r.out.find("FAIL [molien]") == std::string::npos);
  CHECK(r.out.find("FAIL [tau]") == std::string::npos);
}
