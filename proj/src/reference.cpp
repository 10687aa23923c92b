#include "g9/reference.hpp"

#include <sstream>

#include "g9/error.hpp"

namespace g9::reference {

namespace {

// Published character table: "ord", "size", then chi1..chi32, each with 32
// entries in class column order.
constexpr const char* kCharacterTable = R"TABLE(
ord 1 8 4 8 2 8 4 8 2 8 4 8 4 8 4 8 4 8 4 8 2 8 4 8 24 6 24 12 24 3 24 12
size 1 1 1 1 1 1 1 1 6 6 6 6 6 6 6 6 6 6 6 6 12 12 12 12 8 8 8 8 8 8 8 8
chi1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1
chi2 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 -1 1 -1 1 -1 1 -1 1 1 -1 1 -1 -1 1 -1 1 -1 1 -1 1
chi3 1 -z^2 -1 z^2 1 -z^2 -1 z^2 -1 z^2 1 -z^2 z^2 1 -z^2 -1 z^2 1 -z^2 -1 1 -z^2 -1 z^2 z^2 1 -z^2 -1 z^2 1 -z^2 -1
chi4 1 z^2 -1 -z^2 1 z^2 -1 -z^2 -1 -z^2 1 z^2 -z^2 1 z^2 -1 -z^2 1 z^2 -1 1 z^2 -1 -z^2 -z^2 1 z^2 -1 -z^2 1 z^2 -1
chi5 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1
chi6 1 1 1 1 1 1 1 1 1 1 1 1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 1 1 1 1 1 1 1 1
chi7 1 z^2 -1 -z^2 1 z^2 -1 -z^2 -1 -z^2 1 z^2 z^2 -1 -z^2 1 z^2 -1 -z^2 1 -1 -z^2 1 z^2 -z^2 1 z^2 -1 -z^2 1 z^2 -1
chi8 1 -z^2 -1 z^2 1 -z^2 -1 z^2 -1 z^2 1 -z^2 -z^2 -1 z^2 1 -z^2 -1 z^2 1 -1 z^2 1 -z^2 z^2 1 -z^2 -1 z^2 1 -z^2 -1
chi9 2 2*z 2*z^2 2*z^3 -2 -2*z -2*z^2 -2*z^3 0 0 0 0 z^2+1 z^3+z z^2-1 z^3-z -z^2-1 -z^3-z -z^2+1 -z^3+z 0 0 0 0 -z^3 1 z z^2 z^3 -1 -z -z^2
chi10 2 -2*z^3 -2*z^2 -2*z -2 2*z^3 2*z^2 2*z 0 0 0 0 z^2-1 z^3+z z^2+1 -z^3+z -z^2+1 -z^3-z -z^2-1 z^3-z 0 0 0 0 z 1 -z^3 -z^2 -z -1 z^3 z^2
chi11 2 -2*z 2*z^2 -2*z^3 -2 2*z -2*z^2 2*z^3 0 0 0 0 -z^2-1 z^3+z -z^2+1 z^3-z z^2+1 -z^3-z z^2-1 -z^3+z 0 0 0 0 z^3 1 -z z^2 -z^3 -1 z -z^2
chi12 2 2*z^3 -2*z^2 2*z -2 -2*z^3 2*z^2 -2*z 0 0 0 0 -z^2+1 z^3+z -z^2-1 -z^3+z z^2-1 -z^3-z z^2+1 z^3-z 0 0 0 0 -z 1 z^3 -z^2 z -1 -z^3 z^2
chi13 2 -2*z 2*z^2 -2*z^3 -2 2*z -2*z^2 2*z^3 0 0 0 0 z^2+1 -z^3-z z^2-1 -z^3+z -z^2-1 z^3+z -z^2+1 z^3-z 0 0 0 0 z^3 1 -z z^2 -z^3 -1 z -z^2
chi14 2 2*z^3 -2*z^2 2*z -2 -2*z^3 2*z^2 -2*z 0 0 0 0 z^2-1 -z^3-z z^2+1 z^3-z -z^2+1 z^3+z -z^2-1 -z^3+z 0 0 0 0 -z 1 z^3 -z^2 z -1 -z^3 z^2
chi15 2 2*z 2*z^2 2*z^3 -2 -2*z -2*z^2 -2*z^3 0 0 0 0 -z^2-1 -z^3-z -z^2+1 -z^3+z z^2+1 z^3+z z^2-1 z^3-z 0 0 0 0 -z^3 1 z z^2 z^3 -1 -z -z^2
chi16 2 -2*z^3 -2*z^2 -2*z -2 2*z^3 2*z^2 2*z 0 0 0 0 -z^2+1 -z^3-z -z^2-1 z^3-z z^2-1 z^3+z z^2+1 -z^3+z 0 0 0 0 z 1 -z^3 -z^2 -z -1 z^3 z^2
chi17 2 2 2 2 2 2 2 2 2 2 2 2 0 0 0 0 0 0 0 0 0 0 0 0 -1 -1 -1 -1 -1 -1 -1 -1
chi18 2 2*z^2 -2 -2*z^2 2 2*z^2 -2 -2*z^2 -2 -2*z^2 2 2*z^2 0 0 0 0 0 0 0 0 0 0 0 0 z^2 -1 -z^2 1 z^2 -1 -z^2 1
chi19 2 -2 2 -2 2 -2 2 -2 2 -2 2 -2 0 0 0 0 0 0 0 0 0 0 0 0 1 -1 1 -1 1 -1 1 -1
chi20 2 -2*z^2 -2 2*z^2 2 -2*z^2 -2 2*z^2 -2 2*z^2 2 -2*z^2 0 0 0 0 0 0 0 0 0 0 0 0 -z^2 -1 z^2 1 -z^2 -1 z^2 1
chi21 3 3*z^2 -3 -3*z^2 3 3*z^2 -3 -3*z^2 1 z^2 -1 -z^2 z^2 -1 -z^2 1 z^2 -1 -z^2 1 1 z^2 -1 -z^2 0 0 0 0 0 0 0 0
chi22 3 -3*z^2 -3 3*z^2 3 -3*z^2 -3 3*z^2 1 -z^2 -1 z^2 -z^2 -1 z^2 1 -z^2 -1 z^2 1 1 -z^2 -1 z^2 0 0 0 0 0 0 0 0
chi23 3 3 3 3 3 3 3 3 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 1 1 1 1 0 0 0 0 0 0 0 0
chi24 3 -3 3 -3 3 -3 3 -3 -1 1 -1 1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 0 0 0 0 0 0 0 0
chi25 3 -3*z^2 -3 3*z^2 3 -3*z^2 -3 3*z^2 1 -z^2 -1 z^2 z^2 1 -z^2 -1 z^2 1 -z^2 -1 -1 z^2 1 -z^2 0 0 0 0 0 0 0 0
chi26 3 3*z^2 -3 -3*z^2 3 3*z^2 -3 -3*z^2 1 z^2 -1 -z^2 -z^2 1 z^2 -1 -z^2 1 z^2 -1 -1 -z^2 1 z^2 0 0 0 0 0 0 0 0
chi27 3 -3 3 -3 3 -3 3 -3 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 0 0 0 0 0 0 0 0
chi28 3 3 3 3 3 3 3 3 -1 -1 -1 -1 1 1 1 1 1 1 1 1 -1 -1 -1 -1 0 0 0 0 0 0 0 0
chi29 4 -4*z^3 -4*z^2 -4*z -4 4*z^3 4*z^2 4*z 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -z -1 z^3 z^2 z 1 -z^3 -z^2
chi30 4 4*z 4*z^2 4*z^3 -4 -4*z -4*z^2 -4*z^3 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 z^3 -1 -z -z^2 -z^3 1 z z^2
chi31 4 4*z^3 -4*z^2 4*z -4 -4*z^3 4*z^2 -4*z 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 z -1 -z^3 z^2 -z 1 z^3 -z^2
chi32 4 -4*z 4*z^2 -4*z^3 -4 4*z -4*z^2 4*z^3 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -z^3 -1 z -z^2 z^3 1 -z z^2
)TABLE";

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

SeriesHead head(std::initializer_list<std::pair<long, unsigned>> terms) {
  return SeriesHead(terms.begin(), terms.end());
}

}  // namespace

const CharTableData& character_table() {
  static const CharTableData table = [] {
    CharTableData t;
    std::istringstream in(kCharacterTable);
    for (std::string line; std::getline(in, line);) {
      auto tok = split_ws(line);
      if (tok.empty()) continue;
      if (tok.size() != 33) throw Error(Errc::ParseError, "reference row '" + tok[0] + "' has wrong length");
      if (tok[0] == "ord" || tok[0] == "size") {
        auto& dst = tok[0] == "ord" ? t.orders : t.sizes;
        for (std::size_t k = 1; k < tok.size(); ++k) dst.push_back(std::stoul(tok[k]));
      } else {
        std::vector<CycNum> row;
        for (std::size_t k = 1; k < tok.size(); ++k) row.push_back(CycNum::parse(tok[k]));
        t.rows.push_back(std::move(row));
      }
    }
    if (t.rows.size() != 32) throw Error(Errc::ParseError, "reference table needs 32 character rows");
    return t;
  }();
  return table;
}

const std::vector<GammaDelta>& linear_generators() {
  static const std::vector<GammaDelta> g = {{0, 0}, {2, 0}, {1, 0}, {3, 0}, {0, 1}, {2, 1}, {1, 1}, {3, 1}};
  return g;
}

const std::vector<RepData>& reps() {
  static const std::vector<RepData> data = [] {
    std::vector<RepData> v;
    // Series t^k / ((1 - t^8)(1 - t^24)).
    const unsigned linear_k[8] = {0, 12, 6, 18, 12, 24, 18, 30};
    for (int i = 1; i <= 8; ++i) {
      const auto& g = linear_generators()[i - 1];
      RepData r;
      r.id = i;
      r.dim = 1;
      r.degrees = {linear_k[i - 1]};
      r.e = g.b;
      r.k = g.a;
      r.series = head({{1, linear_k[i - 1]}});
      v.push_back(r);
    }

    struct Two {
      long c;
      unsigned k, d1, d2;
      SeriesHead s;
    };
    const std::vector<Two> two = {
        {-1, 1, 1, 17, head({{1, 1}, {1, 9}, {2, 17}, {3, 25}, {3, 33}})},
        {9, 3, 7, 23, head({{1, 7}, {1, 15}, {2, 23}, {3, 31}, {3, 39}})},
        {-1, 5, 13, 29, head({{1, 13}, {1, 21}, {2, 29}, {3, 37}, {3, 45}})},
        {176, 3, 11, 19, head({{1, 11}, {2, 19}, {2, 27}, {3, 35}, {4, 43}})},
        {4, 1, 5, 13, head({{1, 5}, {2, 13}, {2, 21}, {3, 29}, {4, 37}})},
        {6, 3, 11, 19, head({{1, 11}, {2, 19}, {2, 27}, {3, 35}, {4, 43}})},
        {-1, 5, 17, 25, head({{1, 17}, {2, 25}, {2, 33}, {3, 41}, {4, 49}})},
        {1773, 3, 7, 23, head({{1, 7}, {1, 15}, {2, 23}, {3, 31}, {3, 39}})},
        {-411, 2, 8, 16, head({{1, 8}, {2, 16}, {2, 24}, {3, 32}, {4, 40}})},
        {-10, 4, 10, 26, head({{1, 10}, {1, 18}, {2, 26}, {3, 34}, {3, 42}})},
        {1, 2, 4, 20, head({{1, 4}, {1, 12}, {2, 20}, {3, 28}, {3, 36}})},
        {-1, 4, 14, 22, head({{1, 14}, {2, 22}, {2, 30}, {3, 38}, {4, 46}})},
    };
    for (std::size_t j = 0; j < two.size(); ++j) {
      RepData r;
      r.id = static_cast<int>(9 + j);
      r.dim = 2;
      r.degrees = {two[j].d1, two[j].d2};
      r.e = 1;
      r.k = two[j].k;
      r.c = two[j].c;
      r.series = two[j].s;
      v.push_back(r);
    }

    struct Three {
      long c;
      unsigned e, k, d;
    };
    const std::vector<Three> three = {
        {-2, 1, 3, 2}, {4, 1, 5, 6},      {-67, 1, 6, 8}, {1600, 1, 4, 4},
        {-19228, 2, 3, 6}, {2580, 2, 5, 10}, {80, 2, 6, 12}, {-894, 2, 4, 8},
    };
    for (std::size_t j = 0; j < three.size(); ++j) {
      const unsigned d = three[j].d;
      RepData r;
      r.id = static_cast<int>(21 + j);
      r.dim = 3;
      r.degrees = {d, d + 8, d + 16};
      r.e = three[j].e;
      r.k = three[j].k;
      r.c = three[j].c;
      r.series = head({{1, d}, {2, d + 8}, {3, d + 16}, {4, d + 24}, {5, d + 32}});
      const int i = r.id;
      r.tau = (i == 21 || i == 22 || i == 25 || i == 26) ? TauPattern::Symmetric3 : TauPattern::Skew3;
      v.push_back(r);
    }

    struct Four {
      long c;
      std::vector<unsigned> d;
      SeriesHead s;
    };
    const std::vector<Four> four = {
        {3276, {3, 11, 19, 27}, head({{1, 3}, {2, 11}, {3, 19}, {5, 27}, {6, 35}})},
        {-11780, {7, 15, 15, 23}, head({{1, 7}, {3, 15}, {4, 23}, {5, 31}, {7, 39}})},
        {344960, {9, 9, 17, 25}, head({{2, 9}, {3, 17}, {4, 25}, {6, 33}, {7, 41}})},
        {437400, {5, 13, 21, 21}, head({{1, 5}, {2, 13}, {4, 21}, {5, 29}, {6, 37}})},
    };
    for (std::size_t j = 0; j < four.size(); ++j) {
      RepData r;
      r.id = static_cast<int>(29 + j);
      r.dim = 4;
      r.degrees = four[j].d;
      r.e = 2;
      r.k = 6;
      r.c = four[j].c;
      r.series = four[j].s;
      r.tau = r.id <= 30 ? TauPattern::Plus4 : TauPattern::Minus4;
      v.push_back(r);
    }
    return v;
  }();
  return data;
}

const RepData& rep(int id) {
  if (id < 1 || id > 32) throw Error(Errc::ParseError, "representation index " + std::to_string(id) + " out of range");
  return reps()[static_cast<std::size_t>(id - 1)];
}

}  // namespace g9::reference
