#include "g9/chartable_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

namespace g9 {

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "latex") return Format::Latex;
  return std::nullopt;
}

std::string format_name(Format f) {
  switch (f) {
    case Format::Text:
      return "text";
    case Format::Json:
      return "json";
    case Format::Csv:
      return "csv";
    case Format::Latex:
      return "latex";
  }
  return "?";
}

std::string cyc_to_latex(const CycNum& c) {
  std::string out;
  for (int k = 3; k >= 0; --k) {
    const Rat& v = c[static_cast<std::size_t>(k)];
    if (sgn(v) == 0) continue;
    if (sgn(v) < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const Rat mag = abs(v);
    std::string num;
    if (mag.get_den() == 1) {
      num = mag.get_str();
    } else {
      num = "\\frac{" + mag.get_num().get_str() + "}{" + mag.get_den().get_str() + "}";
    }
    if (k == 0) {
      out += num;
      continue;
    }
    if (mag != 1) out += num;
    out += "\\zeta";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::string class_label_to_latex(const std::string& label) {
  std::string out;
  for (std::size_t p = 0; p < label.size(); ++p) {
    const char ch = label[p];
    if (ch == 'z') {
      out += (p + 1 < label.size() && label[p + 1] == '^') ? "\\zeta" : "\\zeta ";
    } else if (ch == '^') {
      std::size_t q = p + 1;
      while (q < label.size() && std::isdigit(static_cast<unsigned char>(label[q]))) ++q;
      out += "^{" + label.substr(p + 1, q - p - 1) + "}";
      p = q - 1;
    } else {
      out += ch;
    }
  }
  return out;
}

nlohmann::json chartable_to_json(const CharacterTable& ct) {
  nlohmann::json j;
  auto classes = nlohmann::json::array();
  for (std::size_t c = 0; c < ct.class_labels.size(); ++c) {
    classes.push_back({{"index", c + 1}, {"label", ct.class_labels[c]}, {"ord", ct.orders[c]}, {"size", ct.sizes[c]}});
  }
  j["classes"] = classes;
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < ct.rows.size(); ++i) {
    auto vals = nlohmann::json::array();
    for (const auto& v : ct.rows[i]) vals.push_back(v.to_string());
    rows.push_back({{"chi", i + 1}, {"values", vals}});
  }
  j["rows"] = rows;
  return j;
}

namespace {

std::string two_digit(std::size_t c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%02zu", c);
  return buf;
}

std::string render_text(const CharacterTable& ct) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head = {""};
  std::vector<std::string> ord = {"ord"};
  std::vector<std::string> size = {"|C|"};
  for (std::size_t c = 0; c < ct.class_labels.size(); ++c) {
    head.push_back(ct.class_labels[c]);
    ord.push_back(std::to_string(ct.orders[c]));
    size.push_back(std::to_string(ct.sizes[c]));
  }
  grid.push_back(head);
  grid.push_back(ord);
  grid.push_back(size);
  for (std::size_t i = 0; i < ct.rows.size(); ++i) {
    std::vector<std::string> row = {"chi" + std::to_string(i + 1)};
    for (const auto& v : ct.rows[i]) row.push_back(v.to_string());
    grid.push_back(row);
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : grid)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    out << line << "\n";
  }
  return out.str();
}

std::string render_csv(const CharacterTable& ct) {
  std::ostringstream out;
  out << "row";
  for (const auto& l : ct.class_labels) out << "," << l;
  out << "\nord";
  for (auto o : ct.orders) out << "," << o;
  out << "\nsize";
  for (auto s : ct.sizes) out << "," << s;
  out << "\n";
  for (std::size_t i = 0; i < ct.rows.size(); ++i) {
    out << "chi" << i + 1;
    for (const auto& v : ct.rows[i]) out << "," << v.to_string();
    out << "\n";
  }
  return out.str();
}

// Two landscape arrays of 16 columns each.
std::string render_latex(const CharacterTable& ct) {
  std::ostringstream out;
  const std::size_t n = ct.class_labels.size();
  for (std::size_t start = 0; start < n; start += 16) {
    const std::size_t end = std::min(n, start + 16);
    out << "\\begin{array}{c|*{" << end - start << "}{c}}\n ";
    for (std::size_t c = start; c < end; ++c) out << " & \\mathfrak{C}_{" << two_digit(c + 1) << "}";
    out << "\\\\\n\\hline\n\\mathrm{Rep.}\n";
    for (std::size_t c = start; c < end; ++c) out << "& " << class_label_to_latex(ct.class_labels[c]) << " ";
    out << "\\\\\n\\mathrm{ord}\n";
    for (std::size_t c = start; c < end; ++c) out << "& " << ct.orders[c] << " ";
    out << "\\\\\n|\\mathcal C|\n";
    for (std::size_t c = start; c < end; ++c) out << "& " << ct.sizes[c] << " ";
    out << "\\\\\n\\hline\n";
    for (std::size_t i = 0; i < ct.rows.size(); ++i) {
      out << "\\chi_{" << i + 1 << "}";
      for (std::size_t c = start; c < end; ++c) out << "& " << cyc_to_latex(ct.rows[i][c]);
      out << "\\\\\n";
    }
    out << "\\end{array}\n";
    if (end < n) out << "\n";
  }
  return out.str();
}

}  // namespace

std::string render_chartable(const CharacterTable& ct, Format f) {
  switch (f) {
    case Format::Text:
      return render_text(ct);
    case Format::Json:
      return chartable_to_json(ct).dump(2) + "\n";
    case Format::Csv:
      return render_csv(ct);
    case Format::Latex:
      return render_latex(ct);
  }
  return {};
}

}  // namespace g9
