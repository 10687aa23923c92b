#ifndef G9_CHARTABLE_IO_HPP
#define G9_CHARTABLE_IO_HPP

// Output formats shared by the command-line tools, and the character
// table renderers in the published row/column order.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "g9/cyclo.hpp"
#include "g9/reps.hpp"

namespace g9 {

enum class Format { Text, Json, Csv, Latex };

std::optional<Format> parse_format(std::string_view name);
std::string format_name(Format f);

// "-\zeta^3+\zeta", "2\zeta^2+1".
std::string cyc_to_latex(const CycNum& c);
// "z^2TD" -> "\zeta^{2}TD", "D^2" -> "D^{2}".
std::string class_label_to_latex(const std::string& label);

nlohmann::json chartable_to_json(const CharacterTable& ct);
std::string render_chartable(const CharacterTable& ct, Format f);

}  // namespace g9

#endif  // G9_CHARTABLE_IO_HPP
