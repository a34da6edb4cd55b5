#pragma once

#include <string>

#include <json.hpp>

#include "detthick/partition.hpp"

namespace detthick::cli {

using nlohmann::ordered_json;

/// "(4,4,3)"; the empty partition is "()".
std::string paren(const std::vector<long long>& parts);
std::string paren(const Partition& x);
/// "(4^2,3)".
std::string exponent_form(const Partition& x);

/// Text and LaTeX renderings of a command's JSON document.
std::string render_text(const ordered_json& doc);
std::string render_latex(const ordered_json& doc);

}  // namespace detthick::cli
