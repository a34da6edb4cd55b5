#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "detthick/ext.hpp"
#include "detthick/ideal.hpp"
#include "detthick/regularity.hpp"

namespace detthick::cli {

enum class Format { text, json, latex };

/// A fully described invocation. Ideals are stored resolved (normalized
/// generators), so a request read back from JSON runs identically.
struct Request {
  std::string command;
  int m = 0;
  int n = 0;
  std::optional<IdealSpec> ideal;
  std::optional<IdealSpec> sub;
  std::optional<IdealSpec> super;
  std::optional<long long> cohdeg;
  std::optional<DegreeWindow> window;
  int p = 0;
  int d = 0;
  int dmax = 0;
  int rmax = 0;
  int jmax = 15;
  PowerKind kind = PowerKind::power;
  Format format = Format::text;
  /// Macaulay2 script destination; not part of the serialized request.
  std::string emit_m2;
};

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

/// power:p:d | symbolic:p:d | satpower:p:d | minors:p | gens:P;P;...
/// where each P is a comma separated partition ("0" or "" for the empty
/// one). Throws std::invalid_argument with the failing column.
IdealSpec parse_ideal_spec(std::string_view text, int n);

std::string request_to_json(const Request& req);
/// Accepts either a request object or a full JSON output carrying one under
/// "request". Ideals may be generator lists or spec strings.
Request request_from_json(std::string_view text);

/// Executes a request. Exit code 0 on success, 1 on invalid input, 2 on an
/// internal consistency failure.
Outcome run(const Request& req);

/// Parses argv (without the program name) and runs it.
Outcome run_args(const std::vector<std::string>& args);

/// Macaulay2 script computing the same quantity as an `ext` or `reg`
/// request, for external cross-checking.
std::string macaulay2_script(const Request& req);

}  // namespace detthick::cli
