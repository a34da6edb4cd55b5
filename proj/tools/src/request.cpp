#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "detthick/cli.hpp"
#include "json_io.hpp"

namespace detthick::cli {

using nlohmann::ordered_json;

namespace {

// Scalar fields each command reads; everything else is left out of the
// serialized request so equal requests serialize equally.
const std::set<std::string>& fields_of(const std::string& command) {
  static const std::map<std::string, std::set<std::string>> table = {
      {"zset", {"ideal"}},
      {"ext", {"ideal", "cohdeg", "window"}},
      {"ext-map", {"sub", "super", "cohdeg", "window"}},
      {"reg", {"ideal"}},
      {"reg-powers", {"p", "dmax", "kind"}},
      {"hilbert", {"ideal", "rmax"}},
      {"kodaira", {"ideal", "jmax"}},
      {"linear-res", {"p", "d"}},
      {"bblsz-table", {"dmax"}},
  };
  const auto it = table.find(command);
  if (it == table.end()) throw std::invalid_argument("unknown command '" + command + "'");
  return it->second;
}

const char* format_name(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::latex: return "latex";
    case Format::text: break;
  }
  return "text";
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "latex") return Format::latex;
  if (s == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + s + "'");
}

IdealSpec ideal_from_json(const ordered_json& j, int n) {
  if (j.is_string()) return parse_ideal_spec(j.get<std::string>(), n);
  if (!j.is_array()) throw std::invalid_argument("ideal must be a spec string or a list of partitions");
  std::vector<Partition> gens;
  for (const auto& g : j) gens.emplace_back(g.get<std::vector<int>>());
  return IdealSpec::normalize(n, std::move(gens));
}

}  // namespace

ordered_json partition_json(const Partition& x) {
  return ordered_json(std::vector<int>(x.parts().begin(), x.parts().end()));
}

ordered_json ideal_json(const IdealSpec& x) {
  ordered_json out = ordered_json::array();
  for (const auto& g : x.gens()) out.push_back(partition_json(g));
  return out;
}

ordered_json reg_json(const RegValue& r) {
  return r.is_neg_inf() ? ordered_json(nullptr) : ordered_json(r.value());
}

ordered_json request_json(const Request& req) {
  const auto& used = fields_of(req.command);
  ordered_json j;
  j["command"] = req.command;
  j["m"] = req.m;
  j["n"] = req.n;
  auto put_ideal = [&](const char* key, const std::optional<IdealSpec>& x) {
    if (!used.count(key)) return;
    if (!x) throw std::invalid_argument(std::string("missing ideal '") + key + "'");
    j[key] = ideal_json(*x);
  };
  put_ideal("ideal", req.ideal);
  put_ideal("sub", req.sub);
  put_ideal("super", req.super);
  if (used.count("cohdeg")) {
    if (!req.cohdeg) throw std::invalid_argument("missing cohomological degree");
    j["cohdeg"] = *req.cohdeg;
  }
  if (used.count("window") && req.window) {
    j["window"] = {{"lo", req.window->lo}, {"hi", req.window->hi}};
  }
  if (used.count("p")) j["p"] = req.p;
  if (used.count("d")) j["d"] = req.d;
  if (used.count("dmax")) j["dmax"] = req.dmax;
  if (used.count("rmax")) j["rmax"] = req.rmax;
  if (used.count("jmax")) j["jmax"] = req.jmax;
  if (used.count("kind")) j["kind"] = to_string(req.kind);
  j["format"] = format_name(req.format);
  return j;
}

std::string request_to_json(const Request& req) { return request_json(req).dump(2); }

Request request_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (j.contains("request")) j = j["request"];
  try {
    Request req;
    req.command = j.at("command").get<std::string>();
    const auto& used = fields_of(req.command);
    req.n = j.at("n").get<int>();
    req.m = j.value("m", req.n);
    if (used.count("ideal")) req.ideal = ideal_from_json(j.at("ideal"), req.n);
    if (used.count("sub")) req.sub = ideal_from_json(j.at("sub"), req.n);
    if (used.count("super")) req.super = ideal_from_json(j.at("super"), req.n);
    if (used.count("cohdeg")) req.cohdeg = j.at("cohdeg").get<long long>();
    if (used.count("window") && j.contains("window")) {
      req.window = DegreeWindow{j["window"].at("lo").get<long long>(),
                                j["window"].at("hi").get<long long>(), false};
    }
    if (used.count("p")) req.p = j.at("p").get<int>();
    if (used.count("d")) req.d = j.at("d").get<int>();
    if (used.count("dmax")) req.dmax = j.at("dmax").get<int>();
    if (used.count("rmax")) req.rmax = j.at("rmax").get<int>();
    if (used.count("jmax")) req.jmax = j.value("jmax", 15);
    if (used.count("kind")) req.kind = parse_power_kind(j.value("kind", std::string("power")));
    req.format = parse_format(j.value("format", std::string("json")));
    return req;
  } catch (const ordered_json::exception& e) {
    throw std::invalid_argument(std::string("bad request: ") + e.what());
  }
}

}  // namespace detthick::cli
