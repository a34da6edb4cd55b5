#pragma once

#include <json.hpp>

#include "detthick/cli.hpp"

namespace detthick::cli {

nlohmann::ordered_json partition_json(const Partition& x);
nlohmann::ordered_json ideal_json(const IdealSpec& x);
/// -∞ as null.
nlohmann::ordered_json reg_json(const RegValue& r);
nlohmann::ordered_json request_json(const Request& req);

}  // namespace detthick::cli
