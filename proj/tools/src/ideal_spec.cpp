#include <charconv>
#include <stdexcept>
#include <string>
#include <vector>

#include "detthick/cli.hpp"

namespace detthick::cli {

namespace {

[[noreturn]] void fail(std::string_view text, std::size_t col, const std::string& what) {
  throw std::invalid_argument("ideal spec '" + std::string(text) + "' at column " +
                              std::to_string(col + 1) + ": " + what);
}

// Splits on ':' keeping the starting column of each field.
std::vector<std::pair<std::size_t, std::string_view>> fields(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t colon = text.find(':', pos);
    out.emplace_back(pos, text.substr(pos, colon == text.npos ? text.npos : colon - pos));
    if (colon == text.npos) break;
    pos = colon + 1;
  }
  return out;
}

int integer_field(std::string_view text, std::size_t col, std::string_view field,
                  const char* name) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    fail(text, col, std::string("expected an integer for ") + name);
  }
  return value;
}

Partition partition_field(std::string_view text, std::size_t col, std::string_view field) {
  if (field == "0") return {};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (!field.empty()) {
    const std::size_t comma = field.find(',', pos);
    const std::string_view item =
        field.substr(pos, comma == field.npos ? field.npos : comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value < 0) {
      fail(text, col + pos, "expected a nonnegative integer part");
    }
    parts.push_back(value);
    if (comma == field.npos) break;
    pos = comma + 1;
  }
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (parts[i] < parts[i + 1]) fail(text, col, "partition is not weakly decreasing");
  }
  return Partition(std::move(parts));
}

}  // namespace

IdealSpec parse_ideal_spec(std::string_view text, int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const auto parts = fields(text);
  const std::string_view head = parts.front().second;

  if (head == "gens") {
    if (parts.size() != 2) fail(text, 0, "expected gens:P;P;...");
    const auto [col, body] = parts[1];
    std::vector<Partition> gens;
    std::size_t pos = 0;
    while (true) {
      const std::size_t semi = body.find(';', pos);
      const std::string_view item =
          body.substr(pos, semi == body.npos ? body.npos : semi - pos);
      Partition g = partition_field(text, col + pos, item);
      if (static_cast<int>(g.length()) > n) {
        fail(text, col + pos, "partition has more than n = " + std::to_string(n) + " parts");
      }
      gens.push_back(std::move(g));
      if (semi == body.npos) break;
      pos = semi + 1;
    }
    return IdealSpec::normalize(n, std::move(gens));
  }

  const bool family = head == "power" || head == "symbolic" || head == "satpower";
  if (!family && head != "minors") {
    fail(text, 0, "unknown ideal kind (power, symbolic, satpower, minors, gens)");
  }
  const std::size_t want = family ? 3 : 2;
  if (parts.size() != want) {
    fail(text, 0, family ? "expected " + std::string(head) + ":p:d" : "expected minors:p");
  }
  const int p = integer_field(text, parts[1].first, parts[1].second, "p");
  if (p < 1 || p > n) {
    fail(text, parts[1].first, "p must satisfy 1 <= p <= n = " + std::to_string(n));
  }
  if (!family) return minors_gens(p, n);
  const int d = integer_field(text, parts[2].first, parts[2].second, "d");
  if (d < 1) fail(text, parts[2].first, "d must be at least 1");
  if (head == "power") return power_gens(p, d, n);
  if (head == "symbolic") return symbolic_gens(p, d, n);
  return satpower_gens(p, d, n);
}

}  // namespace detthick::cli
