#include "detthick/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "detthick/checked.hpp"

namespace detthick {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw std::invalid_argument("partition has a negative part");
    }
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw std::invalid_argument("partition is not weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("rectangle with negative dimension");
  }
  if (rows == 0 || cols == 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

long long Partition::size() const {
  long long total = 0;
  for (int p : parts_) total = checked_add(total, p);
  return total;
}

std::vector<int> Partition::padded(std::size_t k) const {
  std::vector<int> out(k, 0);
  std::copy_n(parts_.begin(), std::min(k, parts_.size()), out.begin());
  return out;
}

Partition conjugate(const Partition& x) {
  std::vector<int> out(static_cast<std::size_t>(x.first()), 0);
  for (int p : x.parts()) {
    for (int c = 0; c < p; ++c) ++out[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(out));
}

Partition truncate(const Partition& x, int c) {
  std::vector<int> out;
  out.reserve(x.length());
  for (int p : x.parts()) out.push_back(std::min(p, std::max(c, 0)));
  return Partition(std::move(out));
}

bool leq(const Partition& x, const Partition& y) {
  if (x.length() > y.length()) return false;
  for (std::size_t i = 0; i < x.length(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

Partition sup(const Partition& x, const Partition& y) {
  const std::size_t len = std::max(x.length(), y.length());
  std::vector<int> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = std::max(x[i], y[i]);
  return Partition(std::move(out));
}

bool canonical_less(const Partition& a, const Partition& b) {
  const long long sa = a.size();
  const long long sb = b.size();
  if (sa != sb) return sa < sb;
  return b < a;
}

namespace {

// Fills rows [pos, rows) of `cur` with parts <= cap summing to `remaining`.
void fill_exact(int rows, int cap, long long remaining, std::vector<int>& cur,
                std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  const int left = rows - static_cast<int>(cur.size());
  if (left <= 0 || cap <= 0) return;
  if (static_cast<long long>(cap) * left < remaining) return;
  const int hi = static_cast<int>(std::min<long long>(cap, remaining));
  for (int v = hi; v >= 1; --v) {
    cur.push_back(v);
    fill_exact(rows, v, remaining - v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate(BoxBound bound, std::optional<long long> size) {
  std::vector<Partition> out;
  if (bound.rows < 0 || bound.cols < 0) return out;
  const long long max_size = checked_mul(bound.rows, bound.cols);
  long long lo = 0;
  long long hi = max_size;
  if (size) {
    if (*size < 0 || *size > max_size) return out;
    lo = hi = *size;
  }
  std::vector<int> cur;
  // Within a size, fill_exact emits descending lexicographic order.
  for (long long r = lo; r <= hi; ++r) {
    fill_exact(bound.rows, bound.cols, r, cur, out);
  }
  return out;
}

std::string to_string(const Partition& x) {
  std::string out;
  for (std::size_t i = 0; i < x.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(x[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return {};
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item =
        text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("bad partition part '" + std::string(item) +
                                  "' at offset " + std::to_string(pos));
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace detthick
