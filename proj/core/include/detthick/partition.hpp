#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace detthick {

/// An integer partition stored without trailing zeros.
///
/// Parts are indexed from 0; reading past the last stored part yields 0, so
/// (4,2,1) and (4,2,1,0,0) are the same value. The built-in ordering
/// (`operator<=>`) is lexicographic on the parts and only serves as a total
/// order for containers. The containment order x <= y (row by row) is
/// `leq()`.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument if `parts` is not weakly decreasing or has
  /// a negative entry. Zero parts are dropped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// (cols^rows)
  static Partition rectangle(int rows, int cols);

  int operator[](std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }
  /// 1-based accessor matching the usual x_i notation; x_0 is undefined and
  /// callers handle it.
  int row(int i) const {
    return i >= 1 ? (*this)[static_cast<std::size_t>(i - 1)] : 0;
  }

  std::span<const int> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  /// |x|, with overflow checking.
  long long size() const;

  /// The parts padded with zeros (or truncated) to exactly `k` entries.
  std::vector<int> padded(std::size_t k) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Enumeration bounds: partitions with at most `rows` parts, each <= `cols`.
struct BoxBound {
  int rows = 0;
  int cols = 0;

  bool fits(const Partition& x) const {
    return static_cast<int>(x.length()) <= rows && x.first() <= cols;
  }
};

Partition conjugate(const Partition& x);

/// x(c): every part capped at c, i.e. the first c columns of x.
Partition truncate(const Partition& x, int c);

/// x_i <= y_i for all i.
bool leq(const Partition& x, const Partition& y);

/// Row-wise maximum; the least partition containing both.
Partition sup(const Partition& x, const Partition& y);

/// The canonical order used everywhere output must be stable: size
/// ascending, then descending lexicographic within a size.
bool canonical_less(const Partition& a, const Partition& b);

/// Every partition in the box (of exact size `size` if given) exactly once,
/// in canonical order.
std::vector<Partition> enumerate(BoxBound bound,
                                 std::optional<long long> size = std::nullopt);

/// "4,2,1"; the empty partition prints as "".
std::string to_string(const Partition& x);

/// Inverse of to_string. Accepts "" and "0" for the empty partition and
/// tolerates trailing zero parts. Throws std::invalid_argument on syntax
/// errors or a non weakly decreasing list.
Partition parse_partition(std::string_view text);

}  // namespace detthick
