#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detthick/ideal.hpp"
#include "detthick/partition.hpp"

namespace detthick {

/// An integer or -∞ (the regularity of the zero module, or the max over an
/// empty set). Ordered with -∞ below every integer.
class RegValue {
 public:
  RegValue() = default;  // -∞
  RegValue(long long v) : value_(v) {}  // NOLINT: implicit by design
  static RegValue neg_inf() { return RegValue(); }

  bool is_neg_inf() const { return !value_.has_value(); }
  /// Throws std::logic_error on -∞.
  long long value() const;
  /// -∞ stays -∞.
  RegValue plus(long long k) const;

  friend bool operator==(const RegValue&, const RegValue&) = default;
  friend std::strong_ordering operator<=>(const RegValue& a, const RegValue& b);

 private:
  std::optional<long long> value_;
};

std::string to_string(const RegValue& r);

/// T_l(z): tuples (t_1..t_{n-l}, t_{n-l+1} = l) of nonnegative integers with
/// 0 <= t_{i+1} - t_i <= z_{n-i} - z_{n+1-i}. Requires 0 <= l <= n-1 and
/// z_1 = ... = z_{l+1}.
std::vector<std::vector<int>> reg_tuples(const Partition& z, int l, int n);

long long f_value(const Partition& z, int l, const std::vector<int>& t, int n);

/// reg J_{z,l} = max over T_l(z) of |z| + |t| - l - f.
long long reg_j(const Partition& z, int l, int n);

/// reg(S/I_X) as the max of reg_j over Z(X). The unit ideal gives -∞ and
/// the zero ideal 0. Requires m >= n.
RegValue reg_quotient(const IdealSpec& x, int m);

/// R_{l,p,n,d} by exhaustive search. Requires 0 <= l < p <= n, d >= 1.
RegValue r_bruteforce(int l, int p, int n, int d);

/// Closed form of R_{l,p,n,d} where known: pd - 1 + l(p-1-l) for
/// 0 <= l < p <= n-1 with d >= n-1, or p = n with l = n-1; -∞ for p = n
/// and l <= n-2. Throws std::domain_error elsewhere.
RegValue r_closed(int l, int p, int n, int d);
bool r_closed_applies(int l, int p, int n, int d);

enum class PowerKind { power, satpower, symbolic };

const char* to_string(PowerKind kind);
/// Throws std::invalid_argument on unknown names.
PowerKind parse_power_kind(const std::string& name);

struct PowerReg {
  /// Regularity of the ideal: 1 + max of per_l.
  RegValue reg;
  /// R_{l,p,n,d} for each l in the family's range.
  std::map<int, RegValue> per_l;
};

/// Regularity of I_p^d, (I_p^d)^sat or I_p^(d) from the R values. Where the
/// closed form applies it is checked against brute force
/// (std::logic_error on disagreement). satpower needs p >= 2.
PowerReg reg_power_family(int p, int d, int m, int n, PowerKind kind);

/// reg(I_p^d) == p*d.
bool has_linear_resolution(int p, int d, int m, int n);

}  // namespace detthick
