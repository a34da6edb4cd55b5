#include "detthick/regularity.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "detthick/checked.hpp"
#include "detthick/zset.hpp"

namespace detthick {

long long RegValue::value() const {
  if (!value_) throw std::logic_error("regularity is -inf");
  return *value_;
}

RegValue RegValue::plus(long long k) const {
  return value_ ? RegValue(checked_add(*value_, k)) : RegValue();
}

std::strong_ordering operator<=>(const RegValue& a, const RegValue& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) {
    return static_cast<int>(!a.is_neg_inf()) <=> static_cast<int>(!b.is_neg_inf());
  }
  return a.value() <=> b.value();
}

std::string to_string(const RegValue& r) {
  return r.is_neg_inf() ? std::string("-inf") : std::to_string(r.value());
}

namespace {

void check_flat(const Partition& z, int l, int n) {
  if (l < 0 || l > n - 1 || static_cast<int>(z.length()) > n) {
    throw std::invalid_argument("need 0 <= l <= n-1 and z in P_n");
  }
  for (int i = 2; i <= l + 1; ++i) {
    if (z.row(i) != z.row(1)) {
      throw std::invalid_argument("need z_1 = ... = z_{l+1}");
    }
  }
}

// z_{n-i} - z_{n+1-i}, reading z_0 as z_1.
int gap(const Partition& z, int n, int i) {
  return z.row(std::max(n - i, 1)) - z.row(n + 1 - i);
}

}  // namespace

std::vector<std::vector<int>> reg_tuples(const Partition& z, int l, int n) {
  check_flat(z, l, n);
  const int len = n - l + 1;
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(len));
  t.back() = l;
  // Fill t_{n-l}, ..., t_1 from the fixed last entry downward.
  auto rec = [&](auto&& self, int i) -> void {
    if (i == 0) {
      out.push_back(t);
      return;
    }
    const int next = t[static_cast<std::size_t>(i)];
    const int maxdrop = std::min(gap(z, n, i), next);
    for (int drop = 0; drop <= maxdrop; ++drop) {
      t[static_cast<std::size_t>(i - 1)] = next - drop;
      self(self, i - 1);
    }
  };
  rec(rec, len - 1);
  std::sort(out.begin(), out.end());
  return out;
}

long long f_value(const Partition& z, int l, const std::vector<int>& t, int n) {
  if (static_cast<int>(t.size()) != n - l + 1) {
    throw std::invalid_argument("tuple length must be n-l+1");
  }
  long long f = 0;
  for (int i = 1; i <= n - l; ++i) {
    const long long ti = t[static_cast<std::size_t>(i - 1)];
    const long long tn = t[static_cast<std::size_t>(i)];
    f += ti * (gap(z, n, i) - tn + ti);
  }
  return f;
}

long long reg_j(const Partition& z, int l, int n) {
  long long best = std::numeric_limits<long long>::min();
  const long long zsize = z.size();
  for (const auto& t : reg_tuples(z, l, n)) {
    long long tsum = 0;
    for (int v : t) tsum += v;
    best = std::max(best, zsize + tsum - l - f_value(z, l, t, n));
  }
  return best;
}

RegValue reg_quotient(const IdealSpec& x, int m) {
  if (m < x.n()) throw std::invalid_argument("reg_quotient needs m >= n");
  if (x.is_unit()) return RegValue::neg_inf();
  if (x.is_zero()) return RegValue(0);
  const ZSet zs = zset_general(x);
  RegValue best;
  for (const auto& [z, l] : zs.pairs()) {
    best = std::max(best, RegValue(reg_j(z, l, x.n())));
  }
  return best;
}

RegValue r_bruteforce(int l, int p, int n, int d) {
  if (l < 0 || l >= p || p > n || d < 1) {
    throw std::invalid_argument("R needs 0 <= l < p <= n and d >= 1");
  }
  const int rows = n - l;
  const long long size_hi = static_cast<long long>(d) * (p - l) - 1;
  const long long tail_lo = static_cast<long long>(d) * (p - 1 - l);
  if (size_hi < 0) return RegValue::neg_inf();

  RegValue best;
  std::vector<int> u(static_cast<std::size_t>(rows));
  // y_1 <= d - 1 always holds on YU(l,p,n,d).
  for (const auto& yp : enumerate(BoxBound{rows, d - 1})) {
    const long long ysize = yp.size();
    if (ysize > size_hi) break;  // canonical order is by size
    if (ysize - yp.first() < tail_lo) continue;
    const std::vector<int> y = yp.padded(static_cast<std::size_t>(rows));
    const long long base = static_cast<long long>(l) * y[0] + ysize;
    u[0] = l;
    // u_{i+1} in [max(0, u_i - (y_i - y_{i+1})), u_i].
    auto rec = [&](auto&& self, int i, long long acc) -> void {
      if (i == rows) {
        best = std::max(best, RegValue(acc));
        return;
      }
      const int dy = y[static_cast<std::size_t>(i - 1)] - y[static_cast<std::size_t>(i)];
      const int prev = u[static_cast<std::size_t>(i - 1)];
      for (int v = std::max(0, prev - dy); v <= prev; ++v) {
        u[static_cast<std::size_t>(i)] = v;
        self(self, i + 1, acc + v - static_cast<long long>(v) * (dy - (prev - v)));
      }
    };
    rec(rec, 1, base + l);
  }
  return best;
}

bool r_closed_applies(int l, int p, int n, int d) {
  if (l < 0 || l >= p || p > n || d < 1) return false;
  if (p <= n - 1) return d >= n - 1;
  return true;
}

RegValue r_closed(int l, int p, int n, int d) {
  if (!r_closed_applies(l, p, n, d)) {
    throw std::domain_error("no closed form for R at these parameters");
  }
  if (p == n && l <= n - 2) return RegValue::neg_inf();
  return RegValue(static_cast<long long>(p) * d - 1 + static_cast<long long>(l) * (p - 1 - l));
}

const char* to_string(PowerKind kind) {
  switch (kind) {
    case PowerKind::power: return "power";
    case PowerKind::satpower: return "satpower";
    case PowerKind::symbolic: return "symbolic";
  }
  return "?";
}

PowerKind parse_power_kind(const std::string& name) {
  if (name == "power") return PowerKind::power;
  if (name == "satpower") return PowerKind::satpower;
  if (name == "symbolic") return PowerKind::symbolic;
  throw std::invalid_argument("unknown kind '" + name + "' (power, satpower, symbolic)");
}

PowerReg reg_power_family(int p, int d, int m, int n, PowerKind kind) {
  if (p < 1 || p > n || n > m || d < 1) {
    throw std::invalid_argument("need 1 <= p <= n <= m and d >= 1");
  }
  int first = 0;
  if (kind == PowerKind::satpower) {
    if (p < 2) throw std::invalid_argument("satpower needs p >= 2");
    first = 1;
  } else if (kind == PowerKind::symbolic) {
    first = p - 1;
  }
  PowerReg out;
  RegValue best;
  for (int l = first; l <= p - 1; ++l) {
    const RegValue r = r_bruteforce(l, p, n, d);
    if (r_closed_applies(l, p, n, d) && r_closed(l, p, n, d) != r) {
      throw std::logic_error("closed form of R disagrees with brute force");
    }
    out.per_l.emplace(l, r);
    best = std::max(best, r);
  }
  out.reg = best.plus(1);
  return out;
}

bool has_linear_resolution(int p, int d, int m, int n) {
  const RegValue r = reg_power_family(p, d, m, n, PowerKind::power).reg;
  return r == RegValue(static_cast<long long>(p) * d);
}

}  // namespace detthick
