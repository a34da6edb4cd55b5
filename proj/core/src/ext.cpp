#include "detthick/ext.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "detthick/checked.hpp"
#include "detthick/parallel.hpp"

namespace detthick {

namespace {

// z_i with the convention z_0 = z_1, used when l = 0.
long long zrow(const Partition& z, int i) { return z.row(std::max(i, 1)); }

// Fixed entries of W(z,l;t,s): position t_i + i (1-based) holds
// t_i - z_{n+1-i} - m, i = 1..n-l. The augmented entry t_{n-l+1} = l gives
// the floor value l - z_l - m at the virtual position n+1.
struct Pins {
  std::vector<int> pos;        // 1-based positions, strictly increasing
  std::vector<long long> val;  // one more entry than pos: the floor
};

Pins pins_of(const Partition& z, int l, const IndexTuple& tuple, int m, int n) {
  Pins p;
  for (int i = 1; i <= n - l; ++i) {
    const int ti = tuple.t[static_cast<std::size_t>(i - 1)];
    p.pos.push_back(ti + i);
    p.val.push_back(ti - zrow(z, n + 1 - i) - m);
  }
  p.val.push_back(l - zrow(z, l) - m);
  return p;
}

void check_tuple_shape(int l, const IndexTuple& tuple, int m, int n) {
  if (m < n || l < 0 || l > n || static_cast<int>(tuple.t.size()) != n - l) {
    throw std::invalid_argument("index tuple does not match (l, n)");
  }
  int prev = tuple.s;
  if (prev < 0) throw std::invalid_argument("index tuple has s < 0");
  for (int ti : tuple.t) {
    if (ti < prev) throw std::invalid_argument("index tuple is not weakly increasing");
    prev = ti;
  }
  if (prev > l) throw std::invalid_argument("index tuple exceeds l");
}

}  // namespace

std::vector<IndexTuple> index_tuples(const Partition& z, int l, int m, int n) {
  if (m < n || l < 0 || l > n || static_cast<int>(z.length()) > n) {
    throw std::invalid_argument("index_tuples needs m >= n and 0 <= l <= n");
  }
  for (int i = 2; i <= l; ++i) {
    if (z.row(i) != z.row(1)) {
      throw std::invalid_argument("index_tuples needs z_1 = ... = z_l");
    }
  }
  std::vector<IndexTuple> out;
  const long long base = static_cast<long long>(m) * n - static_cast<long long>(l) * l;
  std::vector<int> t(static_cast<std::size_t>(n - l));
  for (int s = 0; s <= l; ++s) {
    auto rec = [&](auto&& self, std::size_t k, int floor, long long sum) -> void {
      if (k == t.size()) {
        out.push_back(IndexTuple{s, t, base - static_cast<long long>(s) * (m - n) - 2 * sum});
        return;
      }
      for (int v = floor; v <= l; ++v) {
        t[k] = v;
        self(self, k + 1, v, sum + v);
      }
    };
    rec(rec, 0, s, 0);
  }
  return out;
}

std::optional<Weight> minimal_weight(const Partition& z, int l,
                                     const IndexTuple& tuple, int m, int n) {
  check_tuple_shape(l, tuple, m, n);
  const Pins pins = pins_of(z, l, tuple, m, n);
  const int s = tuple.s;
  // λ_{s+1} <= s - m against the first pinned value, then dominance between
  // consecutive pins (the last one being the floor).
  if (pins.val.front() > s - m) return std::nullopt;
  for (std::size_t i = 0; i + 1 < pins.val.size(); ++i) {
    if (pins.val[i] < pins.val[i + 1]) return std::nullopt;
  }
  std::vector<long long> lam(static_cast<std::size_t>(n));
  for (int k = 1; k <= s; ++k) lam[static_cast<std::size_t>(k - 1)] = s - n;
  // Each position takes the value of the next pin at or after it.
  std::size_t seg = 0;
  for (int k = s + 1; k <= n; ++k) {
    while (seg < pins.pos.size() && pins.pos[seg] < k) ++seg;
    lam[static_cast<std::size_t>(k - 1)] = pins.val[seg];
  }
  return Weight(std::move(lam));
}

std::vector<Weight> enumerate_weights(const Partition& z, int l,
                                      const IndexTuple& tuple, int m, int n,
                                      DegreeWindow window) {
  check_tuple_shape(l, tuple, m, n);
  if (window.lo > window.hi) throw std::invalid_argument("empty degree window");
  const Pins pins = pins_of(z, l, tuple, m, n);
  const int s = tuple.s;
  const long long floor_n = pins.val.back();

  std::vector<std::optional<long long>> fixed(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < pins.pos.size(); ++i) {
    fixed[static_cast<std::size_t>(pins.pos[i])] = pins.val[i];
  }
  // cap[k]: least pinned value at positions <= k (dominance from the left).
  std::vector<long long> cap(static_cast<std::size_t>(n) + 1,
                             std::numeric_limits<long long>::max());
  for (int k = 1; k <= n; ++k) {
    cap[static_cast<std::size_t>(k)] = cap[static_cast<std::size_t>(k - 1)];
    if (fixed[static_cast<std::size_t>(k)]) {
      cap[static_cast<std::size_t>(k)] =
          std::min(cap[static_cast<std::size_t>(k)], *fixed[static_cast<std::size_t>(k)]);
    }
  }

  std::vector<Weight> out;
  std::vector<long long> lam(static_cast<std::size_t>(n));
  // Right to left: position k given positions k+1..n summing to `partial`.
  auto rec = [&](auto&& self, int k, long long partial) -> void {
    if (k == 0) {
      if (partial >= window.lo) out.emplace_back(lam);
      return;
    }
    long long lo = (k == n) ? floor_n : lam[static_cast<std::size_t>(k)];
    lo = std::max(lo, floor_n);
    if (k <= s) lo = std::max<long long>(lo, s - n);
    long long hi = cap[static_cast<std::size_t>(k)];
    if (k >= s + 1) hi = std::min<long long>(hi, s - m);
    // Positions 1..k all hold at least λ_k.
    const long long room = checked_add(window.hi, -partial);
    long long budget = room / k;
    if (room % k != 0 && room < 0) --budget;
    hi = std::min(hi, budget);
    if (const auto& f = fixed[static_cast<std::size_t>(k)]) {
      if (*f < lo || *f > hi) return;
      lo = hi = *f;
    }
    for (long long v = lo; v <= hi; ++v) {
      lam[static_cast<std::size_t>(k - 1)] = v;
      self(self, k - 1, partial + v);
    }
  };
  if (n >= 1) rec(rec, n, 0);
  std::sort(out.begin(), out.end());
  return out;
}

DegreeWindow default_window(const ZSet& zs, long long j, int m) {
  const int n = zs.n();
  std::optional<long long> lo;
  for (const auto& [z, l] : zs.pairs()) {
    for (const auto& tuple : index_tuples(z, l, m, n)) {
      if (tuple.j != j) continue;
      if (auto w = minimal_weight(z, l, tuple, m, n)) {
        lo = lo ? std::min(*lo, w->size()) : w->size();
      }
    }
  }
  if (!lo) return DegreeWindow{0, 10, true};
  return DegreeWindow{*lo, *lo + 10, false};
}

ExtGraded ext_graded(const ZSet& zs, long long j, int m, DegreeWindow window) {
  const int n = zs.n();
  if (m < n) throw std::invalid_argument("ext_graded needs m >= n");
  auto per_pair = [&](std::size_t idx) {
    const ZPair& zp = zs.pairs()[idx];
    std::vector<ExtComponent> found;
    for (const auto& tuple : index_tuples(zp.z, zp.l, m, n)) {
      if (tuple.j != j) continue;
      for (auto& lam : enumerate_weights(zp.z, zp.l, tuple, m, n, window)) {
        Weight lam_s = weight_expand(lam, tuple.s, m);
        BigInt dim = schur_dim(lam_s) * schur_dim(lam);
        const long long degree = lam.size();
        found.push_back(ExtComponent{zp, tuple, std::move(lam), std::move(lam_s),
                                     degree, std::move(dim)});
      }
    }
    return found;
  };
  ExtGraded out;
  out.j = j;
  out.window = window;
  for (auto& chunk : parallel_map(zs.size(), per_pair)) {
    for (auto& c : chunk) {
      out.table[c.degree] += c.dim;
      out.components.push_back(std::move(c));
    }
  }
  return out;
}

ExtGraded ext_graded(const IdealSpec& x, long long j, int m, DegreeWindow window) {
  if (!x.is_proper_nonzero()) {
    throw std::invalid_argument("ext_graded needs a proper nonzero ideal");
  }
  return ext_graded(zset_general(x), j, m, window);
}

ExtMapParts ext_map_parts(const IdealSpec& sub, const IdealSpec& super,
                          long long j, int m, DegreeWindow window) {
  if (!subideal(sub, super)) {
    throw std::invalid_argument("ext_map_parts: first ideal is not contained in the second");
  }
  const ZSet zsub = zset_of_quotient(sub);
  const ZSet zsup = zset_of_quotient(super);
  ExtMapParts out;
  out.ker_pairs = set_difference(zsup, zsub);
  out.im_pairs = set_intersection(zsup, zsub);
  out.coker_pairs = set_difference(zsub, zsup);
  out.ker = ext_graded(out.ker_pairs, j, m, window);
  out.im = ext_graded(out.im_pairs, j, m, window);
  out.coker = ext_graded(out.coker_pairs, j, m, window);
  return out;
}

}  // namespace detthick
