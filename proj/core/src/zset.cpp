#include "detthick/zset.hpp"

#include <algorithm>
#include <cassert>
#include <iterator>
#include <limits>
#include <stdexcept>
#include <string>

#include "detthick/parallel.hpp"

namespace detthick {

namespace {

bool flat_top(const Partition& z, int rows) {
  for (int i = 2; i <= rows; ++i) {
    if (z.row(i) != z.row(1)) return false;
  }
  return true;
}

void require_family_range(int p, int d, int n) {
  if (n < 1 || p < 1 || p > n || d < 1) {
    throw std::invalid_argument("need 1 <= p <= n and d >= 1");
  }
}

}  // namespace

bool canonical_less(const ZPair& a, const ZPair& b) {
  if (a.z != b.z) return canonical_less(a.z, b.z);
  return a.l < b.l;
}

ZSet::ZSet(int n, std::vector<ZPair> pairs) : n_(n), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end(),
            [](const ZPair& a, const ZPair& b) { return canonical_less(a, b); });
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool ZSet::contains(const ZPair& p) const {
  return std::binary_search(
      pairs_.begin(), pairs_.end(), p,
      [](const ZPair& a, const ZPair& b) { return canonical_less(a, b); });
}

ZSet ZSet::with_l_at_least(int p) const {
  std::vector<ZPair> out;
  std::copy_if(pairs_.begin(), pairs_.end(), std::back_inserter(out),
               [p](const ZPair& q) { return q.l >= p; });
  return ZSet(n_, std::move(out));
}

ZSet ZSet::with_l(int l) const {
  std::vector<ZPair> out;
  std::copy_if(pairs_.begin(), pairs_.end(), std::back_inserter(out),
               [l](const ZPair& q) { return q.l == l; });
  return ZSet(n_, std::move(out));
}

ZSet set_difference(const ZSet& a, const ZSet& b) {
  std::vector<ZPair> out;
  std::copy_if(a.pairs().begin(), a.pairs().end(), std::back_inserter(out),
               [&](const ZPair& q) { return !b.contains(q); });
  return ZSet(a.n(), std::move(out));
}

ZSet set_intersection(const ZSet& a, const ZSet& b) {
  std::vector<ZPair> out;
  std::copy_if(a.pairs().begin(), a.pairs().end(), std::back_inserter(out),
               [&](const ZPair& q) { return b.contains(q); });
  return ZSet(a.n(), std::move(out));
}

bool is_subset(const ZSet& a, const ZSet& b) {
  return std::all_of(a.pairs().begin(), a.pairs().end(),
                     [&](const ZPair& q) { return b.contains(q); });
}

ZSet zset_general(const IdealSpec& x) {
  if (!x.is_proper_nonzero()) {
    throw std::invalid_argument("Z(X) needs a proper nonzero ideal");
  }
  const int n = x.n();
  int width = 0;
  for (const auto& g : x.gens()) width = std::max(width, g.first());

  // Column heights x'_{c+1} per generator, read from the conjugate.
  std::vector<Partition> cols;
  cols.reserve(x.gens().size());
  for (const auto& g : x.gens()) cols.push_back(conjugate(g));

  // Every generator has x'_{c+1} = 0 once c >= width, so condition (2) of
  // the definition fails there; c ranges over [0, width).
  auto pairs_for_width = [&](int c) {
    std::vector<ZPair> found;
    std::vector<Partition> candidates;
    if (c == 0) {
      candidates.emplace_back();
    } else {
      for (auto& z : enumerate(BoxBound{n, c})) {
        if (z.first() == c) candidates.push_back(std::move(z));
      }
    }
    std::vector<Partition> cut;
    cut.reserve(x.gens().size());
    for (const auto& g : x.gens()) cut.push_back(truncate(g, c));

    for (auto& z : candidates) {
      int min_height = std::numeric_limits<int>::max();
      bool any = false;
      for (std::size_t k = 0; k < cut.size(); ++k) {
        if (!leq(cut[k], z)) continue;
        any = true;
        min_height = std::min(min_height, cols[k][static_cast<std::size_t>(c)]);
      }
      // A height of 0 would force l = -1: such z lies in I_X itself.
      if (!any || min_height == 0) continue;
      const int l = min_height - 1;
      if (!flat_top(z, l + 1)) {
        throw std::logic_error("Z(X) pair violates z_1 = ... = z_{l+1}");
      }
      found.push_back(ZPair{std::move(z), l});
    }
    return found;
  };

  std::vector<ZPair> all;
  for (auto& chunk : parallel_map(static_cast<std::size_t>(width),
                                  [&](std::size_t c) { return pairs_for_width(static_cast<int>(c)); })) {
    std::move(chunk.begin(), chunk.end(), std::back_inserter(all));
  }
  return ZSet(n, std::move(all));
}

ZSet zset_of_quotient(const IdealSpec& x) {
  if (x.is_unit()) return ZSet(x.n(), {});
  return zset_general(x);
}

ZSet zset_power(int p, int d, int n) {
  require_family_range(p, d, n);
  const long long pd = static_cast<long long>(p) * d;
  std::vector<ZPair> out;
  for (auto& z : enumerate(BoxBound{n, d - 1})) {
    const long long c = z.first();
    const long long size = z.size();
    for (int l = 0; l <= p - 1 && l < n; ++l) {
      if (!flat_top(z, l + 1)) break;
      if (size + (d - c) * l + 1 <= pd && pd <= size + (d - c) * (l + 1)) {
        out.push_back(ZPair{z, l});
      }
    }
  }
  return ZSet(n, std::move(out));
}

ZSet zset_symbolic(int p, int d, int n) {
  require_family_range(p, d, n);
  std::vector<ZPair> out;
  for (auto& z : enumerate(BoxBound{n, d - 1})) {
    if (!flat_top(z, p)) continue;
    long long tail = 0;
    for (int i = p; i <= n; ++i) tail += z.row(i);
    if (tail <= d - 1) out.push_back(ZPair{std::move(z), p - 1});
  }
  return ZSet(n, std::move(out));
}

}  // namespace detthick
