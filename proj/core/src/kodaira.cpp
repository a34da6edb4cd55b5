#include "detthick/kodaira.hpp"

#include <algorithm>
#include <iterator>
#include <optional>
#include <stdexcept>

#include "detthick/parallel.hpp"
#include "detthick/zset.hpp"

namespace detthick {

namespace {

// Largest weight admissible for (z,l;t,s=0), as a size: positions left of the
// first pin are capped by λ_1 <= -m, later ones by the nearest pin to their
// left. Valid only when s = 0.
long long largest_size_s0(const Partition& z, int l, const IndexTuple& tuple,
                          int m, int n) {
  long long cap = -m;
  long long total = 0;
  std::vector<std::optional<long long>> fixed(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n - l; ++i) {
    const int ti = tuple.t[static_cast<std::size_t>(i - 1)];
    fixed[static_cast<std::size_t>(ti + i)] = ti - z.row(n + 1 - i) - m;
  }
  for (int k = 1; k <= n; ++k) {
    if (const auto& f = fixed[static_cast<std::size_t>(k)]) cap = std::min(cap, *f);
    total += cap;
  }
  return total;
}

}  // namespace

VanishingReport kodaira_check(const IdealSpec& x, int m, int jmax) {
  const int n = x.n();
  if (!x.is_proper_nonzero()) {
    throw std::invalid_argument("kodaira_check needs a proper nonzero ideal");
  }
  if (n < 2 || m < n || jmax < 1) {
    throw std::invalid_argument("kodaira_check needs m >= n >= 2 and jmax >= 1");
  }
  VanishingReport rep;
  rep.m = m;
  rep.n = n;
  rep.ideal = x;
  rep.jmax = jmax;
  rep.kmax = m + n - 3;

  const long long mn = static_cast<long long>(m) * n;
  const ZSet zs = zset_general(x);
  const DegreeWindow window{-mn + 1, -mn + jmax, false};

  struct PerK {
    std::vector<ExtComponent> found;
    bool mechanism = true;
  };
  auto check_k = [&](std::size_t k) {
    PerK r;
    const long long j = mn - 1 - static_cast<long long>(k);
    for (const auto& [z, l] : zs.pairs()) {
      for (const auto& tuple : index_tuples(z, l, m, n)) {
        if (tuple.j != j || !minimal_weight(z, l, tuple, m, n)) continue;
        if (tuple.s != 0 || largest_size_s0(z, l, tuple, m, n) > -mn) {
          r.mechanism = false;
        }
      }
    }
    r.found = ext_graded(zs, j, m, window).components;
    return r;
  };
  for (auto& r : parallel_map(static_cast<std::size_t>(rep.kmax + 1), check_k)) {
    rep.mechanism_holds = rep.mechanism_holds && r.mechanism;
    std::move(r.found.begin(), r.found.end(), std::back_inserter(rep.violations));
  }
  return rep;
}

int sing_codim(int p, int m, int n) {
  if (p < 2 || p > n || n > m) {
    throw std::invalid_argument("sing_codim needs 2 <= p <= n <= m");
  }
  return p == 2 ? m + n - 2 : m + n - 2 * p + 3;
}

}  // namespace detthick
