#include "detthick/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace detthick {

namespace {

void require_same_n(const IdealSpec& x, const IdealSpec& y) {
  if (x.n() != y.n()) {
    throw std::invalid_argument("ideals live in different rings (n=" +
                                std::to_string(x.n()) + " vs n=" +
                                std::to_string(y.n()) + ")");
  }
}

void require_family_range(int p, int d, int n) {
  if (n < 1 || p < 1 || p > n || d < 1) {
    throw std::invalid_argument("need 1 <= p <= n and d >= 1 (got p=" +
                                std::to_string(p) + ", d=" + std::to_string(d) +
                                ", n=" + std::to_string(n) + ")");
  }
}

}  // namespace

IdealSpec IdealSpec::normalize(int n, std::vector<Partition> raw) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  for (const auto& x : raw) {
    if (static_cast<int>(x.length()) > n) {
      throw std::invalid_argument("partition (" + to_string(x) + ") has more than n=" +
                                  std::to_string(n) + " parts");
    }
  }
  std::sort(raw.begin(), raw.end(), canonical_less);
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  // In canonical order a generator can only be contained in a later one.
  std::vector<Partition> minimal;
  for (auto& x : raw) {
    const bool covered = std::any_of(minimal.begin(), minimal.end(),
                                     [&](const Partition& g) { return leq(g, x); });
    if (!covered) minimal.push_back(std::move(x));
  }
  return IdealSpec(n, std::move(minimal));
}

bool member(const IdealSpec& x, const Partition& y) {
  return std::any_of(x.gens().begin(), x.gens().end(),
                     [&](const Partition& g) { return leq(g, y); });
}

bool subideal(const IdealSpec& x, const IdealSpec& y) {
  require_same_n(x, y);
  return std::all_of(x.gens().begin(), x.gens().end(),
                     [&](const Partition& g) { return member(y, g); });
}

IdealSpec intersect(const IdealSpec& x, const IdealSpec& y) {
  require_same_n(x, y);
  std::vector<Partition> raw;
  raw.reserve(x.gens().size() * y.gens().size());
  for (const auto& a : x.gens()) {
    for (const auto& b : y.gens()) raw.push_back(sup(a, b));
  }
  return IdealSpec::normalize(x.n(), std::move(raw));
}

IdealSpec saturate(const IdealSpec& x, int p) {
  if (p < 0 || p > x.n()) {
    throw std::invalid_argument("saturation index must satisfy 0 <= p <= n");
  }
  std::vector<Partition> raw;
  raw.reserve(x.gens().size());
  for (const auto& g : x.gens()) {
    // Column heights are weakly decreasing, so the kept columns are a prefix.
    const Partition cols = conjugate(g);
    int keep = 0;
    while (keep < static_cast<int>(cols.length()) && cols[static_cast<std::size_t>(keep)] > p) {
      ++keep;
    }
    raw.push_back(truncate(g, keep));
  }
  return IdealSpec::normalize(x.n(), std::move(raw));
}

IdealSpec power_gens(int p, int d, int n) {
  require_family_range(p, d, n);
  return IdealSpec::normalize(
      n, enumerate(BoxBound{n, d}, static_cast<long long>(p) * d));
}

IdealSpec symbolic_gens(int p, int d, int n) {
  require_family_range(p, d, n);
  std::vector<Partition> raw;
  for (auto& x : enumerate(BoxBound{n, d})) {
    bool flat = true;
    for (int i = 2; i <= p; ++i) flat = flat && x.row(i) == x.row(1);
    if (!flat) continue;
    long long tail = 0;
    for (int i = p; i <= n; ++i) tail += x.row(i);
    if (tail == d) raw.push_back(std::move(x));
  }
  return IdealSpec::normalize(n, std::move(raw));
}

IdealSpec satpower_gens(int p, int d, int n) {
  return saturate(power_gens(p, d, n), 1);
}

IdealSpec minors_gens(int p, int n) {
  if (p < 1 || p > n) throw std::invalid_argument("need 1 <= p <= n for minors");
  return IdealSpec::normalize(n, {Partition::rectangle(p, 1)});
}

IdealSpec succ_gens(const Partition& z, int l, int n) {
  if (static_cast<int>(z.length()) > n || l < 0 || l > n) {
    throw std::invalid_argument("succ_gens needs nparts(z) <= n and 0 <= l <= n");
  }
  // The least x >= z with x_i > z_i is sup(z, ((z_i + 1)^i)).
  std::vector<Partition> raw;
  for (int i = l + 1; i <= n; ++i) {
    raw.push_back(sup(z, Partition::rectangle(i, z.row(i) + 1)));
  }
  return IdealSpec::normalize(n, std::move(raw));
}

IdealSpec yset_gens(const Partition& z, int l, int n) {
  if (static_cast<int>(z.length()) > n || l < 0 || l >= n) {
    throw std::invalid_argument("yset_gens needs nparts(z) <= n and 0 <= l < n");
  }
  for (int i = 2; i <= l + 1; ++i) {
    if (z.row(i) != z.row(1)) {
      throw std::invalid_argument("yset_gens needs z_1 = ... = z_{l+1}");
    }
  }
  std::vector<Partition> raw{Partition::rectangle(l + 1, z.row(1) + 1)};
  for (int i = l + 2; i <= n; ++i) {
    if (z.row(i - 1) > z.row(i)) raw.push_back(Partition::rectangle(i, z.row(i) + 1));
  }
  return IdealSpec::normalize(n, std::move(raw));
}

std::vector<Partition> pieri_vertical(const Partition& z, int p, int n) {
  if (p < 0 || p > n || static_cast<int>(z.length()) > n) {
    throw std::invalid_argument("pieri_vertical needs 0 <= p <= n and nparts(z) <= n");
  }
  std::vector<Partition> out;
  std::vector<int> t = z.padded(static_cast<std::size_t>(n));
  // Choose the rows receiving a box, top to bottom; row i may take one iff
  // the row above (after its own update) stays at least as long.
  auto rec = [&](auto&& self, int row, int left) -> void {
    if (left == 0) {
      out.emplace_back(t);
      return;
    }
    if (n - row < left) return;
    for (int i = row; i < n; ++i) {
      if (n - i < left) break;
      if (i > 0 && t[static_cast<std::size_t>(i - 1)] < t[static_cast<std::size_t>(i)] + 1) {
        continue;
      }
      ++t[static_cast<std::size_t>(i)];
      self(self, i + 1, left - 1);
      --t[static_cast<std::size_t>(i)];
    }
  };
  rec(rec, 0, p);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

int radical_index(const IdealSpec& x) {
  if (!x.is_proper_nonzero()) {
    throw std::invalid_argument("radical_index needs a proper nonzero ideal");
  }
  std::size_t p = x.gens().front().length();
  for (const auto& g : x.gens()) p = std::min(p, g.length());
  return static_cast<int>(p);
}

}  // namespace detthick
