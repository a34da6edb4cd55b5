#include "detthick/schur.hpp"

#include <stdexcept>
#include <string>

#include "detthick/checked.hpp"

namespace detthick {

Weight::Weight(std::vector<long long> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    if (entries_[i] < entries_[i + 1]) {
      throw std::invalid_argument("weight is not dominant");
    }
  }
}

Weight Weight::from_partition(const Partition& x, int k) {
  if (static_cast<int>(x.length()) > k) {
    throw std::invalid_argument("partition has more parts than the rank");
  }
  std::vector<long long> e(static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < x.length(); ++i) e[i] = x[i];
  return Weight(std::move(e));
}

long long Weight::size() const {
  long long total = 0;
  for (long long v : entries_) total = checked_add(total, v);
  return total;
}

BigInt schur_dim(const Weight& lambda) {
  const std::size_t k = lambda.rank();
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      num *= BigInt(lambda[i]) - BigInt(lambda[j]) + BigInt(j - i);
      den *= BigInt(j - i);
    }
  }
  BigInt rem;
  BigInt quot;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) throw std::logic_error("Weyl dimension is not an integer");
  return quot;
}

BigInt schur_dim(const Partition& x, int k) {
  return schur_dim(Weight::from_partition(x, k));
}

Weight weight_expand(const Weight& lambda, int s, int m) {
  const int n = static_cast<int>(lambda.rank());
  if (m < n || s < 0 || s > n) {
    throw std::invalid_argument("weight_expand needs m >= n and 0 <= s <= n");
  }
  if (s >= 1 && lambda[static_cast<std::size_t>(s - 1)] < s - n) {
    throw std::invalid_argument("weight_expand: λ_s < s - n");
  }
  if (s < n && lambda[static_cast<std::size_t>(s)] > s - m) {
    throw std::invalid_argument("weight_expand: λ_{s+1} > s - m");
  }
  std::vector<long long> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < s; ++i) out.push_back(lambda[static_cast<std::size_t>(i)]);
  for (int i = 0; i < m - n; ++i) out.push_back(s - n);
  for (int i = s; i < n; ++i) out.push_back(lambda[static_cast<std::size_t>(i)] + (m - n));
  return Weight(std::move(out));
}

BigInt j_graded_dim(const Partition& z, int l, long long r, int m, int n) {
  if (m < n || static_cast<int>(z.length()) > n || l < 0 || l > n) {
    throw std::invalid_argument("j_graded_dim needs m >= n >= nparts(z), 0 <= l <= n");
  }
  long long fixed = 0;
  for (int i = l + 1; i <= n; ++i) fixed += z.row(i);
  const long long budget = r - fixed;
  long long floor_sum = 0;
  for (int i = 1; i <= l; ++i) floor_sum += z.row(i);
  if (budget < floor_sum) return 0;

  // Rows 1..l are free above z; row l+1 onward equal z.
  std::vector<int> x = z.padded(static_cast<std::size_t>(n));
  BigInt total = 0;
  auto rec = [&](auto&& self, int row, long long left) -> void {
    if (row > l) {
      if (left != 0) return;
      const Partition part(x);
      total += schur_dim(part, m) * schur_dim(part, n);
      return;
    }
    // Rows below `row` (within 1..l) need at least their z-values.
    long long below = 0;
    for (int i = row + 1; i <= l; ++i) below += z.row(i);
    const long long lo = std::max<long long>(z.row(row), row < n ? x[static_cast<std::size_t>(row)] : 0);
    long long hi = left - below;
    if (row > 1) hi = std::min<long long>(hi, x[static_cast<std::size_t>(row - 2)]);
    for (long long v = hi; v >= lo; --v) {
      x[static_cast<std::size_t>(row - 1)] = static_cast<int>(v);
      self(self, row + 1, left - v);
    }
    x[static_cast<std::size_t>(row - 1)] = z.row(row);
  };
  rec(rec, 1, budget);
  return total;
}

BigInt quotient_graded_dim(const IdealSpec& x, long long r, int m) {
  const int n = x.n();
  if (m < n) throw std::invalid_argument("quotient_graded_dim needs m >= n");
  if (r < 0) return 0;
  BigInt total = 0;
  for (const auto& y : enumerate(BoxBound{n, static_cast<int>(r)}, r)) {
    if (!member(x, y)) total += schur_dim(y, m) * schur_dim(y, n);
  }
  return total;
}

BigInt polynomial_ring_dim(long long r, int m, int n) {
  if (r < 0) return 0;
  const long long vars = static_cast<long long>(m) * n;
  BigInt out = 1;
  for (long long i = 1; i <= r; ++i) {
    out *= vars + i - 1;
    out /= i;
  }
  return out;
}

}  // namespace detthick
