#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "detthick/ideal.hpp"
#include "detthick/partition.hpp"

namespace detthick {

using BigInt = boost::multiprecision::cpp_int;

/// A dominant integral weight of GL_k: k weakly decreasing integers, possibly
/// negative.
class Weight {
 public:
  Weight() = default;
  /// Throws std::invalid_argument unless the entries are weakly decreasing.
  explicit Weight(std::vector<long long> entries);
  Weight(std::initializer_list<long long> entries)
      : Weight(std::vector<long long>(entries)) {}
  /// A partition padded with zeros to k entries.
  static Weight from_partition(const Partition& x, int k);

  const std::vector<long long>& entries() const { return entries_; }
  std::size_t rank() const { return entries_.size(); }
  long long operator[](std::size_t i) const { return entries_[i]; }
  long long size() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

 private:
  std::vector<long long> entries_;
};

/// Degree -> exact dimension.
using GradedTable = std::map<long long, BigInt>;

/// dim S_λ C^k by the Weyl dimension formula, k = λ.rank().
BigInt schur_dim(const Weight& lambda);
BigInt schur_dim(const Partition& x, int k);

/// λ(s) = (λ_1..λ_s, (s-n)^(m-n), λ_{s+1}+(m-n), ..., λ_n+(m-n)) for an
/// n-entry λ. Requires λ_s >= s-n and λ_{s+1} <= s-m so the result is
/// dominant; throws std::invalid_argument otherwise.
Weight weight_expand(const Weight& lambda, int s, int m);

/// Degree-r piece of J_{z,l} = I_z / I_{succ(z,l)}: the sum over x >= z
/// agreeing with z below row l of dim S_x C^m · dim S_x C^n.
BigInt j_graded_dim(const Partition& z, int l, long long r, int m, int n);

/// Degree-r piece of S / I_X by summing the Cauchy components outside I_X.
BigInt quotient_graded_dim(const IdealSpec& x, long long r, int m);

/// dim S_r = binom(mn + r - 1, r).
BigInt polynomial_ring_dim(long long r, int m, int n);

}  // namespace detthick
