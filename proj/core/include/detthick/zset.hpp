#pragma once

#include <compare>
#include <vector>

#include "detthick/ideal.hpp"
#include "detthick/partition.hpp"

namespace detthick {

/// Index (z, l) of a filtration factor J_{z,l} = I_z / I_{succ(z,l)}.
/// Always z_1 = ... = z_{l+1}.
struct ZPair {
  Partition z;
  int l = 0;

  friend bool operator==(const ZPair&, const ZPair&) = default;
};

/// Canonical order: z in canonical partition order, then l.
bool canonical_less(const ZPair& a, const ZPair& b);

/// A finite set of ZPairs over P_n, kept sorted in canonical order with no
/// duplicates.
class ZSet {
 public:
  ZSet() = default;
  ZSet(int n, std::vector<ZPair> pairs);

  int n() const { return n_; }
  const std::vector<ZPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool contains(const ZPair& p) const;

  /// Pairs with l >= p.
  ZSet with_l_at_least(int p) const;
  ZSet with_l(int l) const;

  friend bool operator==(const ZSet&, const ZSet&) = default;

 private:
  int n_ = 0;
  std::vector<ZPair> pairs_;
};

ZSet set_difference(const ZSet& a, const ZSet& b);
ZSet set_intersection(const ZSet& a, const ZSet& b);
bool is_subset(const ZSet& a, const ZSet& b);

/// Z(X) for an arbitrary proper nonzero ideal, computed from the defining
/// conditions. Throws std::invalid_argument for the zero or unit ideal.
ZSet zset_general(const IdealSpec& x);

/// Like zset_general, but the unit ideal (S/I = 0) yields the empty set.
ZSet zset_of_quotient(const IdealSpec& x);

/// Closed form for Z(X_p^d), the factors of S/I_p^d.
ZSet zset_power(int p, int d, int n);

/// Closed form for Z(X_p^(d)), the factors of S/I_p^(d).
ZSet zset_symbolic(int p, int d, int n);

}  // namespace detthick
