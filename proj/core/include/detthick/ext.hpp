#pragma once

#include <optional>
#include <vector>

#include "detthick/ideal.hpp"
#include "detthick/schur.hpp"
#include "detthick/zset.hpp"

namespace detthick {

/// (s, t_1..t_{n-l}) with 0 <= s <= t_1 <= ... <= t_{n-l} <= l, and the
/// cohomological degree j = mn - l^2 - s(m-n) - 2 Σ t_i it contributes to.
struct IndexTuple {
  int s = 0;
  std::vector<int> t;
  long long j = 0;

  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
  friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;
};

/// Inclusive range of internal degrees |λ|.
struct DegreeWindow {
  long long lo = 0;
  long long hi = 0;
  /// Set by default_window when no tuple is feasible at the requested j.
  bool vanishes = false;

  bool contains(long long r) const { return lo <= r && r <= hi; }
};

/// One irreducible summand S_{λ(s)}C^m ⊗ S_λ C^n of Ext^j(J_{z,l}, S).
struct ExtComponent {
  ZPair zpair;
  IndexTuple tuple;
  Weight lambda;
  Weight lambda_s;
  long long degree = 0;
  BigInt dim;
};

struct ExtGraded {
  long long j = 0;
  DegreeWindow window;
  std::vector<ExtComponent> components;
  GradedTable table;
};

/// All index tuples for J_{z,l}. Requires m >= n, 0 <= l <= n and
/// z_1 = ... = z_l; throws std::invalid_argument otherwise.
std::vector<IndexTuple> index_tuples(const Partition& z, int l, int m, int n);

/// The weight of W(z,l;t,s) of least size, or nullopt if W is empty.
std::optional<Weight> minimal_weight(const Partition& z, int l,
                                     const IndexTuple& tuple, int m, int n);

/// Every λ in W(z,l;t,s) with window.lo <= |λ| <= window.hi, in
/// lexicographic order.
std::vector<Weight> enumerate_weights(const Partition& z, int l,
                                      const IndexTuple& tuple, int m, int n,
                                      DegreeWindow window);

/// lo = least |minimal_weight| over the feasible tuples at cohomological
/// degree j, hi = lo + 10. [0, 10] with `vanishes` set if nothing is
/// feasible.
DegreeWindow default_window(const ZSet& zs, long long j, int m);

/// Ext^j(S/I_X, S) restricted to the window, as the multiset of summands
/// coming from the factors J_{z,l}, (z,l) in `zs`.
ExtGraded ext_graded(const ZSet& zs, long long j, int m, DegreeWindow window);
ExtGraded ext_graded(const IdealSpec& x, long long j, int m, DegreeWindow window);

/// Kernel, image and cokernel of Ext^j(S/I_super, S) -> Ext^j(S/I_sub, S)
/// induced by I_sub ⊆ I_super.
struct ExtMapParts {
  ZSet ker_pairs;
  ZSet im_pairs;
  ZSet coker_pairs;
  ExtGraded ker;
  ExtGraded im;
  ExtGraded coker;
};

/// Throws std::invalid_argument unless I_sub ⊆ I_super.
ExtMapParts ext_map_parts(const IdealSpec& sub, const IdealSpec& super,
                          long long j, int m, DegreeWindow window);

}  // namespace detthick
