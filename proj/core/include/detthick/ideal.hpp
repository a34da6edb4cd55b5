#pragma once

#include <vector>

#include "detthick/partition.hpp"

namespace detthick {

/// A GL-invariant ideal I_X in the coordinate ring of m x n matrices, given
/// by the antichain X of its minimal generating partitions in P_n.
///
/// The generator list is kept in canonical partition order, so two specs
/// describe the same ideal iff they compare equal. An empty list is the zero
/// ideal; the single generator () is the unit ideal.
class IdealSpec {
 public:
  /// Keeps the minimal elements of `raw`. Throws std::invalid_argument if
  /// n < 1 or some partition has more than n parts.
  static IdealSpec normalize(int n, std::vector<Partition> raw);
  static IdealSpec zero(int n) { return normalize(n, {}); }
  static IdealSpec unit(int n) { return normalize(n, {Partition{}}); }

  int n() const { return n_; }
  const std::vector<Partition>& gens() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().empty(); }
  bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }

  friend bool operator==(const IdealSpec&, const IdealSpec&) = default;

 private:
  IdealSpec(int n, std::vector<Partition> gens)
      : n_(n), gens_(std::move(gens)) {}

  int n_ = 1;
  std::vector<Partition> gens_;
};

/// S_y lies in I_X, i.e. some generator is contained in y.
bool member(const IdealSpec& x, const Partition& y);

/// I_X is contained in I_Y. Throws std::invalid_argument on mismatched n.
bool subideal(const IdealSpec& x, const IdealSpec& y);

/// I_X ∩ I_Y, generated by pairwise sups.
IdealSpec intersect(const IdealSpec& x, const IdealSpec& y);

/// I_X : I_p^∞, obtained by deleting from each generator its columns of
/// height <= p. p = 0 leaves X unchanged.
IdealSpec saturate(const IdealSpec& x, int p);

/// Generators of I_p^d: |x| = p*d and x_1 <= d.
IdealSpec power_gens(int p, int d, int n);

/// Generators of the symbolic power I_p^(d): x_1 = ... = x_p and
/// x_p + ... + x_n = d.
IdealSpec symbolic_gens(int p, int d, int n);

/// (I_p^d)^sat, i.e. power_gens saturated with respect to I_1.
IdealSpec satpower_gens(int p, int d, int n);

/// I_p, the ideal of p x p minors: {(1^p)}.
IdealSpec minors_gens(int p, int n);

/// Minimal elements of succ(z,l): partitions containing z that gained a box
/// in some row below row l. The zero ideal when l = n.
IdealSpec succ_gens(const Partition& z, int l, int n);

/// The rectangles Y_{z,l}. Requires z_1 = ... = z_{l+1} and l < n.
IdealSpec yset_gens(const Partition& z, int l, int n);

/// All t in P_n with t/z a vertical strip of p boxes.
std::vector<Partition> pieri_vertical(const Partition& z, int p, int n);

/// The p with √I_X = I_p (smallest number of rows over the generators).
/// Throws std::invalid_argument for the zero and unit ideals.
int radical_index(const IdealSpec& x);

}  // namespace detthick
