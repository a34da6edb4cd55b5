#pragma once

#include <vector>

#include "detthick/ext.hpp"
#include "detthick/ideal.hpp"

namespace detthick {

struct VanishingReport {
  int m = 0;
  int n = 0;
  IdealSpec ideal = IdealSpec::zero(1);
  int jmax = 0;
  /// k runs over 0..kmax with kmax = m + n - 3.
  int kmax = 0;
  /// Nonzero pieces of Ext^{mn-1-k}(S/I_X, S) in degrees (-mn, -mn + jmax].
  std::vector<ExtComponent> violations;
  /// Window-independent check: every feasible index tuple in the checked
  /// cohomological range has s = 0 and its largest admissible weight has
  /// size <= -mn.
  bool mechanism_holds = true;

  bool pass() const { return violations.empty() && mechanism_holds; }
};

/// Requires X proper nonzero and m >= n >= 2, jmax >= 1.
VanishingReport kodaira_check(const IdealSpec& x, int m, int jmax);

/// Codimension of the singular locus of the reduced scheme of rank < p
/// matrices, with the nonsingular case p = 2 reported as its dimension.
/// Requires 2 <= p <= n <= m.
int sing_codim(int p, int m, int n);

}  // namespace detthick
