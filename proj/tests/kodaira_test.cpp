#include <gtest/gtest.h>

#include "detthick/kodaira.hpp"
#include "support/oracles.hpp"

namespace detthick {
namespace {

TEST(Kodaira, PowerAndSymbolicPass) {
  const auto a = kodaira_check(power_gens(2, 2, 3), 3, 12);
  EXPECT_TRUE(a.pass());
  EXPECT_EQ(a.kmax, 3);
  EXPECT_TRUE(kodaira_check(symbolic_gens(2, 3, 3), 3, 12).pass());
}

TEST(Kodaira, PositiveTwistsAppearOutsideTheRange) {
  // Ext^9 = Ext^{mn-1-k} with k = -1: degree -20 > -mn is occupied.
  const auto e = ext_graded(power_gens(2, 7, 3), 9, 3, {-20, -20});
  EXPECT_EQ(e.table.at(-20), 9);
  // At k = m+n-2 = 4 the bound is sharp for the Segre ideal: Ext^4 lives in
  // degree -6 > -9.
  const auto segre = ext_graded(minors_gens(2, 3), 9 - 1 - 4, 3, {-8, 0});
  EXPECT_EQ(segre.table.count(-6), 1u);
}

TEST(Kodaira, SingularCodimension) {
  EXPECT_EQ(sing_codim(3, 4, 4), 5);
  EXPECT_EQ(sing_codim(2, 3, 3), 4);
  EXPECT_EQ(sing_codim(4, 6, 4), 5);
  EXPECT_THROW(sing_codim(1, 3, 3), std::invalid_argument);
}

TEST(Kodaira, Preconditions) {
  EXPECT_THROW(kodaira_check(IdealSpec::unit(3), 3, 5), std::invalid_argument);
  EXPECT_THROW(kodaira_check(minors_gens(1, 1), 1, 5), std::invalid_argument);
  EXPECT_THROW(kodaira_check(minors_gens(2, 3), 2, 5), std::invalid_argument);
}

TEST(KodairaProperty, CorpusPasses) {
  for (const auto& x : oracle::corpus(4, 3, 6, 77)) {
    if (radical_index(x) < 2) continue;
    for (int m = x.n(); m <= x.n() + 1; ++m) {
      const auto rep = kodaira_check(x, m, 15);
      ASSERT_TRUE(rep.violations.empty());
      ASSERT_TRUE(rep.mechanism_holds);
    }
  }
}

}  // namespace
}  // namespace detthick
