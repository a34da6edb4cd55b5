#include <gtest/gtest.h>

#include "detthick/schur.hpp"
#include "support/oracles.hpp"

namespace detthick {
namespace {

TEST(Schur, WeylDimension) {
  EXPECT_EQ(schur_dim(Partition{6, 5, 2}, 3), 24);
  EXPECT_EQ(schur_dim(Weight{-3, -3, -3}), 1);
  EXPECT_EQ(schur_dim(Weight{-5, -5}), 1);
  EXPECT_EQ(schur_dim(Partition{7}, 1), 1);
  EXPECT_EQ(schur_dim(Partition{2}, 3), 6);
  EXPECT_EQ(schur_dim(Weight{}), 1);
  EXPECT_THROW(Weight({1, 2}), std::invalid_argument);
  EXPECT_THROW(schur_dim(Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST(Schur, MatchesTableauCount) {
  for (int k = 1; k <= 4; ++k)
    for (const auto& x : oracle::box(k, 4)) ASSERT_EQ(schur_dim(x, k), oracle::ssyt_count(x, k));
  for (int r = 0; r <= 8; ++r)
    for (int k = 1; k <= 4; ++k) ASSERT_EQ(schur_dim(Partition{r}, k), oracle::monomial_count(r, k));
}

TEST(Schur, TranslationInvariance) {
  for (const auto& x : oracle::box(3, 5)) {
    const auto base = Weight::from_partition(x, 3);
    for (long long c = -7; c <= 7; ++c) {
      std::vector<long long> shifted = base.entries();
      for (auto& v : shifted) v += c;
      ASSERT_EQ(schur_dim(Weight(shifted)), schur_dim(base));
    }
  }
}

TEST(Schur, DualWeightHasSameDimension) {
  for (const auto& z : oracle::box(3, 8)) {
    const Weight lam{-3 - z.row(3), -3 - z.row(2), -3 - z.row(1)};
    ASSERT_EQ(schur_dim(lam), schur_dim(z, 3));
  }
}

TEST(Schur, WeightExpand) {
  EXPECT_EQ(weight_expand(Weight{-6, -7, -7}, 0, 3), (Weight{-6, -7, -7}));
  EXPECT_EQ(weight_expand(Weight{0, -4, -5}, 1, 4), (Weight{0, -2, -3, -4}));
  EXPECT_EQ(weight_expand(Weight{-4, -4, -4}, 0, 4), (Weight{-3, -3, -3, -3}));
  EXPECT_THROW(weight_expand(Weight{-3, -4, -4}, 0, 4), std::invalid_argument);
  EXPECT_THROW(weight_expand(Weight{-3, -3}, 0, 1), std::invalid_argument);
}

TEST(Schur, WeightExpandPreservesSize) {
  for (int n = 1; n <= 3; ++n)
    for (int m = n; m <= n + 2; ++m)
      for (int s = 0; s <= n; ++s)
        for (const auto& x : oracle::box(n, 6)) {
          // λ_i = x_i - 6 - m gives candidates on both sides of the bounds.
          std::vector<long long> e;
          for (int i = 0; i < n; ++i) e.push_back(x[static_cast<std::size_t>(i)] - 6 - m + n);
          const Weight lam(e);
          const bool ok = (s == 0 || lam[static_cast<std::size_t>(s - 1)] >= s - n) &&
                          (s == n || lam[static_cast<std::size_t>(s)] <= s - m);
          if (!ok) {
            ASSERT_THROW(weight_expand(lam, s, m), std::invalid_argument);
            continue;
          }
          const Weight big = weight_expand(lam, s, m);
          ASSERT_EQ(big.rank(), static_cast<std::size_t>(m));
          ASSERT_EQ(big.size(), lam.size());
        }
}

TEST(Schur, JGradedDim) {
  for (int r = 0; r <= 14; ++r) {
    EXPECT_EQ(j_graded_dim({4, 4, 3}, 0, r, 3, 3), r == 11 ? 9 : 0) << r;
  }
  EXPECT_EQ(j_graded_dim({}, 2, 2, 2, 2), 10);
  EXPECT_EQ(j_graded_dim({}, 1, 2, 3, 3), 36);
}

TEST(Schur, QuotientGradedDim) {
  EXPECT_EQ(quotient_graded_dim(minors_gens(2, 3), 2, 3), 36);
  for (int r = 0; r <= 4; ++r) EXPECT_EQ(quotient_graded_dim(IdealSpec::unit(3), r, 3), 0);
  // Nothing of degree 3 lies in an ideal generated in degree 4.
  EXPECT_EQ(quotient_graded_dim(power_gens(2, 2, 3), 3, 3), 165);
  EXPECT_EQ(quotient_graded_dim(power_gens(2, 2, 3), 4, 3), 495 - 36 - 9);
}

TEST(Schur, CauchyIdentity) {
  for (int n = 1; n <= 4; ++n)
    for (int m = n; m <= 4; ++m)
      for (int r = 0; r <= 8; ++r) {
        BigInt total = 0;
        for (const auto& x : enumerate(BoxBound{n, r}, r)) total += schur_dim(x, m) * schur_dim(x, n);
        ASSERT_EQ(total, polynomial_ring_dim(r, m, n));
        ASSERT_EQ(quotient_graded_dim(IdealSpec::zero(n), r, m), total);
        ASSERT_EQ(j_graded_dim({}, n, r, m, n), total);
      }
}

}  // namespace
}  // namespace detthick
