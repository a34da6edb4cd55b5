#include <gtest/gtest.h>

#include "detthick/ideal.hpp"
#include "support/oracles.hpp"

namespace detthick {
namespace {

using Gens = std::vector<Partition>;

TEST(Ideal, Normalize) {
  EXPECT_EQ(IdealSpec::normalize(3, {{2, 2}, {3, 2}, {2, 1, 1}}).gens(), (Gens{{2, 2}, {2, 1, 1}}));
  EXPECT_TRUE(IdealSpec::normalize(3, {{}, {1}}).is_unit());
  EXPECT_EQ(IdealSpec::normalize(3, {{1, 1}}).gens(), (Gens{{1, 1}}));
  EXPECT_TRUE(IdealSpec::zero(3).is_zero());
  EXPECT_THROW(IdealSpec::normalize(2, {{1, 1, 1}}), std::invalid_argument);
  EXPECT_THROW(IdealSpec::normalize(0, {}), std::invalid_argument);
}

TEST(Ideal, Member) {
  const auto x11 = minors_gens(2, 3);
  EXPECT_TRUE(member(x11, {2, 1}));
  EXPECT_FALSE(member(x11, {5}));
  EXPECT_TRUE(member(power_gens(2, 2, 3), {2, 2, 1}));
}

TEST(Ideal, Subideal) {
  EXPECT_TRUE(subideal(power_gens(2, 7, 3), power_gens(2, 6, 3)));
  EXPECT_FALSE(subideal(power_gens(2, 6, 3), power_gens(2, 7, 3)));
  EXPECT_TRUE(subideal(power_gens(2, 3, 3), power_gens(2, 3, 3)));
  EXPECT_FALSE(subideal(minors_gens(2, 3), IdealSpec::normalize(3, {{2, 2}})));
  EXPECT_THROW(subideal(minors_gens(2, 3), minors_gens(2, 4)), std::invalid_argument);
}

TEST(Ideal, Intersect) {
  const Partition z{4, 4, 4, 3, 1};
  EXPECT_EQ(intersect(IdealSpec::normalize(6, {z}), yset_gens(z, 2, 6)), succ_gens(z, 2, 6));
  const auto x = power_gens(2, 3, 3);
  EXPECT_EQ(intersect(x, x), x);
  EXPECT_EQ(intersect(IdealSpec::normalize(3, {{2}}), minors_gens(2, 3)).gens(), (Gens{{2, 1}}));
}

TEST(Ideal, Saturate) {
  EXPECT_EQ(saturate(power_gens(2, 2, 3), 1).gens(), (Gens{{1, 1, 1}, {2, 2}}));
  EXPECT_TRUE(saturate(IdealSpec::normalize(3, {{1}}), 1).is_unit());
  const auto x = power_gens(2, 3, 3);
  EXPECT_EQ(saturate(x, 0), x);
  EXPECT_THROW(saturate(x, 4), std::invalid_argument);
}

TEST(Ideal, PowerGens) {
  EXPECT_EQ(power_gens(2, 2, 3).gens(), (Gens{{2, 2}, {2, 1, 1}}));
  EXPECT_EQ(power_gens(3, 4, 3).gens(), (Gens{{4, 4, 4}}));
  EXPECT_EQ(power_gens(1, 3, 2).gens(), (Gens{{3}, {2, 1}}));
  EXPECT_THROW(power_gens(4, 1, 3), std::invalid_argument);
  EXPECT_THROW(power_gens(1, 0, 3), std::invalid_argument);
}

TEST(Ideal, SymbolicGens) {
  EXPECT_EQ(symbolic_gens(2, 2, 3).gens(), (Gens{{1, 1, 1}, {2, 2}}));
  EXPECT_EQ(symbolic_gens(1, 2, 3).gens(), (Gens{{2}, {1, 1}}));
  EXPECT_EQ(symbolic_gens(3, 5, 3).gens(), (Gens{{5, 5, 5}}));
}

TEST(Ideal, SuccGens) {
  EXPECT_EQ(succ_gens({4, 4, 4, 3, 1}, 2, 6).gens(),
            (Gens{{4, 4, 4, 4, 1}, {4, 4, 4, 3, 2}, {4, 4, 4, 3, 1, 1}, {5, 5, 5, 3, 1}}));
  EXPECT_EQ(succ_gens({}, 0, 2).gens(), (Gens{{1}}));
  EXPECT_TRUE(succ_gens({1, 1}, 2, 2).is_zero());
}

TEST(Ideal, YsetGens) {
  EXPECT_EQ(yset_gens({4, 4, 4, 3, 1}, 2, 6).gens(),
            (Gens{{1, 1, 1, 1, 1, 1}, {2, 2, 2, 2, 2}, {5, 5, 5}, {4, 4, 4, 4}}));
  EXPECT_EQ(yset_gens({}, 0, 3).gens(), (Gens{{1}}));
  for (int d = 1; d <= 4; ++d) {
    EXPECT_EQ(yset_gens({d, d}, 1, 3), IdealSpec::normalize(3, {Partition::rectangle(2, d + 1), {1, 1, 1}}));
  }
  EXPECT_THROW(yset_gens({2, 1}, 1, 3), std::invalid_argument);
}

TEST(Ideal, PieriVertical) {
  EXPECT_EQ(pieri_vertical({1}, 1, 2), (Gens{{2}, {1, 1}}));
  EXPECT_EQ(pieri_vertical({}, 2, 3), (Gens{{1, 1}}));
  auto got = pieri_vertical({2, 1}, 2, 3);
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (Gens{{2, 2, 1}, {3, 1, 1}, {3, 2}}));
}

TEST(Ideal, RadicalIndex) {
  EXPECT_EQ(radical_index(power_gens(2, 2, 3)), 2);
  EXPECT_EQ(radical_index(minors_gens(3, 4)), 3);
  EXPECT_EQ(radical_index(symbolic_gens(3, 4, 5)), 3);
  EXPECT_THROW(radical_index(IdealSpec::zero(3)), std::invalid_argument);
  EXPECT_THROW(radical_index(IdealSpec::unit(3)), std::invalid_argument);
}

// Properties against the brute-force definitions.

TEST(IdealProperty, NormalizeKeepsTheIdeal) {
  std::mt19937_64 rng(7);
  const auto all = oracle::box(3, 4);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    Gens raw;
    for (int k = 0; k < 1 + trial % 5; ++k) raw.push_back(all[pick(rng)]);
    const auto x = IdealSpec::normalize(3, raw);
    for (const auto& g : x.gens())
      for (const auto& h : x.gens()) ASSERT_TRUE(g == h || !leq(g, h));
    for (const auto& y : oracle::box(3, 5)) ASSERT_EQ(member(x, y), oracle::member_raw(raw, y));
  }
}

TEST(IdealProperty, IntersectMatchesMembership) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 3;
    const auto x = oracle::random_ideal(rng, n, 3, 1 + trial % 3);
    const auto y = oracle::random_ideal(rng, n, 3, 1 + (trial / 3) % 3);
    const auto both = intersect(x, y);
    for (const auto& t : oracle::box(n, 6)) {
      ASSERT_EQ(member(both, t), member(x, t) && member(y, t));
    }
  }
}

TEST(IdealProperty, SaturationMatchesColonDefinition) {
  for (const auto& x : oracle::corpus(4, 3, 6, 21)) {
    for (int p = 0; p <= x.n(); ++p) {
      const auto s = saturate(x, p);
      for (const auto& y : oracle::box(x.n(), 5)) {
        ASSERT_EQ(member(s, y), oracle::saturation_member(x, p, y))
            << "p=" << p << " y=" << to_string(y);
      }
      ASSERT_EQ(saturate(s, p), s);
      ASSERT_TRUE(subideal(x, s));
    }
  }
}

TEST(IdealProperty, SymbolicIsSaturatedPower) {
  for (int n = 1; n <= 5; ++n)
    for (int p = 1; p <= n; ++p)
      for (int d = 1; d <= 5; ++d)
        ASSERT_EQ(symbolic_gens(p, d, n), saturate(power_gens(p, d, n), p - 1))
            << p << " " << d << " " << n;
}

TEST(IdealProperty, SuccAndYsetMatchDefinition) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& z : oracle::box(n, 3)) {
      for (int l = 0; l <= n; ++l) {
        const auto succ = succ_gens(z, l, n);
        for (const auto& y : oracle::box(n, 5)) {
          ASSERT_EQ(member(succ, y), oracle::in_succ(z, l, y));
        }
        bool flat = l < n;
        for (int i = 2; i <= l + 1 && flat; ++i) flat = z.row(i) == z.row(1);
        if (!flat) continue;
        // I_z ∩ I_Y = I_succ, and every vertical (l+1)-strip lands in succ.
        ASSERT_EQ(intersect(IdealSpec::normalize(n, {z}), yset_gens(z, l, n)), succ);
        for (const auto& t : pieri_vertical(z, l + 1, n)) ASSERT_TRUE(member(succ, t));
      }
    }
  }
}

TEST(IdealProperty, PieriMatchesBruteForce) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& z : oracle::box(n, 3))
      for (int p = 0; p <= n; ++p) {
        auto got = pieri_vertical(z, p, n);
        std::sort(got.begin(), got.end());
        ASSERT_EQ(got, oracle::vertical_strips(z, p, n));
      }
}

}  // namespace
}  // namespace detthick
