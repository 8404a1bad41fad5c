#include <gtest/gtest.h>

#include <gelfandpark/permutation.hpp>

namespace gp = gelfandpark;

TEST(Permutation, RankUnrankRoundTrip) {
  std::size_t count = 1;
  for (std::size_t n = 1; n <= 5; ++n) {
    count *= n;
    auto const all = gp::all_perms(n);
    ASSERT_EQ(all.size(), count);
    for (std::uint64_t r = 0; r < all.size(); ++r) {
      EXPECT_EQ(gp::rank_perm(all[r]), r);
      EXPECT_EQ(gp::unrank_perm(n, r), all[r]);
    }
  }
}

TEST(Permutation, ComposeAndInverse) {
  for (auto const& a : gp::all_perms(4))
    for (auto const& b : gp::all_perms(4)) {
      auto const ab = gp::compose(a, b);
      for (std::uint32_t i = 0; i < 4; ++i) EXPECT_EQ(ab[i], a[b[i]]);
    }
  for (auto const& a : gp::all_perms(5)) EXPECT_EQ(gp::compose(a, gp::inverse(a)), gp::identity_perm(5));
}

TEST(Permutation, PermutePositionsIsAnAction) {
  std::vector<int> const v{10, 20, 30, 40};
  for (auto const& a : gp::all_perms(4))
    for (auto const& b : gp::all_perms(4)) {
      auto const lhs = gp::permute_positions<int>(gp::compose(a, b), v);
      auto const rhs = gp::permute_positions<int>(a, gp::permute_positions<int>(b, v));
      EXPECT_EQ(lhs, rhs);
    }
  gp::Perm const sigma{1, 2, 0};
  EXPECT_EQ(gp::permute_positions<int>(sigma, std::vector<int>{7, 8, 9}), (std::vector<int>{9, 7, 8}));
}

TEST(Permutation, CycleTypeAndParity) {
  EXPECT_EQ(gp::cycle_type(gp::Perm{1, 0, 3, 4, 2}), (std::vector<std::uint32_t>{3, 2}));
  EXPECT_TRUE(gp::is_even(gp::Perm{1, 2, 0}));
  EXPECT_FALSE(gp::is_even(gp::adjacent_transposition(4, 2)));
  std::size_t even = 0;
  for (auto const& p : gp::all_perms(5)) even += gp::is_even(p);
  EXPECT_EQ(even, 60u);
  EXPECT_FALSE(gp::is_permutation(std::vector<std::uint32_t>{0, 0, 1}));
}
