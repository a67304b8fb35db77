#include <gtest/gtest.h>

#include "flatchain/cascade.hpp"
#include "test_support.hpp"

using namespace flatchain;

namespace {

Cascade desc(std::vector<int> top_down) {
  const int k = static_cast<int>(top_down.size());
  return Cascade(k, {top_down.rbegin(), top_down.rend()});
}

}  // namespace

TEST(Cascade, Shape) {
  EXPECT_NO_THROW(desc({7, 6, 4, 3, 2, 0}));
  EXPECT_THROW(desc({7, 6, 4, 0, 2, 0}), malformed_cascade);  // zero above a positive entry
  EXPECT_THROW(desc({7, 7, 4}), malformed_cascade);
  EXPECT_THROW(desc({5, 1, 0}), malformed_cascade);  // a_2 = 1 < 2
  EXPECT_THROW(Cascade(0, {}), malformed_cascade);
  EXPECT_THROW(Cascade(2, {1}), malformed_cascade);
  const auto c = desc({7, 6, 4, 3, 2, 0});
  EXPECT_EQ(c.t(), 2);
  EXPECT_EQ(c.a(6), 7);
  EXPECT_EQ(c.descending(), (std::vector<int>{7, 6, 4, 3, 2, 0}));
  EXPECT_EQ(Cascade::zero(4).t(), std::nullopt);
}

TEST(CascadeOf, Examples) {
  EXPECT_EQ(cascade_of(16, 6), desc({7, 6, 4, 3, 2, 0}));
  EXPECT_EQ(cascade_of(0, 5), Cascade::zero(5));
  for (int n = 1; n <= 15; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto c = cascade_of(binom(n, k), k);
      EXPECT_EQ(c.a(k), n);
      for (int i = 1; i < k; ++i) EXPECT_EQ(c.a(i), 0);
    }
  }
  EXPECT_THROW(cascade_of(3, 0), range_error);
  EXPECT_THROW(cascade_of(-1, 2), range_error);
}

TEST(CascadeValue, Examples) {
  EXPECT_EQ(cascade_value(Cascade::zero(5)), 0);
  EXPECT_EQ(cascade_value(desc({7, 6, 4, 3, 2, 0})), 16);
  EXPECT_EQ(cascade_value(desc({7, 5, 4, 3, 0, 0})), 10);
}

TEST(ShadowSize, Examples) {
  EXPECT_EQ(shadow_size(desc({7, 6, 4, 3, 2, 0})), 45);
  EXPECT_EQ(shadow_size(Cascade::zero(3)), 0);
  EXPECT_EQ(shadow_size(desc({7, 5, 4, 3, 0, 0})), 33);
}

TEST(CascadeOf, BijectionAndIdempotence) {
  for (int k = 1; k <= 8; ++k) {
    for (int m = 0; m <= 3000; ++m) {
      const auto c = cascade_of(m, k);
      ASSERT_EQ(cascade_value(c), m);
      ASSERT_EQ(cascade_of(cascade_value(c), k), c);
    }
  }
}

TEST(CascadeOf, LargeArguments) {
  const BigInt m = binom(200, 60) - 1;
  const auto c = cascade_of(m, 60);
  EXPECT_EQ(cascade_value(c), m);
  EXPECT_EQ(c.a(60), 199);
}

// Shadow formula against explicit shadows of the definitional colex order.
TEST(ShadowSize, MatchesExplicitShadowOfPrefixes) {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto order = flatchain::testing::colex_by_definition(n, k);
      const auto sizes = flatchain::testing::prefix_shadow_sizes(order);
      for (std::size_t m = 0; m < sizes.size(); ++m) {
        ASSERT_EQ(shadow_size(cascade_of(m, k)), sizes[m]) << n << " " << k << " " << m;
      }
    }
  }
}

TEST(ShadowSize, FamilyShadowOfInitialSegments) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto total = static_cast<std::uint64_t>(binom(n, k));
      for (std::uint64_t m = 0; m <= total; ++m) {
        ASSERT_EQ(shadow_size(cascade_of(m, k)), shadow(Family(n, initial_segment(n, k, m))).size());
      }
    }
  }
}

TEST(ShadowSize, NondecreasingInM) {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) {
      BigInt prev = 0;
      const auto total = static_cast<std::uint64_t>(binom(n, k));
      for (std::uint64_t m = 0; m <= total; ++m) {
        const BigInt s = shadow_size(cascade_of(m, k));
        ASSERT_GE(s, prev);
        prev = s;
      }
    }
  }
}

TEST(LastMember, Examples) {
  EXPECT_EQ(last_member(Cascade::zero(3), 6), std::nullopt);
  EXPECT_EQ(last_member(cascade_of(1, 4), 9), KSet::initial(4, 9));
  const auto last = last_member(desc({7, 6, 4, 3, 2, 0}), 8);
  EXPECT_EQ(last, KSet(8, {1, 2, 4, 5, 7, 8}));
  EXPECT_EQ(last, colex_unrank(15, 6, 8));
  EXPECT_THROW(last_member(cascade_of(29, 6), 8), range_error);
}

TEST(LastMember, AgreesWithUnrank) {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto total = static_cast<std::uint64_t>(binom(n, k));
      for (std::uint64_t m = 1; m <= total; ++m) {
        ASSERT_EQ(*last_member(cascade_of(m, k), n), colex_unrank(m - 1, k, n));
      }
    }
  }
}
