#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "downstream/greedy.hpp"
#include "reference_models.hpp"

namespace ds = downstream;

TEST(StretchedAssign, Examples) {
  EXPECT_EQ(ds::stretched_assign(4, 1), 1U);
  EXPECT_EQ(ds::stretched_assign(4, 4), std::nullopt);
  EXPECT_EQ(ds::stretched_assign(4, 12), 2U);
}

TEST(TiltedAssign, Examples) {
  EXPECT_EQ(ds::tilted_assign(4, 3), 3U);
  EXPECT_EQ(ds::tilted_assign(4, 4), 0U);
  EXPECT_EQ(ds::tilted_assign(4, 7), 0U);
}

TEST(GreedyAssign, MatchesReferenceModel) {
  for (const bool stretched : {true, false}) {
    for (ds::site_t S = 4; S <= 32; S *= 2) {
      const std::int64_t count = S == 4 ? 14 : (S == 8 ? 254 : 1500);
      const auto expected = reference::greedy_replay(stretched, S, count);
      ds::GreedyCurator curator(stretched ? ds::Curation::stretched : ds::Curation::tilted, S);
      for (std::int64_t T = 0; T < count; ++T) {
        ASSERT_EQ(curator.step(), expected[static_cast<std::size_t>(T)])
            << (stretched ? "stretched" : "tilted") << " S=" << S << " T=" << T;
      }
    }
  }
}

TEST(GreedyAssign, PureUnderShuffledCallOrder) {
  std::vector<ds::tick_t> times(600);
  std::iota(times.begin(), times.end(), 0);
  const auto expected = reference::greedy_replay(false, 16, 600);
  std::shuffle(times.begin(), times.end(), std::mt19937_64(11));
  for (const auto T : times) EXPECT_EQ(ds::tilted_assign(16, T), expected[T]) << T;
}

TEST(GreedyAssign, CapacityBoundary) {
  EXPECT_NO_THROW(ds::tilted_assign(8, 253));
  EXPECT_THROW(ds::tilted_assign(8, 254), ds::capacity_error);
  EXPECT_NO_THROW(ds::stretched_assign(8, 253));
  EXPECT_THROW(ds::stretched_assign(8, 254), ds::capacity_error);
  EXPECT_NO_THROW(ds::tilted_assign(4, 13));
  EXPECT_THROW(ds::tilted_assign(4, 14), ds::capacity_error);
  EXPECT_TRUE(ds::greedy_has_capacity(64, ~std::uint64_t{0} - 2));
  EXPECT_FALSE(ds::greedy_has_capacity(64, ~std::uint64_t{0} - 1));
  EXPECT_TRUE(ds::greedy_has_capacity(128, ~std::uint64_t{0}));
}

TEST(GreedyAssign, ReplayCapIsResourceError) {
  EXPECT_THROW(ds::tilted_assign(64, ds::kReplayCap), ds::resource_error);
}

TEST(GreedyAssign, RejectsInvalidSiteCount) {
  EXPECT_THROW(ds::stretched_assign(6, 0), ds::configuration_error);
  EXPECT_THROW(ds::GreedyCurator(ds::Curation::steady, 8), ds::configuration_error);
}

TEST(GreedyCurator, StretchedKeepsOriginAndTiltedNeverDiscards) {
  for (ds::site_t S = 4; S <= 32; S *= 2) {
    const ds::tick_t limit = S >= 12 ? 4096 : (ds::tick_t{1} << S) - 2;
    ds::GreedyCurator stretched(ds::Curation::stretched, S);
    ds::GreedyCurator tilted(ds::Curation::tilted, S);
    for (ds::tick_t T = 0; T < limit; ++T) {
      stretched.step();
      ASSERT_EQ(stretched.residents().front().time, 0U) << "S=" << S << " T=" << T;
      ASSERT_TRUE(tilted.step().has_value()) << "S=" << S << " T=" << T;
      ASSERT_EQ(tilted.residents().back().time, T);
    }
  }
}

TEST(GreedyCurator, ResidentsStaySortedWithDistinctSites) {
  ds::GreedyCurator curator(ds::Curation::stretched, 16);
  curator.advance_to(3000);
  const auto& residents = curator.residents();
  ASSERT_EQ(residents.size(), 16U);
  std::vector<bool> seen(16, false);
  for (std::size_t i = 0; i < residents.size(); ++i) {
    if (i > 0) {
      EXPECT_LT(residents[i - 1].time, residents[i].time);
    }
    EXPECT_FALSE(seen[residents[i].site]);
    seen[residents[i].site] = true;
  }
  EXPECT_THROW(curator.advance_to(10), ds::sequence_error);
}
