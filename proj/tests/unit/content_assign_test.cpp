// Copyright 2026 The MBSFN Planner Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "test_util.hpp"

namespace mbsfn {
namespace {

using testing::Catalog;
using testing::MakeBudget;
using testing::Path;
using testing::PlanOf;

std::map<AreaId, std::optional<ContentId>> ContentById(const Plan& p) {
  std::map<AreaId, std::optional<ContentId>> out;
  for (const Area& a : p.areas) out[a.id] = a.content;
  return out;
}

TEST(AssignContent, SingleAreaGetsItsItem) {
  const Topology t({60}, {});
  const Plan out = assign_content(t, PlanOf({MakeArea(0, {0})}),
                                  Catalog({{60}}), MakeBudget(1));
  ASSERT_TRUE(out.areas[0].active());
  EXPECT_EQ(*out.areas[0].content, 0);
  EXPECT_EQ(out.areas[0].usage, 120);
}

TEST(AssignContent, OverlapLeavesTheWeakerAreaInactive) {
  const Topology t = Path(2);
  const ContentCatalog cat = Catalog({{30, 5}, {5, 10}}, 200);
  // Area 1 holds more interested users and is served first.
  const Plan in = PlanOf({MakeArea(0, {1}), MakeArea(1, {0, 1})});
  const Plan out = assign_content(t, in, cat, MakeBudget(2));
  ASSERT_TRUE(out.find(1)->active());
  EXPECT_EQ(*out.find(1)->content, 0);
  EXPECT_TRUE(out.find(0)->inactive);
  EXPECT_FALSE(out.find(0)->content.has_value());
  EXPECT_EQ(out.find(0)->usage, 0);
  EXPECT_TRUE(check_plan(t, out, cat, MakeBudget(2)).ok());
}

TEST(AssignContent, IgnoresContentAlreadyPresent) {
  const Topology t({60}, {});
  Plan in = PlanOf({testing::WithContent(0, {0}, 1, 999)});
  const Plan out = assign_content(t, in, Catalog({{60, 0}}), MakeBudget(1));
  EXPECT_EQ(*out.areas[0].content, 0);
  EXPECT_EQ(out.areas[0].usage, 120);
}

TEST(AssignContent, FourCellLineMatchesExhaustiveChoice) {
  const Topology t = Path(4);
  const ContentCatalog cat =
      Catalog({{50, 10}, {40, 20}, {5, 45}, {0, 55}}, {{120, 80}, {120, 80},
                                                       {120, 80}, {120, 80}});
  const Plan membership = PlanOf({MakeArea(0, {0, 1}), MakeArea(1, {2, 3})});
  const Budget b = MakeBudget(2);
  const Plan greedy = assign_content(t, membership, cat, b);
  const OracleResult best = exhaustive_content(t, membership, cat, b);
  EXPECT_NEAR(TotalValue(t, greedy, cat, b), best.score, 1e-9);
  EXPECT_EQ(ContentById(greedy), ContentById(best.plan));
}

TEST(AssignContent, RankVariantsOrderDifferently) {
  // Area 0 has more total interest, area 1 a larger single item.
  const ContentCatalog cat = Catalog({{20, 20, 20}, {45, 0, 0}});
  const Area a0 = MakeArea(0, {0});
  const Area a1 = MakeArea(1, {1});
  EXPECT_GT(AreaInterest(cat, a0, InterestRank::kSumOfInterest),
            AreaInterest(cat, a1, InterestRank::kSumOfInterest));
  EXPECT_LT(AreaInterest(cat, a0, InterestRank::kMaxItem),
            AreaInterest(cat, a1, InterestRank::kMaxItem));
}

// Random instances: output feasibility, permutation invariance, determinism,
// first-area optimality and dominance by exhaustive content search.
TEST(AssignContentProperties, RandomInstances) {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const ScenarioFile s =
        generate_random_instance(static_cast<std::uint64_t>(trial));
    const int n = static_cast<int>(s.topology.num_cells());
    Plan membership;
    const int areas = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < areas; ++i) {
      std::vector<CellId> members{static_cast<CellId>(rng() % n)};
      for (CellId nb : s.topology.neighbors(members[0])) {
        if (rng() % 2) members.push_back(nb);
      }
      membership.areas.push_back(MakeArea(i, members));
    }
    Budget b = s.budget;
    b.max_areas = std::max(b.max_areas, areas);

    const Plan out = assign_content(s.topology, membership, s.catalog, b);
    ASSERT_TRUE(check_plan(s.topology, out, s.catalog, b).ok()) << trial;
    EXPECT_EQ(out, assign_content(s.topology, membership, s.catalog, b));

    Plan shuffled = membership;
    std::shuffle(shuffled.areas.begin(), shuffled.areas.end(), rng);
    EXPECT_EQ(ContentById(out),
              ContentById(assign_content(s.topology, shuffled, s.catalog, b)));

    // The first area in rank order gets its best stand-alone item.
    const auto first = std::min_element(
        membership.areas.begin(), membership.areas.end(),
        [&](const Area& x, const Area& y) {
          const auto ix = AreaInterest(s.catalog, x, InterestRank::kSumOfInterest);
          const auto iy = AreaInterest(s.catalog, y, InterestRank::kSumOfInterest);
          return ix != iy ? ix > iy : x.id < y.id;
        });
    const Plan alone = assign_content(s.topology, PlanOf({*first}), s.catalog, b);
    EXPECT_EQ(out.find(first->id)->content, alone.areas[0].content) << trial;

    const OracleResult best =
        exhaustive_content(s.topology, membership, s.catalog, b);
    EXPECT_GE(best.score + 1e-9, TotalValue(s.topology, out, s.catalog, b));
  }
}

}  // namespace
}  // namespace mbsfn
