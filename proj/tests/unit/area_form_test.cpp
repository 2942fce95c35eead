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

#include <cmath>

#include "test_util.hpp"

namespace mbsfn {
namespace {

using testing::Catalog;
using testing::MakeBudget;
using testing::Path;
using testing::PlanOf;
using testing::WithContent;

constexpr double kTol = 1e-9;

TEST(MergeProfit, AlignedAndDisjointPairs) {
  const Topology t = Path(2);
  const ContentCatalog same = Catalog({{60, 0}, {60, 0}});
  const ContentCatalog disjoint = Catalog({{60, 0}, {0, 60}});
  const Area a = MakeArea(0, {0});
  const Area b = MakeArea(1, {1});
  EXPECT_NEAR(pr_merge_demand(t, a, b, same), 1.0, kTol);
  EXPECT_NEAR(pr_merge_demand(t, a, b, disjoint), 0.5, kTol);
  EXPECT_NEAR(merge_gain_demand(t, a, b, same), 0.0, kTol);
  EXPECT_NEAR(merge_gain_demand(t, a, b, disjoint), -0.5, kTol);
}

TEST(MergeProfit, NoUsersGivesZero) {
  const Topology t({0, 0}, {{0, 1}});
  const ContentCatalog cat = Catalog({{0}, {0}});
  EXPECT_EQ(pr_merge_demand(t, MakeArea(0, {0}), MakeArea(1, {1}), cat), 0.0);
}

TEST(MergeProfit, ReferenceSameRegionBeatsCrossRegion) {
  const ScenarioFile s = generate_reference(1);
  double worst_same = 2.0, best_cross = -1.0;
  for (const Edge& e : s.topology.edges()) {
    const double p = pr_merge_demand(s.topology, MakeArea(0, {e.a}),
                                     MakeArea(1, {e.b}), s.catalog);
    if (s.region_assignment[e.a] == s.region_assignment[e.b]) {
      worst_same = std::min(worst_same, p);
    } else {
      best_cross = std::max(best_cross, p);
    }
  }
  ASSERT_GE(best_cross, 0.0);
  EXPECT_GT(worst_same, best_cross);
}

TEST(CreateProfit, ResidualDemand) {
  const ContentCatalog cat = Catalog({{48, 12}});
  const CreateChoice fresh = pr_create_demand(0, cat, Plan{});
  EXPECT_EQ(fresh.profit, 48.0);
  EXPECT_EQ(fresh.item, 0);
  const CreateChoice second =
      pr_create_demand(0, cat, PlanOf({WithContent(0, {0}, 0, 120)}));
  EXPECT_EQ(second.profit, 12.0);
  EXPECT_EQ(second.item, 1);
  const CreateChoice none = pr_create_demand(
      0, cat,
      PlanOf({WithContent(0, {0}, 0, 120), WithContent(1, {0}, 1, 120)}));
  EXPECT_EQ(none.profit, 0.0);
  EXPECT_FALSE(none.item.has_value());
}

TEST(AddProfit, PopularityOfTheAreaItem) {
  const ContentCatalog cat = Catalog({{48, 12}, {0, 12}});
  const Area a = WithContent(0, {0}, 0, 120);
  EXPECT_EQ(pr_add_demand(0, a, cat), 48.0);
  EXPECT_EQ(pr_add_demand(1, a, cat), 0.0);
  try {
    pr_add_demand(1, MakeArea(1, {0}), cat);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
  }
}

TEST(AddProfit, ReferenceCrossRegionCell) {
  const ScenarioFile s = generate_reference(1);
  bool seen = false;
  for (const Edge& e : s.topology.edges()) {
    const ContentId ra = s.region_assignment[e.a];
    if (ra == s.region_assignment[e.b]) continue;
    const Area streaming = WithContent(0, {e.a}, ra, 120);
    const Area update = WithContent(1, {e.a}, 3, 80);
    EXPECT_EQ(pr_add_demand(e.b, streaming, s.catalog), 0.0);
    EXPECT_EQ(pr_add_demand(e.b, update, s.catalog),
              s.catalog.popularity(e.b, 3));
    seen = true;
  }
  EXPECT_TRUE(seen);
}

TEST(HolisticProfit, NoOpIsZero) {
  const Topology t = Path(2);
  const ContentCatalog cat = Catalog({{60}, {60}});
  const Plan p = PlanOf({MakeArea(0, {0, 1})});
  EXPECT_EQ(pr_holistic(Action{MergeAction{0, 0}}, t, p, cat, MakeBudget(2)),
            0.0);
  EXPECT_EQ(pr_holistic(Action{AddAction{1, 0}}, t, p, cat, MakeBudget(2)),
            0.0);
}

TEST(HolisticProfit, FirstAreaOnEmptyPlanIsPositive) {
  const Topology t = Path(3);
  const ContentCatalog cat = Catalog({{48, 12}, {48, 12}, {0, 60}});
  for (CellId c = 0; c < 3; ++c) {
    EXPECT_GT(pr_holistic(Action{CreateAction{c}}, t, Plan{}, cat,
                          MakeBudget(3)),
              0.0);
  }
}

TEST(HolisticProfit, InfeasibleResults) {
  const Topology t = Path(3);
  const ContentCatalog cat = Catalog({{60}, {60}, {60}});
  // Creating a second area when the cap is one.
  EXPECT_EQ(pr_holistic(Action{CreateAction{2}}, t, PlanOf({MakeArea(0, {0})}),
                        cat, MakeBudget(1)),
            kInfeasibleProfit);
  // Adding a cell that breaks contiguity.
  EXPECT_EQ(pr_holistic(Action{AddAction{2, 0}}, t, PlanOf({MakeArea(0, {0})}),
                        cat, MakeBudget(1)),
            kInfeasibleProfit);
}

TEST(HolisticProfit, MergeCanPayWhenDemandProfitIsLow) {
  // Two half-interested cells plus an overloaded neighbor: merging frees
  // interference budget at the shared neighbor even though the pair's
  // alignment is only 0.5.
  const Topology t({60, 60, 60, 60}, {{0, 1}, {1, 2}, {2, 3}});
  const ContentCatalog cat =
      Catalog({{60, 0}, {30, 30}, {0, 60}, {0, 60}}, 140);
  const Plan p = PlanOf({MakeArea(0, {0}), MakeArea(1, {1}),
                         MakeArea(2, {2, 3})});
  const double holistic =
      pr_holistic(Action{MergeAction{0, 1}}, t, p, cat, MakeBudget(3));
  EXPECT_LE(pr_merge_demand(t, p.areas[0], p.areas[1], cat), 0.75 + kTol);
  EXPECT_GT(holistic, 0.0);
  // The profit is exactly the score difference of the two assignments.
  const Budget b = MakeBudget(3);
  const double before = TotalValue(t, assign_content(t, p, cat, b), cat, b);
  const double after = TotalValue(
      t, assign_content(t, ApplyAction(p, Action{MergeAction{0, 1}}), cat, b),
      cat, b);
  EXPECT_NEAR(holistic, after - before, kTol);
}

TEST(ApplyAction, MergeCreateAdd) {
  const Plan p = PlanOf({MakeArea(0, {0}), MakeArea(3, {1})});
  const Plan merged = ApplyAction(p, Action{MergeAction{0, 3}});
  ASSERT_EQ(merged.areas.size(), 1u);
  EXPECT_EQ(merged.areas[0].id, 0);
  EXPECT_EQ(merged.areas[0].members, (std::vector<CellId>{0, 1}));
  const Plan created = ApplyAction(p, Action{CreateAction{2}});
  ASSERT_EQ(created.areas.size(), 3u);
  EXPECT_EQ(created.areas[2].id, 4);
  const Plan added = ApplyAction(p, Action{AddAction{2, 3}});
  EXPECT_EQ(added.find(3)->members, (std::vector<CellId>{1, 2}));
}

TEST(MergePlan, SharedInterestMergesEvenBelowCap) {
  const Topology t = Path(4);
  const ContentCatalog cat = Catalog({{60}, {60}, {60}, {60}});
  const Plan p = merge_plan(t, cat, MakeBudget(10));
  ASSERT_EQ(p.areas.size(), 1u);
  EXPECT_EQ(p.areas[0].members.size(), 4u);
  EXPECT_TRUE(check_plan(t, p, cat, MakeBudget(10)).ok());
}

TEST(MergePlan, DisjointPairStaysSplit) {
  const Topology t = Path(2);
  const ContentCatalog cat = Catalog({{60, 0}, {0, 60}});
  const Plan p = merge_plan(t, cat, MakeBudget(2));
  ASSERT_EQ(p.areas.size(), 2u);
  EXPECT_EQ(*p.areas[0].content, 0);
  EXPECT_EQ(*p.areas[1].content, 1);
}

TEST(MergePlan, RawProfitRunsDownToTheCap) {
  const Topology t = Path(4);
  const ContentCatalog cat = Catalog({{60, 0}, {0, 60}, {60, 0}, {0, 60}});
  FormOptions o;
  o.raw_merge_profit = true;
  EXPECT_EQ(merge_plan(t, cat, MakeBudget(3), o).areas.size(), 3u);
  // Past the forced merge, joining the mixed pair with a cell that matches
  // its item does not dilute it further, so the gain rule keeps going.
  EXPECT_EQ(merge_plan(t, cat, MakeBudget(3)).areas.size(), 2u);
  EXPECT_EQ(merge_plan(t, cat, MakeBudget(4)).areas.size(), 4u);
}

TEST(MergePlan, CapBelowComponentsIsInfeasible) {
  const Topology t({10, 10, 10}, {{0, 1}});
  try {
    merge_plan(t, Catalog({{1}, {1}, {1}}), MakeBudget(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
}

TEST(GrowPlan, SingleCellGetsItsTopItem) {
  const Topology t({60}, {});
  const Plan p = grow_plan(t, Catalog({{12, 48}}), MakeBudget(1));
  ASSERT_EQ(p.areas.size(), 1u);
  EXPECT_EQ(p.areas[0].members, std::vector<CellId>{0});
  EXPECT_EQ(*p.areas[0].content, 1);
}

TEST(GrowPlan, PathWithStrongEndStopsAtTheMiddle) {
  // Cell 0 seeds with item 1, the middle has nobody for item 1, so growth
  // stops; the middle seeds the second area. A third area at cell 2 would
  // put three 120-block areas around the middle cell.
  const Topology t = Path(3);
  const ContentCatalog cat = Catalog({{0, 50}, {40, 0}, {0, 30}});
  const Plan p = grow_plan(t, cat, MakeBudget(3));
  ASSERT_EQ(p.areas.size(), 2u);
  EXPECT_EQ(p.areas[0].members, std::vector<CellId>{0});
  EXPECT_EQ(*p.areas[0].content, 1);
  EXPECT_EQ(p.areas[1].members, std::vector<CellId>{1});
  EXPECT_EQ(*p.areas[1].content, 0);
}

TEST(GrowPlan, GrowsThroughSharedInterest) {
  const Topology t = Path(3);
  const ContentCatalog cat = Catalog({{60}, {50}, {40}});
  const Plan p = grow_plan(t, cat, MakeBudget(3));
  ASSERT_EQ(p.areas.size(), 1u);
  EXPECT_EQ(p.areas[0].members, (std::vector<CellId>{0, 1, 2}));
}

TEST(FormPlan, ReferenceShapes) {
  const ScenarioFile s = generate_reference(1);
  Budget b = s.budget;
  b.max_areas = 10;
  const Plan merge = form_plan(Method::kMerge, s.topology, s.catalog, b);
  EXPECT_TRUE(uncovered_cells(merge, s.topology).empty());
  const Plan grow = form_plan(Method::kGrow, s.topology, s.catalog, b);
  EXPECT_FALSE(uncovered_cells(grow, s.topology).empty());
  EXPECT_TRUE(check_plan(s.topology, grow, s.catalog, b).ok());
}

TEST(Names, RoundTrip) {
  for (Method m : {Method::kMerge, Method::kGrow}) {
    EXPECT_EQ(MethodFromString(ToString(m)), m);
  }
  for (ProfitKind k : {ProfitKind::kDemand, ProfitKind::kHolistic}) {
    EXPECT_EQ(ProfitKindFromString(ToString(k)), k);
  }
  EXPECT_THROW(MethodFromString("split"), Error);
}

// Every method and profit on random instances: feasible output, merge is a
// partition, runs are deterministic, holistic grow never loses to the
// no-broadcast baseline.
TEST(FormPlanProperties, RandomInstances) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const ScenarioFile s = generate_random_instance(seed);
    for (int cap = 1; cap <= 3; ++cap) {
      Budget b = s.budget;
      b.max_areas = cap;
      for (ProfitKind k : {ProfitKind::kDemand, ProfitKind::kHolistic}) {
        FormOptions o;
        o.profit = k;
        const Plan g = grow_plan(s.topology, s.catalog, b, o);
        ASSERT_TRUE(check_plan(s.topology, g, s.catalog, b).ok())
            << "grow seed " << seed << " cap " << cap;
        EXPECT_EQ(g, grow_plan(s.topology, s.catalog, b, o));
        if (k == ProfitKind::kHolistic) {
          const ScoreReport r = total_score(s.topology, g, s.catalog, b);
          EXPECT_GE(r.improvement_abs, -kTol) << seed;
        }
        if (cap < s.topology.num_components()) continue;
        const Plan m = merge_plan(s.topology, s.catalog, b, o);
        ASSERT_TRUE(check_plan(s.topology, m, s.catalog, b).ok())
            << "merge seed " << seed << " cap " << cap;
        std::vector<int> seen(s.topology.num_cells(), 0);
        for (const Area& a : m.areas) {
          for (CellId c : a.members) ++seen[c];
        }
        for (int count : seen) EXPECT_EQ(count, 1) << seed;
        EXPECT_EQ(m, merge_plan(s.topology, s.catalog, b, o));
      }
    }
  }
}

}  // namespace
}  // namespace mbsfn
