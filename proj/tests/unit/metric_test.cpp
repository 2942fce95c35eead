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

#include <random>

#include "test_util.hpp"

namespace mbsfn {
namespace {

using testing::Catalog;
using testing::MakeBudget;
using testing::Path;
using testing::PlanOf;
using testing::WithContent;

constexpr double kTol = 1e-9;

TEST(CellScore, NoBroadcastStreamingCell) {
  const Topology t({60}, {});
  const ContentCatalog cat = Catalog({{60}});
  // 500 blocks against 60 * 120 needed.
  EXPECT_NEAR(cell_score(t, Plan{}, cat, MakeBudget(1), 0), 25.0 / 6.0, kTol);
  EXPECT_NEAR(cell_score(t, Plan{}, cat, MakeBudget(1), 0, ScoreMode::kLiteral),
              500.0 / 7200.0, kTol);
}

TEST(CellScore, FullyCoveredCellCountsEveryUser) {
  const Topology t({60}, {});
  const ContentCatalog cat = Catalog({{60}});
  const Plan p = PlanOf({WithContent(0, {0}, 0, 120)});
  EXPECT_NEAR(cell_score(t, p, cat, MakeBudget(1), 0), 60.0, kTol);
  EXPECT_NEAR(cell_score(t, p, cat, MakeBudget(1), 0, ScoreMode::kLiteral),
              60.0, kTol);
}

TEST(CellScore, FarAwayAreaLeavesBaseline) {
  const Topology t = Path(4);
  const ContentCatalog cat = Catalog({{48, 12}, {48, 12}, {48, 12}, {48, 12}});
  const Plan p = PlanOf({WithContent(0, {3}, 0, 120)});
  EXPECT_NEAR(cell_score(t, p, cat, MakeBudget(1), 0),
              cell_score(t, Plan{}, cat, MakeBudget(1), 0), kTol);
}

TEST(CellScore, NeighborAreaConsumesUnicastCapacity) {
  const Topology t = Path(2);
  const ContentCatalog cat = Catalog({{10, 0}, {0, 10}}, 20);
  const Plan p = PlanOf({WithContent(0, {1}, 1, 20)});
  // Cell 0: need 200, avail 480 -> all 10 users satisfied.
  EXPECT_NEAR(cell_score(t, p, cat, MakeBudget(1), 0), 10.0, kTol);
  EXPECT_NEAR(cell_score(t, p, cat, MakeBudget(1), 0, ScoreMode::kLiteral),
              480.0 / 200.0, kTol);
}

TEST(CellScore, UnicastUsersAreCounted) {
  const Topology t({20}, {});
  const ContentCatalog cat(
      {{"s", ContentKind::kStreaming}},
      {CellDemand{{10}, {120}, 10, 100.0}});
  const Plan p = PlanOf({WithContent(0, {0}, 0, 120)});
  // avail 380 of 1000 needed by 10 unicast users.
  EXPECT_NEAR(cell_score(t, p, cat, MakeBudget(1), 0), 10.0 + 3.8, kTol);
}

TEST(CellScore, MissingContentIsPrecondition) {
  const Topology t({1}, {});
  try {
    cell_score(t, PlanOf({MakeArea(0, {0})}), Catalog({{1}}), MakeBudget(1), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
  }
}

TEST(TotalScore, EmptyPlanHasZeroImprovement) {
  const Topology t = Path(3);
  const ContentCatalog cat = Catalog({{48, 12}, {48, 12}, {48, 12}});
  const ScoreReport r = total_score(t, Plan{}, cat, MakeBudget(3));
  EXPECT_NEAR(r.improvement_abs, 0.0, kTol);
  EXPECT_NEAR(r.total, r.baseline_total, kTol);
  EXPECT_EQ(r.stats.num_areas, 0u);
  EXPECT_EQ(r.stats.uncovered_cells, 3u);
}

TEST(TotalScore, TwoCellAreaSatisfiesEveryone) {
  const Topology t = Path(2);
  const ContentCatalog cat = Catalog({{60}, {60}});
  const ScoreReport r = total_score(
      t, PlanOf({WithContent(0, {0, 1}, 0, 120)}), cat, MakeBudget(1));
  EXPECT_NEAR(r.total, 120.0, kTol);
  EXPECT_NEAR(r.improvement_abs, r.total - r.baseline_total, kTol);
  EXPECT_EQ(r.stats.num_areas, 1u);
  EXPECT_NEAR(r.stats.mean_area_size, 2.0, kTol);
  EXPECT_EQ(r.stats.uncovered_cells, 0u);
  EXPECT_NEAR(TotalValue(t, PlanOf({WithContent(0, {0, 1}, 0, 120)}), cat,
                         MakeBudget(1)),
              120.0, kTol);
}

TEST(TotalScore, InactiveAreasCountInStructureOnly) {
  const Topology t = Path(3);
  const ContentCatalog cat = Catalog({{60}, {60}, {60}});
  Plan p = PlanOf({WithContent(0, {0}, 0, 120), MakeArea(1, {1, 2})});
  p.areas[1].inactive = true;
  const ScoreReport with = total_score(t, p, cat, MakeBudget(3));
  p.areas.pop_back();
  const ScoreReport without = total_score(t, p, cat, MakeBudget(3));
  EXPECT_NEAR(with.total, without.total, kTol);
  EXPECT_EQ(with.stats.num_areas, 2u);
  EXPECT_NEAR(with.stats.mean_area_size, 1.5, kTol);
  EXPECT_EQ(with.stats.uncovered_cells, 0u);
}

// Property suite on random small instances and random feasible plans.
class MetricProperties : public ::testing::Test {
 protected:
  struct Instance {
    Topology topology;
    ContentCatalog catalog;
    Budget budget;
  };

  static Instance Random(std::mt19937& rng) {
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<Edge> edges;
    for (int c = 1; c < n; ++c) {
      edges.push_back({static_cast<CellId>(rng() % c), c});
    }
    std::vector<int> users(n);
    std::vector<CellDemand> cells;
    for (int c = 0; c < n; ++c) {
      CellDemand row;
      row.popularity = {static_cast<int>(rng() % 30),
                        static_cast<int>(rng() % 30)};
      row.demand = {20 + static_cast<int>(rng() % 150),
                    20 + static_cast<int>(rng() % 150)};
      row.unicast_users = static_cast<int>(rng() % 5);
      row.unicast_demand = static_cast<double>(rng() % 50);
      users[c] = row.popularity[0] + row.popularity[1] + row.unicast_users;
      cells.push_back(row);
    }
    return {Topology(users, edges),
            ContentCatalog({{"a", ContentKind::kStreaming},
                            {"b", ContentKind::kUpdate}},
                           cells),
            MakeBudget(3, 300, 500)};
  }
};

TEST_F(MetricProperties, RangeModesAndMonotoneUsage) {
  std::mt19937 rng(99);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Instance in = Random(rng);
    const int n = static_cast<int>(in.topology.num_cells());
    const CellId c0 = static_cast<CellId>(rng() % n);
    std::vector<CellId> members{c0};
    for (CellId nb : in.topology.neighbors(c0)) {
      if (rng() % 2) members.push_back(nb);
    }
    const ContentId m = static_cast<ContentId>(rng() % 2);
    Plan p = PlanOf({WithContent(0, members, m,
                                 TightUsage(in.catalog, members, m))});
    if (!check_plan(in.topology, p, in.catalog, in.budget).ok()) continue;
    ++checked;

    const ScoreReport norm = total_score(in.topology, p, in.catalog, in.budget);
    EXPECT_GE(norm.total, -kTol);
    EXPECT_LE(norm.total, static_cast<double>(in.topology.total_users()) + kTol);
    for (int c = 0; c < n; ++c) {
      EXPECT_LE(norm.per_cell[c], in.topology.users(c) + kTol);
      // Both modes share the broadcast term.
      const double covered = members.end() != std::find(members.begin(),
                                                        members.end(), c)
                                 ? in.catalog.popularity(c, m)
                                 : 0.0;
      EXPECT_GE(norm.per_cell[c], covered - kTol);
      EXPECT_GE(cell_score(in.topology, p, in.catalog, in.budget, c,
                           ScoreMode::kLiteral),
                covered - kTol);
    }

    // Raising usage never helps.
    Plan looser = p;
    looser.areas[0].usage += 1 + static_cast<int>(rng() % 40);
    EXPECT_LE(TotalValue(in.topology, looser, in.catalog, in.budget),
              norm.total + kTol);

    // Locality: cells more than two hops from every member keep their score.
    for (int c = 0; c < n; ++c) {
      bool near = false;
      for (CellId a : members) {
        for (CellId x : in.topology.closed_neighborhood(a)) {
          const auto nb = in.topology.closed_neighborhood(x);
          if (std::find(nb.begin(), nb.end(), c) != nb.end()) near = true;
        }
      }
      if (!near) {
        EXPECT_NEAR(norm.per_cell[c],
                    cell_score(in.topology, Plan{}, in.catalog, in.budget, c),
                    kTol);
      }
    }
  }
  EXPECT_GT(checked, 100);
}

}  // namespace
}  // namespace mbsfn
