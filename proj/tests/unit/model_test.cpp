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

using testing::Path;

TEST(Topology, IsolatedCellIsItsOwnNeighborhood) {
  const Topology t({10}, {});
  EXPECT_EQ(closed_neighborhood(t, 0), std::vector<CellId>{0});
}

TEST(Topology, PathMiddleSeesBothEnds) {
  const Topology t = Path(3);
  EXPECT_EQ(closed_neighborhood(t, 1), (std::vector<CellId>{0, 1, 2}));
  EXPECT_EQ(closed_neighborhood(t, 0), (std::vector<CellId>{0, 1}));
}

TEST(Topology, EdgesAreCanonicalized) {
  const Topology t({1, 1, 1}, {{1, 0}, {0, 1}, {2, 1}});
  ASSERT_EQ(t.edges().size(), 2u);
  EXPECT_EQ(t.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(t.edges()[1], (Edge{1, 2}));
  EXPECT_TRUE(t.adjacent(1, 0));
  EXPECT_TRUE(t.adjacent(0, 1));
}

TEST(Topology, RejectsSelfLoopsAndUnknownCells) {
  try {
    Topology({1, 1}, {{0, 0}});
    FAIL() << "self-loop accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidInput);
  }
  try {
    Topology({1, 1}, {{0, 5}});
    FAIL() << "unknown endpoint accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownId);
  }
}

TEST(Topology, UnknownCellQueryIsDomainError) {
  const Topology t = Path(2);
  try {
    closed_neighborhood(t, 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownId);
  }
}

TEST(Topology, ConnectivityAndComponents) {
  const Topology t({1, 1, 1, 1}, {{0, 1}, {2, 3}});
  EXPECT_EQ(t.num_components(), 2);
  EXPECT_TRUE(t.is_connected(std::vector<CellId>{0, 1}));
  EXPECT_FALSE(t.is_connected(std::vector<CellId>{1, 2}));
  EXPECT_FALSE(t.is_connected(std::vector<CellId>{}));
}

TEST(Topology, ClosedNeighborhoodSizeIsDegreePlusOne) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (rng() % 3 == 0) edges.push_back({a, b});
      }
    }
    const Topology t(std::vector<int>(n, 1), edges);
    for (int c = 0; c < n; ++c) {
      const auto nb = closed_neighborhood(t, c);
      EXPECT_EQ(nb.size(), 1 + t.degree(c));
      EXPECT_TRUE(std::binary_search(nb.begin(), nb.end(), c));
    }
  }
}

TEST(Areas, AdjacencyCases) {
  const Topology path = Path(3);
  EXPECT_TRUE(areas_adjacent(path, MakeArea(0, {0}), MakeArea(1, {1})));
  EXPECT_FALSE(areas_adjacent(path, MakeArea(0, {0}), MakeArea(1, {2})));
  const Topology t({1, 1, 1, 1}, {{0, 1}, {1, 3}});
  EXPECT_TRUE(areas_adjacent(t, MakeArea(0, {0, 1}), MakeArea(1, {1, 3})));
}

TEST(Areas, AdjacencyIsSymmetric) {
  std::mt19937 rng(11);
  const Topology t({1, 1, 1, 1, 1, 1},
                   {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<CellId> m1, m2;
    for (int c = 0; c < 6; ++c) {
      if (rng() % 3 == 0) m1.push_back(c);
      if (rng() % 3 == 0) m2.push_back(c);
    }
    if (m1.empty() || m2.empty()) continue;
    const Area a = MakeArea(0, m1);
    const Area b = MakeArea(1, m2);
    EXPECT_EQ(areas_adjacent(t, a, b), areas_adjacent(t, b, a));
  }
}

TEST(Areas, MakeAreaSortsAndDeduplicates) {
  const Area a = MakeArea(4, {3, 1, 3, 2});
  EXPECT_EQ(a.members, (std::vector<CellId>{1, 2, 3}));
  EXPECT_FALSE(a.active());
  EXPECT_TRUE(a.contains(2));
  EXPECT_FALSE(a.contains(0));
}

TEST(Coverage, EmptyAndFullPlans) {
  const Topology t = Path(3);
  Plan empty;
  EXPECT_TRUE(covered_cells(empty).empty());
  EXPECT_EQ(uncovered_cells(empty, t).size(), 3u);
  Plan full;
  full.areas.push_back(MakeArea(0, {0, 1, 2}));
  EXPECT_TRUE(uncovered_cells(full, t).empty());
}

TEST(Budget, Validation) {
  EXPECT_NO_THROW((Budget{500, 300, 10}.validate()));
  EXPECT_EQ((Budget{500, 300, 300}.area_cap()), 256);
  for (const Budget& bad : {Budget{500, 600, 1}, Budget{500, 300, 0},
                            Budget{0, 0, 1}, Budget{500, 300, 257}}) {
    try {
      bad.validate();
      ADD_FAILURE() << bad.total << "/" << bad.broadcast_cap << "/"
                    << bad.max_areas;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidInput);
    }
  }
}

TEST(Catalog, RejectsNonPositiveDemand) {
  try {
    testing::Catalog({{1, 2}}, {{120, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidInput);
  }
}

TEST(Catalog, TightUsageIsMaxOverMembers) {
  const ContentCatalog cat =
      testing::Catalog({{1}, {1}, {1}}, {{120}, {130}, {80}});
  EXPECT_EQ(TightUsage(cat, std::vector<CellId>{0, 2}, 0), 120);
  EXPECT_EQ(TightUsage(cat, std::vector<CellId>{0, 1, 2}, 0), 130);
}

}  // namespace
}  // namespace mbsfn
