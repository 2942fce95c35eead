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

#ifndef MBSFN_PLAN_LOAD_HPP_
#define MBSFN_PLAN_LOAD_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "mbsfn/metric.hpp"
#include "mbsfn/model.hpp"

namespace mbsfn {

// Per-cell resource accounting for a set of broadcasting areas, updated one
// area at a time. Used by the planners to probe "what if this area broadcast
// item m" without rescoring the whole plan: both the interference sums and
// the score only change on the cells an area touches.
class PlanLoad {
 public:
  PlanLoad(const Topology& topology, std::size_t num_items,
           InterferenceRule rule = InterferenceRule::kAnyMember);

  // Loads every active area of the plan.
  PlanLoad(const Topology& topology, const ContentCatalog& catalog,
           const Plan& plan,
           InterferenceRule rule = InterferenceRule::kAnyMember);

  void add(std::span<const CellId> members, ContentId m, int usage);
  void remove(std::span<const CellId> members, ContentId m, int usage);

  // Sum of x_a over the areas a that reach c's closed neighborhood.
  std::int64_t neighbor_load(CellId c) const { return neighbor_load_[c]; }
  // Sum of x_a over the areas containing c.
  std::int64_t member_load(CellId c) const { return member_load_[c]; }
  std::span<const int> served(CellId c) const;

  // Cells whose neighbor load would include an area with these members,
  // sorted.
  std::vector<CellId> touched(std::span<const CellId> members) const;

  // True when adding an area with `usage` keeps every neighbor and member
  // load within `cap`. `touched` must come from touched(members).
  bool fits(std::span<const CellId> members, std::span<const CellId> touched,
            int usage, int cap) const;

  double value(const ContentCatalog& catalog, int total_resources, CellId c,
               ScoreMode mode) const;

  // Score change over all cells if the area were added.
  double delta_if_added(const ContentCatalog& catalog, int total_resources,
                        std::span<const CellId> members,
                        std::span<const CellId> touched, ContentId m,
                        int usage, ScoreMode mode) const;

  double total(const ContentCatalog& catalog, int total_resources,
               ScoreMode mode) const;

 private:
  void apply(std::span<const CellId> members, ContentId m, int usage,
             int sign);

  const Topology* topology_;
  std::size_t num_items_;
  InterferenceRule rule_;
  std::vector<std::int64_t> neighbor_load_;
  std::vector<std::int64_t> member_load_;
  std::vector<int> served_;  // cell-major, num_items_ per cell
};

}  // namespace mbsfn

#endif  // MBSFN_PLAN_LOAD_HPP_
