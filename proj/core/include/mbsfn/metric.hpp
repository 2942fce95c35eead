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

// Satisfied-user scoring of a plan.
//
// A user of cell c is satisfied when the item it wants is broadcast in one of
// the areas c belongs to. Everybody else shares the unicast capacity left at
// c: the total R minus the usage of every area that reaches c's closed
// neighborhood. With `need` the resource blocks those users would take,
//
//   kLiteral:    V = broadcast_users + avail / need
//   kNormalized: V = broadcast_users + min(1, avail / need) * remaining_users
//
// kNormalized keeps 0 <= V <= users and is the default objective everywhere.

#ifndef MBSFN_METRIC_HPP_
#define MBSFN_METRIC_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mbsfn/model.hpp"

namespace mbsfn {

enum class ScoreMode { kNormalized, kLiteral };

const char* ToString(ScoreMode mode);
ScoreMode ScoreModeFromString(const std::string& name);

struct ScoreStats {
  std::size_t num_areas = 0;
  double mean_area_size = 0.0;
  std::size_t uncovered_cells = 0;
};

struct ScoreReport {
  std::vector<double> per_cell;
  double total = 0.0;
  double baseline_total = 0.0;
  double improvement_abs = 0.0;
  // 100 * improvement_abs / baseline_total; 0 when the baseline is 0.
  double improvement_pct = 0.0;
  ScoreStats stats;
};

// Score of one cell given its interference load and the items broadcast in
// its own areas. `served[m] > 0` marks item m as broadcast at c; `extra`, when
// set, is treated as broadcast too. Negative leftover capacity counts as 0.
double CellValue(const ContentCatalog& catalog, int total_resources, CellId c,
                 std::int64_t load, std::span<const int> served,
                 std::optional<ContentId> extra, ScoreMode mode);

// Every active area must have content; an area without content that is not
// marked inactive is a precondition error. Usage is taken as stored.
double cell_score(const Topology& topology, const Plan& plan,
                  const ContentCatalog& catalog, const Budget& budget,
                  CellId c, ScoreMode mode = ScoreMode::kNormalized,
                  InterferenceRule rule = InterferenceRule::kAnyMember);

ScoreReport total_score(const Topology& topology, const Plan& plan,
                        const ContentCatalog& catalog, const Budget& budget,
                        ScoreMode mode = ScoreMode::kNormalized,
                        InterferenceRule rule = InterferenceRule::kAnyMember);

// Sum of cell scores only; no baseline or statistics.
double TotalValue(const Topology& topology, const Plan& plan,
                  const ContentCatalog& catalog, const Budget& budget,
                  ScoreMode mode = ScoreMode::kNormalized,
                  InterferenceRule rule = InterferenceRule::kAnyMember);

ScoreStats PlanStats(const Topology& topology, const Plan& plan);

}  // namespace mbsfn

#endif  // MBSFN_METRIC_HPP_
