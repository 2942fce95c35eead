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

#include "mbsfn/metric.hpp"

#include <algorithm>

#include "mbsfn/plan_load.hpp"

namespace mbsfn {

const char* ToString(ScoreMode mode) {
  return mode == ScoreMode::kLiteral ? "literal" : "normalized";
}

ScoreMode ScoreModeFromString(const std::string& name) {
  if (name == "normalized") return ScoreMode::kNormalized;
  if (name == "literal") return ScoreMode::kLiteral;
  throw Error(ErrorCode::kInvalidInput, "unknown score mode '" + name + "'");
}

double CellValue(const ContentCatalog& catalog, int total_resources, CellId c,
                 std::int64_t load, std::span<const int> served,
                 std::optional<ContentId> extra, ScoreMode mode) {
  const CellDemand& row = catalog.cell(c);
  double broadcast_users = 0.0;
  double need = static_cast<double>(row.unicast_users) * row.unicast_demand;
  double remaining_users = row.unicast_users;
  for (std::size_t m = 0; m < row.popularity.size(); ++m) {
    const bool on_air =
        served[m] > 0 || (extra && *extra == static_cast<ContentId>(m));
    if (on_air) {
      broadcast_users += row.popularity[m];
    } else {
      need += static_cast<double>(row.popularity[m]) * row.demand[m];
      remaining_users += row.popularity[m];
    }
  }
  const double avail =
      static_cast<double>(std::max<std::int64_t>(0, total_resources - load));
  if (mode == ScoreMode::kLiteral) {
    return broadcast_users + (need > 0.0 ? avail / need : 0.0);
  }
  if (need <= 0.0) return broadcast_users + remaining_users;
  return broadcast_users + std::min(1.0, avail / need) * remaining_users;
}

namespace {

void RequireContent(const Plan& plan) {
  for (const Area& a : plan.areas) {
    if (!a.content && !a.inactive) {
      throw Error(ErrorCode::kPrecondition,
                  "area " + std::to_string(a.id) + " has no content assigned");
    }
  }
}

}  // namespace

double cell_score(const Topology& topology, const Plan& plan,
                  const ContentCatalog& catalog, const Budget& budget,
                  CellId c, ScoreMode mode, InterferenceRule rule) {
  RequireContent(plan);
  if (!topology.contains(c)) {
    throw Error(ErrorCode::kUnknownId, "unknown cell " + std::to_string(c));
  }
  PlanLoad load(topology, catalog, plan, rule);
  return load.value(catalog, budget.total, c, mode);
}

double TotalValue(const Topology& topology, const Plan& plan,
                  const ContentCatalog& catalog, const Budget& budget,
                  ScoreMode mode, InterferenceRule rule) {
  RequireContent(plan);
  PlanLoad load(topology, catalog, plan, rule);
  return load.total(catalog, budget.total, mode);
}

ScoreStats PlanStats(const Topology& topology, const Plan& plan) {
  ScoreStats stats;
  stats.num_areas = plan.areas.size();
  std::size_t members = 0;
  for (const Area& a : plan.areas) members += a.members.size();
  stats.mean_area_size =
      plan.areas.empty() ? 0.0
                         : static_cast<double>(members) / plan.areas.size();
  stats.uncovered_cells = uncovered_cells(plan, topology).size();
  return stats;
}

ScoreReport total_score(const Topology& topology, const Plan& plan,
                        const ContentCatalog& catalog, const Budget& budget,
                        ScoreMode mode, InterferenceRule rule) {
  RequireContent(plan);
  ScoreReport report;
  PlanLoad load(topology, catalog, plan, rule);
  PlanLoad empty(topology, catalog.num_items(), rule);
  report.per_cell.resize(topology.num_cells());
  for (std::size_t c = 0; c < topology.num_cells(); ++c) {
    const auto cell = static_cast<CellId>(c);
    report.per_cell[c] = load.value(catalog, budget.total, cell, mode);
    report.total += report.per_cell[c];
    report.baseline_total += empty.value(catalog, budget.total, cell, mode);
  }
  report.improvement_abs = report.total - report.baseline_total;
  report.improvement_pct = report.baseline_total > 0.0
                               ? 100.0 * report.improvement_abs /
                                     report.baseline_total
                               : 0.0;
  report.stats = PlanStats(topology, plan);
  return report;
}

}  // namespace mbsfn
