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

#include "mbsfn/constraints.hpp"

#include <algorithm>

namespace mbsfn {

const char* ToString(ConstraintId id) {
  switch (id) {
    case ConstraintId::kStreamMin:
      return "STREAM_MIN";
    case ConstraintId::kCellBudget:
      return "CELL_BUDGET";
    case ConstraintId::kNeighborBudget:
      return "NEIGHBOR_BUDGET";
    case ConstraintId::kAreaCount:
      return "AREA_COUNT";
    case ConstraintId::kContiguity:
      return "CONTIGUITY";
  }
  return "UNKNOWN";
}

std::size_t FeasibilityReport::count(ConstraintId id) const {
  return std::count_if(violations.begin(), violations.end(),
                       [id](const Violation& v) { return v.constraint == id; });
}

std::string Describe(const Violation& v) {
  std::string out = ToString(v.constraint);
  switch (v.constraint) {
    case ConstraintId::kStreamMin:
      out += " area=" + std::to_string(v.area) +
             " cell=" + std::to_string(v.subject);
      break;
    case ConstraintId::kCellBudget:
    case ConstraintId::kNeighborBudget:
      out += " cell=" + std::to_string(v.subject);
      break;
    case ConstraintId::kContiguity:
      out += " area=" + std::to_string(v.subject);
      break;
    case ConstraintId::kAreaCount:
      break;
  }
  out += " measured=" + std::to_string(v.measured) +
         " bound=" + std::to_string(v.bound);
  return out;
}

FeasibilityReport check_stream_min(const Plan& plan,
                                   const ContentCatalog& catalog) {
  FeasibilityReport report;
  for (const Area& a : plan.areas) {
    if (a.inactive) continue;
    if (!a.content) {
      throw Error(ErrorCode::kPrecondition,
                  "area " + std::to_string(a.id) + " has no content assigned");
    }
    for (CellId c : a.members) {
      const int need = catalog.demand(c, *a.content);
      if (a.usage < need) {
        report.violations.push_back(
            {ConstraintId::kStreamMin, c, a.usage, need, a.id});
      }
    }
  }
  return report;
}

FeasibilityReport check_cell_budget(const Plan& plan, const Budget& budget,
                                    std::size_t num_cells) {
  std::vector<std::int64_t> load(num_cells, 0);
  for (const Area& a : plan.areas) {
    if (!a.active()) continue;
    for (CellId c : a.members) {
      if (c < 0 || static_cast<std::size_t>(c) >= num_cells) {
        throw Error(ErrorCode::kUnknownId, "unknown cell " + std::to_string(c));
      }
      load[c] += a.usage;
    }
  }
  FeasibilityReport report;
  for (std::size_t c = 0; c < num_cells; ++c) {
    if (load[c] > budget.broadcast_cap) {
      report.violations.push_back({ConstraintId::kCellBudget,
                                   static_cast<std::int32_t>(c), load[c],
                                   budget.broadcast_cap});
    }
  }
  return report;
}

FeasibilityReport check_neighbor_budget(const Topology& topology,
                                        const Plan& plan, const Budget& budget,
                                        InterferenceRule rule) {
  FeasibilityReport report;
  for (std::size_t cell = 0; cell < topology.num_cells(); ++cell) {
    const auto hood = topology.closed_neighborhood(static_cast<CellId>(cell));
    std::int64_t sum = 0;
    for (const Area& a : plan.areas) {
      if (!a.active()) continue;
      const auto inside = std::count_if(
          hood.begin(), hood.end(), [&a](CellId n) { return a.contains(n); });
      const bool counts = rule == InterferenceRule::kAnyMember ? inside >= 1
                                                               : inside == 1;
      if (counts) sum += a.usage;
    }
    if (sum > budget.broadcast_cap) {
      report.violations.push_back({ConstraintId::kNeighborBudget,
                                   static_cast<std::int32_t>(cell), sum,
                                   budget.broadcast_cap});
    }
  }
  return report;
}

FeasibilityReport check_area_count(const Plan& plan, const Budget& budget) {
  FeasibilityReport report;
  const auto count = static_cast<std::int64_t>(plan.areas.size());
  const std::int64_t cap = budget.area_cap();
  if (count > cap) {
    report.violations.push_back({ConstraintId::kAreaCount, -1, count, cap});
  }
  return report;
}

FeasibilityReport check_contiguity(const Topology& topology,
                                   const Plan& plan) {
  FeasibilityReport report;
  for (const Area& a : plan.areas) {
    if (!topology.is_connected(a.members)) {
      // measured: number of member cells, bound: 1 component expected
      report.violations.push_back(
          {ConstraintId::kContiguity, a.id,
           static_cast<std::int64_t>(a.members.size()), 1});
    }
  }
  return report;
}

FeasibilityReport check_plan(const Topology& topology, const Plan& plan,
                             const ContentCatalog& catalog,
                             const Budget& budget, InterferenceRule rule) {
  FeasibilityReport report;
  auto append = [&report](FeasibilityReport part) {
    report.violations.insert(report.violations.end(), part.violations.begin(),
                             part.violations.end());
  };
  append(check_stream_min(plan, catalog));
  append(check_cell_budget(plan, budget, topology.num_cells()));
  append(check_neighbor_budget(topology, plan, budget, rule));
  append(check_area_count(plan, budget));
  append(check_contiguity(topology, plan));
  return report;
}

}  // namespace mbsfn
