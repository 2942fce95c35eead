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

// Feasibility checks for plans.
//
//   STREAM_MIN       x_a >= demand of the area's item in each member cell
//   CELL_BUDGET      sum of x_a over the areas containing c <= r
//   NEIGHBOR_BUDGET  sum of x_a over the areas reaching c's closed
//                    neighborhood <= r (areas that interfere at c must fit
//                    in disjoint subframes)
//   AREA_COUNT       number of areas <= min(max areas, 256)
//   CONTIGUITY       every area's members form a connected subgraph
//
// Inactive areas are skipped by the resource checks. None of the checks
// mutate the plan.

#ifndef MBSFN_CONSTRAINTS_HPP_
#define MBSFN_CONSTRAINTS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mbsfn/model.hpp"

namespace mbsfn {

enum class ConstraintId {
  kStreamMin,
  kCellBudget,
  kNeighborBudget,
  kAreaCount,
  kContiguity,
};

const char* ToString(ConstraintId id);

struct Violation {
  ConstraintId constraint;
  // Cell id for STREAM_MIN, CELL_BUDGET and NEIGHBOR_BUDGET; area id for
  // CONTIGUITY; -1 for AREA_COUNT.
  std::int32_t subject = -1;
  std::int64_t measured = 0;
  std::int64_t bound = 0;
  // Area involved in a STREAM_MIN violation.
  AreaId area = -1;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct FeasibilityReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::size_t count(ConstraintId id) const;
};

std::string Describe(const Violation& v);

// Every active area must carry content; a non-inactive area without content
// is a precondition error.
FeasibilityReport check_stream_min(const Plan& plan,
                                   const ContentCatalog& catalog);

FeasibilityReport check_cell_budget(const Plan& plan, const Budget& budget,
                                    std::size_t num_cells);

FeasibilityReport check_neighbor_budget(
    const Topology& topology, const Plan& plan, const Budget& budget,
    InterferenceRule rule = InterferenceRule::kAnyMember);

FeasibilityReport check_area_count(const Plan& plan, const Budget& budget);

FeasibilityReport check_contiguity(const Topology& topology, const Plan& plan);

// All of the above, concatenated in the order listed.
FeasibilityReport check_plan(
    const Topology& topology, const Plan& plan, const ContentCatalog& catalog,
    const Budget& budget,
    InterferenceRule rule = InterferenceRule::kAnyMember);

}  // namespace mbsfn

#endif  // MBSFN_CONSTRAINTS_HPP_
