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

// Exact optimizers for desk-scale instances, used to audit the heuristics.
//
// exhaustive_optimum enumerates every plan with at most max_areas areas:
// each area is a connected cell set (repeats allowed, so a cell may sit in
// several areas), each area broadcasts one item, and usage is tight unless
// usage offsets are requested. Area sets are enumerated as sorted multisets
// of connected subsets, so label permutations are visited once. Scoring and
// feasibility use a bitmask evaluator of their own; the winning plan is
// re-scored through metric::TotalValue before it is returned.

#ifndef MBSFN_ORACLE_HPP_
#define MBSFN_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "mbsfn/metric.hpp"
#include "mbsfn/model.hpp"

namespace mbsfn {

struct OracleLimits {
  int max_cells = 6;
  int max_content = 3;
  int max_areas = 3;
};

struct OracleOptions {
  ScoreMode mode = ScoreMode::kNormalized;
  InterferenceRule rule = InterferenceRule::kAnyMember;
  OracleLimits limits;
  // Each area's usage ranges over tight + offset. {0} is the tight-only
  // search.
  std::vector<int> usage_offsets{0};
};

struct OracleResult {
  Plan plan;
  double score = 0.0;
  std::uint64_t structures = 0;  // membership structures visited
  std::uint64_t plans = 0;       // complete plans evaluated
};

// Connected cell subsets as bitmasks, ascending. Topology must have at most
// 31 cells.
std::vector<std::uint32_t> ConnectedSubsets(const Topology& topology);

// Number of area multisets of size 0..max_areas over the connected subsets.
std::uint64_t CountMembershipStructures(const Topology& topology,
                                        int max_areas);

// Upper bound on the number of plans exhaustive_optimum would evaluate.
double OracleSizeEstimate(const Topology& topology,
                          const ContentCatalog& catalog, int max_areas,
                          std::size_t num_offsets);

// Best feasible plan under budget.max_areas. Ties keep the first plan in
// enumeration order. Throws Error(kSizeRefusal) beyond the limits.
OracleResult exhaustive_optimum(const Topology& topology,
                                const ContentCatalog& catalog,
                                const Budget& budget,
                                const OracleOptions& options = {});

// Best content choice for fixed membership. Each area either broadcasts one
// item with tight usage or stays inactive. Refuses when (items+1)^areas
// exceeds one million.
OracleResult exhaustive_content(const Topology& topology,
                                const Plan& membership,
                                const ContentCatalog& catalog,
                                const Budget& budget,
                                const OracleOptions& options = {});

}  // namespace mbsfn

#endif  // MBSFN_ORACLE_HPP_
