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

#include "mbsfn/content_assign.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "mbsfn/plan_load.hpp"

namespace mbsfn {

std::int64_t AreaInterest(const ContentCatalog& catalog, const Area& area,
                          InterestRank rank) {
  std::int64_t interest = 0;
  for (CellId c : area.members) {
    const auto& pop = catalog.cell(c).popularity;
    if (rank == InterestRank::kSumOfInterest) {
      interest += std::accumulate(pop.begin(), pop.end(), 0);
    } else if (!pop.empty()) {
      interest += *std::max_element(pop.begin(), pop.end());
    }
  }
  return interest;
}

Plan assign_content(const Topology& topology, const Plan& plan,
                    const ContentCatalog& catalog, const Budget& budget,
                    const AssignOptions& options) {
  Plan out = StripContent(plan);
  for (const Area& a : out.areas) {
    for (CellId c : a.members) {
      if (!topology.contains(c)) {
        throw Error(ErrorCode::kUnknownId,
                    "area " + std::to_string(a.id) + " references cell " +
                        std::to_string(c));
      }
    }
  }

  std::vector<std::size_t> order(out.areas.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::int64_t> interest(out.areas.size());
  for (std::size_t i = 0; i < out.areas.size(); ++i) {
    interest[i] = AreaInterest(catalog, out.areas[i], options.rank);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (interest[x] != interest[y]) return interest[x] > interest[y];
    if (out.areas[x].id != out.areas[y].id) {
      return out.areas[x].id < out.areas[y].id;
    }
    return x < y;
  });

  PlanLoad load(topology, catalog.num_items(), options.rule);
  const int cap = budget.broadcast_cap;
  for (std::size_t idx : order) {
    Area& area = out.areas[idx];
    const auto touched = load.touched(area.members);
    std::optional<ContentId> best;
    int best_usage = 0;
    double best_delta = -std::numeric_limits<double>::infinity();
    for (std::size_t mi = 0; mi < catalog.num_items(); ++mi) {
      const auto m = static_cast<ContentId>(mi);
      const int usage = TightUsage(catalog, area.members, m);
      if (!load.fits(area.members, touched, usage, cap)) continue;
      const double delta =
          load.delta_if_added(catalog, budget.total, area.members, touched, m,
                              usage, options.mode);
      if (!best || delta > best_delta + kScoreEpsilon) {
        best = m;
        best_usage = usage;
        best_delta = delta;
      }
    }
    if (!best) {
      area.inactive = true;
      continue;
    }
    area.content = best;
    area.usage = best_usage;
    load.add(area.members, *best, best_usage);
  }
  return out;
}

}  // namespace mbsfn
