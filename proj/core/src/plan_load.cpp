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

#include "mbsfn/plan_load.hpp"

#include <algorithm>

namespace mbsfn {

PlanLoad::PlanLoad(const Topology& topology, std::size_t num_items,
                   InterferenceRule rule)
    : topology_(&topology),
      num_items_(num_items),
      rule_(rule),
      neighbor_load_(topology.num_cells(), 0),
      member_load_(topology.num_cells(), 0),
      served_(topology.num_cells() * num_items, 0) {}

PlanLoad::PlanLoad(const Topology& topology, const ContentCatalog& catalog,
                   const Plan& plan, InterferenceRule rule)
    : PlanLoad(topology, catalog.num_items(), rule) {
  for (const Area& a : plan.areas) {
    if (!a.active()) continue;
    if (!catalog.contains(*a.content)) {
      throw Error(ErrorCode::kUnknownId,
                  "area " + std::to_string(a.id) + " broadcasts unknown item " +
                      std::to_string(*a.content));
    }
    add(a.members, *a.content, a.usage);
  }
}

std::span<const int> PlanLoad::served(CellId c) const {
  return std::span<const int>(served_).subspan(c * num_items_, num_items_);
}

std::vector<CellId> PlanLoad::touched(std::span<const CellId> members) const {
  std::vector<CellId> hits;
  for (CellId u : members) {
    hits.push_back(u);
    for (CellId v : topology_->neighbors(u)) hits.push_back(v);
  }
  std::sort(hits.begin(), hits.end());
  std::vector<CellId> out;
  for (std::size_t i = 0; i < hits.size();) {
    std::size_t j = i;
    while (j < hits.size() && hits[j] == hits[i]) ++j;
    // j - i members of the area lie in hits[i]'s closed neighborhood.
    if (rule_ == InterferenceRule::kAnyMember || j - i == 1) {
      out.push_back(hits[i]);
    }
    i = j;
  }
  return out;
}

void PlanLoad::apply(std::span<const CellId> members, ContentId m, int usage,
                     int sign) {
  for (CellId c : touched(members)) neighbor_load_[c] += sign * usage;
  for (CellId c : members) {
    member_load_[c] += sign * usage;
    served_[c * num_items_ + m] += sign;
  }
}

void PlanLoad::add(std::span<const CellId> members, ContentId m, int usage) {
  apply(members, m, usage, +1);
}

void PlanLoad::remove(std::span<const CellId> members, ContentId m,
                      int usage) {
  apply(members, m, usage, -1);
}

bool PlanLoad::fits(std::span<const CellId> members,
                    std::span<const CellId> touched, int usage,
                    int cap) const {
  for (CellId c : touched) {
    if (neighbor_load_[c] + usage > cap) return false;
  }
  for (CellId c : members) {
    if (member_load_[c] + usage > cap) return false;
  }
  return true;
}

double PlanLoad::value(const ContentCatalog& catalog, int total_resources,
                       CellId c, ScoreMode mode) const {
  return CellValue(catalog, total_resources, c, neighbor_load_[c], served(c),
                   std::nullopt, mode);
}

double PlanLoad::delta_if_added(const ContentCatalog& catalog,
                                int total_resources,
                                std::span<const CellId> members,
                                std::span<const CellId> touched, ContentId m,
                                int usage, ScoreMode mode) const {
  double delta = 0.0;
  // Both lists are sorted; walk their union once.
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < members.size() || j < touched.size()) {
    CellId c;
    bool is_member = false;
    bool is_touched = false;
    if (j == touched.size() || (i < members.size() && members[i] < touched[j])) {
      c = members[i++];
      is_member = true;
    } else if (i == members.size() || touched[j] < members[i]) {
      c = touched[j++];
      is_touched = true;
    } else {
      c = members[i++];
      ++j;
      is_member = is_touched = true;
    }
    const std::int64_t load = neighbor_load_[c];
    const double before = CellValue(catalog, total_resources, c, load,
                                    served(c), std::nullopt, mode);
    const double after = CellValue(
        catalog, total_resources, c, is_touched ? load + usage : load,
        served(c), is_member ? std::optional<ContentId>(m) : std::nullopt,
        mode);
    delta += after - before;
  }
  return delta;
}

double PlanLoad::total(const ContentCatalog& catalog, int total_resources,
                       ScoreMode mode) const {
  double sum = 0.0;
  for (std::size_t c = 0; c < topology_->num_cells(); ++c) {
    sum += value(catalog, total_resources, static_cast<CellId>(c), mode);
  }
  return sum;
}

}  // namespace mbsfn
