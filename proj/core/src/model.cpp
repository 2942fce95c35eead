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

#include "mbsfn/model.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace mbsfn {

const char* ToString(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput:
      return "invalid-input";
    case ErrorCode::kUnknownId:
      return "unknown-id";
    case ErrorCode::kPrecondition:
      return "precondition";
    case ErrorCode::kInfeasible:
      return "infeasible";
    case ErrorCode::kSizeRefusal:
      return "size-refusal";
    case ErrorCode::kSchemaVersion:
      return "schema-version";
    case ErrorCode::kMalformed:
      return "malformed";
    case ErrorCode::kDanglingId:
      return "dangling-id";
    case ErrorCode::kIo:
      return "io";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Topology

Topology::Topology(std::vector<int> users_per_cell, std::vector<Edge> edges)
    : users_(std::move(users_per_cell)), adjacency_(users_.size()) {
  for (std::size_t c = 0; c < users_.size(); ++c) {
    if (users_[c] < 0) {
      throw Error(ErrorCode::kInvalidInput,
                  "negative user count at cell " + std::to_string(c));
    }
    total_users_ += users_[c];
  }
  for (Edge e : edges) {
    if (!contains(e.a) || !contains(e.b)) {
      throw Error(ErrorCode::kUnknownId,
                  "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                      ") references an unknown cell");
    }
    if (e.a == e.b) {
      throw Error(ErrorCode::kInvalidInput,
                  "self-loop at cell " + std::to_string(e.a));
    }
    if (e.a > e.b) std::swap(e.a, e.b);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adjacency_[e.a].push_back(e.b);
    adjacency_[e.b].push_back(e.a);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

void Topology::check_cell(CellId c) const {
  if (!contains(c)) {
    throw Error(ErrorCode::kUnknownId, "unknown cell " + std::to_string(c));
  }
}

int Topology::users(CellId c) const {
  check_cell(c);
  return users_[c];
}

std::span<const CellId> Topology::neighbors(CellId c) const {
  check_cell(c);
  return adjacency_[c];
}

std::vector<CellId> Topology::closed_neighborhood(CellId c) const {
  check_cell(c);
  std::vector<CellId> out(adjacency_[c].begin(), adjacency_[c].end());
  out.insert(std::upper_bound(out.begin(), out.end(), c), c);
  return out;
}

bool Topology::adjacent(CellId a, CellId b) const {
  check_cell(a);
  check_cell(b);
  const auto& row = adjacency_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

bool Topology::is_connected(std::span<const CellId> cells) const {
  if (cells.empty()) return false;
  std::vector<char> wanted(users_.size(), 0);
  for (CellId c : cells) {
    check_cell(c);
    wanted[c] = 1;
  }
  std::size_t distinct = std::count(wanted.begin(), wanted.end(), 1);
  std::vector<char> seen(users_.size(), 0);
  std::deque<CellId> queue{cells.front()};
  seen[cells.front()] = 1;
  std::size_t visited = 0;
  while (!queue.empty()) {
    CellId c = queue.front();
    queue.pop_front();
    ++visited;
    for (CellId n : adjacency_[c]) {
      if (wanted[n] && !seen[n]) {
        seen[n] = 1;
        queue.push_back(n);
      }
    }
  }
  return visited == distinct;
}

int Topology::num_components() const {
  std::vector<char> seen(users_.size(), 0);
  int components = 0;
  for (std::size_t start = 0; start < users_.size(); ++start) {
    if (seen[start]) continue;
    ++components;
    std::deque<CellId> queue{static_cast<CellId>(start)};
    seen[start] = 1;
    while (!queue.empty()) {
      CellId c = queue.front();
      queue.pop_front();
      for (CellId n : adjacency_[c]) {
        if (!seen[n]) {
          seen[n] = 1;
          queue.push_back(n);
        }
      }
    }
  }
  return components;
}

// ---------------------------------------------------------------------------
// Content

const char* ToString(ContentKind kind) {
  switch (kind) {
    case ContentKind::kStreaming:
      return "streaming";
    case ContentKind::kUpdate:
      return "update";
    case ContentKind::kOther:
      return "other";
  }
  return "other";
}

ContentKind ContentKindFromString(const std::string& name) {
  if (name == "streaming") return ContentKind::kStreaming;
  if (name == "update") return ContentKind::kUpdate;
  if (name == "other") return ContentKind::kOther;
  throw Error(ErrorCode::kInvalidInput, "unknown content kind '" + name + "'");
}

ContentCatalog::ContentCatalog(std::vector<ContentItem> items,
                               std::vector<CellDemand> cells)
    : items_(std::move(items)), cells_(std::move(cells)) {
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    const CellDemand& row = cells_[c];
    const std::string where = " at cell " + std::to_string(c);
    if (row.popularity.size() != items_.size() ||
        row.demand.size() != items_.size()) {
      throw Error(ErrorCode::kInvalidInput, "demand row size mismatch" + where);
    }
    for (std::size_t m = 0; m < items_.size(); ++m) {
      if (row.popularity[m] < 0) {
        throw Error(ErrorCode::kInvalidInput, "negative popularity" + where);
      }
      if (row.demand[m] <= 0) {
        throw Error(ErrorCode::kInvalidInput,
                    "resource demand must be positive" + where);
      }
    }
    if (row.unicast_users < 0 || row.unicast_demand < 0.0) {
      throw Error(ErrorCode::kInvalidInput, "negative unicast value" + where);
    }
  }
}

const ContentItem& ContentCatalog::item(ContentId m) const {
  if (!contains(m)) {
    throw Error(ErrorCode::kUnknownId, "unknown content " + std::to_string(m));
  }
  return items_[m];
}

const CellDemand& ContentCatalog::cell(CellId c) const {
  if (c < 0 || static_cast<std::size_t>(c) >= cells_.size()) {
    throw Error(ErrorCode::kUnknownId, "unknown cell " + std::to_string(c));
  }
  return cells_[c];
}

int ContentCatalog::popularity(CellId c, ContentId m) const {
  const CellDemand& row = cell(c);
  item(m);
  return row.popularity[m];
}

int ContentCatalog::demand(CellId c, ContentId m) const {
  const CellDemand& row = cell(c);
  item(m);
  return row.demand[m];
}

int ContentCatalog::interested_users(CellId c) const {
  const auto& pop = cell(c).popularity;
  return std::accumulate(pop.begin(), pop.end(), 0);
}

// ---------------------------------------------------------------------------
// Budget, areas, plans

int Budget::area_cap() const { return std::min(max_areas, kMaxAreasPerRegion); }

void Budget::validate() const {
  if (total <= 0 || broadcast_cap <= 0 || max_areas <= 0) {
    throw Error(ErrorCode::kInvalidInput,
                "budget values must be positive (R, r, max areas)");
  }
  if (broadcast_cap > total) {
    throw Error(ErrorCode::kInvalidInput,
                "broadcast cap " + std::to_string(broadcast_cap) +
                    " exceeds total resources " + std::to_string(total));
  }
  if (max_areas > kMaxAreasPerRegion) {
    throw Error(ErrorCode::kInvalidInput,
                "max areas " + std::to_string(max_areas) + " exceeds " +
                    std::to_string(kMaxAreasPerRegion));
  }
}

bool Area::contains(CellId c) const {
  return std::binary_search(members.begin(), members.end(), c);
}

Area MakeArea(AreaId id, std::vector<CellId> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Area area;
  area.id = id;
  area.members = std::move(members);
  return area;
}

const Area* Plan::find(AreaId id) const {
  for (const Area& a : areas) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

AreaId Plan::next_area_id() const {
  AreaId next = 0;
  for (const Area& a : areas) next = std::max(next, a.id + 1);
  return next;
}

std::size_t Plan::num_active() const {
  return std::count_if(areas.begin(), areas.end(),
                       [](const Area& a) { return a.active(); });
}

Plan StripContent(const Plan& plan) {
  Plan out = plan;
  for (Area& a : out.areas) {
    a.content.reset();
    a.usage = 0;
    a.inactive = false;
  }
  return out;
}

int TightUsage(const ContentCatalog& catalog, std::span<const CellId> members,
               ContentId m) {
  int usage = 0;
  for (CellId c : members) usage = std::max(usage, catalog.demand(c, m));
  return usage;
}

std::vector<CellId> closed_neighborhood(const Topology& topology, CellId c) {
  return topology.closed_neighborhood(c);
}

bool areas_adjacent(const Topology& topology, const Area& a1, const Area& a2) {
  for (CellId c : a1.members) {
    if (a2.contains(c)) return true;
    for (CellId n : topology.neighbors(c)) {
      if (a2.contains(n)) return true;
    }
  }
  return false;
}

std::vector<CellId> covered_cells(const Plan& plan) {
  std::vector<CellId> out;
  for (const Area& a : plan.areas) {
    out.insert(out.end(), a.members.begin(), a.members.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CellId> uncovered_cells(const Plan& plan,
                                    const Topology& topology) {
  std::vector<char> covered(topology.num_cells(), 0);
  for (const Area& a : plan.areas) {
    for (CellId c : a.members) {
      if (!topology.contains(c)) {
        throw Error(ErrorCode::kUnknownId,
                    "area " + std::to_string(a.id) + " references cell " +
                        std::to_string(c));
      }
      covered[c] = 1;
    }
  }
  std::vector<CellId> out;
  for (std::size_t c = 0; c < covered.size(); ++c) {
    if (!covered[c]) out.push_back(static_cast<CellId>(c));
  }
  return out;
}

}  // namespace mbsfn
