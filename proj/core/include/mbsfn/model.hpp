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

// Core domain types for broadcast-area planning: the cell graph, the content
// catalog with per-cell popularity and resource demand, the resource budget,
// and plans made of broadcast areas.
//
// Cells and content items are dense integer ids (0..n-1). Everything that
// picks a maximum breaks ties toward the lowest id, so plans are reproducible.

#ifndef MBSFN_MODEL_HPP_
#define MBSFN_MODEL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mbsfn {

using CellId = std::int32_t;
using ContentId = std::int32_t;
using AreaId = std::int32_t;

// Upper bound on the number of MBSFN areas in one geographical region.
inline constexpr int kMaxAreasPerRegion = 256;

// Tolerance used whenever two scores are compared.
inline constexpr double kScoreEpsilon = 1e-9;

enum class ErrorCode {
  kInvalidInput,   // malformed values, out-of-range options
  kUnknownId,      // reference to a cell/content/area that does not exist
  kPrecondition,   // operation called on a state it does not accept
  kInfeasible,     // no plan satisfies the structural requirements
  kSizeRefusal,    // exhaustive search refused: instance too large
  kSchemaVersion,  // file written by an unsupported schema version
  kMalformed,      // file does not parse or misses required fields
  kDanglingId,     // file references an id that is not defined
  kIo,             // file cannot be opened or written
};

const char* ToString(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Which areas count against a cell's interference budget.
//
// kAnyMember: an area counts at cell c when at least one cell of c's closed
// neighborhood belongs to it. kExactlyOne is the literal "sum of memberships
// equals one" reading, kept only for comparison runs.
enum class InterferenceRule { kAnyMember, kExactlyOne };

struct Edge {
  CellId a = 0;
  CellId b = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected cell graph with per-cell user counts. Immutable.
class Topology {
 public:
  Topology() = default;

  // Edges may be given in either orientation and may repeat; they are stored
  // once as (min, max). Self-loops and unknown endpoints are rejected.
  Topology(std::vector<int> users_per_cell, std::vector<Edge> edges);

  std::size_t num_cells() const { return users_.size(); }
  bool contains(CellId c) const {
    return c >= 0 && static_cast<std::size_t>(c) < users_.size();
  }

  int users(CellId c) const;
  std::int64_t total_users() const { return total_users_; }
  std::span<const int> users() const { return users_; }

  // Open neighborhood, sorted ascending.
  std::span<const CellId> neighbors(CellId c) const;
  // {c} plus its neighbors, sorted ascending.
  std::vector<CellId> closed_neighborhood(CellId c) const;
  bool adjacent(CellId a, CellId b) const;
  std::size_t degree(CellId c) const { return neighbors(c).size(); }

  // Canonical edge list: a < b, sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  // True when the cells induce a connected subgraph. Empty sets are not
  // connected.
  bool is_connected(std::span<const CellId> cells) const;
  int num_components() const;

 private:
  void check_cell(CellId c) const;

  std::vector<int> users_;
  std::vector<Edge> edges_;
  std::vector<std::vector<CellId>> adjacency_;
  std::int64_t total_users_ = 0;
};

enum class ContentKind { kStreaming, kUpdate, kOther };

const char* ToString(ContentKind kind);
ContentKind ContentKindFromString(const std::string& name);

struct ContentItem {
  std::string name;
  ContentKind kind = ContentKind::kOther;
  friend bool operator==(const ContentItem&, const ContentItem&) = default;
};

// Demand seen in one cell. `popularity[m]` users want item m and need
// `demand[m]` resource blocks to receive it. Unicast users need
// `unicast_demand` blocks each.
struct CellDemand {
  std::vector<int> popularity;
  std::vector<int> demand;
  int unicast_users = 0;
  double unicast_demand = 0.0;
  friend bool operator==(const CellDemand&, const CellDemand&) = default;
};

class ContentCatalog {
 public:
  ContentCatalog() = default;
  // One CellDemand per cell, each sized to items.size(). Demands must be
  // positive, popularity and unicast values non-negative.
  ContentCatalog(std::vector<ContentItem> items, std::vector<CellDemand> cells);

  std::size_t num_items() const { return items_.size(); }
  std::size_t num_cells() const { return cells_.size(); }
  bool contains(ContentId m) const {
    return m >= 0 && static_cast<std::size_t>(m) < items_.size();
  }

  const std::vector<ContentItem>& items() const { return items_; }
  const ContentItem& item(ContentId m) const;
  const CellDemand& cell(CellId c) const;

  int popularity(CellId c, ContentId m) const;
  int demand(CellId c, ContentId m) const;
  int unicast_users(CellId c) const { return cell(c).unicast_users; }
  double unicast_demand(CellId c) const { return cell(c).unicast_demand; }

  // Users in c interested in any broadcastable item.
  int interested_users(CellId c) const;

 private:
  std::vector<ContentItem> items_;
  std::vector<CellDemand> cells_;
};

struct Budget {
  int total = 0;          // resource blocks per frame
  int broadcast_cap = 0;  // blocks usable for broadcast in any cell
  int max_areas = 0;      // area-count cap requested by the operator

  // Effective cap: min(max_areas, 256).
  int area_cap() const;
  // Throws Error(kInvalidInput) on a non-positive value, cap above total, or
  // max_areas above 256.
  void validate() const;
  friend bool operator==(const Budget&, const Budget&) = default;
};

struct Area {
  AreaId id = 0;
  std::vector<CellId> members;  // sorted, unique
  std::optional<ContentId> content;
  int usage = 0;
  // Set when content assignment found no viable item. Inactive areas keep
  // their membership for reporting but carry no content and no usage.
  bool inactive = false;

  bool active() const { return content.has_value() && !inactive; }
  bool contains(CellId c) const;
  friend bool operator==(const Area&, const Area&) = default;
};

// Builds an area with sorted, de-duplicated members.
Area MakeArea(AreaId id, std::vector<CellId> members);

struct Plan {
  std::vector<Area> areas;
  std::string topology_ref;

  const Area* find(AreaId id) const;
  AreaId next_area_id() const;
  std::size_t num_active() const;
  friend bool operator==(const Plan&, const Plan&) = default;
};

// Membership-only copy of a plan: contents cleared, usage zeroed.
Plan StripContent(const Plan& plan);

// Tight usage of an area broadcasting item m: max over members of demand.
int TightUsage(const ContentCatalog& catalog, std::span<const CellId> members,
               ContentId m);

// Throws Error(kUnknownId) when c is not a cell of the topology.
std::vector<CellId> closed_neighborhood(const Topology& topology, CellId c);

// True when the areas share a cell or some pair of their cells is adjacent.
bool areas_adjacent(const Topology& topology, const Area& a1, const Area& a2);

// Union of the member sets of every area in the plan (active or not).
std::vector<CellId> covered_cells(const Plan& plan);
std::vector<CellId> uncovered_cells(const Plan& plan, const Topology& topology);

}  // namespace mbsfn

#endif  // MBSFN_MODEL_HPP_
