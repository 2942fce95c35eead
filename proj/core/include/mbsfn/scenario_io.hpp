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

// Scenario generation and the scenario/plan file formats.
//
// Both files are JSON documents with a fixed key order, written with two-space
// indentation and a trailing newline; see docs/file_formats.md. Generation is
// a pure function of (seed, options): the same inputs give the same bytes.

#ifndef MBSFN_SCENARIO_IO_HPP_
#define MBSFN_SCENARIO_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mbsfn/model.hpp"

namespace mbsfn {

inline constexpr int kScenarioSchemaVersion = 1;
inline constexpr int kPlanSchemaVersion = 1;

struct CellGeometry {
  double x = 0.0;  // meters
  double y = 0.0;
  int site = 0;
  int sector = 0;
  friend bool operator==(const CellGeometry&, const CellGeometry&) = default;
};

struct ScenarioFile {
  int version = kScenarioSchemaVersion;
  std::uint64_t seed = 0;
  Topology topology;
  // Empty for scenarios without a geometric layout.
  std::vector<CellGeometry> geometry;
  ContentCatalog catalog;
  Budget budget;
  // Streaming item of each cell's demand region; empty when not applicable.
  std::vector<ContentId> region_assignment;
};

// Knobs of the reference layout: 19 tri-sector sites (57 cells) on a
// hexagonal grid covering 12.34 km^2, three streaming items with
// location-dependent demand plus one update item requested everywhere.
struct ReferenceOptions {
  int total_users = 3420;
  double update_prob = 0.2;
  // Exactly round(update_prob * users) update users per cell instead of
  // sampling each user.
  bool deterministic_split = false;
  int streaming_demand = 120;
  int update_demand = 80;
  int unicast_users_per_cell = 0;
  double unicast_demand = 0.0;
  Budget budget{500, 300, 10};

  // Throws Error(kInvalidInput) on out-of-range values.
  void validate() const;
};

inline constexpr int kReferenceSites = 19;
inline constexpr int kSectorsPerSite = 3;
inline constexpr double kReferenceServiceArea = 12.34e6;  // m^2

ScenarioFile generate_reference(std::uint64_t seed,
                                const ReferenceOptions& options = {});

// Small random instances for oracle comparisons: a random connected graph,
// random popularity, demands and budget.
struct RandomInstanceOptions {
  int min_cells = 1;
  int max_cells = 5;
  int min_items = 1;
  int max_items = 3;
  int max_areas = 3;
  double extra_edge_prob = 0.3;
  int max_users = 30;
  int max_unicast_users = 5;
};

ScenarioFile generate_random_instance(std::uint64_t seed,
                                      const RandomInstanceOptions& options = {});

// Canonical text of a scenario. Parse(Serialize(s)) reproduces s, and
// Serialize is byte-stable.
std::string SerializeScenario(const ScenarioFile& scenario);
ScenarioFile ParseScenario(const std::string& text);

// "fnv1a64:<hex>" over the canonical scenario text. Plans carry it to bind
// themselves to the scenario they were computed for.
std::string ScenarioFingerprint(const ScenarioFile& scenario);

void save_scenario(const ScenarioFile& scenario,
                   const std::filesystem::path& path);
ScenarioFile load_scenario(const std::filesystem::path& path);

struct PlannerInfo {
  std::string method;
  std::string profit;
  int max_areas = 0;
  friend bool operator==(const PlannerInfo&, const PlannerInfo&) = default;
};

struct PlanFile {
  Plan plan;
  std::optional<PlannerInfo> planner;
};

std::string SerializePlan(const PlanFile& file);
// Checks member and content ids against the scenario (kDanglingId) and the
// scenario fingerprint when the plan carries one (kInvalidInput).
PlanFile ParsePlan(const std::string& text, const ScenarioFile& scenario);

void save_plan(const PlanFile& file, const std::filesystem::path& path);
PlanFile load_plan(const std::filesystem::path& path,
                   const ScenarioFile& scenario);

}  // namespace mbsfn

#endif  // MBSFN_SCENARIO_IO_HPP_
