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

#include "mbsfn/scenario_io.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "json.hpp"

namespace mbsfn {

namespace {

using Json = nlohmann::ordered_json;

// Portable uniform draws on top of the standard 64-bit Mersenne twister;
// the std distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Integer in [lo, hi].
  int Between(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  bool Bernoulli(double p) { return Uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

double RoundMillimeter(double v) {
  const double r = std::round(v * 1000.0) / 1000.0;
  return r == 0.0 ? 0.0 : r;  // no negative zero in files
}

struct Axial {
  int q;
  int r;
};

// Sites of a hexagonal grid: center first, then ring by ring.
std::vector<Axial> HexSites(int rings) {
  static constexpr std::array<Axial, 6> kDirections{
      {{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};
  std::vector<Axial> sites{{0, 0}};
  for (int k = 1; k <= rings; ++k) {
    Axial cur{kDirections[4].q * k, kDirections[4].r * k};
    for (const Axial& dir : kDirections) {
      for (int step = 0; step < k; ++step) {
        sites.push_back(cur);
        cur.q += dir.q;
        cur.r += dir.r;
      }
    }
  }
  return sites;
}

}  // namespace

// ---------------------------------------------------------------------------
// Generation

void ReferenceOptions::validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidInput, what);
  };
  if (!(update_prob >= 0.0 && update_prob <= 1.0)) {
    fail("update probability must be in [0, 1]");
  }
  if (total_users < 0) fail("total users must be non-negative");
  if (streaming_demand <= 0 || update_demand <= 0) {
    fail("resource demands must be positive");
  }
  if (unicast_users_per_cell < 0 || unicast_demand < 0.0) {
    fail("unicast values must be non-negative");
  }
  budget.validate();
}

ScenarioFile generate_reference(std::uint64_t seed,
                                const ReferenceOptions& options) {
  options.validate();
  Rng rng(seed);

  // A tri-sector site sits on a shared corner of its three hexagonal cells;
  // with site spacing D each cell has circumradius D/3 and its center lies
  // D/3 from the site along the sector boresight. The service area is 19
  // site hexagons of area (sqrt(3)/2) D^2.
  const double spacing = std::sqrt(
      kReferenceServiceArea / (kReferenceSites * std::numbers::sqrt3 / 2.0));
  const double cell_radius = spacing / 3.0;
  const double neighbor_distance = spacing / std::numbers::sqrt3;

  const auto sites = HexSites(2);
  std::vector<CellGeometry> geometry;
  std::vector<std::pair<double, double>> exact;
  for (std::size_t s = 0; s < sites.size(); ++s) {
    // Site lattice directions are 30 + 60k degrees, between the boresights.
    const double lx = sites[s].q + sites[s].r / 2.0;
    const double ly = sites[s].r * std::numbers::sqrt3 / 2.0;
    const double sx = spacing * (lx * std::numbers::sqrt3 / 2.0 - ly / 2.0);
    const double sy = spacing * (lx / 2.0 + ly * std::numbers::sqrt3 / 2.0);
    for (int sector = 0; sector < kSectorsPerSite; ++sector) {
      const double bearing =
          (30.0 + 120.0 * sector) * std::numbers::pi / 180.0;
      const double x = sx + cell_radius * std::cos(bearing);
      const double y = sy + cell_radius * std::sin(bearing);
      exact.emplace_back(x, y);
      geometry.push_back({RoundMillimeter(x), RoundMillimeter(y),
                          static_cast<int>(s), sector});
    }
  }
  const std::size_t num_cells = geometry.size();

  // Cells are adjacent when their hexagons share an edge.
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < num_cells; ++i) {
    for (std::size_t j = i + 1; j < num_cells; ++j) {
      const double d = std::hypot(exact[i].first - exact[j].first,
                                  exact[i].second - exact[j].second);
      if (std::abs(d - neighbor_distance) < 0.01 * neighbor_distance) {
        edges.push_back({static_cast<CellId>(i), static_cast<CellId>(j)});
      }
    }
  }

  std::vector<int> users(num_cells, options.total_users /
                                        static_cast<int>(num_cells));
  const int remainder = options.total_users % static_cast<int>(num_cells);
  for (int c = 0; c < remainder; ++c) ++users[c];

  // Three streaming regions: nearest of three seed points spread evenly
  // around the layout center at a seed-dependent rotation.
  const double rotation = 2.0 * std::numbers::pi * rng.Uniform();
  const double seed_radius = 1.5 * spacing;
  std::array<std::pair<double, double>, 3> region_seeds;
  for (int k = 0; k < 3; ++k) {
    const double angle = rotation + 2.0 * std::numbers::pi * k / 3.0;
    region_seeds[k] = {seed_radius * std::cos(angle),
                       seed_radius * std::sin(angle)};
  }

  std::vector<ContentItem> items{{"streaming1", ContentKind::kStreaming},
                                 {"streaming2", ContentKind::kStreaming},
                                 {"streaming3", ContentKind::kStreaming},
                                 {"update", ContentKind::kUpdate}};
  constexpr ContentId kUpdate = 3;

  std::vector<ContentId> regions(num_cells);
  std::vector<CellDemand> demand(num_cells);
  for (std::size_t c = 0; c < num_cells; ++c) {
    ContentId region = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 3; ++k) {
      const double d = std::hypot(exact[c].first - region_seeds[k].first,
                                  exact[c].second - region_seeds[k].second);
      if (d < best) {
        best = d;
        region = k;
      }
    }
    regions[c] = region;

    CellDemand& row = demand[c];
    row.popularity.assign(items.size(), 0);
    row.demand = {options.streaming_demand, options.streaming_demand,
                  options.streaming_demand, options.update_demand};
    row.unicast_users = std::min(options.unicast_users_per_cell, users[c]);
    row.unicast_demand = options.unicast_demand;
    const int broadcast_users = users[c] - row.unicast_users;
    int update_users = 0;
    if (options.deterministic_split) {
      update_users =
          static_cast<int>(std::llround(options.update_prob * broadcast_users));
    } else {
      for (int u = 0; u < broadcast_users; ++u) {
        if (rng.Bernoulli(options.update_prob)) ++update_users;
      }
    }
    row.popularity[kUpdate] = update_users;
    row.popularity[region] = broadcast_users - update_users;
  }

  ScenarioFile out;
  out.seed = seed;
  out.topology = Topology(std::move(users), std::move(edges));
  out.geometry = std::move(geometry);
  out.catalog = ContentCatalog(std::move(items), std::move(demand));
  out.budget = options.budget;
  out.region_assignment = std::move(regions);
  return out;
}

ScenarioFile generate_random_instance(std::uint64_t seed,
                                      const RandomInstanceOptions& options) {
  if (options.min_cells < 1 || options.max_cells < options.min_cells ||
      options.min_items < 1 || options.max_items < options.min_items ||
      options.max_areas < 1 || options.max_users < 1) {
    throw Error(ErrorCode::kInvalidInput, "bad random instance options");
  }
  Rng rng(seed);
  const int n = rng.Between(options.min_cells, options.max_cells);
  const int num_items = rng.Between(options.min_items, options.max_items);

  std::vector<Edge> edges;
  for (int c = 1; c < n; ++c) {
    edges.push_back({rng.Between(0, c - 1), c});
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng.Bernoulli(options.extra_edge_prob)) edges.push_back({a, b});
    }
  }

  std::vector<ContentItem> items;
  for (int m = 0; m < num_items; ++m) {
    items.push_back({"item" + std::to_string(m), ContentKind::kOther});
  }
  std::vector<int> users(n);
  std::vector<CellDemand> demand(n);
  for (int c = 0; c < n; ++c) {
    users[c] = rng.Between(1, options.max_users);
    CellDemand& row = demand[c];
    row.popularity.assign(num_items, 0);
    row.demand.resize(num_items);
    row.unicast_users =
        std::min(users[c], rng.Between(0, options.max_unicast_users));
    row.unicast_demand = rng.Between(1, 20);
    // Skewed interest: each cell has a favourite item.
    const int favourite = rng.Between(0, num_items - 1);
    for (int u = row.unicast_users; u < users[c]; ++u) {
      const int m = rng.Bernoulli(0.6) ? favourite : rng.Between(0, num_items - 1);
      ++row.popularity[m];
    }
    for (int m = 0; m < num_items; ++m) row.demand[m] = 10 * rng.Between(4, 20);
  }

  ScenarioFile out;
  out.seed = seed;
  out.topology = Topology(std::move(users), std::move(edges));
  out.catalog = ContentCatalog(std::move(items), std::move(demand));
  const int total = 10 * rng.Between(20, 60);
  out.budget = Budget{total, std::max(10, 10 * rng.Between(total / 40, total / 10)),
                      rng.Between(1, options.max_areas)};
  return out;
}

// ---------------------------------------------------------------------------
// Scenario files

namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformed, what);
}

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    Malformed(std::string("not a valid document: ") + e.what());
  }
}

template <typename T>
T Field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    Malformed(std::string("missing field '") + key + "'");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const Json::exception& e) {
    Malformed(std::string("field '") + key + "': " + e.what());
  }
}

void CheckHeader(const Json& doc, const std::string& format, int version) {
  if (Field<std::string>(doc, "format") != format) {
    Malformed("expected a '" + format + "' document");
  }
  const int found = Field<int>(doc, "version");
  if (found != version) {
    throw Error(ErrorCode::kSchemaVersion,
                format + " schema version " + std::to_string(found) +
                    " is not supported (expected " + std::to_string(version) +
                    ")");
  }
}

std::string Dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIo, "cannot write " + path.string());
  }
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

}  // namespace

std::string SerializeScenario(const ScenarioFile& s) {
  const std::size_t n = s.topology.num_cells();
  Json doc;
  doc["format"] = "mbsfn-scenario";
  doc["version"] = s.version;
  doc["seed"] = s.seed;
  doc["population"] = s.topology.total_users();
  doc["budget"] = {{"total", s.budget.total},
                   {"broadcast_cap", s.budget.broadcast_cap},
                   {"max_areas", s.budget.max_areas}};
  Json items = Json::array();
  for (std::size_t m = 0; m < s.catalog.num_items(); ++m) {
    const ContentItem& item = s.catalog.items()[m];
    items.push_back(
        {{"id", m}, {"name", item.name}, {"kind", ToString(item.kind)}});
  }
  doc["items"] = std::move(items);
  Json cells = Json::array();
  for (std::size_t c = 0; c < n; ++c) {
    const auto id = static_cast<CellId>(c);
    const CellDemand& row = s.catalog.cell(id);
    Json cell;
    cell["id"] = c;
    if (!s.geometry.empty()) {
      cell["x"] = s.geometry[c].x;
      cell["y"] = s.geometry[c].y;
      cell["site"] = s.geometry[c].site;
      cell["sector"] = s.geometry[c].sector;
    }
    cell["users"] = s.topology.users(id);
    if (!s.region_assignment.empty()) cell["region"] = s.region_assignment[c];
    cell["popularity"] = row.popularity;
    cell["demand"] = row.demand;
    cell["unicast_users"] = row.unicast_users;
    cell["unicast_demand"] = row.unicast_demand;
    cells.push_back(std::move(cell));
  }
  doc["cells"] = std::move(cells);
  Json edges = Json::array();
  for (const Edge& e : s.topology.edges()) edges.push_back({e.a, e.b});
  doc["edges"] = std::move(edges);
  return Dump(doc);
}

ScenarioFile ParseScenario(const std::string& text) {
  const Json doc = ParseJson(text);
  CheckHeader(doc, "mbsfn-scenario", kScenarioSchemaVersion);

  ScenarioFile s;
  s.seed = Field<std::uint64_t>(doc, "seed");
  const Json budget = Field<Json>(doc, "budget");
  s.budget = Budget{Field<int>(budget, "total"),
                    Field<int>(budget, "broadcast_cap"),
                    Field<int>(budget, "max_areas")};
  s.budget.validate();

  const Json items_doc = Field<Json>(doc, "items");
  if (!items_doc.is_array()) Malformed("'items' must be a list");
  std::vector<ContentItem> items;
  for (std::size_t m = 0; m < items_doc.size(); ++m) {
    const Json& item = items_doc[m];
    if (Field<std::size_t>(item, "id") != m) {
      Malformed("item ids must be 0..n-1 in order");
    }
    items.push_back({Field<std::string>(item, "name"),
                     ContentKindFromString(Field<std::string>(item, "kind"))});
  }

  const Json cells_doc = Field<Json>(doc, "cells");
  if (!cells_doc.is_array()) Malformed("'cells' must be a list");
  const std::size_t n = cells_doc.size();
  std::vector<int> users(n);
  std::vector<CellDemand> demand(n);
  bool has_geometry = n > 0;
  bool has_region = n > 0;
  for (std::size_t c = 0; c < n; ++c) {
    const Json& cell = cells_doc[c];
    if (Field<std::size_t>(cell, "id") != c) {
      Malformed("cell ids must be 0..n-1 in order");
    }
    has_geometry = has_geometry && cell.contains("x");
    has_region = has_region && cell.contains("region");
  }
  for (std::size_t c = 0; c < n; ++c) {
    const Json& cell = cells_doc[c];
    users[c] = Field<int>(cell, "users");
    demand[c].popularity = Field<std::vector<int>>(cell, "popularity");
    demand[c].demand = Field<std::vector<int>>(cell, "demand");
    demand[c].unicast_users = Field<int>(cell, "unicast_users");
    demand[c].unicast_demand = Field<double>(cell, "unicast_demand");
    if (has_geometry) {
      s.geometry.push_back({Field<double>(cell, "x"), Field<double>(cell, "y"),
                            Field<int>(cell, "site"),
                            Field<int>(cell, "sector")});
    }
    if (has_region) {
      const auto region = Field<ContentId>(cell, "region");
      if (region < 0 || static_cast<std::size_t>(region) >= items.size()) {
        throw Error(ErrorCode::kDanglingId,
                    "cell " + std::to_string(c) + " region references item " +
                        std::to_string(region));
      }
      s.region_assignment.push_back(region);
    }
  }

  std::vector<Edge> edges;
  for (const Json& e : Field<Json>(doc, "edges")) {
    if (!e.is_array() || e.size() != 2) Malformed("edges must be pairs");
    const Edge edge{e[0].get<CellId>(), e[1].get<CellId>()};
    for (CellId end : {edge.a, edge.b}) {
      if (end < 0 || static_cast<std::size_t>(end) >= n) {
        throw Error(ErrorCode::kDanglingId,
                    "edge references unknown cell " + std::to_string(end));
      }
    }
    edges.push_back(edge);
  }

  try {
    s.topology = Topology(std::move(users), std::move(edges));
    s.catalog = ContentCatalog(std::move(items), std::move(demand));
  } catch (const Error& e) {
    Malformed(e.what());
  }
  if (Field<std::int64_t>(doc, "population") != s.topology.total_users()) {
    Malformed("declared population does not match the per-cell user counts");
  }
  return s;
}

std::string ScenarioFingerprint(const ScenarioFile& scenario) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char ch : SerializeScenario(scenario)) {
    hash ^= ch;
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string("fnv1a64:") + buf;
}

void save_scenario(const ScenarioFile& scenario,
                   const std::filesystem::path& path) {
  WriteFile(path, SerializeScenario(scenario));
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
  return ParseScenario(ReadFile(path));
}

// ---------------------------------------------------------------------------
// Plan files

std::string SerializePlan(const PlanFile& file) {
  Json doc;
  doc["format"] = "mbsfn-plan";
  doc["version"] = kPlanSchemaVersion;
  doc["topology_ref"] = file.plan.topology_ref;
  if (file.planner) {
    doc["planner"] = {{"method", file.planner->method},
                      {"profit", file.planner->profit},
                      {"max_areas", file.planner->max_areas}};
  }
  Json areas = Json::array();
  for (const Area& a : file.plan.areas) {
    Json area;
    area["id"] = a.id;
    area["members"] = a.members;
    area["content"] = a.content ? Json(*a.content) : Json(nullptr);
    area["usage"] = a.usage;
    area["inactive"] = a.inactive;
    areas.push_back(std::move(area));
  }
  doc["areas"] = std::move(areas);
  return Dump(doc);
}

PlanFile ParsePlan(const std::string& text, const ScenarioFile& scenario) {
  const Json doc = ParseJson(text);
  CheckHeader(doc, "mbsfn-plan", kPlanSchemaVersion);
  PlanFile file;
  file.plan.topology_ref = Field<std::string>(doc, "topology_ref");
  if (!file.plan.topology_ref.empty() &&
      file.plan.topology_ref != ScenarioFingerprint(scenario)) {
    throw Error(ErrorCode::kInvalidInput,
                "plan was computed for a different scenario (" +
                    file.plan.topology_ref + ")");
  }
  if (doc.contains("planner")) {
    const Json& p = doc["planner"];
    file.planner = PlannerInfo{Field<std::string>(p, "method"),
                               Field<std::string>(p, "profit"),
                               Field<int>(p, "max_areas")};
  }
  const Json areas = Field<Json>(doc, "areas");
  if (!areas.is_array()) Malformed("'areas' must be a list");
  for (const Json& a : areas) {
    Area area = MakeArea(Field<AreaId>(a, "id"),
                         Field<std::vector<CellId>>(a, "members"));
    if (area.members.empty()) Malformed("area with no members");
    for (CellId c : area.members) {
      if (!scenario.topology.contains(c)) {
        throw Error(ErrorCode::kDanglingId,
                    "area " + std::to_string(area.id) +
                        " references unknown cell " + std::to_string(c));
      }
    }
    if (!a.contains("content")) Malformed("missing field 'content'");
    if (!a["content"].is_null()) {
      const auto m = Field<ContentId>(a, "content");
      if (!scenario.catalog.contains(m)) {
        throw Error(ErrorCode::kDanglingId,
                    "area " + std::to_string(area.id) +
                        " references unknown item " + std::to_string(m));
      }
      area.content = m;
    }
    area.usage = Field<int>(a, "usage");
    area.inactive = Field<bool>(a, "inactive");
    if (file.plan.find(area.id) != nullptr) {
      Malformed("duplicate area id " + std::to_string(area.id));
    }
    file.plan.areas.push_back(std::move(area));
  }
  return file;
}

void save_plan(const PlanFile& file, const std::filesystem::path& path) {
  WriteFile(path, SerializePlan(file));
}

PlanFile load_plan(const std::filesystem::path& path,
                   const ScenarioFile& scenario) {
  return ParsePlan(ReadFile(path), scenario);
}

}  // namespace mbsfn
