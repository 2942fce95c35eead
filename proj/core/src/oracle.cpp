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

#include "mbsfn/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "mbsfn/constraints.hpp"

namespace mbsfn {

namespace {

constexpr std::size_t kMaxBitmaskCells = 31;

std::vector<std::uint32_t> ClosedNeighborhoodMasks(const Topology& topology) {
  std::vector<std::uint32_t> masks(topology.num_cells(), 0);
  for (std::size_t c = 0; c < topology.num_cells(); ++c) {
    for (CellId n : topology.closed_neighborhood(static_cast<CellId>(c))) {
      masks[c] |= 1u << n;
    }
  }
  return masks;
}

std::vector<CellId> MaskToCells(std::uint32_t mask) {
  std::vector<CellId> out;
  for (CellId c = 0; mask != 0; ++c, mask >>= 1) {
    if (mask & 1u) out.push_back(c);
  }
  return out;
}

double Multichoose(double n, int k) {
  // C(n + k - 1, k)
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n + i - 1) / i;
  return out;
}

// Per-cell quantities of the satisfied-user score for every broadcast set,
// so that one evaluation is a table lookup plus the capacity term.
struct CellTable {
  std::vector<double> broadcast_users;  // [served mask]
  std::vector<double> need;
  std::vector<double> remaining;
};

class BitmaskEvaluator {
 public:
  BitmaskEvaluator(const Topology& topology, const ContentCatalog& catalog,
                   const Budget& budget, ScoreMode mode, InterferenceRule rule)
      : num_cells_(topology.num_cells()),
        num_items_(catalog.num_items()),
        total_(budget.total),
        cap_(budget.broadcast_cap),
        mode_(mode),
        rule_(rule),
        hoods_(ClosedNeighborhoodMasks(topology)) {
    const std::size_t sets = std::size_t{1} << num_items_;
    tables_.resize(num_cells_);
    for (std::size_t c = 0; c < num_cells_; ++c) {
      const CellDemand& row = catalog.cell(static_cast<CellId>(c));
      CellTable& t = tables_[c];
      t.broadcast_users.assign(sets, 0.0);
      t.need.assign(sets, 0.0);
      t.remaining.assign(sets, 0.0);
      for (std::size_t s = 0; s < sets; ++s) {
        double bu = 0.0;
        double need = row.unicast_users * row.unicast_demand;
        double rem = row.unicast_users;
        for (std::size_t m = 0; m < num_items_; ++m) {
          if (s & (std::size_t{1} << m)) {
            bu += row.popularity[m];
          } else {
            need += static_cast<double>(row.popularity[m]) * row.demand[m];
            rem += row.popularity[m];
          }
        }
        t.broadcast_users[s] = bu;
        t.need[s] = need;
        t.remaining[s] = rem;
      }
    }
  }

  // Cells whose interference sum includes an area with this member mask.
  std::uint32_t Reach(std::uint32_t members) const {
    std::uint32_t out = 0;
    for (std::size_t c = 0; c < num_cells_; ++c) {
      const int inside = std::popcount(members & hoods_[c]);
      const bool hit =
          rule_ == InterferenceRule::kAnyMember ? inside >= 1 : inside == 1;
      if (hit) out |= 1u << c;
    }
    return out;
  }

  struct Candidate {
    std::uint32_t members;
    std::uint32_t reach;
    int item;
    int usage;
  };

  // Returns false when some cell or neighbor budget is exceeded.
  bool Evaluate(std::span<const Candidate> areas, double* score) const {
    double sum = 0.0;
    for (std::size_t c = 0; c < num_cells_; ++c) {
      const std::uint32_t bit = 1u << c;
      std::int64_t neighbor = 0;
      std::int64_t member = 0;
      std::size_t served = 0;
      for (const Candidate& a : areas) {
        if (a.reach & bit) neighbor += a.usage;
        if (a.members & bit) {
          member += a.usage;
          served |= std::size_t{1} << a.item;
        }
      }
      if (neighbor > cap_ || member > cap_) return false;
      const CellTable& t = tables_[c];
      const double avail =
          static_cast<double>(std::max<std::int64_t>(0, total_ - neighbor));
      const double need = t.need[served];
      double unicast;
      if (mode_ == ScoreMode::kLiteral) {
        unicast = need > 0.0 ? avail / need : 0.0;
      } else {
        unicast = need > 0.0 ? std::min(1.0, avail / need) * t.remaining[served]
                             : t.remaining[served];
      }
      sum += t.broadcast_users[served] + unicast;
    }
    *score = sum;
    return true;
  }

 private:
  std::size_t num_cells_;
  std::size_t num_items_;
  std::int64_t total_;
  std::int64_t cap_;
  ScoreMode mode_;
  InterferenceRule rule_;
  std::vector<std::uint32_t> hoods_;
  std::vector<CellTable> tables_;
};

// Odometer over `digits` positions with `base` values each. Returns false
// after the last combination.
bool Advance(std::vector<int>& digits, int base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

// Next non-decreasing index sequence of fixed length over [0, n).
bool AdvanceMultiset(std::vector<std::size_t>& idx, std::size_t n) {
  for (std::size_t i = idx.size(); i-- > 0;) {
    if (idx[i] + 1 < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[i];
      return true;
    }
  }
  return false;
}

std::string Estimate(double plans) {
  std::ostringstream out;
  out.precision(3);
  out << plans;
  return out.str();
}

}  // namespace

std::vector<std::uint32_t> ConnectedSubsets(const Topology& topology) {
  const std::size_t n = topology.num_cells();
  if (n > kMaxBitmaskCells) {
    throw Error(ErrorCode::kSizeRefusal,
                "connected-subset enumeration supports at most 31 cells, got " +
                    std::to_string(n));
  }
  // Grow each set from its smallest cell, adding only larger neighbors, so
  // every connected set is reached and nothing disconnected is generated.
  std::vector<char> seen(std::size_t{1} << n, 0);
  std::vector<std::uint32_t> out;
  std::vector<std::uint32_t> stack;
  for (std::size_t root = 0; root < n; ++root) {
    const std::uint32_t start = 1u << root;
    stack.push_back(start);
    seen[start] = 1;
    while (!stack.empty()) {
      const std::uint32_t set = stack.back();
      stack.pop_back();
      out.push_back(set);
      for (CellId c : MaskToCells(set)) {
        for (CellId nb : topology.neighbors(c)) {
          if (static_cast<std::size_t>(nb) < root) continue;
          const std::uint32_t grown = set | (1u << nb);
          if (grown == set || seen[grown]) continue;
          seen[grown] = 1;
          stack.push_back(grown);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t CountMembershipStructures(const Topology& topology,
                                        int max_areas) {
  const auto subsets = static_cast<double>(ConnectedSubsets(topology).size());
  double count = 0.0;
  for (int k = 0; k <= max_areas; ++k) count += Multichoose(subsets, k);
  return static_cast<std::uint64_t>(std::llround(count));
}

double OracleSizeEstimate(const Topology& topology,
                          const ContentCatalog& catalog, int max_areas,
                          std::size_t num_offsets) {
  const double subsets =
      topology.num_cells() <= kMaxBitmaskCells
          ? static_cast<double>(ConnectedSubsets(topology).size())
          : std::ldexp(1.0, static_cast<int>(topology.num_cells()));
  const double per_area =
      static_cast<double>(catalog.num_items()) * static_cast<double>(num_offsets);
  double plans = 0.0;
  for (int k = 0; k <= max_areas; ++k) {
    plans += Multichoose(subsets, k) * std::pow(per_area, k);
  }
  return plans;
}

OracleResult exhaustive_optimum(const Topology& topology,
                                const ContentCatalog& catalog,
                                const Budget& budget,
                                const OracleOptions& options) {
  budget.validate();
  const int max_areas = budget.area_cap();
  const auto& limits = options.limits;
  if (static_cast<int>(topology.num_cells()) > limits.max_cells ||
      static_cast<int>(catalog.num_items()) > limits.max_content ||
      max_areas > limits.max_areas) {
    const double estimate = OracleSizeEstimate(
        topology, catalog, max_areas, options.usage_offsets.size());
    throw Error(ErrorCode::kSizeRefusal,
                "instance exceeds oracle limits (cells " +
                    std::to_string(topology.num_cells()) + "/" +
                    std::to_string(limits.max_cells) + ", items " +
                    std::to_string(catalog.num_items()) + "/" +
                    std::to_string(limits.max_content) + ", areas " +
                    std::to_string(max_areas) + "/" +
                    std::to_string(limits.max_areas) + "); about " +
                    Estimate(estimate) + " plans");
  }
  if (options.usage_offsets.empty()) {
    throw Error(ErrorCode::kInvalidInput, "usage offsets must not be empty");
  }

  const BitmaskEvaluator eval(topology, catalog, budget, options.mode,
                              options.rule);
  const auto subsets = ConnectedSubsets(topology);
  std::vector<std::uint32_t> reach(subsets.size());
  std::vector<std::vector<int>> tight(subsets.size());
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    reach[s] = eval.Reach(subsets[s]);
    const auto cells = MaskToCells(subsets[s]);
    for (std::size_t m = 0; m < catalog.num_items(); ++m) {
      tight[s].push_back(TightUsage(catalog, cells, static_cast<ContentId>(m)));
    }
  }

  OracleResult result;
  std::vector<BitmaskEvaluator::Candidate> best_areas;
  bool have_best = false;
  const int items = static_cast<int>(catalog.num_items());
  const int offsets = static_cast<int>(options.usage_offsets.size());
  std::vector<BitmaskEvaluator::Candidate> areas;

  for (int k = 0; k <= max_areas; ++k) {
    if (k > 0 && (subsets.empty() || items == 0)) break;
    std::vector<std::size_t> idx(k, 0);
    do {
      ++result.structures;
      std::vector<int> content(k, 0);
      do {
        std::vector<int> offset(k, 0);
        do {
          areas.clear();
          for (int i = 0; i < k; ++i) {
            const std::size_t s = idx[i];
            areas.push_back({subsets[s], reach[s], content[i],
                             tight[s][content[i]] +
                                 options.usage_offsets[offset[i]]});
          }
          ++result.plans;
          double score = 0.0;
          if (eval.Evaluate(areas, &score) &&
              (!have_best || score > result.score + kScoreEpsilon)) {
            have_best = true;
            result.score = score;
            best_areas = areas;
          }
        } while (Advance(offset, offsets));
      } while (Advance(content, items));
    } while (AdvanceMultiset(idx, subsets.size()));
  }

  for (std::size_t i = 0; i < best_areas.size(); ++i) {
    Area area = MakeArea(static_cast<AreaId>(i),
                         MaskToCells(best_areas[i].members));
    area.content = best_areas[i].item;
    area.usage = best_areas[i].usage;
    result.plan.areas.push_back(std::move(area));
  }
  // Report the score through the shared metric path.
  result.score = TotalValue(topology, result.plan, catalog, budget,
                            options.mode, options.rule);
  return result;
}

OracleResult exhaustive_content(const Topology& topology,
                                const Plan& membership,
                                const ContentCatalog& catalog,
                                const Budget& budget,
                                const OracleOptions& options) {
  const double choices =
      std::pow(static_cast<double>(catalog.num_items() + 1),
               static_cast<double>(membership.areas.size()));
  if (choices > 1e6) {
    throw Error(ErrorCode::kSizeRefusal,
                "content enumeration would visit " + Estimate(choices) +
                    " assignments (limit 1e6)");
  }
  const Plan base = StripContent(membership);
  const int options_per_area = static_cast<int>(catalog.num_items()) + 1;
  std::vector<int> digits(base.areas.size(), 0);

  OracleResult result;
  bool have_best = false;
  ++result.structures;
  do {
    Plan plan = base;
    for (std::size_t i = 0; i < plan.areas.size(); ++i) {
      Area& a = plan.areas[i];
      if (digits[i] == 0) {
        a.inactive = true;
        continue;
      }
      const ContentId m = digits[i] - 1;
      a.content = m;
      a.usage = TightUsage(catalog, a.members, m);
    }
    ++result.plans;
    const auto report = check_plan(topology, plan, catalog, budget,
                                   options.rule);
    if (!report.ok()) continue;
    const double score = TotalValue(topology, plan, catalog, budget,
                                    options.mode, options.rule);
    if (!have_best || score > result.score + kScoreEpsilon) {
      have_best = true;
      result.score = score;
      result.plan = std::move(plan);
    }
  } while (Advance(digits, options_per_area));
  return result;
}

}  // namespace mbsfn
