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

#include "mbsfn/area_form.hpp"

#include <algorithm>
#include <iterator>

#include "mbsfn/plan_load.hpp"

namespace mbsfn {

const char* ToString(ProfitKind kind) {
  return kind == ProfitKind::kHolistic ? "holistic" : "demand";
}

const char* ToString(Method method) {
  return method == Method::kGrow ? "grow" : "merge";
}

ProfitKind ProfitKindFromString(const std::string& name) {
  if (name == "demand") return ProfitKind::kDemand;
  if (name == "holistic") return ProfitKind::kHolistic;
  throw Error(ErrorCode::kInvalidInput, "unknown profit kind '" + name + "'");
}

Method MethodFromString(const std::string& name) {
  if (name == "merge") return Method::kMerge;
  if (name == "grow") return Method::kGrow;
  throw Error(ErrorCode::kInvalidInput, "unknown method '" + name + "'");
}

namespace {

std::vector<CellId> Union(const std::vector<CellId>& a,
                          const std::vector<CellId>& b) {
  std::vector<CellId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<CellId> WithCell(const std::vector<CellId>& members, CellId c) {
  std::vector<CellId> out = members;
  out.insert(std::upper_bound(out.begin(), out.end(), c), c);
  return out;
}

// max_m sum_{c in cells} pop(c, m)
std::int64_t DominantInterest(const ContentCatalog& catalog,
                              std::span<const CellId> cells) {
  std::int64_t best = 0;
  for (std::size_t m = 0; m < catalog.num_items(); ++m) {
    std::int64_t sum = 0;
    for (CellId c : cells) sum += catalog.cell(c).popularity[m];
    best = std::max(best, sum);
  }
  return best;
}

std::int64_t AreaUsers(const Topology& topology,
                       std::span<const CellId> cells) {
  std::int64_t users = 0;
  for (CellId c : cells) users += topology.users(c);
  return users;
}

// True when some item fits the broadcast cap with tight usage on its own.
bool CanCarrySomething(const ContentCatalog& catalog,
                       std::span<const CellId> members, int cap) {
  for (std::size_t m = 0; m < catalog.num_items(); ++m) {
    if (TightUsage(catalog, members, static_cast<ContentId>(m)) <= cap) {
      return true;
    }
  }
  return false;
}

// Running argmax with id-order tie-breaking: candidates must be offered in
// increasing id order, and only a strictly better profit replaces the best.
template <typename Key>
struct Best {
  std::optional<Key> key;
  double profit = kInfeasibleProfit;

  void offer(const Key& k, double p) {
    if (!key || p > profit + kScoreEpsilon) {
      key = k;
      profit = p;
    }
  }
};

AreaId ModifiedArea(const Plan& membership, const Action& action) {
  if (const auto* merge = std::get_if<MergeAction>(&action.kind)) {
    return merge->first;
  }
  if (std::holds_alternative<CreateAction>(action.kind)) {
    return membership.next_area_id();
  }
  return std::get<AddAction>(action.kind).area;
}

bool IsNoOp(const Plan& membership, const Action& action) {
  if (const auto* merge = std::get_if<MergeAction>(&action.kind)) {
    return merge->first == merge->second;
  }
  if (const auto* add = std::get_if<AddAction>(&action.kind)) {
    const Area* area = membership.find(add->area);
    return area != nullptr && area->contains(add->cell);
  }
  return false;
}

// Holistic profit evaluation against a precomputed current score.
class HolisticProbe {
 public:
  HolisticProbe(const Topology& topology, const ContentCatalog& catalog,
                const Budget& budget, const FormOptions& options)
      : topology_(topology),
        catalog_(catalog),
        budget_(budget),
        options_(options) {}

  double score(const Plan& membership) const {
    const Plan assigned = assign_content(topology_, membership, catalog_,
                                         budget_, options_.assign);
    return TotalValue(topology_, assigned, catalog_, budget_,
                      options_.assign.mode, options_.assign.rule);
  }

  double profit(const Plan& membership, double current,
                const Action& action) const {
    if (IsNoOp(membership, action)) return 0.0;
    const Plan next = ApplyAction(membership, action);
    // A merge over the cap moves toward it; only growth past the cap is
    // refused, otherwise the forced merge phase would see no finite profit.
    if (static_cast<int>(next.areas.size()) > budget_.area_cap() &&
        next.areas.size() >= membership.areas.size()) {
      return kInfeasibleProfit;
    }
    const AreaId changed = ModifiedArea(membership, action);
    const Area* area = next.find(changed);
    if (area == nullptr || !topology_.is_connected(area->members)) {
      return kInfeasibleProfit;
    }
    const Plan assigned =
        assign_content(topology_, next, catalog_, budget_, options_.assign);
    if (!assigned.find(changed)->active()) return kInfeasibleProfit;
    return TotalValue(topology_, assigned, catalog_, budget_,
                      options_.assign.mode, options_.assign.rule) -
           current;
  }

 private:
  const Topology& topology_;
  const ContentCatalog& catalog_;
  const Budget& budget_;
  const FormOptions& options_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Demand profits

double pr_merge_demand(const Topology& topology, const Area& a1,
                       const Area& a2, const ContentCatalog& catalog) {
  const std::int64_t users =
      AreaUsers(topology, a1.members) + AreaUsers(topology, a2.members);
  if (users == 0) return 0.0;
  const auto merged = Union(a1.members, a2.members);
  return static_cast<double>(DominantInterest(catalog, merged)) / users;
}

double merge_gain_demand(const Topology& topology, const Area& a1,
                         const Area& a2, const ContentCatalog& catalog) {
  const std::int64_t users =
      AreaUsers(topology, a1.members) + AreaUsers(topology, a2.members);
  if (users == 0) return 0.0;
  const auto merged = Union(a1.members, a2.members);
  const std::int64_t together = DominantInterest(catalog, merged);
  const std::int64_t apart = DominantInterest(catalog, a1.members) +
                             DominantInterest(catalog, a2.members);
  return static_cast<double>(together - apart) / users;
}

CreateChoice pr_create_demand(CellId c, const ContentCatalog& catalog,
                              const Plan& plan_so_far) {
  const CellDemand& row = catalog.cell(c);
  std::vector<char> served(catalog.num_items(), 0);
  for (const Area& a : plan_so_far.areas) {
    if (a.active() && a.contains(c)) served[*a.content] = 1;
  }
  CreateChoice choice;
  for (std::size_t m = 0; m < catalog.num_items(); ++m) {
    if (served[m] || row.popularity[m] <= 0) continue;
    if (row.popularity[m] > choice.profit) {
      choice.profit = row.popularity[m];
      choice.item = static_cast<ContentId>(m);
    }
  }
  return choice;
}

double pr_add_demand(CellId c, const Area& area,
                     const ContentCatalog& catalog) {
  if (!area.content) {
    throw Error(ErrorCode::kPrecondition,
                "area " + std::to_string(area.id) + " has no provisional item");
  }
  return catalog.popularity(c, *area.content);
}

// ---------------------------------------------------------------------------
// Holistic profit

Plan ApplyAction(const Plan& membership, const Action& action) {
  Plan next = membership;
  auto find = [&next](AreaId id) -> Area& {
    for (Area& a : next.areas) {
      if (a.id == id) return a;
    }
    throw Error(ErrorCode::kUnknownId, "unknown area " + std::to_string(id));
  };
  if (const auto* merge = std::get_if<MergeAction>(&action.kind)) {
    if (merge->first == merge->second) return next;
    Area& second = find(merge->second);
    const std::vector<CellId> absorbed = second.members;
    Area& first = find(merge->first);
    first.members = Union(first.members, absorbed);
    std::erase_if(next.areas,
                  [id = merge->second](const Area& a) { return a.id == id; });
  } else if (const auto* create = std::get_if<CreateAction>(&action.kind)) {
    next.areas.push_back(MakeArea(membership.next_area_id(), {create->cell}));
  } else {
    const auto& add = std::get<AddAction>(action.kind);
    Area& area = find(add.area);
    if (!area.contains(add.cell)) area.members = WithCell(area.members, add.cell);
  }
  return next;
}

double pr_holistic(const Action& action, const Topology& topology,
                   const Plan& membership, const ContentCatalog& catalog,
                   const Budget& budget, const FormOptions& options) {
  HolisticProbe probe(topology, catalog, budget, options);
  const Plan stripped = StripContent(membership);
  return probe.profit(stripped, probe.score(stripped), action);
}

// ---------------------------------------------------------------------------
// Merge

Plan merge_plan(const Topology& topology, const ContentCatalog& catalog,
                const Budget& budget, const FormOptions& options) {
  budget.validate();
  const int cap = budget.area_cap();
  if (topology.num_cells() > 0 && cap < topology.num_components()) {
    throw Error(ErrorCode::kInfeasible,
                "area cap " + std::to_string(cap) + " is below the " +
                    std::to_string(topology.num_components()) +
                    " connected components of the topology; a partition "
                    "into contiguous areas is impossible");
  }
  const HolisticProbe probe(topology, catalog, budget, options);

  Plan plan;
  for (std::size_t c = 0; c < topology.num_cells(); ++c) {
    plan.areas.push_back(
        MakeArea(static_cast<AreaId>(c), {static_cast<CellId>(c)}));
  }

  while (plan.areas.size() > 1) {
    const bool over_cap = static_cast<int>(plan.areas.size()) > cap;
    if (!over_cap && options.profit == ProfitKind::kDemand &&
        options.raw_merge_profit) {
      break;
    }
    const double current = options.profit == ProfitKind::kHolistic
                               ? probe.score(plan)
                               : 0.0;
    Best<std::pair<std::size_t, std::size_t>> best;
    // plan.areas stays sorted by id: merges keep the lower id in place.
    for (std::size_t i = 0; i < plan.areas.size(); ++i) {
      for (std::size_t j = i + 1; j < plan.areas.size(); ++j) {
        const Area& a1 = plan.areas[i];
        const Area& a2 = plan.areas[j];
        if (!areas_adjacent(topology, a1, a2)) continue;
        double profit;
        if (options.profit == ProfitKind::kHolistic) {
          profit = probe.profit(plan, current,
                                Action{MergeAction{a1.id, a2.id}});
        } else if (!CanCarrySomething(catalog, Union(a1.members, a2.members),
                                      budget.broadcast_cap)) {
          profit = kInfeasibleProfit;
        } else if (options.raw_merge_profit) {
          profit = pr_merge_demand(topology, a1, a2, catalog);
        } else {
          profit = merge_gain_demand(topology, a1, a2, catalog);
        }
        best.offer({i, j}, profit);
      }
    }
    if (!best.key) break;  // no adjacent pair left
    if (!over_cap) {
      // The demand gain is never positive; a merge pays unless it dilutes
      // alignment, so only a strictly negative gain stops it.
      const bool gain = options.profit == ProfitKind::kDemand &&
                        !options.raw_merge_profit;
      if (gain ? best.profit < -kScoreEpsilon : best.profit <= 0.0) break;
    }
    const auto [i, j] = *best.key;
    plan = ApplyAction(
        plan, Action{MergeAction{plan.areas[i].id, plan.areas[j].id}});
  }
  return assign_content(topology, plan, catalog, budget, options.assign);
}

// ---------------------------------------------------------------------------
// Grow

namespace {

std::vector<CellId> Frontier(const Topology& topology, const Area& area) {
  std::vector<CellId> out;
  for (CellId c : area.members) {
    for (CellId n : topology.neighbors(c)) {
      if (!area.contains(n)) out.push_back(n);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Plan GrowDemand(const Topology& topology, const ContentCatalog& catalog,
                const Budget& budget, const FormOptions& options) {
  const int cap = budget.area_cap();
  const int rb_cap = budget.broadcast_cap;
  // Areas carry their provisional item and tight usage while growing.
  Plan plan;
  PlanLoad load(topology, catalog.num_items(), options.assign.rule);

  while (static_cast<int>(plan.areas.size()) < cap) {
    Best<std::pair<CellId, ContentId>> seed;
    for (std::size_t ci = 0; ci < topology.num_cells(); ++ci) {
      const auto c = static_cast<CellId>(ci);
      const CellDemand& row = catalog.cell(c);
      const auto served = load.served(c);
      std::optional<ContentId> item;
      int profit = 0;
      for (std::size_t m = 0; m < catalog.num_items(); ++m) {
        if (served[m] > 0) continue;
        if (row.popularity[m] > profit) {
          profit = row.popularity[m];
          item = static_cast<ContentId>(m);
        }
      }
      if (!item) {
        seed.offer({c, 0}, 0.0);
        continue;
      }
      const std::vector<CellId> members{c};
      const bool ok = load.fits(members, load.touched(members),
                                catalog.demand(c, *item), rb_cap);
      seed.offer({c, *item}, ok ? profit : kInfeasibleProfit);
    }
    if (!seed.key || seed.profit <= 0.0) break;

    Area area = MakeArea(plan.next_area_id(), {seed.key->first});
    const ContentId item = seed.key->second;
    area.content = item;
    area.usage = catalog.demand(seed.key->first, item);

    while (area.members.size() < topology.num_cells()) {
      Best<CellId> next;
      for (CellId c : Frontier(topology, area)) {
        const double profit = pr_add_demand(c, area, catalog);
        if (profit <= 0.0) {
          next.offer(c, profit);
          continue;
        }
        const auto grown = WithCell(area.members, c);
        const bool ok = load.fits(grown, load.touched(grown),
                                  TightUsage(catalog, grown, item), rb_cap);
        next.offer(c, ok ? profit : kInfeasibleProfit);
      }
      if (!next.key || next.profit <= 0.0) break;
      area.members = WithCell(area.members, *next.key);
      area.usage = TightUsage(catalog, area.members, item);
    }
    load.add(area.members, item, area.usage);
    plan.areas.push_back(std::move(area));
  }
  return StripContent(plan);
}

Plan GrowHolistic(const Topology& topology, const ContentCatalog& catalog,
                  const Budget& budget, const FormOptions& options) {
  const int cap = budget.area_cap();
  const HolisticProbe probe(topology, catalog, budget, options);
  Plan plan;
  double current = probe.score(plan);

  while (static_cast<int>(plan.areas.size()) < cap) {
    Best<CellId> seed;
    for (std::size_t c = 0; c < topology.num_cells(); ++c) {
      const auto cell = static_cast<CellId>(c);
      seed.offer(cell,
                 probe.profit(plan, current, Action{CreateAction{cell}}));
    }
    if (!seed.key || seed.profit <= 0.0) break;
    const AreaId id = plan.next_area_id();
    plan = ApplyAction(plan, Action{CreateAction{*seed.key}});
    current = probe.score(plan);

    while (plan.find(id)->members.size() < topology.num_cells()) {
      Best<CellId> next;
      for (CellId c : Frontier(topology, *plan.find(id))) {
        next.offer(c, probe.profit(plan, current, Action{AddAction{c, id}}));
      }
      if (!next.key || next.profit <= 0.0) break;
      plan = ApplyAction(plan, Action{AddAction{*next.key, id}});
      current = probe.score(plan);
    }
  }
  return plan;
}

}  // namespace

Plan grow_plan(const Topology& topology, const ContentCatalog& catalog,
               const Budget& budget, const FormOptions& options) {
  budget.validate();
  const Plan membership =
      options.profit == ProfitKind::kHolistic
          ? GrowHolistic(topology, catalog, budget, options)
          : GrowDemand(topology, catalog, budget, options);
  return assign_content(topology, membership, catalog, budget, options.assign);
}

Plan form_plan(Method method, const Topology& topology,
               const ContentCatalog& catalog, const Budget& budget,
               const FormOptions& options) {
  return method == Method::kMerge
             ? merge_plan(topology, catalog, budget, options)
             : grow_plan(topology, catalog, budget, options);
}

}  // namespace mbsfn
