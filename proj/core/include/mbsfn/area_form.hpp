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

// Broadcast-area formation.
//
// Two greedy planners decide cell-to-area membership; content is then picked
// by assign_content.
//
//  * merge: start with one area per cell and repeatedly union the adjacent
//    pair with the best profit. Merging continues while the area count is
//    above the cap (taking the least-bad pair if needed) and stops once it is
//    within the cap and no pair has positive profit. The result partitions
//    the cell set.
//  * grow: repeatedly seed an area at the cell with the best creation profit
//    and extend it one neighbor at a time while the best addition has
//    positive profit. Areas may overlap and cells may stay uncovered.
//
// Profits come in two kinds. Demand profits look at popularity only:
//   merge   max_m sum_{c in a1+a2} pop(c,m) / (U(a1) + U(a2)), compared
//           against the user-weighted alignment the two areas already had
//   create  most popular item at c that is not yet broadcast there
//   add     popularity at c of the area's provisional item
// Holistic profits apply the action to a copy of the membership, re-run
// content assignment and return the change in total score.
//
// Actions that leave the new or modified area unable to carry any item
// within the broadcast budget get profit -infinity.

#ifndef MBSFN_AREA_FORM_HPP_
#define MBSFN_AREA_FORM_HPP_

#include <limits>
#include <optional>
#include <string>
#include <variant>

#include "mbsfn/content_assign.hpp"
#include "mbsfn/metric.hpp"
#include "mbsfn/model.hpp"

namespace mbsfn {

enum class ProfitKind { kDemand, kHolistic };
enum class Method { kMerge, kGrow };

const char* ToString(ProfitKind kind);
const char* ToString(Method method);
ProfitKind ProfitKindFromString(const std::string& name);
Method MethodFromString(const std::string& name);

inline constexpr double kInfeasibleProfit =
    -std::numeric_limits<double>::infinity();

struct MergeAction {
  AreaId first = 0;
  AreaId second = 0;
};
struct CreateAction {
  CellId cell = 0;
};
struct AddAction {
  CellId cell = 0;
  AreaId area = 0;
};

struct Action {
  std::variant<MergeAction, CreateAction, AddAction> kind;
  double profit = kInfeasibleProfit;
  bool feasible = false;
};

struct FormOptions {
  ProfitKind profit = ProfitKind::kDemand;
  AssignOptions assign;
  // Demand merge profit as the raw alignment ratio. The ratio is never
  // negative, so with this set merging simply runs down to the area cap.
  bool raw_merge_profit = false;
};

// Alignment ratio of the union of two areas.
double pr_merge_demand(const Topology& topology, const Area& a1,
                       const Area& a2, const ContentCatalog& catalog);

// pr_merge_demand minus the user-weighted mean of the two areas' own
// alignment ratios. Never positive; zero when both areas already agree on
// their dominant item.
double merge_gain_demand(const Topology& topology, const Area& a1,
                         const Area& a2, const ContentCatalog& catalog);

struct CreateChoice {
  double profit = 0.0;
  std::optional<ContentId> item;  // most popular item not yet served at c
};

// Residual creation profit: the largest popularity at c among items not
// already broadcast at c by an area of `plan_so_far` (areas carry their
// provisional content). Profit 0 and no item when nothing is left.
CreateChoice pr_create_demand(CellId c, const ContentCatalog& catalog,
                              const Plan& plan_so_far);

// Popularity at c of the area's provisional item. The area must carry one.
double pr_add_demand(CellId c, const Area& area,
                     const ContentCatalog& catalog);

// Membership after applying the action. Merge keeps the first area's id;
// create appends an area with the next free id.
Plan ApplyAction(const Plan& membership, const Action& action);

// Change in total score from applying the action to `membership` and
// re-running content assignment on both sides. -infinity when the result
// goes over the area cap without shrinking the area count, breaks
// contiguity, or leaves the new or modified area without content.
double pr_holistic(const Action& action, const Topology& topology,
                   const Plan& membership, const ContentCatalog& catalog,
                   const Budget& budget, const FormOptions& options = {});

// Throws Error(kInfeasible) when the area cap is below the number of
// connected components of the topology.
Plan merge_plan(const Topology& topology, const ContentCatalog& catalog,
                const Budget& budget, const FormOptions& options = {});

Plan grow_plan(const Topology& topology, const ContentCatalog& catalog,
               const Budget& budget, const FormOptions& options = {});

Plan form_plan(Method method, const Topology& topology,
               const ContentCatalog& catalog, const Budget& budget,
               const FormOptions& options = {});

}  // namespace mbsfn

#endif  // MBSFN_AREA_FORM_HPP_
