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

#ifndef MBSFN_CONTENT_ASSIGN_HPP_
#define MBSFN_CONTENT_ASSIGN_HPP_

#include "mbsfn/metric.hpp"
#include "mbsfn/model.hpp"

namespace mbsfn {

// How areas are ranked before content is handed out.
enum class InterestRank {
  kSumOfInterest,  // sum over cells and items of popularity
  kMaxItem,        // sum over cells of the single most popular item
};

struct AssignOptions {
  ScoreMode mode = ScoreMode::kNormalized;
  InterferenceRule rule = InterferenceRule::kAnyMember;
  InterestRank rank = InterestRank::kSumOfInterest;
};

// Interest weight used to order areas for content assignment.
std::int64_t AreaInterest(const ContentCatalog& catalog, const Area& area,
                          InterestRank rank);

// Greedy content selection for fixed membership.
//
// Areas are visited by decreasing interest (ties: lower area id). Each area
// gets the item that maximizes the total score among the items it can carry
// with tight usage without breaking any cell or neighbor budget, given the
// areas already decided. An area with no viable item is marked inactive.
// Decisions are never revisited. Existing content in `plan` is ignored.
Plan assign_content(const Topology& topology, const Plan& plan,
                    const ContentCatalog& catalog, const Budget& budget,
                    const AssignOptions& options = {});

}  // namespace mbsfn

#endif  // MBSFN_CONTENT_ASSIGN_HPP_
