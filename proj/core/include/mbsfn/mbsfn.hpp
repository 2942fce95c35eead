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

#ifndef MBSFN_MBSFN_HPP_
#define MBSFN_MBSFN_HPP_

#include "mbsfn/area_form.hpp"
#include "mbsfn/constraints.hpp"
#include "mbsfn/content_assign.hpp"
#include "mbsfn/metric.hpp"
#include "mbsfn/model.hpp"
#include "mbsfn/oracle.hpp"
#include "mbsfn/plan_load.hpp"
#include "mbsfn/scenario_io.hpp"

#endif  // MBSFN_MBSFN_HPP_
