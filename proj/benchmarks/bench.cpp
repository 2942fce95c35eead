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

#include <benchmark/benchmark.h>

#include "mbsfn/mbsfn.hpp"

namespace {

using namespace mbsfn;

const ScenarioFile& Reference() {
  static const ScenarioFile s = generate_reference(1);
  return s;
}

void BM_TotalScore(benchmark::State& state) {
  const ScenarioFile& s = Reference();
  const Plan plan = grow_plan(s.topology, s.catalog, s.budget);
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_score(s.topology, plan, s.catalog, s.budget));
  }
}
BENCHMARK(BM_TotalScore);

void BM_AssignContent(benchmark::State& state) {
  const ScenarioFile& s = Reference();
  const Plan membership =
      StripContent(merge_plan(s.topology, s.catalog, s.budget));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        assign_content(s.topology, membership, s.catalog, s.budget));
  }
}
BENCHMARK(BM_AssignContent);

void BM_FormPlan(benchmark::State& state) {
  const ScenarioFile& s = Reference();
  Budget b = s.budget;
  b.max_areas = static_cast<int>(state.range(2));
  FormOptions o;
  o.profit = static_cast<ProfitKind>(state.range(1));
  const auto method = static_cast<Method>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(form_plan(method, s.topology, s.catalog, b, o));
  }
  state.SetLabel(std::string(ToString(method)) + "/" + ToString(o.profit));
}
BENCHMARK(BM_FormPlan)
    ->ArgsProduct({{0, 1}, {0, 1}, {10, 30}})
    ->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  RandomInstanceOptions o;
  o.min_cells = o.max_cells = static_cast<int>(state.range(0));
  o.min_items = o.max_items = 3;
  const ScenarioFile s = generate_random_instance(11, o);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        exhaustive_optimum(s.topology, s.catalog, s.budget));
  }
}
BENCHMARK(BM_Oracle)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
