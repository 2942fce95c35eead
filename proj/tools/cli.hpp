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

// Command-line front end: generate, plan, evaluate, sweep and oracle.

#ifndef MBSFN_TOOLS_CLI_HPP_
#define MBSFN_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "mbsfn/mbsfn.hpp"

namespace mbsfn::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitSizeRefusal = 4;

int ExitCodeFor(ErrorCode code);

inline constexpr const char* kCsvHeader =
    "method,profit,max_areas,mode,total,baseline,improvement_abs,"
    "improvement_pct,num_areas,mean_area_size,uncovered_cells";

// One evaluation row, without the trailing newline.
std::string CsvRow(const std::string& method, const std::string& profit,
                   int max_areas, ScoreMode mode, const ScoreReport& report);

struct SweepPoint {
  Method method;
  ProfitKind profit;
  int max_areas;
};

// Rows of the full factorial, in (method, profit, max_areas) order of the
// given lists. Grid points are computed on `jobs` threads; the output does
// not depend on it.
std::vector<std::string> RunSweep(const ScenarioFile& scenario,
                                  const std::vector<Method>& methods,
                                  const std::vector<ProfitKind>& profits,
                                  const std::vector<int>& max_areas,
                                  ScoreMode mode, int jobs);

// Runs one command line. `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace mbsfn::cli

#endif  // MBSFN_TOOLS_CLI_HPP_
