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

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

namespace mbsfn::cli {

namespace {

enum class LogLevel { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

LogLevel LevelFromEnv() {
  const char* raw = std::getenv("MBSFN_LOG_LEVEL");
  if (raw == nullptr) return LogLevel::kWarn;
  const std::string v(raw);
  if (v == "error") return LogLevel::kError;
  if (v == "info") return LogLevel::kInfo;
  if (v == "debug") return LogLevel::kDebug;
  return LogLevel::kWarn;
}

class Logger {
 public:
  explicit Logger(std::ostream& sink) : sink_(sink), level_(LevelFromEnv()) {}

  void Log(LogLevel level, const std::string& message) {
    static constexpr const char* kNames[] = {"error", "warn", "info", "debug"};
    if (level > level_) return;
    sink_ << "[" << kNames[static_cast<int>(level)] << "] " << message
          << "\n";
  }

 private:
  std::ostream& sink_;
  LogLevel level_;
};

std::string Fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

template <typename T, typename F>
std::vector<T> ParseList(const std::string& text, F convert) {
  std::vector<T> out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty()) continue;
    out.push_back(convert(token));
  }
  if (out.empty()) {
    throw Error(ErrorCode::kInvalidInput, "empty list: '" + text + "'");
  }
  return out;
}

int ParseInt(const std::string& token) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used == token.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kInvalidInput, "not an integer: '" + token + "'");
}

InterferenceRule RuleFromString(const std::string& name) {
  if (name == "any") return InterferenceRule::kAnyMember;
  if (name == "exactly-one") return InterferenceRule::kExactlyOne;
  throw Error(ErrorCode::kInvalidInput, "unknown rule '" + name + "'");
}

InterestRank RankFromString(const std::string& name) {
  if (name == "sum") return InterestRank::kSumOfInterest;
  if (name == "max") return InterestRank::kMaxItem;
  throw Error(ErrorCode::kInvalidInput, "unknown rank '" + name + "'");
}

// Writes to the file when a path is given, else to `out`.
void Emit(const std::string& path, const std::string& text,
          std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  file << text;
  if (!file) throw Error(ErrorCode::kIo, "write failed for '" + path + "'");
}

std::string GeometryCsv(const ScenarioFile& scenario, const Plan& plan) {
  std::ostringstream csv;
  csv << "cell_id,x,y,area_id,content_id\n";
  const std::size_t n = scenario.topology.num_cells();
  for (std::size_t c = 0; c < n; ++c) {
    const auto cell = static_cast<CellId>(c);
    std::string x, y;
    if (!scenario.geometry.empty()) {
      x = Fixed(scenario.geometry[c].x);
      y = Fixed(scenario.geometry[c].y);
    }
    bool listed = false;
    for (const Area& a : plan.areas) {
      if (!a.contains(cell)) continue;
      csv << c << "," << x << "," << y << "," << a.id << ",";
      if (a.active()) csv << *a.content;
      csv << "\n";
      listed = true;
    }
    if (!listed) csv << c << "," << x << "," << y << ",,\n";
  }
  return csv.str();
}

// Options shared by the planning commands.
struct PlanFlags {
  std::string method = "grow";
  std::string profit = "demand";
  std::string mode = "normalized";
  std::string rule = "any";
  std::string rank = "sum";
  bool raw_merge_profit = false;
};

FormOptions ToFormOptions(const PlanFlags& flags) {
  FormOptions options;
  options.profit = ProfitKindFromString(flags.profit);
  options.assign.mode = ScoreModeFromString(flags.mode);
  options.assign.rule = RuleFromString(flags.rule);
  options.assign.rank = RankFromString(flags.rank);
  options.raw_merge_profit = flags.raw_merge_profit;
  return options;
}

Budget WithCap(Budget budget, int max_areas) {
  budget.max_areas = max_areas;
  budget.validate();
  return budget;
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInfeasible:
      return kExitInfeasible;
    case ErrorCode::kSizeRefusal:
      return kExitSizeRefusal;
    default:
      return kExitInvalid;
  }
}

std::string CsvRow(const std::string& method, const std::string& profit,
                   int max_areas, ScoreMode mode, const ScoreReport& report) {
  std::ostringstream row;
  row << method << "," << profit << "," << max_areas << "," << ToString(mode)
      << "," << Fixed(report.total) << "," << Fixed(report.baseline_total)
      << "," << Fixed(report.improvement_abs) << ","
      << Fixed(report.improvement_pct) << "," << report.stats.num_areas << ","
      << Fixed(report.stats.mean_area_size) << ","
      << report.stats.uncovered_cells;
  return row.str();
}

std::vector<std::string> RunSweep(const ScenarioFile& scenario,
                                  const std::vector<Method>& methods,
                                  const std::vector<ProfitKind>& profits,
                                  const std::vector<int>& max_areas,
                                  ScoreMode mode, int jobs) {
  std::vector<SweepPoint> grid;
  for (Method m : methods) {
    for (ProfitKind p : profits) {
      for (int cap : max_areas) grid.push_back({m, p, cap});
    }
  }
  for (const SweepPoint& point : grid) WithCap(scenario.budget, point.max_areas);

  std::vector<std::string> rows(grid.size());
  std::vector<std::exception_ptr> failures(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        const SweepPoint& point = grid[i];
        const Budget budget = WithCap(scenario.budget, point.max_areas);
        FormOptions options;
        options.profit = point.profit;
        options.assign.mode = mode;
        const Plan plan = form_plan(point.method, scenario.topology,
                                    scenario.catalog, budget, options);
        const ScoreReport report =
            total_score(scenario.topology, plan, scenario.catalog, budget, mode);
        rows[i] = CsvRow(ToString(point.method), ToString(point.profit),
                         point.max_areas, mode, report);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const int threads = std::clamp(jobs, 1, static_cast<int>(grid.size()) + 1);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return rows;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Logger log(err);
  CLI::App app{"Broadcast area planner for single-frequency LTE networks",
               "mbsfn"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a scenario file");
  std::uint64_t seed = 1;
  std::string out_path;
  ReferenceOptions ref;
  bool random_instance = false;
  RandomInstanceOptions rnd;
  int rnd_cells = 0;
  int rnd_items = 0;
  std::optional<int> gen_max_areas;
  gen->add_option("--seed", seed, "Scenario seed");
  gen->add_option("--out", out_path, "Output path (default: stdout)");
  gen->add_option("--update-prob", ref.update_prob,
                  "Probability that a user wants the update item");
  gen->add_flag("--deterministic-split", ref.deterministic_split,
                "Exact update share per cell instead of sampling");
  gen->add_option("--total-users", ref.total_users);
  gen->add_option("--streaming-demand", ref.streaming_demand);
  gen->add_option("--update-demand", ref.update_demand);
  gen->add_option("--unicast-users", ref.unicast_users_per_cell,
                  "Unicast-only users per cell");
  gen->add_option("--unicast-demand", ref.unicast_demand);
  gen->add_option("--total-resources", ref.budget.total);
  gen->add_option("--broadcast-cap", ref.budget.broadcast_cap);
  gen->add_option("--max-areas", gen_max_areas);
  gen->add_flag("--random", random_instance,
                "Small random instance instead of the reference layout");
  gen->add_option("--cells", rnd_cells, "Cells of a random instance");
  gen->add_option("--items", rnd_items, "Items of a random instance");

  // plan
  auto* plan_cmd = app.add_subcommand("plan", "Form areas and assign content");
  std::string scenario_path;
  PlanFlags flags;
  std::optional<int> max_areas;
  std::string geometry_path;
  plan_cmd->add_option("--scenario", scenario_path)->required();
  plan_cmd->add_option("--method", flags.method, "merge or grow");
  plan_cmd->add_option("--profit", flags.profit, "demand or holistic");
  plan_cmd->add_option("--max-areas", max_areas);
  plan_cmd->add_option("--mode", flags.mode, "normalized or literal");
  plan_cmd->add_option("--rule", flags.rule, "any or exactly-one");
  plan_cmd->add_option("--rank", flags.rank, "sum or max");
  plan_cmd->add_flag("--raw-merge-profit", flags.raw_merge_profit);
  plan_cmd->add_option("--out", out_path, "Plan output path");
  plan_cmd->add_option("--geometry-csv", geometry_path,
                       "Per-cell membership CSV");

  // evaluate
  auto* eval = app.add_subcommand("evaluate", "Score a plan file");
  std::string plan_path;
  std::string mode_name = "normalized";
  std::string rule_name = "any";
  eval->add_option("--scenario", scenario_path)->required();
  eval->add_option("--plan", plan_path)->required();
  eval->add_option("--mode", mode_name);
  eval->add_option("--rule", rule_name);
  eval->add_option("--max-areas", max_areas,
                   "Area cap to check against (default: the plan's)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Score a grid of planner runs");
  std::string caps_list = "5,10,15,20,25,30";
  std::string methods_list = "merge,grow";
  std::string profits_list = "demand,holistic";
  int jobs = 1;
  sweep->add_option("--scenario", scenario_path)->required();
  sweep->add_option("--max-areas-list", caps_list);
  sweep->add_option("--methods", methods_list);
  sweep->add_option("--profits", profits_list);
  sweep->add_option("--mode", mode_name);
  sweep->add_option("--jobs", jobs, "Worker threads");
  sweep->add_option("--out", out_path, "CSV output path (default: stdout)");

  // oracle
  auto* orc = app.add_subcommand("oracle",
                                 "Compare the heuristics to the exact optimum");
  std::string offsets_list = "0";
  orc->add_option("--scenario", scenario_path)->required();
  orc->add_option("--max-areas", max_areas);
  orc->add_option("--mode", mode_name);
  orc->add_option("--usage-offsets", offsets_list,
                  "Usage offsets above tight searched by the oracle");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (gen->parsed()) {
      ScenarioFile scenario;
      if (random_instance) {
        if (rnd_cells > 0) rnd.min_cells = rnd.max_cells = rnd_cells;
        if (rnd_items > 0) rnd.min_items = rnd.max_items = rnd_items;
        if (gen_max_areas) rnd.max_areas = *gen_max_areas;
        scenario = generate_random_instance(seed, rnd);
      } else {
        if (gen_max_areas) ref.budget.max_areas = *gen_max_areas;
        scenario = generate_reference(seed, ref);
      }
      Emit(out_path, SerializeScenario(scenario), out);
      log.Log(LogLevel::kInfo,
              "generated " + std::to_string(scenario.topology.num_cells()) +
                  " cells");
      return kExitOk;
    }

    if (plan_cmd->parsed()) {
      const ScenarioFile scenario = load_scenario(scenario_path);
      const Method method = MethodFromString(flags.method);
      const FormOptions options = ToFormOptions(flags);
      const Budget budget =
          WithCap(scenario.budget, max_areas.value_or(scenario.budget.max_areas));
      log.Log(LogLevel::kInfo, std::string("planning with ") +
                                   ToString(method) + "/" +
                                   ToString(options.profit));
      PlanFile file;
      file.plan = form_plan(method, scenario.topology, scenario.catalog,
                            budget, options);
      file.plan.topology_ref = ScenarioFingerprint(scenario);
      file.planner = PlannerInfo{ToString(method), ToString(options.profit),
                                 budget.max_areas};

      const FeasibilityReport check =
          check_plan(scenario.topology, file.plan, scenario.catalog, budget,
                     options.assign.rule);
      if (!check.ok()) {
        for (const Violation& v : check.violations) {
          err << "violation: " << Describe(v) << "\n";
        }
        return kExitInfeasible;
      }
      if (!out_path.empty()) save_plan(file, out_path);
      if (!geometry_path.empty()) {
        Emit(geometry_path, GeometryCsv(scenario, file.plan), out);
      }
      const ScoreReport report =
          total_score(scenario.topology, file.plan, scenario.catalog, budget,
                      options.assign.mode, options.assign.rule);
      out << ToString(method) << "/" << ToString(options.profit)
          << " max_areas=" << budget.max_areas
          << " total=" << Fixed(report.total)
          << " baseline=" << Fixed(report.baseline_total)
          << " improvement=" << Fixed(report.improvement_abs) << " ("
          << Fixed(report.improvement_pct) << "%)"
          << " areas=" << report.stats.num_areas
          << " active=" << file.plan.num_active()
          << " mean_area_size=" << Fixed(report.stats.mean_area_size)
          << " uncovered=" << report.stats.uncovered_cells << "\n";
      return kExitOk;
    }

    if (eval->parsed()) {
      const ScenarioFile scenario = load_scenario(scenario_path);
      const PlanFile file = load_plan(plan_path, scenario);
      const ScoreMode mode = ScoreModeFromString(mode_name);
      const InterferenceRule rule = RuleFromString(rule_name);
      int cap = scenario.budget.max_areas;
      if (file.planner) cap = file.planner->max_areas;
      if (max_areas) cap = *max_areas;
      const Budget budget = WithCap(scenario.budget, cap);

      const FeasibilityReport check =
          check_plan(scenario.topology, file.plan, scenario.catalog, budget,
                     rule);
      if (!check.ok()) {
        err << "plan violates " << check.violations.size()
            << " constraint(s):\n";
        for (const Violation& v : check.violations) {
          err << "  " << Describe(v) << "\n";
        }
        return kExitInfeasible;
      }
      const ScoreReport report = total_score(
          scenario.topology, file.plan, scenario.catalog, budget, mode, rule);
      const std::string method = file.planner ? file.planner->method : "";
      const std::string profit = file.planner ? file.planner->profit : "";
      out << kCsvHeader << "\n"
          << CsvRow(method, profit, cap, mode, report) << "\n";
      return kExitOk;
    }

    if (sweep->parsed()) {
      const ScenarioFile scenario = load_scenario(scenario_path);
      const auto methods = ParseList<Method>(methods_list, MethodFromString);
      const auto profits =
          ParseList<ProfitKind>(profits_list, ProfitKindFromString);
      const auto caps = ParseList<int>(caps_list, ParseInt);
      const ScoreMode mode = ScoreModeFromString(mode_name);
      const auto rows = RunSweep(scenario, methods, profits, caps, mode, jobs);
      std::string csv = std::string(kCsvHeader) + "\n";
      for (const std::string& row : rows) csv += row + "\n";
      Emit(out_path, csv, out);
      log.Log(LogLevel::kInfo, std::to_string(rows.size()) + " sweep rows");
      return kExitOk;
    }

    if (orc->parsed()) {
      const ScenarioFile scenario = load_scenario(scenario_path);
      const Budget budget =
          WithCap(scenario.budget, max_areas.value_or(scenario.budget.max_areas));
      OracleOptions options;
      options.mode = ScoreModeFromString(mode_name);
      options.usage_offsets = ParseList<int>(offsets_list, ParseInt);
      const OracleResult best = exhaustive_optimum(
          scenario.topology, scenario.catalog, budget, options);
      log.Log(LogLevel::kInfo, "oracle visited " +
                                   std::to_string(best.plans) + " plans");

      out << "planner,score,oracle_score,gap\n";
      out << "oracle," << Fixed(best.score) << "," << Fixed(best.score)
          << "," << Fixed(0.0) << "\n";
      for (Method m : {Method::kMerge, Method::kGrow}) {
        for (ProfitKind p : {ProfitKind::kDemand, ProfitKind::kHolistic}) {
          FormOptions form;
          form.profit = p;
          form.assign.mode = options.mode;
          std::string score = "", gap = "";
          try {
            const Plan plan = form_plan(m, scenario.topology, scenario.catalog,
                                        budget, form);
            const double value = TotalValue(scenario.topology, plan,
                                            scenario.catalog, budget,
                                            options.mode);
            score = Fixed(value);
            gap = Fixed(best.score > 0.0 ? (best.score - value) / best.score
                                         : 0.0);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::kInfeasible) throw;
            log.Log(LogLevel::kWarn, std::string(ToString(m)) + "/" +
                                         ToString(p) + ": " + e.what());
          }
          out << ToString(m) << "/" << ToString(p) << "," << score << ","
              << Fixed(best.score) << "," << gap << "\n";
        }
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error (" << ToString(e.code()) << "): " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace mbsfn::cli
