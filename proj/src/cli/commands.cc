// Copyright 2026 The REORIENT Authors
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


#include "reorient/cli/commands.h"

#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "reorient/stoch/time_series.h"
#include "reorient/text.h"

namespace reorient::cli {
namespace {

using Json = nlohmann::ordered_json;
using text::FormatFixed;

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << content;
}

std::filesystem::path PrepareDir(const std::string& dir) {
  std::filesystem::create_directories(dir);
  return dir;
}

Json ConfigJson(const RunManifest& m) {
  Json j;
  j["case"] = m.case_path;
  j["algorithm"] = ToString(m.algorithm);
  j["epsilon_rel"] = m.config.epsilon_rel;
  j["epsilon_abs"] = m.config.epsilon_abs;
  j["gamma"] = m.config.gamma;
  j["max_iterations"] = m.config.max_iterations;
  j["threads"] = m.config.threads;
  if (m.seed) {
    j["seed"] = *m.seed;
  } else {
    j["seed"] = nullptr;
  }
  j["output_dir"] = m.output_dir;
  return j;
}

Json TimingJson(const SolveOutcome& o) {
  double master = 0.0, stabilization = 0.0, subproblems = 0.0, oracles = 0.0;
  for (const benders::IterationRecord& r : o.log.records) {
    master += r.seconds_master;
    stabilization += r.seconds_stabilization;
    subproblems += r.seconds_subproblems;
    oracles += r.seconds_oracles;
  }
  Json j;
  j["total_seconds"] = o.seconds;
  j["master_seconds"] = master;
  j["stabilization_seconds"] = stabilization;
  j["subproblem_seconds"] = subproblems;
  j["oracle_seconds"] = oracles;
  return j;
}

Json ResultJson(const SolveOutcome& o) {
  Json j;
  j["converged"] = o.converged;
  j["objective"] = o.objective;
  j["lower_bound"] = o.lower_bound;
  j["iterations"] = o.log.records.size();
  j["exact_evaluations"] = o.exact_evaluations;
  j["branch_nodes"] = o.branch_nodes;
  return j;
}

Json Metadata(const std::string& command, const RunManifest& m) {
  Json j;
  j["command"] = command;
  j["version"] = VersionString();
  j["config"] = ConfigJson(m);
  return j;
}

// Deterministic iteration log and the matching timing file.
void WriteLogs(const std::filesystem::path& dir, const SolveOutcome& o) {
  std::ostringstream log;
  o.log.Write(log, false);
  WriteFile(dir / "iterations.txt", log.str());
  std::ostringstream timings;
  o.log.Write(timings, true);
  timings << "total_seconds " << o.seconds << '\n';
  WriteFile(dir / "timings.txt", timings.str());
}

std::string ToText(const DecisionReport& r) {
  std::ostringstream out;
  r.Write(out);
  return out.str();
}

void SetAllStages(model::StageValue& v, double value) { v.values = {value}; }

// One solve per value; `on_point` sees every run as it finishes.
SweepReport Sweep(const RunManifest& manifest, const std::string& parameter,
                  const std::vector<double>& values,
                  const std::function<void(size_t, const SolveRun&)>& on_point) {
  if (values.empty()) throw UsageError("sensitivity needs at least one value");
  const model::CaseData base = LoadManifestCase(manifest);
  {
    model::CaseData probe = base;
    ApplyParameter(probe, parameter, values.front());
  }
  SweepReport sweep;
  sweep.parameter = parameter;
  for (size_t k = 0; k < values.size(); ++k) {
    model::CaseData data = base;
    ApplyParameter(data, parameter, values[k]);
    const SolveRun run = RunSolve(data, manifest);
    if (on_point) on_point(k, run);
    sweep.points.push_back({values[k], run.report});
  }
  return sweep;
}

}  // namespace

std::vector<std::string> SweepParameters() {
  return {"retrofit_share", "co2_price",   "demand_power", "demand_hydrogen",
          "demand_heat",    "reserve",     "profit_scale"};
}

void ApplyParameter(model::CaseData& data, const std::string& parameter, double value) {
  model::Scalars& s = data.scalars;
  if (parameter == "retrofit_share") {
    data.SetRetrofitShare(value);
  } else if (parameter == "co2_price") {
    SetAllStages(s.co2_price, value);
  } else if (parameter == "demand_power") {
    SetAllStages(s.demand_power, value);
  } else if (parameter == "demand_hydrogen") {
    SetAllStages(s.demand_hydrogen, value);
  } else if (parameter == "demand_heat") {
    SetAllStages(s.demand_heat, value);
  } else if (parameter == "reserve") {
    s.reserve = value;
  } else if (parameter == "profit_scale") {
    s.profit_scale = value;
  } else {
    std::string known;
    for (const std::string& p : SweepParameters()) known += (known.empty() ? "" : ", ") + p;
    throw UsageError("unknown sweep parameter '" + parameter + "' (known: " + known + ")");
  }
  data.Validate();
}

SolveRun RunSolve(const model::CaseData& data, const RunManifest& manifest,
                  const model::ModelOptions& options) {
  const model::ReorientModel m = model::BuildModel(data, options);
  SolveRun run;
  run.outcome = Solve(m, manifest.algorithm, manifest.config);
  run.report = MakeReport(data, m, run.outcome);
  return run;
}

void SweepReport::Write(std::ostream& out) const {
  out << "# sensitivity " << parameter << '\n';
  if (points.empty()) return;
  out << "\n[incidence]\n";
  out << "source target";
  for (const SweepPoint& p : points) out << ' ' << text::FormatNumber(p.value);
  out << '\n';
  const DecisionReport& first = points.front().report;
  for (size_t k = 0; k < first.incidence.size(); ++k) {
    out << first.incidence[k].source << ' ' << first.incidence[k].target;
    for (const SweepPoint& p : points) out << ' ' << Tuple(p.report.incidence[k].nodes);
    out << '\n';
  }
  out << "\n[objective]\n";
  out << "value objective investment_cost operational_cost retrofits status\n";
  for (size_t k = 0; k < points.size(); ++k) {
    const DecisionReport& r = points[k].report;
    out << text::FormatNumber(points[k].value) << ' ' << FormatFixed(r.objective, 3) << ' '
        << FormatFixed(r.investment_cost, 3) << ' ' << FormatFixed(r.operational_cost, 3) << ' '
        << RetrofitCount(k) << ' ' << (r.converged ? "converged" : "not-converged") << '\n';
  }
}

int SweepReport::RetrofitCount(size_t k) const {
  int n = 0;
  for (const IncidenceRow& row : points.at(k).report.incidence) {
    if (row.target == row.source + "_abandon") continue;
    for (int c : row.nodes) n += c;
  }
  return n;
}

SweepReport RunSensitivity(const RunManifest& manifest, const std::string& parameter,
                           const std::vector<double>& values) {
  return Sweep(manifest, parameter, values, nullptr);
}

void ComparisonReport::Write(std::ostream& out) const {
  out << "# comparison\n";
  out << "case " << full.case_name << '\n';
  out << "algorithm " << full.algorithm << '\n';
  if (full_uses_restricted_incumbent) {
    out << "note full-model solution taken from the investment-only incumbent\n";
  }
  out << "\n[objective]\n";
  out << "variant objective investment_cost operational_cost status\n";
  for (const auto* r : {&full, &investment_only}) {
    out << (r == &full ? "full" : "investment-only") << ' ' << FormatFixed(r->objective, 3)
        << ' ' << FormatFixed(r->investment_cost, 3) << ' '
        << FormatFixed(r->operational_cost, 3) << ' '
        << (r->converged ? "converged" : "not-converged") << '\n';
  }
  out << "difference " << FormatFixed(full.objective - investment_only.objective, 3) << ' '
      << FormatFixed(full.investment_cost - investment_only.investment_cost, 3) << ' '
      << FormatFixed(full.operational_cost - investment_only.operational_cost, 3) << " -\n";

  out << "\n[investment_by_region]\n";
  out << "region full investment-only difference\n";
  for (const auto& [region, cost] : full.investment_by_region) {
    const double other = investment_only.investment_by_region.at(region);
    out << region << ' ' << FormatFixed(cost, 3) << ' ' << FormatFixed(other, 3) << ' '
        << FormatFixed(cost - other, 3) << '\n';
  }

  out << "\n[capacity_difference]\n";
  out << "technology";
  for (size_t s = 0; s < full.stage_nodes.size(); ++s) out << " stage" << s + 1;
  out << '\n';
  for (size_t k = 0; k < full.capacities.size(); ++k) {
    out << full.capacities[k].technology;
    for (size_t s = 0; s < full.capacities[k].capacity.size(); ++s) {
      out << ' '
          << FormatFixed(full.capacities[k].capacity[s] -
                             investment_only.capacities[k].capacity[s],
                         4);
    }
    out << '\n';
  }

  out << "\n[retrofits]\n";
  out << "source target nodes_per_stage\n";
  for (const IncidenceRow& i : full.incidence) {
    out << i.source << ' ' << i.target << ' ' << Tuple(i.nodes) << '\n';
  }
}

ComparisonReport RunCompare(const RunManifest& manifest) {
  const model::CaseData data = LoadManifestCase(manifest);
  const model::ReorientModel full = model::BuildModel(data);
  model::ModelOptions restricted_options;
  restricted_options.investment_only = true;
  const model::ReorientModel restricted = model::BuildModel(data, restricted_options);
  if (full.master.columns != restricted.master.columns) {
    throw StructuralError("full and investment-only masters differ in layout");
  }
  const SolveOutcome full_run = Solve(full, manifest.algorithm, manifest.config);
  const SolveOutcome restricted_run = Solve(restricted, manifest.algorithm, manifest.config);
  ComparisonReport c;
  c.investment_only = MakeReport(data, restricted, restricted_run);
  if (restricted_run.objective < full_run.objective) {
    SolveOutcome adopted = restricted_run;
    adopted.converged = full_run.converged;
    adopted.lower_bound = full_run.lower_bound;
    c.full = MakeReport(data, full, adopted);
    c.full_uses_restricted_incumbent = true;
  } else {
    c.full = MakeReport(data, full, full_run);
  }
  return c;
}

int CmdSolve(const RunManifest& manifest, std::ostream& console) {
  const model::CaseData data = LoadManifestCase(manifest);
  const SolveRun run = RunSolve(data, manifest);
  const std::filesystem::path dir = PrepareDir(manifest.output_dir);
  WriteFile(dir / "report.txt", ToText(run.report));
  WriteLogs(dir, run.outcome);
  Json meta = Metadata("solve", manifest);
  meta["result"] = ResultJson(run.outcome);
  meta["timings"] = TimingJson(run.outcome);
  WriteFile(dir / "run.json", meta.dump(2) + "\n");
  console << data.name << ": " << ToString(manifest.algorithm) << " objective "
          << FormatFixed(run.outcome.objective, 3) << " ("
          << (run.outcome.converged ? "converged" : "not converged, partial outputs") << ")\n";
  return run.outcome.converged ? kExitOk : kExitNotConverged;
}

int CmdSensitivity(const RunManifest& manifest, const std::string& parameter,
                   const std::vector<double>& values, std::ostream& console) {
  const std::filesystem::path dir = PrepareDir(manifest.output_dir);
  Json meta = Metadata("sensitivity", manifest);
  meta["parameter"] = parameter;
  bool converged = true;
  const SweepReport sweep =
      Sweep(manifest, parameter, values, [&](size_t k, const SolveRun& run) {
        const std::filesystem::path point =
            PrepareDir((dir / ("point-" + std::to_string(k))).string());
        WriteFile(point / "report.txt", ToText(run.report));
        WriteLogs(point, run.outcome);
        Json entry;
        entry["value"] = values[k];
        entry["result"] = ResultJson(run.outcome);
        entry["timings"] = TimingJson(run.outcome);
        meta["points"].push_back(entry);
        converged = converged && run.outcome.converged;
        console << parameter << " = " << text::FormatNumber(values[k]) << ": objective "
                << FormatFixed(run.outcome.objective, 3) << '\n';
      });
  std::ostringstream out;
  sweep.Write(out);
  WriteFile(dir / "sweep.txt", out.str());
  WriteFile(dir / "run.json", meta.dump(2) + "\n");
  return converged ? kExitOk : kExitNotConverged;
}

int CmdCompare(const RunManifest& manifest, std::ostream& console) {
  const ComparisonReport c = RunCompare(manifest);
  const std::filesystem::path dir = PrepareDir(manifest.output_dir);
  std::ostringstream out;
  c.Write(out);
  WriteFile(dir / "comparison.txt", out.str());
  WriteFile(dir / "report-full.txt", ToText(c.full));
  WriteFile(dir / "report-investment-only.txt", ToText(c.investment_only));
  Json meta = Metadata("compare", manifest);
  meta["full_objective"] = c.full.objective;
  meta["investment_only_objective"] = c.investment_only.objective;
  meta["full_uses_restricted_incumbent"] = c.full_uses_restricted_incumbent;
  WriteFile(dir / "run.json", meta.dump(2) + "\n");
  console << c.full.case_name << ": full " << FormatFixed(c.full.objective, 3)
          << ", investment-only " << FormatFixed(c.investment_only.objective, 3) << '\n';
  return c.full.converged && c.investment_only.converged ? kExitOk : kExitNotConverged;
}

int CmdGenScenarios(const RunManifest& manifest, std::ostream& console) {
  const model::CaseData data = LoadManifestCase(manifest);
  const stoch::PriceTree prices = model::FitPriceTree(data);
  const stoch::OperationalScenarioSet set = stoch::SampleOperationalScenarios(
      data.series, data.tree.hours_per_season, data.tree.scenarios, data.tree.scenario_seed);
  const std::filesystem::path dir = PrepareDir(manifest.output_dir);

  std::ostringstream p;
  prices.WritePrices(p);
  WriteFile(dir / "prices.txt", p.str());
  std::ostringstream t;
  prices.tree.Write(t);
  WriteFile(dir / "tree.txt", t.str());
  std::ostringstream s;
  s << "scenario weight period season source_hour scale\n";
  for (size_t k = 0; k < set.scenarios.size(); ++k) {
    for (int period = 0; period < set.periods(); ++period) {
      s << k << ' ' << text::FormatNumber(set.weights[k]) << ' ' << period << ' '
        << period / set.hours_per_season << ' ' << set.scenarios[k].source_hours[period] << ' '
        << text::FormatNumber(set.scale[period]) << '\n';
    }
  }
  WriteFile(dir / "scenarios.txt", s.str());
  for (const std::string& w : prices.warnings) console << "warning: " << w << '\n';
  Json meta = Metadata("gen-scenarios", manifest);
  WriteFile(dir / "run.json", meta.dump(2) + "\n");
  console << data.name << ": " << prices.tree.InvestmentNodes().size()
          << " investment nodes, " << set.scenarios.size() << " operational scenarios of "
          << set.periods() << " periods\n";
  return kExitOk;
}

}  // namespace reorient::cli
