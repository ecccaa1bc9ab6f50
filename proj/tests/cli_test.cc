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


#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "reorient/cli/commands.h"
#include "reorient/cli/report.h"
#include "reorient/cli/run.h"
#include "reorient/errors.h"
#include "reorient/mhsp/tree.h"
#include "reorient/model/builder.h"
#include "reorient/model/case.h"

namespace reorient::cli {
namespace {

namespace fs = std::filesystem;

std::string CasePath(const std::string& name) {
  return std::string(REORIENT_DATA_DIR) + "/" + name + ".case";
}

fs::path Scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "reorient_cli_test" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

RunManifest Manifest(const std::string& case_name, Algorithm algorithm,
                     const fs::path& out) {
  RunManifest m;
  m.case_path = CasePath(case_name);
  m.algorithm = algorithm;
  m.output_dir = out.string();
  return m;
}

const IncidenceRow& Row(const DecisionReport& r, const std::string& source,
                        const std::string& target) {
  for (const IncidenceRow& i : r.incidence) {
    if (i.source == source && i.target == target) return i;
  }
  FAIL("no incidence row " << source << " -> " << target);
  return r.incidence.front();
}

void CheckCountsWithinTree(const DecisionReport& r) {
  for (const IncidenceRow& i : r.incidence) {
    REQUIRE(i.nodes.size() == r.stage_nodes.size());
    for (size_t s = 0; s < i.nodes.size(); ++s) {
      CHECK(i.nodes[s] >= 0);
      CHECK(i.nodes[s] <= r.stage_nodes[s]);
    }
  }
  for (const CapacityRow& c : r.capacities) {
    for (double v : c.capacity) CHECK(v >= -1e-9);
  }
}

TEST_CASE("bundled toy case loads and its tree validates") {
  const model::CaseData data = model::LoadCase(CasePath("toy"));
  CHECK(data.name == "toy");
  CHECK(data.regions.size() == 3);
  const model::ReorientModel m = model::BuildModel(data);
  CHECK(mhsp::ValidateTree(m.tree).ok());
}

TEST_CASE("bundled North Sea case echoes the pipeline capacities") {
  const model::CaseData data = model::LoadCase(CasePath("north_sea"));
  const std::vector<std::pair<std::string, double>> expected{
      {"Vesterled", 0.46}, {"Langeled", 0.98}, {"Zeepipe1", 0.58}, {"Franpipe", 0.75},
      {"Norpipe", 0.61},   {"Europipe1", 0.69}, {"Europipe2", 0.92}};
  for (const auto& [id, cap] : expected) {
    const model::Technology& t = data.technology(id);
    CHECK(t.tech_class == model::TechClass::kGasPipeline);
    CHECK(t.hist == cap);
    REQUIRE(data.RetrofitsOf(id).size() == 1);
    CHECK(data.RetrofitsOf(id)[0]->max_ret == cap);
  }
  CHECK(mhsp::ValidateTree(model::BuildModel(data).tree).ok());
}

TEST_CASE("enhanced and monolithic solves of the toy case agree within 1%") {
  const model::CaseData data = model::LoadCase(CasePath("toy"));
  RunManifest m = Manifest("toy", Algorithm::kEnhanced, Scratch("agree"));
  const SolveRun enhanced = RunSolve(data, m);
  m.algorithm = Algorithm::kMonolithic;
  const SolveRun mono = RunSolve(data, m);
  CHECK(enhanced.outcome.converged);
  CHECK(std::abs(enhanced.report.objective - mono.report.objective) <=
        0.01 * std::abs(mono.report.objective));
  CHECK(enhanced.report.investment_cost + enhanced.report.operational_cost ==
        doctest::Approx(enhanced.report.objective));
  CheckCountsWithinTree(enhanced.report);
  CheckCountsWithinTree(mono.report);
}

TEST_CASE("solve writes identical outputs for the same manifest") {
  const fs::path a = Scratch("solve_a");
  const fs::path b = Scratch("solve_b");
  std::ostringstream console;
  RunManifest m = Manifest("north_sea", Algorithm::kEnhanced, a);
  m.config.epsilon_rel = 0.01;
  CHECK(CmdSolve(m, console) == kExitOk);
  m.output_dir = b.string();
  CHECK(CmdSolve(m, console) == kExitOk);
  for (const char* file : {"report.txt", "iterations.txt"}) {
    CHECK(Slurp(a / file) == Slurp(b / file));
    CHECK(!Slurp(a / file).empty());
  }
  const std::string meta = Slurp(a / "run.json");
  CHECK(meta.find("\"epsilon_rel\": 0.01") != std::string::npos);
  CHECK(meta.find("\"version\"") != std::string::npos);
  CHECK(meta.find("\"total_seconds\"") != std::string::npos);
  CHECK(Slurp(a / "report.txt").find("status converged") != std::string::npos);
}

TEST_CASE("a solve that stops early exits nonzero and flags its outputs") {
  const fs::path dir = Scratch("partial");
  RunManifest m = Manifest("toy", Algorithm::kStandard, dir);
  m.config.max_iterations = 1;
  std::ostringstream console;
  CHECK(CmdSolve(m, console) == kExitNotConverged);
  CHECK(Slurp(dir / "report.txt").find("not-converged (partial)") != std::string::npos);
}

TEST_CASE("a single-value sweep reproduces the plain solve") {
  const fs::path solve_dir = Scratch("single_solve");
  const fs::path sweep_dir = Scratch("single_sweep");
  std::ostringstream console;
  const RunManifest m = Manifest("north_sea", Algorithm::kEnhanced, solve_dir);
  REQUIRE(model::LoadCase(m.case_path).retrofits[0].share == 0.1);
  CHECK(CmdSolve(m, console) == kExitOk);
  RunManifest s = m;
  s.output_dir = sweep_dir.string();
  CHECK(CmdSensitivity(s, "retrofit_share", {0.1}, console) == kExitOk);
  CHECK(Slurp(solve_dir / "report.txt") == Slurp(sweep_dir / "point-0" / "report.txt"));
  CHECK(Slurp(sweep_dir / "sweep.txt").find("(1,0)") != std::string::npos);
}

TEST_CASE("retrofit incidence does not increase with the retrofit share") {
  const RunManifest m = Manifest("north_sea", Algorithm::kMonolithic, Scratch("sweep"));
  const SweepReport sweep =
      RunSensitivity(m, "retrofit_share", {0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3});
  const int pipelines = 7;
  CHECK(sweep.RetrofitCount(0) == pipelines);
  CHECK(sweep.RetrofitCount(1) == pipelines);
  for (size_t k = 1; k < sweep.points.size(); ++k) {
    CHECK(sweep.RetrofitCount(k) <= sweep.RetrofitCount(k - 1));
  }
  CHECK(sweep.RetrofitCount(sweep.points.size() - 1) < pipelines);
  // Free conversion: every pipeline converts at the root.
  for (const IncidenceRow& row : sweep.points[0].report.incidence) {
    CHECK(row.nodes[0] == 1);
  }
  std::ostringstream out;
  sweep.Write(out);
  CHECK(out.str().find("Langeled H2Langeled (1,0)") != std::string::npos);
}

TEST_CASE("an unknown sweep parameter is a usage error") {
  const RunManifest m = Manifest("toy", Algorithm::kEnhanced, Scratch("usage"));
  std::ostringstream console;
  CHECK_THROWS_AS(RunSensitivity(m, "discount", {0.1}), UsageError);
  CHECK_THROWS_AS(CmdSensitivity(m, "discount", {0.1}, console), UsageError);
  model::CaseData data = model::LoadCase(m.case_path);
  ApplyParameter(data, "co2_price", 0.3);
  CHECK(data.scalars.co2_price.At(3) == 0.3);
}

TEST_CASE("the full model is no worse than the investment-only model") {
  const fs::path dir = Scratch("compare");
  const RunManifest m = Manifest("toy", Algorithm::kEnhanced, dir);
  std::ostringstream console;
  CHECK(CmdCompare(m, console) == kExitOk);
  const ComparisonReport c = RunCompare(m);
  CHECK(c.full.objective <= c.investment_only.objective);
  for (const IncidenceRow& row : c.investment_only.incidence) {
    for (int n : row.nodes) CHECK(n == 0);
  }
  const std::string text = Slurp(dir / "comparison.txt");
  CHECK(text.find("[investment_by_region]") != std::string::npos);
  CHECK(text.find("Hub ") != std::string::npos);
  CHECK(c.full.investment_by_region.size() == 3);
}

TEST_CASE("without retrofit options both variants coincide") {
  std::string text = Slurp(CasePath("toy"));
  const size_t a = text.find("[retrofits]");
  const size_t b = text.find("[series]");
  REQUIRE(a != std::string::npos);
  text.erase(a, b - a);
  const fs::path dir = Scratch("no_retrofit");
  {
    std::ofstream out(dir / "plain.case");
    out << text;
  }
  RunManifest m;
  m.case_path = (dir / "plain.case").string();
  m.algorithm = Algorithm::kMonolithic;
  m.output_dir = (dir / "out").string();
  const ComparisonReport c = RunCompare(m);
  CHECK(c.full.objective == doctest::Approx(c.investment_only.objective).epsilon(1e-9));
}

TEST_CASE("gen-scenarios writes the tree, prices and periods") {
  const fs::path dir = Scratch("scenarios");
  std::ostringstream console;
  RunManifest m = Manifest("toy", Algorithm::kEnhanced, dir);
  m.seed = 17;
  CHECK(CmdGenScenarios(m, console) == kExitOk);
  const std::string prices = Slurp(dir / "prices.txt");
  CHECK(prices.rfind("node stage probability oil gas", 0) == 0);
  std::istringstream tree_text(Slurp(dir / "tree.txt"));
  CHECK(mhsp::ValidateTree(mhsp::StrategicTree::Read(tree_text)).ok());
  CHECK(Slurp(dir / "scenarios.txt").find("source_hour") != std::string::npos);
}

TEST_CASE("manifest checks") {
  RunManifest m = Manifest("toy", Algorithm::kEnhanced, Scratch("manifest"));
  CHECK_NOTHROW(m.Validate());
  m.case_path = CasePath("missing");
  CHECK_THROWS_AS(m.Validate(), DataError);
  CHECK_THROWS_AS(ParseAlgorithm("simplex"), ValidationError);
  CHECK(ParseAlgorithm("monolithic") == Algorithm::kMonolithic);
  setenv(kOutputDirVariable, "/tmp/reorient-env-out", 1);
  CHECK(DefaultOutputDir() == "/tmp/reorient-env-out");
  unsetenv(kOutputDirVariable);
  CHECK(DefaultOutputDir() == "reorient-out");
}

}  // namespace
}  // namespace reorient::cli
