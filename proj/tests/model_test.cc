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



#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "reorient/benders/algorithm.h"
#include "reorient/errors.h"
#include "reorient/lp/solver.h"
#include "reorient/model/builder.h"
#include "reorient/model/case.h"

namespace reorient::model {
namespace {

constexpr double kYear = 8760.0;

CaseData Parse(const std::string& text) {
  std::istringstream in(text);
  return ReadCase(in);
}

// Node vector of operational link `k` with every master column at zero.
std::vector<double> BaseX(const ReorientModel& m, int k = 0) {
  const std::vector<double> zero(m.problem.master.base.num_columns(), 0.0);
  return m.problem.links[k].XValue(zero);
}

int XIndex(const ReorientModel& m, const std::string& label) {
  const auto& labels = m.problem.templates[0].x_labels;
  const auto it = std::find(labels.begin(), labels.end(), label);
  REQUIRE_MESSAGE(it != labels.end(), label);
  return static_cast<int>(it - labels.begin());
}

lp::LpSolution SolveNode(const ReorientModel& m, const std::vector<double>& x,
                         const std::vector<double>& c) {
  const lp::LpSolution s = lp::SolveLp(BindNode(m.problem.templates[0], x, c));
  REQUIRE(s.optimal());
  return s;
}

double NodeValue(const ReorientModel& m, const std::vector<double>& x,
                 const std::vector<double>& c) {
  return SolveNode(m, x, c).objective_value;
}

int RowIndex(const lp::LinearProgram& lp, const std::string& label) {
  const auto it = std::find(lp.row_labels.begin(), lp.row_labels.end(), label);
  REQUIRE_MESSAGE(it != lp.row_labels.end(), label);
  return static_cast<int>(it - lp.row_labels.begin());
}

void Fix(ReorientModel& m, const std::string& label, double value) {
  const int col = m.master.columns.at(label);
  m.problem.master.base.lower[col] = value;
  m.problem.master.base.upper[col] = value;
}

double Value(const ReorientModel& m, const benders::MonolithicResult& r,
             const std::string& label) {
  return r.master_x[m.master.columns.at(label)];
}

const char* kHeader = R"(
[tree]
branching 1
scenarios 1
hours_per_season 1
price_paths 50
[scalars]
kappa 1
shed_power 1000
)";

// One region, one generator of capacity 10 at cost 20, flat demand `load`.
std::string Dispatch(double load, const std::string& extra_tech = "",
                     const std::string& extra_scalars = "") {
  std::ostringstream s;
  s << kHeader << extra_scalars << "\n[regions]\nid=A\n[technologies]\n"
    << "id=G class=thermal region=A hist=10 cost=20 emission=0.5\n"
    << extra_tech << "\n[series]\nfill A load " << load << " 4\n";
  return s.str();
}

TEST_CASE("single thermal unit serves flat demand") {
  const ReorientModel m = BuildModel(Parse(Dispatch(5.0)));
  const lp::LpSolution s = SolveNode(m, BaseX(m), {1.0, 0.0});
  CHECK(s.objective_value == doctest::Approx(kYear * 20.0 * 5.0).epsilon(1e-9));
  const lp::LinearProgram bound = BindNode(m.problem.templates[0], BaseX(m),
                                           std::vector<double>{1.0, 0.0});
  for (int j = 0; j < bound.num_columns(); ++j) {
    if (bound.column_labels[j].rfind("gen[G,", 0) == 0) CHECK(s.primal[j] == doctest::Approx(5.0));
  }
}

TEST_CASE("demand above capacity is shed at the penalty") {
  const ReorientModel m = BuildModel(Parse(Dispatch(15.0)));
  CHECK(NodeValue(m, BaseX(m), {1.0, 0.0}) ==
        doctest::Approx(kYear * (20.0 * 10.0 + 1000.0 * 5.0)).epsilon(1e-9));
}

TEST_CASE("zero capacity gives the full shed penalty") {
  const ReorientModel m = BuildModel(Parse(Dispatch(5.0)));
  std::vector<double> x = BaseX(m);
  x[XIndex(m, "acc[G]")] = 0.0;
  CHECK(NodeValue(m, x, {1.0, 0.0}) == doctest::Approx(kYear * 1000.0 * 5.0).epsilon(1e-9));
}

// Two regions joined by a line of capacity 4. Brute force: for every flow on
// a 0.1 grid dispatch each region greedily with its own generator and shed
// the rest.
TEST_CASE("two-region dispatch matches a grid search over the line flow") {
  const std::vector<double> load_a{3, 6, 2, 9}, load_b{8, 5, 12, 4};
  std::ostringstream s;
  s << kHeader << "[regions]\nid=A\nid=B\n[technologies]\n"
    << "id=GA class=thermal region=A hist=10 cost=10\n"
    << "id=GB class=thermal region=B hist=10 cost=50\n"
    << "[lines]\nid=AB from=A to=B hist=4\n[series]\n"
    << "profile A load 3 6 2 9\nprofile B load 8 5 12 4\n";
  const ReorientModel m = BuildModel(Parse(s.str()));

  auto region_cost = [](double need, double cost) {
    const double served = std::clamp(need, 0.0, 10.0);
    return cost * served + 1000.0 * std::max(0.0, need - 10.0);
  };
  // Seasons are single hours here, so every sampled period is one of the
  // four source hours.
  const auto& hours = m.scenarios.scenarios[0].source_hours;
  double oracle = 0.0;
  for (size_t t = 0; t < hours.size(); ++t) {
    double best = 1e300;
    for (int k = -40; k <= 40; ++k) {
      const double f = 0.1 * k;
      best = std::min(best, region_cost(load_a[hours[t]] + f, 10.0) +
                                region_cost(load_b[hours[t]] - f, 50.0));
    }
    oracle += m.scenarios.scale[t] * best;
  }
  CHECK(NodeValue(m, BaseX(m), {1.0, 0.0}) == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("doubling the CO2 price adds price times emissions") {
  const ReorientModel m = BuildModel(Parse(Dispatch(5.0)));
  const double price = 30.0;
  const double once = NodeValue(m, BaseX(m), {1.0, price});
  const double twice = NodeValue(m, BaseX(m), {1.0, 2.0 * price});
  CHECK(twice - once == doctest::Approx(price * 0.5 * 5.0 * kYear).epsilon(1e-9));
}

TEST_CASE("binding is deterministic and checks dimensions") {
  const ReorientModel m = BuildModel(Parse(Dispatch(5.0)));
  const std::vector<double> x = BaseX(m), c{1.0, 7.0};
  const lp::LinearProgram a = BindNode(m.problem.templates[0], x, c);
  const lp::LinearProgram b = BindNode(m.problem.templates[0], x, c);
  CHECK(a.objective == b.objective);
  CHECK(a.upper == b.upper);
  CHECK(a.rhs == b.rhs);
  CHECK(a.rows.size() == b.rows.size());
  std::vector<double> short_x(x.begin(), x.end() - 1);
  CHECK_THROWS_AS(BindNode(m.problem.templates[0], short_x, c), StructuralError);
  CHECK_THROWS_AS(BindNode(m.problem.templates[0], x, std::vector<double>{1.0}),
                  StructuralError);
}

TEST_CASE("reserve requirement binds when capacity is short") {
  // Demand 9, capacity 10, reserve 25% of load: 2.25 held back, so 7.75 is
  // generated and 1.25 shed, because a reserve shortfall costs more.
  const ReorientModel m = BuildModel(
      Parse(Dispatch(9.0, "", "reserve 0.25\nshed_reserve 5000\n")));
  const lp::LinearProgram bound = BindNode(m.problem.templates[0], BaseX(m),
                                           std::vector<double>{1.0, 0.0});
  const lp::LpSolution s = lp::SolveLp(bound);
  REQUIRE(s.optimal());
  CHECK(s.objective_value == doctest::Approx(kYear * (20.0 * 7.75 + 1000.0 * 1.25)).epsilon(1e-9));
  int checked = 0;
  for (int r = 0; r < bound.num_rows(); ++r) {
    if (bound.row_labels[r].rfind("reserve[", 0) != 0) continue;
    CHECK(bound.RowActivity(r, s.primal) == doctest::Approx(bound.rhs[r]).epsilon(1e-9));
    CHECK(bound.rhs[r] == doctest::Approx(2.25));
    CHECK(s.dual[r] != 0.0);
    ++checked;
  }
  CHECK(checked == 4);
}

TEST_CASE("emission budget below the free level binds with a nonzero dual") {
  // A clean unit at cost 60 competes with the emitting unit at 20.
  const std::string clean = "id=C class=thermal region=A hist=10 cost=60\n";
  const ReorientModel free_run = BuildModel(Parse(Dispatch(5.0, clean)));
  const double free_value = NodeValue(free_run, BaseX(free_run), {1.0, 0.0});
  CHECK(free_value == doctest::Approx(kYear * 100.0).epsilon(1e-9));
  // Unconstrained emissions: 0.5 * 5 * 8760 per scenario; allow 40%.
  const double budget = 0.4 * 0.5 * 5.0 * kYear;
  std::ostringstream extra;
  extra << "co2_budget " << budget << "\n";
  const ReorientModel m = BuildModel(Parse(Dispatch(5.0, clean, extra.str())));
  const lp::LinearProgram bound = BindNode(m.problem.templates[0], BaseX(m),
                                           std::vector<double>{1.0, 0.0});
  const lp::LpSolution s = lp::SolveLp(bound);
  REQUIRE(s.optimal());
  const int r = RowIndex(bound, "co2[0]");
  const double activity = bound.RowActivity(r, s.primal);
  CHECK(std::abs(activity - budget) <= 1e-7 * (1.0 + budget));
  CHECK(s.dual[r] < 0.0);
  // 40% of the energy at 20, the rest at 60.
  CHECK(s.objective_value == doctest::Approx(kYear * 5.0 * (0.4 * 20.0 + 0.6 * 60.0)).epsilon(1e-9));
}

// Three regions with every operational technology class.
const char* kRich = R"(
[tree]
branching 1
scenarios 2
hours_per_season 2
price_paths 50
[scalars]
kappa 1
shed_power 500
shed_heat 200
shed_hydrogen 4000
shed_reserve 300
reserve 0.1
demand_hydrogen 1
[regions]
id=A
id=B
id=P platform=1
[technologies]
id=GasA class=thermal region=A hist=8 cost=40 emission=0.4 ramp=0.5
id=WindA class=renewable region=A hist=6 profile=wind
id=RorB class=hydro-ror region=B hist=3 profile=ror
id=DamB class=hydro-seasonal region=B hist=5 profile=inflow
id=BatA class=electric-storage region=A hist=2 duration=4 charge_efficiency=0.9
id=TankB class=hydrogen-storage region=B hist=0.5 duration=2
id=ElyB class=electrolyser region=B hist=3 conversion=0.02
id=FcA class=fuel-cell region=A hist=1 conversion=0.05
id=SmrA class=smr-ccs region=A hist=0.05 cost=900 emission=0.1
id=TurbP class=thermal region=P hist=4 cost=30 emission=0.5 heat_recovery=0.6
id=BoilP class=electric-boiler region=P hist=2 efficiency=0.95
[lines]
id=AB from=A to=B hist=4
id=AP from=A to=P hist=2
[pipelines]
id=HAB from=A to=B hist=0.1
[series]
profile A load 6 7 9 8 5 6 10 9
profile B load 3 4 4 5 3 2 4 3
profile P load 2 2 3 2 2 2 3 2
profile P heat 1 1.5 2 1 1 2 1.5 1
profile A hydrogen 0.05 0.05 0.06 0.04 0.05 0.05 0.06 0.04
profile A wind 0.2 0.8 0.5 0.1 0.9 0.3 0.6 0.4
profile B ror 0.5 0.6 0.7 0.4 0.5 0.6 0.7 0.4
profile B inflow 2 2 3 1 2 2 3 1
)";

TEST_CASE("subproblem value is nonincreasing in every node component") {
  const ReorientModel m = BuildModel(Parse(kRich));
  const mhsp::SubproblemTemplate& t = m.problem.templates[0];
  CHECK(t.OracleAssumptionIssues().empty());
  const std::vector<double> base = BaseX(m);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<double> lo(t.x_dimension), hi(t.x_dimension);
    for (int k = 0; k < t.x_dimension; ++k) {
      const double span = std::max(1.0, std::abs(base[k]));
      lo[k] = t.special_x[k] + span * unit(rng);
      hi[k] = lo[k] + span * unit(rng);
    }
    const std::vector<double> c{1.0, 25.0 * unit(rng)};
    const double g_lo = NodeValue(m, lo, c);
    const double g_hi = NodeValue(m, hi, c);
    CHECK(g_hi <= g_lo + 1e-7 * (1.0 + std::abs(g_lo)));
  }
}

TEST_CASE("subproblem value is positively homogeneous in costs") {
  const ReorientModel m = BuildModel(Parse(kRich));
  const std::vector<double> x = BaseX(m);
  const double g = NodeValue(m, x, {1.0, 50.0});
  for (double alpha : {0.0, 0.5, 2.0, 3.0}) {
    CHECK(NodeValue(m, x, {alpha, alpha * 50.0}) ==
          doctest::Approx(alpha * g).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("power balance rows hold exactly at the optimum") {
  const ReorientModel m = BuildModel(Parse(kRich));
  const lp::LinearProgram bound = BindNode(m.problem.templates[0], BaseX(m),
                                           std::vector<double>{1.0, 50.0});
  const lp::LpSolution s = lp::SolveLp(bound);
  REQUIRE(s.optimal());
  int rows = 0;
  for (int r = 0; r < bound.num_rows(); ++r) {
    const std::string& label = bound.row_labels[r];
    if (label.rfind("power[", 0) != 0 && label.rfind("hydrogen[", 0) != 0 &&
        label.rfind("heat[", 0) != 0) {
      continue;
    }
    CHECK(bound.senses[r] == lp::RowSense::kEqual);
    CHECK(std::abs(bound.RowActivity(r, s.primal) - bound.rhs[r]) <= 1e-7);
    ++rows;
  }
  // 3 power, 2 hydrogen and 1 heat balance per period; 2 scenarios x 8.
  CHECK(rows == 6 * 16);
}

TEST_CASE("relatively complete recourse at the special point") {
  const ReorientModel m = BuildModel(Parse(kRich));
  const mhsp::SubproblemTemplate& t = m.problem.templates[0];
  const lp::LpSolution s = lp::SolveLp(BindNode(t, t.special_x, std::vector<double>{1.0, 0.0}));
  CHECK(s.optimal());
}

// Capacity accumulation: one investable technology on a chain of stages.
std::string Chain(int stages, const std::string& tech, const std::string& extra = "") {
  std::ostringstream s;
  s << "[tree]\nbranching";
  for (int k = 0; k < stages; ++k) s << " 1";
  s << "\nscenarios 1\nhours_per_season 1\nprice_paths 50\n[scalars]\nkappa 5\nshed_power 1000\n"
    << "[regions]\nid=A\n[technologies]\n" << tech << "\n" << extra
    << "[series]\nfill A load 1 4\n";
  return s.str();
}

TEST_CASE("accumulated capacity adds historical and invested capacity") {
  ReorientModel m = BuildModel(
      Parse(Chain(1, "id=T class=thermal region=A hist=2 max_inv=10 inv_var=1 cost=5")));
  REQUIRE(m.tree.InvestmentNodes().size() == 1);
  const int inv = m.tree.InvestmentNodes()[0];
  const int ope = m.tree.OperationalNodes()[0];
  Fix(m, "x_inv[T," + std::to_string(inv) + "]", 3.0);
  const benders::MonolithicResult r = benders::SolveMonolithic(m.problem);
  CHECK(Value(m, r, "x_acc[T," + std::to_string(ope) + "]") == doctest::Approx(5.0));
}

TEST_CASE("investments retire after their lifetime") {
  ReorientModel m = BuildModel(Parse(
      Chain(3, "id=T class=thermal region=A hist=1 max_inv=10 inv_var=1 lifetime=5 cost=5")));
  const std::vector<int> inv = m.tree.InvestmentNodes();
  REQUIRE(inv.size() == 3);
  Fix(m, "x_inv[T," + std::to_string(inv[0]) + "]", 3.0);
  Fix(m, "x_inv[T," + std::to_string(inv[1]) + "]", 0.0);
  Fix(m, "x_inv[T," + std::to_string(inv[2]) + "]", 0.0);
  const benders::MonolithicResult r = benders::SolveMonolithic(m.problem);
  std::map<int, double> by_stage;
  for (int o : m.tree.OperationalNodes()) {
    by_stage[m.tree.node(o).stage] = Value(m, r, "x_acc[T," + std::to_string(o) + "]");
  }
  CHECK(by_stage[1] == doctest::Approx(4.0));
  CHECK(by_stage[2] == doctest::Approx(4.0));
  CHECK(by_stage[3] == doctest::Approx(1.0));
}

TEST_CASE("build cost gates investment through the binary") {
  // Unmet demand of 1 costs 1000 * 8760 * 5 per stage; building is cheap.
  ReorientModel m = BuildModel(Parse(
      Chain(1, "id=T class=thermal region=A max_inv=4 inv_var=1 inv_fix=100 cost=5")));
  const std::string inv = std::to_string(m.tree.InvestmentNodes()[0]);
  CHECK(m.problem.master.binary_columns.count(m.master.columns.at("y_inv[T," + inv + "]")));
  const benders::MonolithicResult free_run = benders::SolveMonolithic(m.problem);
  CHECK(Value(m, free_run, "y_inv[T," + inv + "]") == doctest::Approx(1.0));
  CHECK(Value(m, free_run, "x_inv[T," + inv + "]") >= 1.0 - 1e-7);
  Fix(m, "y_inv[T," + inv + "]", 0.0);
  const benders::MonolithicResult gated = benders::SolveMonolithic(m.problem);
  CHECK(Value(m, gated, "x_inv[T," + inv + "]") == doctest::Approx(0.0));
  // Without a build cost no binary is created.
  const ReorientModel plain = BuildModel(
      Parse(Chain(1, "id=T class=thermal region=A max_inv=4 inv_var=1 cost=5")));
  CHECK(plain.master.Column("y_inv", "T", plain.tree.InvestmentNodes()[0]) == -1);
}

// Existing gas pipeline S that can become hydrogen pipeline H or be
// abandoned; keeping S costs fixed O&M.
const char* kRetrofitTechs = R"(
id=B class=thermal region=A hist=5 cost=5
[pipelines]
id=S from=A to=Z existing=1 capacity=1 fix_om=50
id=H from=A to=Z
[regions]
id=Z
[retrofits]
source=S target=H ret_fix=10 max_ret=1 max_acc_ret=1
source=S target=abandon ret_fix=5
)";

TEST_CASE("retrofit zeroes the source capacity at every later node") {
  ReorientModel m = BuildModel(Parse(Chain(3, "", kRetrofitTechs)));
  const std::vector<int> inv = m.tree.InvestmentNodes();
  Fix(m, "y_ref[S," + std::to_string(inv[1]) + "]", 1.0);
  const benders::MonolithicResult r = benders::SolveMonolithic(m.problem);
  for (int o : m.tree.OperationalNodes()) {
    const double expected = m.tree.node(o).stage >= 2 ? 0.0 : 1.0;
    CHECK(Value(m, r, "x_acc_ref[S," + std::to_string(o) + "]") == doctest::Approx(expected));
  }
  for (int i : inv) {
    if (i == inv[1]) continue;
    CHECK(Value(m, r, "y_ref[S," + std::to_string(i) + "]") == doctest::Approx(0.0));
  }
}

TEST_CASE("a retrofit picks exactly one target") {
  ReorientModel m = BuildModel(Parse(Chain(1, "", kRetrofitTechs)));
  const std::string i = std::to_string(m.tree.InvestmentNodes()[0]);
  Fix(m, "y_ref[S," + i + "]", 1.0);
  const benders::MonolithicResult r = benders::SolveMonolithic(m.problem);
  // Abandonment (5) is cheaper than the hydrogen conversion (10) and the
  // hydrogen pipeline has no use here.
  CHECK(Value(m, r, "y_ret[S_abandon," + i + "]") == doctest::Approx(1.0));
  CHECK(Value(m, r, "y_ret[H," + i + "]") == doctest::Approx(0.0));
  Fix(m, "y_ret[S_abandon," + i + "]", 1.0);
  Fix(m, "y_ret[H," + i + "]", 1.0);
  CHECK_THROWS_AS(benders::SolveMonolithic(m.problem), ModelError);
}

TEST_CASE("retrofit happens at most once") {
  // Two branches; keeping the pipeline costs 50 per year, abandoning 5.
  std::string text = Chain(2, "", kRetrofitTechs);
  text.replace(text.find("branching 1 1"), 13, "branching 1 2");
  ReorientModel global = BuildModel(Parse(text));
  auto total = [](const ReorientModel& m, const benders::MonolithicResult& r) {
    double sum = 0.0;
    for (int i : m.tree.InvestmentNodes()) {
      sum += Value(m, r, "y_ref[S," + std::to_string(i) + "]");
    }
    return sum;
  };
  const benders::MonolithicResult rg = benders::SolveMonolithic(global.problem);
  CHECK(total(global, rg) == doctest::Approx(1.0));
  // Forcing a retrofit at both children violates the once-only rule.
  const std::vector<int> inv = global.tree.InvestmentNodes();
  REQUIRE(inv.size() == 3);
  Fix(global, "y_ref[S," + std::to_string(inv[1]) + "]", 1.0);
  Fix(global, "y_ref[S," + std::to_string(inv[2]) + "]", 1.0);
  CHECK_THROWS_AS(benders::SolveMonolithic(global.problem), ModelError);

  text.replace(text.find("kappa 5"), 7, "kappa 5\nretrofit_once path");
  ReorientModel path = BuildModel(Parse(text));
  Fix(path, "y_ref[S," + std::to_string(inv[1]) + "]", 1.0);
  Fix(path, "y_ref[S," + std::to_string(inv[2]) + "]", 1.0);
  const benders::MonolithicResult rp = benders::SolveMonolithic(path.problem);
  CHECK(Value(path, rp, "y_ref[S," + std::to_string(inv[0]) + "]") == doctest::Approx(0.0));
  CHECK(total(path, rp) == doctest::Approx(2.0));
}

TEST_CASE("investment-only variant fixes retrofit decisions") {
  ModelOptions options;
  options.investment_only = true;
  const ReorientModel m = BuildModel(Parse(Chain(2, "", kRetrofitTechs)), options);
  const ReorientModel full = BuildModel(Parse(Chain(2, "", kRetrofitTechs)));
  for (const auto& [label, col] : m.master.columns) {
    if (label.rfind("y_ref", 0) == 0 || label.rfind("y_ret", 0) == 0 ||
        label.rfind("x_ret", 0) == 0) {
      CHECK(m.problem.master.base.upper[col] == 0.0);
    }
  }
  const double restricted = benders::SolveMonolithic(m.problem).objective;
  const double relaxed = benders::SolveMonolithic(full.problem).objective;
  CHECK(relaxed <= restricted + 1e-9 * std::abs(restricted));
  // Abandoning saves 50 a year for 5 years from the first stage.
  CHECK(relaxed < restricted);
}

TEST_CASE("platform profit enters while the source is in service") {
  const std::string techs = R"(
id=B class=thermal region=A hist=5 cost=5
id=Plat class=platform-cluster region=A hist=1 price=oil margin=2 plateau_rate=10 plateau_length=100 decline=0.1
[retrofits]
source=Plat target=abandon ret_fix=1
)";
  const ReorientModel m = BuildModel(Parse(Chain(1, "", techs)));
  const int ope = m.tree.OperationalNodes()[0];
  const int col = m.master.columns.at("x_acc_ref[Plat," + std::to_string(ope) + "]");
  const NodeScalars& node = m.scalars.at(ope);
  REQUIRE(node.oil > 0.0);
  // Profit 2 * 10 * oil per year, over kappa = 5 years, per unit of capacity.
  const lp::LinearProgram& master = m.problem.master.base;
  const int row = RowIndex(master, "c_inv");
  double coef = 0.0;
  for (const lp::Entry& e : master.rows[row]) {
    if (e.index == col) coef = e.value;
  }
  CHECK(coef == doctest::Approx(5.0 * 2.0 * 10.0 * node.oil));
  // Producing platforms are kept.
  const benders::MonolithicResult r = benders::SolveMonolithic(m.problem);
  CHECK(Value(m, r, "x_acc_ref[Plat," + std::to_string(ope) + "]") == doctest::Approx(1.0));
}

TEST_CASE("case parser reports undefined references and bad values") {
  const std::string good = Dispatch(5.0);
  CHECK_NOTHROW(Parse(good));
  std::string bad_endpoint = good + "[pipelines]\nid=Pipe from=A to=ZZ\n";
  try {
    Parse(bad_endpoint);
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("Pipe") != std::string::npos);
    CHECK(std::string(e.what()).find("ZZ") != std::string::npos);
  }
  CHECK_THROWS_AS(Parse(good + "[technologies]\nid=X class=thermal region=A lifetime=-1\n"),
                  ValidationError);
  CHECK_THROWS_AS(Parse(good + "[technologies]\nid=X class=thermal region=A colour=red\n"),
                  ParseError);
  CHECK_THROWS_AS(Parse(good + "[technologies]\nid=X class=thermal region=A ramp=1.5\n"),
                  ValidationError);
  CHECK_THROWS_AS(
      Parse(good + "[pipelines]\nid=S from=A to=A2 existing=1 capacity=1\n"
                   "id=H from=A to=A2\n[regions]\nid=A2\n[retrofits]\nsource=S target=H\n"),
      DataError);
  CHECK_THROWS_AS(Parse(good + "[retrofits]\nsource=G target=Nope ret_fix=1\n"), DataError);
  CHECK_THROWS_AS(Parse(good + "[bogus]\n"), ParseError);
  try {
    Parse("[tree]\nbranching 1\n[scalars]\nkappa x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("missing series hours are data errors") {
  std::string text = Dispatch(5.0, "id=W class=renewable region=A hist=1 profile=wind\n");
  CHECK_THROWS_AS(Parse(text), DataError);
  // Two covered hours leave seasons shorter than one hour.
  text += "profile A wind 0.5 0.5\n";
  CHECK_THROWS_AS(BuildModel(Parse(text)), DataError);
}

TEST_CASE("retrofit share prices conversions from the new-build cost") {
  CaseData c = Parse(Chain(1, "", R"(
[pipelines]
id=S from=A to=Z existing=1 capacity=0.5
id=H from=A to=Z
id=New from=A to=Z max_inv=2 inv_var=100 inv_fix=20
[regions]
id=Z
[retrofits]
source=S target=H reference=New share=0.1 max_ret=0.5 max_acc_ret=0.5
)"));
  CHECK(c.retrofits[0].ret_fix.At(1) == doctest::Approx(0.1 * (20.0 + 100.0 * 0.5)));
  c.SetRetrofitShare(0.25);
  CHECK(c.retrofits[0].ret_fix.At(1) == doctest::Approx(0.25 * 70.0));
}

TEST_CASE("enhanced Benders agrees with the monolithic solve on a rich case") {
  std::string text = kRich;
  text.replace(text.find("branching 1"), 11, "branching 1 2");
  text.replace(text.find("id=GasA class=thermal region=A hist=8"), 37,
               "id=GasA class=thermal region=A hist=2 max_inv=10 inv_var=2000 inv_fix=500");
  const ReorientModel m = BuildModel(Parse(text));
  const benders::MonolithicResult mono = benders::SolveMonolithic(m.problem);
  benders::AlgorithmConfig config;
  config.epsilon_rel = 0.01;
  const benders::BendersResult a1 = benders::RunAlgorithm1(m.problem, config);
  CHECK(a1.status == benders::RunStatus::kConverged);
  CHECK(std::abs(a1.upper_bound - mono.objective) <= 0.01 * std::abs(mono.objective));
  CHECK(a1.lower_bound <= mono.objective + 1e-6 * std::abs(mono.objective));
}

}  // namespace
}  // namespace reorient::model
