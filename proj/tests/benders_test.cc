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
#include <random>
#include <sstream>

#include "doctest.h"
#include "reorient/benders/algorithm.h"
#include "reorient/benders/master.h"
#include "reorient/benders/oracles.h"
#include "reorient/errors.h"
#include "reorient/lp/solver.h"
#include "reorient/mhsp/decomposition.h"
#include "reorient/mhsp/problem.h"
#include "reorient/mhsp/random_instance.h"

namespace reorient::benders {
namespace {

using mhsp::DecomposedProblem;
using mhsp::NodeKind;
using mhsp::StrategicTree;
using mhsp::SubproblemTemplate;

// One capacity x in [0, 20] at unit cost `invest`; one operational hour with
// demand 10, generation cost 5 and shed penalty 100. The subproblem value is
// g(x) = 1000 - 95 min(x, 10).
mhsp::MHSPProblem CapacityToy(double invest) {
  mhsp::MHSPProblem p;
  p.tree = StrategicTree({{0, NodeKind::kInvestment, mhsp::kNoAncestor, 1, 1.0, {}},
                          {1, NodeKind::kOperational, 0, 1, 1.0, {1.0}}});
  mhsp::StrategicBlock b;
  b.cost = {invest};
  b.lower = {0.0};
  b.upper = {20.0};
  p.strategic[0] = b;
  mhsp::OperationalScenario s;
  s.q = {5.0, 100.0};
  s.t = mhsp::DenseMatrix(2, 1);
  s.t(0, 0) = -1.0;
  s.w = mhsp::DenseMatrix(2, 2);
  s.w(0, 0) = 1.0;
  s.w(1, 0) = -1.0;
  s.w(1, 1) = -1.0;
  s.h = {0.0, -10.0};
  p.operational[1] = {s};
  return p;
}

double CapacityToyValue(double x) { return 1000.0 - 95.0 * std::min(x, 10.0); }

double DeValue(const mhsp::MHSPProblem& p) {
  const lp::LpSolution s = lp::SolveMilp(mhsp::DeterministicEquivalent(p));
  REQUIRE(s.optimal());
  return s.objective_value;
}

// Random point between the special point and twice the spread of `scale`.
std::vector<double> RandomX(const SubproblemTemplate& t, double scale,
                            std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(t.x_dimension);
  for (int k = 0; k < t.x_dimension; ++k) x[k] = t.special_x[k] + scale * unit(rng);
  return x;
}

std::vector<double> RandomC(std::span<const double> base, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> factor(0.5, 2.0);
  std::vector<double> c(base.begin(), base.end());
  for (double& v : c) v *= factor(rng);
  return c;
}

double Value(const SubproblemTemplate& t, std::span<const double> x,
             std::span<const double> c) {
  return ExactSolveSubproblem(t, x, c).theta;
}

Sample MakeSample(const SubproblemTemplate& t, std::vector<double> x,
                  std::vector<double> c) {
  const ExactResult r = ExactSolveSubproblem(t, x, c);
  return {std::move(x), std::move(c), r.theta, r.lambda, r.phi};
}

TEST_CASE("zero capacity pays the full shed penalty") {
  const DecomposedProblem d = mhsp::Decompose(CapacityToy(20.0));
  const SubproblemTemplate& t = d.templates[0];
  const ExactResult r = ExactSolveSubproblem(t, std::vector<double>{0.0},
                                             d.links[0].cost);
  CHECK(r.theta == doctest::Approx(1000.0));
  REQUIRE(r.lambda.size() == 1);
  CHECK(r.lambda[0] <= 1e-9);
  CHECK(r.lambda[0] == doctest::Approx(-95.0));
  CHECK(r.phi == std::vector<double>{0.0, 10.0});
}

TEST_CASE("subgradients bracket finite differences") {
  const mhsp::MHSPProblem p = mhsp::RandomMhsp(mhsp::SuiteOptions(0), 41);
  const DecomposedProblem d = mhsp::Decompose(p);
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const mhsp::OperationalLink& link = d.links[trial % d.links.size()];
    const SubproblemTemplate& t = d.templates[link.template_id];
    std::vector<double> x = RandomX(t, 30.0, rng);
    const ExactResult r = ExactSolveSubproblem(t, x, link.cost);
    const int k = static_cast<int>(rng() % t.x_dimension);
    const double delta = 1e-4 * (1.0 + std::abs(x[k]));
    std::vector<double> up = x, down = x;
    up[k] += delta;
    down[k] -= delta;
    const double forward = (Value(t, up, link.cost) - r.theta) / delta;
    const double tol = 1e-6 * (1.0 + std::abs(r.lambda[k]));
    CHECK(r.lambda[k] <= forward + tol);
    if (down[k] >= t.special_x[k]) {
      const double backward = (r.theta - Value(t, down, link.cost)) / delta;
      CHECK(backward <= r.lambda[k] + tol);
    }
    // g(c + delta e_k) <= g(c) + delta phi_k by concavity in c.
    const int m = static_cast<int>(rng() % t.c_dimension);
    std::vector<double> c = link.cost;
    const double dc = 1e-4 * (1.0 + std::abs(c[m]));
    c[m] += dc;
    const double shifted = Value(t, x, c);
    CHECK(shifted <= r.theta + dc * r.phi[m] + 1e-6 * (1.0 + std::abs(r.theta)));
    if (ExactSolveSubproblem(t, x, c).basis.status == r.basis.status) {
      CHECK(shifted == doctest::Approx(r.theta + dc * r.phi[m]).epsilon(1e-6));
    }
    ++checked;
  }
  CHECK(checked == 30);
}

TEST_CASE("oracles are exact at a sampled point") {
  const DecomposedProblem d = mhsp::Decompose(CapacityToy(20.0));
  const SubproblemTemplate& t = d.templates[0];
  const std::vector<double> c = d.links[0].cost;
  const Sample s = MakeSample(t, {4.0}, c);
  SampleSet only;
  only.Add(s);
  const LowerOracleResult lower = LowerOracle(only, s.x, c, 0.0);
  CHECK(lower.theta == doctest::Approx(s.theta));

  SampleSet with_special;
  with_special.Add(SpecialPointSample(t));
  with_special.Add(s);
  const UpperOracleResult upper = UpperOracle(with_special, s.x, c, 1e12);
  CHECK(upper.theta == doctest::Approx(s.theta));
  CHECK(LowerOracle(with_special, s.x, c, 0.0).theta == doctest::Approx(s.theta));
  CHECK(s.theta == doctest::Approx(CapacityToyValue(4.0)));
}

TEST_CASE("special point alone gives the scaled special cut") {
  const DecomposedProblem d = mhsp::Decompose(CapacityToy(20.0));
  const SubproblemTemplate& t = d.templates[0];
  SampleSet s;
  s.Add(SpecialPointSample(t));
  // At c = 0 every cost is zero, so the special sample has theta = 0.
  CHECK(s.samples()[0].theta == doctest::Approx(0.0));
  std::mt19937_64 rng(2);
  for (int q = 0; q < 20; ++q) {
    const std::vector<double> x = RandomX(t, 20.0, rng);
    const std::vector<double> c = RandomC(d.links[0].cost, rng);
    const double lower = LowerOracle(s, x, c, 0.0).theta;
    CHECK(lower <= Value(t, x, c) + 1e-9);
    CHECK(lower == doctest::Approx(0.0));
  }
}

TEST_CASE("upper oracle is monotone in dominated points") {
  const DecomposedProblem d = mhsp::Decompose(CapacityToy(20.0));
  const SubproblemTemplate& t = d.templates[0];
  const std::vector<double> c = d.links[0].cost;
  SampleSet s;
  s.Add(SpecialPointSample(t));
  const Sample at3 = MakeSample(t, {3.0}, c);
  s.Add(at3);
  for (double x : {3.0, 3.5, 7.0, 15.0}) {
    CHECK(UpperOracle(s, std::vector<double>{x}, c, 1e12).theta <= at3.theta + 1e-9);
  }
  // Below every sample except the special point the oracle has to fall back.
  SampleSet no_special;
  no_special.Add(at3);
  const UpperOracleResult fallback =
      UpperOracle(no_special, std::vector<double>{1.0}, c, 1e12);
  CHECK(fallback.fallback);
  CHECK(fallback.theta == 1e12);
}

TEST_CASE("oracle validity sweep on random queries") {
  const mhsp::MHSPProblem p = mhsp::RandomMhsp(mhsp::SuiteOptions(3), 77);
  const DecomposedProblem d = mhsp::Decompose(p);
  std::mt19937_64 rng(11);
  for (size_t ti = 0; ti < d.templates.size(); ++ti) {
    const SubproblemTemplate& t = d.templates[ti];
    std::vector<double> base;
    for (const mhsp::OperationalLink& l : d.links) {
      if (l.template_id == static_cast<int>(ti)) base = l.cost;
    }
    SampleSet s;
    s.Add(SpecialPointSample(t));
    for (int j = 0; j < 6; ++j) s.Add(MakeSample(t, RandomX(t, 30.0, rng), RandomC(base, rng)));
    for (int q = 0; q < 100; ++q) {
      const std::vector<double> x = RandomX(t, 40.0, rng);
      const std::vector<double> c = RandomC(base, rng);
      const double g = Value(t, x, c);
      const double tol = 1e-6 * (1.0 + std::abs(g));
      CHECK(LowerOracle(s, x, c, 0.0).theta <= g + tol);
      CHECK(UpperOracle(s, x, c, 1e12).theta >= g - tol);
    }
  }
}

TEST_CASE("adding samples tightens both oracles") {
  const mhsp::MHSPProblem p = mhsp::RandomMhsp(mhsp::SuiteOptions(1), 19);
  const DecomposedProblem d = mhsp::Decompose(p);
  const SubproblemTemplate& t = d.templates[d.links[0].template_id];
  const std::vector<double> base = d.links[0].cost;
  std::mt19937_64 rng(3);
  std::vector<std::pair<std::vector<double>, std::vector<double>>> queries;
  for (int q = 0; q < 10; ++q) queries.push_back({RandomX(t, 40.0, rng), RandomC(base, rng)});
  SampleSet s;
  s.Add(SpecialPointSample(t));
  std::vector<double> lower(queries.size()), upper(queries.size());
  for (size_t q = 0; q < queries.size(); ++q) {
    lower[q] = LowerOracle(s, queries[q].first, queries[q].second, 0.0).theta;
    upper[q] = UpperOracle(s, queries[q].first, queries[q].second, 1e12).theta;
  }
  for (int j = 0; j < 8; ++j) {
    s.Add(MakeSample(t, RandomX(t, 40.0, rng), RandomC(base, rng)));
    for (size_t q = 0; q < queries.size(); ++q) {
      const double lo = LowerOracle(s, queries[q].first, queries[q].second, 0.0).theta;
      const double hi = UpperOracle(s, queries[q].first, queries[q].second, 1e12).theta;
      CHECK(lo >= lower[q] - 1e-7 * (1.0 + std::abs(lower[q])));
      CHECK(hi <= upper[q] + 1e-7 * (1.0 + std::abs(upper[q])));
      lower[q] = lo;
      upper[q] = hi;
    }
  }
}

TEST_CASE("cut-free master gives the pure investment minimum") {
  const DecomposedProblem d = mhsp::Decompose(mhsp::RandomMhsp(mhsp::SuiteOptions(2), 5));
  CutPool pool(d);
  const RmpResult first = SolveRmp(d, pool);
  // Building nothing is feasible and all investment costs are nonnegative.
  CHECK(first.objective == doctest::Approx(0.0));
  CHECK(first.lower_bound == doctest::Approx(0.0));

  for (size_t i = 0; i < d.links.size(); ++i) {
    const std::vector<double> x = d.links[i].XValue(first.x);
    const ExactResult r = ExactSolveSubproblem(d.templates[d.links[i].template_id], x,
                                               d.links[i].cost);
    pool.Add(static_cast<int>(i), {x, r.theta, r.lambda});
  }
  CHECK(SolveRmp(d, pool).lower_bound >= first.lower_bound - 1e-9);
  CHECK_FALSE(pool.Add(0, pool.cuts(0).back()));
}

struct CpFixture {
  DecomposedProblem d = mhsp::Decompose(mhsp::RandomMhsp(mhsp::SuiteOptions(0), 8));
  CutPool pool{d};
  RmpResult rmp;
  double lower = 0.0;
  double upper = 0.0;

  CpFixture() {
    for (int round = 0; round < 3; ++round) {
      rmp = SolveRmp(d, pool);
      double value = d.StrategicCost(rmp.x);
      for (size_t i = 0; i < d.links.size(); ++i) {
        const std::vector<double> x = d.links[i].XValue(rmp.x);
        const ExactResult r = ExactSolveSubproblem(d.templates[d.links[i].template_id],
                                                   x, d.links[i].cost);
        value += d.links[i].weight * r.theta;
        pool.Add(static_cast<int>(i), {x, r.theta, r.lambda});
      }
      upper = round == 0 ? value : std::min(upper, value);
    }
    rmp = SolveRmp(d, pool);
    lower = rmp.lower_bound;
  }

  double Objective(const std::vector<double>& x) const {
    const lp::LinearProgram& m = d.master.base;
    double v = m.objective_offset;
    for (int j = 0; j < m.num_columns(); ++j) v += m.objective[j] * x[j];
    return v;
  }
};

TEST_CASE("centre point approaches the relaxed optimum as gamma vanishes") {
  CpFixture f;
  REQUIRE(f.upper > f.lower);
  const CpResult cp = SolveCp(f.d, f.pool, f.rmp.x, f.lower, f.upper, 1e-6);
  REQUIRE_FALSE(cp.fallback);
  CHECK(f.Objective(cp.x) <= f.lower + 1e-3 * (f.upper - f.lower) + 1e-7);
}

TEST_CASE("centre point is interior for a wide level set") {
  CpFixture f;
  const CpResult cp = SolveCp(f.d, f.pool, f.rmp.x, f.lower, f.upper, 0.999);
  REQUIRE_FALSE(cp.fallback);
  CHECK(cp.radius > 0.0);
  CHECK(f.Objective(cp.x) <= cp.level_target + 1e-7);
  const lp::LinearProgram& s = cp.scaled;
  std::vector<double> u(s.num_columns());
  for (int j = 0; j < s.num_columns(); ++j) {
    u[j] = cp.width[j] > 0.0 ? (cp.x[j] - cp.origin[j]) / cp.width[j] : 0.0;
  }
  for (int r = 0; r < s.num_rows(); ++r) {
    if (s.senses[r] == lp::RowSense::kEqual) continue;
    double norm = 0.0;
    for (const lp::Entry& e : s.rows[r]) norm += e.value * e.value;
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    const double activity = s.RowActivity(r, u);
    const double slack = s.senses[r] == lp::RowSense::kLessEqual ? s.rhs[r] - activity
                                                                 : activity - s.rhs[r];
    CHECK(slack / norm >= cp.radius - 1e-7);
  }
  for (int j = 0; j < s.num_columns(); ++j) {
    if (cp.width[j] == 0.0) continue;
    CHECK(u[j] >= cp.radius - 1e-7);
    CHECK(1.0 - u[j] >= cp.radius - 1e-7);
  }
}

TEST_CASE("centre point is deterministic") {
  CpFixture f;
  const CpResult a = SolveCp(f.d, f.pool, f.rmp.x, f.lower, f.upper, 0.5);
  const CpResult b = SolveCp(f.d, f.pool, f.rmp.x, f.lower, f.upper, 0.5);
  CHECK(a.x == b.x);
  CHECK(a.radius == b.radius);
}

TEST_CASE("single-node toy converges to the deterministic optimum") {
  const mhsp::MHSPProblem p = CapacityToy(20.0);
  const DecomposedProblem d = mhsp::Decompose(p);
  AlgorithmConfig config;
  config.epsilon_rel = 0.0;
  config.verify_oracles = true;
  const BendersResult r = RunAlgorithm1(d, config);
  CHECK(r.status == RunStatus::kConverged);
  CHECK(r.log.records.size() <= 20);
  CHECK(DeValue(p) == doctest::Approx(250.0));
  CHECK(r.upper_bound == doctest::Approx(250.0).epsilon(1e-6));
  CHECK(r.sandwich.violations == 0);
  CHECK(r.master_x[0] == doctest::Approx(10.0).epsilon(1e-6));
}

TEST_CASE("zero investment optimum converges within three iterations") {
  const DecomposedProblem d = mhsp::Decompose(CapacityToy(200.0));
  AlgorithmConfig config;
  config.epsilon_rel = 0.0;
  const BendersResult r = RunAlgorithm1(d, config);
  CHECK(r.status == RunStatus::kConverged);
  CHECK(r.log.records.size() <= 3);
  CHECK(r.upper_bound == doctest::Approx(1000.0));
}

TEST_CASE("standard Benders reproduces the textbook cut sequence") {
  // Master min 20 x + beta, beta >= 0: x = 0, cut beta >= 1000 - 95 x; then
  // x = 1000 / 95 with cut beta >= 50; then x = 10 with value 250.
  const DecomposedProblem d = mhsp::Decompose(CapacityToy(20.0));
  AlgorithmConfig config;
  config.epsilon_rel = 0.0;
  const BendersResult r = RunStandardBenders(d, config);
  const std::vector<Cut>& cuts = r.cuts.cuts(0);
  REQUIRE(cuts.size() >= 4);
  CHECK(cuts[1].x[0] == doctest::Approx(0.0));
  CHECK(cuts[1].theta == doctest::Approx(1000.0));
  CHECK(cuts[1].lambda[0] == doctest::Approx(-95.0));
  CHECK(cuts[2].x[0] == doctest::Approx(1000.0 / 95.0));
  CHECK(cuts[2].theta == doctest::Approx(50.0));
  CHECK(cuts[3].x[0] == doctest::Approx(10.0));
  CHECK(r.upper_bound == doctest::Approx(250.0));
  CHECK(r.log.records.size() == 3);
}

TEST_CASE("algorithms agree with the deterministic equivalent") {
  for (int k = 0; k < 4; ++k) {
    const mhsp::MHSPProblem p = mhsp::RandomMhsp(mhsp::SuiteOptions(k), 300 + k);
    const DecomposedProblem d = mhsp::Decompose(p);
    AlgorithmConfig config;
    config.verify_oracles = true;
    const BendersResult a = RunAlgorithm1(d, config);
    const BendersResult s = RunStandardBenders(d, config);
    const double de = DeValue(p);
    const double eps = config.epsilon_rel * std::abs(a.upper_bound);
    CHECK(a.status == RunStatus::kConverged);
    CHECK(s.status == RunStatus::kConverged);
    CHECK(std::abs(a.upper_bound - de) <= eps + 1e-9);
    CHECK(std::abs(a.upper_bound - s.upper_bound) <= 2.0 * eps + 1e-9);
    CHECK(a.lower_bound <= de + 1e-6 * (1.0 + std::abs(de)));
    CHECK(a.sandwich.violations == 0);
    CHECK(SolveMonolithic(d).objective == doctest::Approx(de).epsilon(1e-9));

    for (size_t j = 1; j < a.log.records.size(); ++j) {
      CHECK(a.log.records[j].lower >= a.log.records[j - 1].lower);
      CHECK(a.log.records[j].upper <= a.log.records[j - 1].upper);
    }
    const CutCheck cc = CheckCutValidity(d, a.cuts, 50, k);
    CHECK(cc.checks > 0);
    CHECK(cc.violations == 0);
  }
}

TEST_CASE("threads do not change the result") {
  const DecomposedProblem d = mhsp::Decompose(mhsp::RandomMhsp(mhsp::SuiteOptions(5), 12));
  AlgorithmConfig one;
  AlgorithmConfig four;
  four.threads = 4;
  const BendersResult a = RunAlgorithm1(d, one);
  const BendersResult b = RunAlgorithm1(d, four);
  std::ostringstream la, lb;
  a.log.Write(la);
  b.log.Write(lb);
  CHECK(la.str() == lb.str());
  CHECK(a.master_x == b.master_x);
}

TEST_CASE("iteration log export") {
  const DecomposedProblem d = mhsp::Decompose(CapacityToy(20.0));
  const BendersResult r = RunAlgorithm1(d, {});
  std::ostringstream plain, timed, summary;
  r.log.Write(plain);
  r.log.Write(timed, true);
  r.log.WriteSummary(summary, "toy");
  const std::string text = plain.str();
  CHECK(text.rfind("iteration", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') ==
        static_cast<long>(r.log.records.size()) + 1);
  CHECK(text.find("t_master") == std::string::npos);
  CHECK(timed.str().find("t_master") != std::string::npos);
  CHECK(summary.str().find("evaluations") != std::string::npos);
  CHECK(r.log.TotalEvaluations() == r.exact_evaluations);
}

TEST_CASE("invalid configuration is rejected") {
  const DecomposedProblem d = mhsp::Decompose(CapacityToy(20.0));
  AlgorithmConfig bad;
  bad.gamma = 1.0;
  CHECK_THROWS_AS(RunAlgorithm1(d, bad), ValidationError);
  bad = {};
  bad.epsilon_abs = 0.0;
  CHECK_THROWS_AS(RunStandardBenders(d, bad), ValidationError);
}

TEST_CASE("iteration limit returns a partial result") {
  const DecomposedProblem d = mhsp::Decompose(mhsp::RandomMhsp(mhsp::SuiteOptions(1), 3));
  AlgorithmConfig config;
  config.max_iterations = 1;
  config.epsilon_rel = 0.0;
  const BendersResult r = RunAlgorithm1(d, config);
  CHECK(r.status == RunStatus::kIterationLimit);
  CHECK(r.log.records.size() == 1);
  CHECK(r.upper_bound >= r.lower_bound);
}

}  // namespace
}  // namespace reorient::benders
