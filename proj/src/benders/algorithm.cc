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


#include "reorient/benders/algorithm.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <thread>

#include "reorient/errors.h"
#include "reorient/text.h"

namespace reorient::benders {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// Runs fn(0..n-1), split across up to `threads` workers. Each index writes
// only its own output slot, so results do not depend on scheduling.
template <typename Fn>
void ParallelFor(int n, int threads, Fn fn) {
  if (threads <= 1 || n <= 1) {
    for (int k = 0; k < n; ++k) fn(k);
    return;
  }
  const int workers = std::min(threads, n);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (int k = w; k < n; k += workers) fn(k);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

double Tolerance(double g) { return 1e-6 * (1.0 + std::abs(g)); }

class Runner {
 public:
  Runner(const mhsp::DecomposedProblem& problem, const AlgorithmConfig& config,
         BendersResult& result)
      : problem_(problem),
        config_(config),
        result_(result),
        n_(static_cast<int>(problem.links.size())),
        warm_(problem.links.size()) {}

  double Epsilon(double upper) const {
    return std::max(config_.epsilon_abs, config_.epsilon_rel * std::abs(upper));
  }

  int Budget() const { return config_.inner_budget > 0 ? config_.inner_budget : n_; }

  const mhsp::SubproblemTemplate& Template(int link) const {
    return problem_.templates[problem_.links[link].template_id];
  }

  std::vector<std::vector<double>> NodePoints(const std::vector<double>& master_x) const {
    std::vector<std::vector<double>> points(n_);
    for (int i = 0; i < n_; ++i) points[i] = problem_.links[i].XValue(master_x);
    return points;
  }

  ExactResult Exact(int link, const std::vector<double>& x) {
    const lp::Basis* warm = warm_[link].empty() ? nullptr : &warm_[link];
    ExactResult r = ExactSolveSubproblem(Template(link), x,
                                         problem_.links[link].cost,
                                         config_.tolerances, warm);
    warm_[link] = r.basis;
    return r;
  }

  void AddSample(int link, const std::vector<double>& x, const ExactResult& r) {
    result_.samples[problem_.links[link].template_id].Add(
        {x, problem_.links[link].cost, r.theta, r.lambda, r.phi});
  }

  void InitSamples() {
    result_.samples.assign(problem_.templates.size(), SampleSet());
    for (size_t t = 0; t < problem_.templates.size(); ++t) {
      result_.samples[t].Add(
          SpecialPointSample(problem_.templates[t], config_.tolerances));
      ++evaluations_;
    }
  }

  struct Bracket {
    LowerOracleResult lower;
    UpperOracleResult upper;
    double width() const { return upper.theta - lower.theta; }
  };

  Bracket Oracles(int link, const std::vector<double>& x) {
    const SampleSet& s = result_.samples[problem_.links[link].template_id];
    const std::vector<double>& c = problem_.links[link].cost;
    Bracket b{LowerOracle(s, x, c, problem_.beta_lower, config_.tolerances),
              UpperOracle(s, x, c, config_.big_m, config_.tolerances)};
    if (config_.verify_oracles) {
      const double g = ExactSolveSubproblem(Template(link), x, c,
                                            config_.tolerances).theta;
      const double excess =
          std::max(b.lower.theta - g, g - b.upper.theta);
      result_.sandwich.checks += 1;
      result_.sandwich.worst_excess = std::max(result_.sandwich.worst_excess, excess);
      if (excess > Tolerance(g)) ++result_.sandwich.violations;
    }
    return b;
  }

  // Oracle calls at every node, in parallel; `only_template` limits the
  // refresh to nodes sharing one template.
  void RefreshOracles(const std::vector<std::vector<double>>& points,
                      std::vector<Bracket>& brackets, int only_template,
                      int& calls) {
    std::vector<int> targets;
    for (int i = 0; i < n_; ++i) {
      if (only_template < 0 || problem_.links[i].template_id == only_template) {
        targets.push_back(i);
      }
    }
    const int threads = config_.verify_oracles ? 1 : config_.threads;
    ParallelFor(static_cast<int>(targets.size()), threads, [&](int k) {
      brackets[targets[k]] = Oracles(targets[k], points[targets[k]]);
    });
    calls += static_cast<int>(targets.size());
  }

  double Weighted(const std::vector<double>& master_x,
                  const std::vector<Bracket>& brackets, bool upper) const {
    double value = problem_.StrategicCost(master_x);
    for (int i = 0; i < n_; ++i) {
      value += problem_.links[i].weight *
               (upper ? brackets[i].upper.theta : brackets[i].lower.theta);
    }
    return value;
  }

  static int WidestBracket(const std::vector<Bracket>& brackets) {
    int best = 0;
    for (int i = 1; i < static_cast<int>(brackets.size()); ++i) {
      if (brackets[i].width() > brackets[best].width()) best = i;
    }
    return best;
  }

  static bool Exact(const Bracket& b) {
    return b.width() <= 1e-9 * (1.0 + std::abs(b.upper.theta));
  }

  void RunEnhanced() {
    long evaluations_before = evaluations_;
    InitSamples();
    double upper = config_.big_m;
    double lower = -lp::kInfinity;
    double gamma = config_.gamma;
    int stall_upper = 0, stall_lower = 0;
    result_.master_x.clear();

    for (int j = 1; j <= config_.max_iterations; ++j) {
      IterationRecord rec;
      rec.iteration = j;
      const double prev_upper = upper;
      const double prev_lower = lower;

      auto t0 = Clock::now();
      const RmpResult rmp = SolveRmp(problem_, result_.cuts, config_.tolerances);
      rec.seconds_master = Seconds(t0);
      const double lower_j = std::max(lower, rmp.lower_bound);

      t0 = Clock::now();
      std::vector<double> cp_x = rmp.x;
      if (upper < config_.big_m) {
        cp_x = SolveCp(problem_, result_.cuts, rmp.x, lower_j, upper, gamma,
                       config_.tolerances).x;
      }
      rec.seconds_stabilization = Seconds(t0);

      const std::vector<std::vector<double>> cp_points = NodePoints(cp_x);
      std::vector<Bracket> brackets(n_);
      t0 = Clock::now();
      RefreshOracles(cp_points, brackets, -1, rec.oracle_calls);
      rec.seconds_oracles += Seconds(t0);

      double lbo = Weighted(cp_x, brackets, false);
      double ubo = Weighted(cp_x, brackets, true);
      for (int step = 1;; ++step) {
        const int i = WidestBracket(brackets);
        if (Exact(brackets[i])) {
          rec.inner_exit = "oracles-exact";
          break;
        }
        t0 = Clock::now();
        const ExactResult r = Exact(i, cp_points[i]);
        rec.seconds_subproblems += Seconds(t0);
        ++evaluations_;
        ++rec.inner_steps;
        AddSample(i, cp_points[i], r);
        t0 = Clock::now();
        RefreshOracles(cp_points, brackets, problem_.links[i].template_id,
                       rec.oracle_calls);
        rec.seconds_oracles += Seconds(t0);
        lbo = Weighted(cp_x, brackets, false);
        ubo = Weighted(cp_x, brackets, true);
        if (ubo - lbo <= prev_upper - prev_lower) {
          rec.inner_exit = "gap";
          break;
        }
        if (step > Budget()) {
          rec.inner_exit = "budget";
          break;
        }
        if (lbo >= prev_upper) {
          rec.inner_exit = "lbo-above-upper";
          break;
        }
      }
      rec.lower_oracle_bound = lbo;
      rec.upper_oracle_bound = ubo;
      for (int i = 0; i < n_; ++i) {
        result_.cuts.Add(i, {cp_points[i], brackets[i].lower.theta,
                             brackets[i].lower.lambda});
      }

      const std::vector<std::vector<double>> rmp_points = NodePoints(rmp.x);
      std::vector<Bracket> at_rmp(n_);
      t0 = Clock::now();
      RefreshOracles(rmp_points, at_rmp, -1, rec.oracle_calls);
      rec.seconds_oracles += Seconds(t0);
      double upper_j = Weighted(rmp.x, at_rmp, true);
      if (config_.refine_upper_at_rmp) {
        for (int step = 0; step < Budget(); ++step) {
          if (std::min(upper, upper_j) - lower_j <= Epsilon(std::min(upper, upper_j))) {
            break;
          }
          const int i = WidestBracket(at_rmp);
          if (Exact(at_rmp[i])) break;
          t0 = Clock::now();
          const ExactResult r = Exact(i, rmp_points[i]);
          rec.seconds_subproblems += Seconds(t0);
          ++evaluations_;
          AddSample(i, rmp_points[i], r);
          t0 = Clock::now();
          RefreshOracles(rmp_points, at_rmp, problem_.links[i].template_id,
                         rec.oracle_calls);
          rec.seconds_oracles += Seconds(t0);
          upper_j = Weighted(rmp.x, at_rmp, true);
        }
      }
      for (int i = 0; i < n_; ++i) {
        result_.cuts.Add(i, {rmp_points[i], at_rmp[i].lower.theta,
                             at_rmp[i].lower.lambda});
      }
      if (upper_j < upper || result_.master_x.empty()) {
        if (upper_j < upper) upper = upper_j;
        result_.master_x = rmp.x;
      }
      lower = lower_j;

      stall_upper = upper < prev_upper ? 0 : stall_upper + 1;
      stall_lower = lower > prev_lower ? 0 : stall_lower + 1;
      if (stall_upper >= config_.stall_iterations) {
        gamma = std::max(config_.gamma_min, gamma * config_.gamma_factor);
        stall_upper = 0;
      }
      if (stall_lower >= config_.stall_iterations) {
        gamma = std::min(config_.gamma_max, gamma / config_.gamma_factor);
        stall_lower = 0;
      }

      rec.lower = lower;
      rec.upper = upper;
      rec.gamma = gamma;
      rec.exact_evaluations = static_cast<int>(evaluations_ - evaluations_before);
      evaluations_before = evaluations_;
      result_.log.records.push_back(rec);
      if (upper - lower <= Epsilon(upper)) {
        result_.status = RunStatus::kConverged;
        break;
      }
    }
    result_.upper_bound = upper;
    result_.lower_bound = lower;
    result_.exact_evaluations = evaluations_;
  }

  void RunStandard() {
    double upper = config_.big_m;
    double lower = -lp::kInfinity;
    result_.master_x.clear();
    for (int j = 1; j <= config_.max_iterations; ++j) {
      IterationRecord rec;
      rec.iteration = j;
      auto t0 = Clock::now();
      const RmpResult rmp = SolveRmp(problem_, result_.cuts, config_.tolerances);
      rec.seconds_master = Seconds(t0);
      lower = std::max(lower, rmp.lower_bound);

      const std::vector<std::vector<double>> points = NodePoints(rmp.x);
      std::vector<ExactResult> exact(n_);
      t0 = Clock::now();
      ParallelFor(n_, config_.threads,
                  [&](int i) { exact[i] = Exact(i, points[i]); });
      rec.seconds_subproblems = Seconds(t0);
      evaluations_ += n_;
      rec.exact_evaluations = n_;

      double upper_j = problem_.StrategicCost(rmp.x);
      for (int i = 0; i < n_; ++i) {
        upper_j += problem_.links[i].weight * exact[i].theta;
        result_.cuts.Add(i, {points[i], exact[i].theta, exact[i].lambda});
      }
      if (upper_j < upper || result_.master_x.empty()) {
        upper = std::min(upper, upper_j);
        result_.master_x = rmp.x;
      }
      rec.lower = lower;
      rec.upper = upper;
      rec.lower_oracle_bound = lower;
      rec.upper_oracle_bound = upper_j;
      result_.log.records.push_back(rec);
      if (upper - lower <= Epsilon(upper)) {
        result_.status = RunStatus::kConverged;
        break;
      }
    }
    result_.upper_bound = upper;
    result_.lower_bound = lower;
    result_.exact_evaluations = evaluations_;
  }

 private:
  const mhsp::DecomposedProblem& problem_;
  const AlgorithmConfig& config_;
  BendersResult& result_;
  int n_;
  std::vector<lp::Basis> warm_;
  long evaluations_ = 0;
};

void WriteRow(std::ostream& out, const std::vector<std::string>& cells) {
  for (size_t k = 0; k < cells.size(); ++k) {
    std::string cell = cells[k];
    if (k + 1 < cells.size() && cell.size() < 16) cell.resize(16, ' ');
    out << cell << (k + 1 < cells.size() ? " " : "\n");
  }
}

std::string G(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

void ValidateConfig(const AlgorithmConfig& config) {
  if (!(config.gamma > 0.0 && config.gamma < 1.0)) {
    throw ValidationError("gamma must lie in (0, 1)");
  }
  if (!(config.epsilon_abs > 0.0) || config.epsilon_rel < 0.0) {
    throw ValidationError("epsilon must be positive");
  }
  if (config.max_iterations < 1 || config.inner_budget < 0 || config.threads < 1) {
    throw ValidationError("iteration budgets and thread count must be positive");
  }
  if (!(config.gamma_factor > 0.0 && config.gamma_factor < 1.0) ||
      !(config.gamma_min > 0.0 && config.gamma_min <= config.gamma_max &&
        config.gamma_max < 1.0) ||
      config.stall_iterations < 1) {
    throw ValidationError("invalid level-set management parameters");
  }
}

const char* ToString(RunStatus status) {
  return status == RunStatus::kConverged ? "converged" : "iteration-limit";
}

long IterationLog::TotalEvaluations() const {
  long total = 0;
  for (const IterationRecord& r : records) total += r.exact_evaluations;
  return total;
}

long IterationLog::TotalOracleCalls() const {
  long total = 0;
  for (const IterationRecord& r : records) total += r.oracle_calls;
  return total;
}

double IterationLog::TotalSeconds() const {
  double total = 0.0;
  for (const IterationRecord& r : records) {
    total += r.seconds_master + r.seconds_stabilization + r.seconds_subproblems +
             r.seconds_oracles;
  }
  return total;
}

void IterationLog::Write(std::ostream& out, bool with_timings) const {
  std::vector<std::string> head = {"iteration", "lower", "upper", "lower_oracle",
                                   "upper_oracle", "gamma", "evaluations",
                                   "oracle_calls", "inner_steps", "inner_exit"};
  if (with_timings) {
    for (const char* h : {"t_master", "t_stabilization", "t_subproblems", "t_oracles"}) {
      head.push_back(h);
    }
  }
  WriteRow(out, head);
  for (const IterationRecord& r : records) {
    std::vector<std::string> row = {
        std::to_string(r.iteration), G(r.lower), G(r.upper),
        G(r.lower_oracle_bound), G(r.upper_oracle_bound), G(r.gamma),
        std::to_string(r.exact_evaluations), std::to_string(r.oracle_calls),
        std::to_string(r.inner_steps), r.inner_exit.empty() ? "-" : r.inner_exit};
    if (with_timings) {
      for (double t : {r.seconds_master, r.seconds_stabilization,
                       r.seconds_subproblems, r.seconds_oracles}) {
        row.push_back(text::FormatFixed(t, 4));
      }
    }
    WriteRow(out, row);
  }
}

void IterationLog::WriteSummary(std::ostream& out, const std::string& label) const {
  double master = 0.0, stab = 0.0, sub = 0.0;
  for (const IterationRecord& r : records) {
    master += r.seconds_master;
    stab += r.seconds_stabilization;
    sub += r.seconds_subproblems + r.seconds_oracles;
  }
  const double total = TotalSeconds();
  auto pct = [&](double v) {
    return text::FormatFixed(total > 0.0 ? 100.0 * v / total : 0.0, 1);
  };
  WriteRow(out, {"case", "iterations", "evaluations", "total_seconds",
                 "master_pct", "stabilization_pct", "subproblem_pct"});
  WriteRow(out, {label, std::to_string(records.size()),
                 std::to_string(TotalEvaluations()), text::FormatFixed(total, 3),
                 pct(master), pct(stab), pct(sub)});
}

BendersResult RunAlgorithm1(const mhsp::DecomposedProblem& problem,
                            const AlgorithmConfig& config) {
  ValidateConfig(config);
  problem.Validate();
  const std::vector<std::string> issues = problem.OracleAssumptionIssues();
  if (!issues.empty()) {
    std::string message = "oracle assumptions violated:";
    for (const std::string& s : issues) message += "\n  " + s;
    throw ValidationError(message);
  }
  BendersResult result(problem);
  result.algorithm = "enhanced";
  Runner(problem, config, result).RunEnhanced();
  return result;
}

BendersResult RunStandardBenders(const mhsp::DecomposedProblem& problem,
                                 const AlgorithmConfig& config) {
  ValidateConfig(config);
  problem.Validate();
  BendersResult result(problem);
  result.algorithm = "standard";
  Runner(problem, config, result).RunStandard();
  return result;
}

MonolithicResult SolveMonolithic(const mhsp::DecomposedProblem& problem,
                                 const lp::ToleranceConfig& tolerances) {
  const auto start = Clock::now();
  const lp::MixedIntegerProgram flat = mhsp::Flatten(problem);
  const lp::LpSolution sol = lp::DefaultSolver().SolveMilp(flat, tolerances);
  if (!sol.optimal()) {
    throw ModelError(std::string("monolithic problem is ") + lp::ToString(sol.status));
  }
  MonolithicResult out;
  out.objective = sol.objective_value;
  out.bound = std::min(sol.best_bound, sol.objective_value);
  out.master_x.assign(sol.primal.begin(),
                      sol.primal.begin() + problem.master.base.num_columns());
  out.branch_nodes = sol.branch_nodes;
  out.seconds = Seconds(start);
  return out;
}

CutCheck CheckCutValidity(const mhsp::DecomposedProblem& problem,
                          const CutPool& pool, int draws, uint64_t seed,
                          const lp::ToleranceConfig& tolerances) {
  CutCheck check;
  const int n = static_cast<int>(problem.links.size());
  if (n == 0) return check;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int d = 0; d < draws; ++d) {
    const int i = d % n;
    const mhsp::OperationalLink& link = problem.links[i];
    const mhsp::SubproblemTemplate& t = problem.templates[link.template_id];
    std::vector<double> x(t.x_dimension);
    for (int k = 0; k < t.x_dimension; ++k) {
      double high = t.special_x[k];
      for (const Cut& cut : pool.cuts(i)) high = std::max(high, cut.x[k]);
      const double span = 2.0 * (high - t.special_x[k]) + 1e-3 * (1.0 + std::abs(high));
      x[k] = t.special_x[k] + unit(rng) * span;
    }
    const double g = ExactSolveSubproblem(t, x, link.cost, tolerances).theta;
    for (const Cut& cut : pool.cuts(i)) {
      const double excess = cut.Evaluate(x) - g;
      ++check.checks;
      check.worst_excess = std::max(check.worst_excess, excess);
      if (excess > Tolerance(g)) ++check.violations;
    }
  }
  return check;
}

}  // namespace reorient::benders
