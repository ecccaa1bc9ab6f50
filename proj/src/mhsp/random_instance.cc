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


#include "reorient/mhsp/random_instance.h"

#include <algorithm>
#include <random>

#include "reorient/errors.h"

namespace reorient::mhsp {

MHSPProblem RandomMhsp(const RandomMhspOptions& options, uint64_t seed) {
  if (options.technologies < 1 || options.scenarios < 1 || options.hours < 1 ||
      options.gated_technologies < 0 ||
      options.gated_technologies > options.technologies) {
    throw ValidationError("invalid random instance options");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

  MHSPProblem problem;
  problem.tree = StrategicTree::Uniform(options.branching, options.scenarios);
  const StrategicTree& tree = problem.tree;

  const int K = options.technologies;
  const int B = options.gated_technologies;
  const int H = options.hours;
  // Column layout of x_i: [gate_0..gate_{B-1}, build_0..build_{K-1},
  // acc_0..acc_{K-1}].
  auto gate = [](int k) { return k; };
  auto build = [&](int k) { return B + k; };
  auto acc = [&](int k) { return B + K + k; };
  const int nx = B + 2 * K;

  std::vector<double> build_cost(K), fixed_cost(K), max_build(K), historic(K);
  std::vector<double> marginal(K), availability(K);
  for (int k = 0; k < K; ++k) {
    const bool renewable = k % 2 == 1;
    build_cost[k] = renewable ? uniform(20.0, 60.0) : uniform(5.0, 25.0);
    fixed_cost[k] = uniform(20.0, 80.0);
    max_build[k] = uniform(8.0, 20.0);
    historic[k] = k == 0 ? uniform(0.0, 4.0) : 0.0;
    marginal[k] = renewable ? uniform(0.0, 2.0) : uniform(15.0, 40.0);
    availability[k] = renewable ? uniform(0.3, 0.9) : 1.0;
  }
  const double shed_penalty = uniform(150.0, 300.0);

  std::vector<std::vector<double>> base_demand(options.scenarios,
                                               std::vector<double>(H));
  std::vector<std::vector<std::vector<double>>> avail(
      options.scenarios, std::vector<std::vector<double>>(K, std::vector<double>(H)));
  for (int s = 0; s < options.scenarios; ++s) {
    for (int t = 0; t < H; ++t) {
      base_demand[s][t] = uniform(4.0, 12.0);
      for (int k = 0; k < K; ++k) {
        avail[s][k][t] = std::min(1.0, availability[k] * uniform(0.5, 1.5));
      }
    }
  }

  for (int id : tree.InvestmentNodes()) {
    const StrategicNode& node = tree.node(id);
    StrategicBlock b;
    b.num_binaries = B;
    b.cost.assign(nx, 0.0);
    b.lower.assign(nx, 0.0);
    b.upper.assign(nx, lp::kInfinity);
    const double stage_discount = 1.0 / (1.0 + 0.2 * (node.stage - 1));
    for (int k = 0; k < B; ++k) {
      b.cost[gate(k)] = stage_discount * fixed_cost[k] * uniform(0.8, 1.2);
      b.upper[gate(k)] = 1.0;
    }
    for (int k = 0; k < K; ++k) {
      b.cost[build(k)] = stage_discount * build_cost[k] * uniform(0.8, 1.2);
      b.upper[build(k)] = max_build[k];
      b.cost[acc(k)] = 0.5;
    }
    const bool root = node.ancestor == kNoAncestor;
    const int rows = B + K;
    b.w = DenseMatrix(rows, nx);
    b.h.assign(rows, 0.0);
    if (!root) b.t_parent = DenseMatrix(rows, nx);
    int r = 0;
    for (int k = 0; k < B; ++k, ++r) {
      b.w(r, build(k)) = 1.0;
      b.w(r, gate(k)) = -max_build[k];
    }
    for (int k = 0; k < K; ++k, ++r) {
      b.w(r, acc(k)) = 1.0;
      b.w(r, build(k)) = -1.0;
      if (root) {
        b.h[r] = historic[k];
      } else {
        b.t_parent(r, acc(k)) = -1.0;
      }
    }
    problem.strategic[id] = std::move(b);
  }

  for (int id : tree.OperationalNodes()) {
    const StrategicNode& node = tree.node(id);
    const double growth =
        options.shared_structure ? 1.0 : 1.0 + 0.25 * (node.stage - 1);
    const double fuel = uniform(0.7, 1.4);
    std::vector<OperationalScenario> scenarios;
    for (int s = 0; s < options.scenarios; ++s) {
      OperationalScenario sc;
      // y layout: gen_{k,t} at k * H + t, then shed_t.
      const int ny = K * H + H;
      const int rows = K * H + H;
      sc.t = DenseMatrix(rows, nx);
      sc.w = DenseMatrix(rows, ny);
      sc.h.assign(rows, 0.0);
      sc.q.assign(ny, 0.0);
      int r = 0;
      for (int k = 0; k < K; ++k) {
        for (int t = 0; t < H; ++t, ++r) {
          sc.w(r, k * H + t) = 1.0;
          sc.t(r, acc(k)) = -avail[s][k][t];
          sc.q[k * H + t] = marginal[k] * (k % 2 == 0 ? fuel : 1.0);
        }
      }
      for (int t = 0; t < H; ++t, ++r) {
        for (int k = 0; k < K; ++k) sc.w(r, k * H + t) = -1.0;
        sc.w(r, K * H + t) = -1.0;
        sc.h[r] = -growth * base_demand[s][t];
        sc.q[K * H + t] = shed_penalty;
      }
      scenarios.push_back(std::move(sc));
    }
    problem.operational[id] = std::move(scenarios);
  }
  return problem;
}

RandomMhspOptions SuiteOptions(int index) {
  static const std::vector<std::vector<int>> kBranchings = {
      {1, 2}, {1, 3}, {1, 2, 2}, {1, 4}, {1, 2, 1}, {1, 1, 2, 2}, {1, 2, 1, 1},
      {1, 3, 1}};
  RandomMhspOptions options;
  const int k = index % static_cast<int>(kBranchings.size());
  options.branching = kBranchings[k];
  int nodes = 1, width = 1;
  for (size_t s = 1; s < options.branching.size(); ++s) {
    width *= options.branching[s];
    nodes += width;
  }
  options.technologies = 2 + index % 2;
  options.gated_technologies = std::max(1, std::min(options.technologies, 12 / nodes));
  options.scenarios = 1 + index % 3;
  options.hours = 3 + index % 4;
  options.shared_structure = index % 3 != 2;
  return options;
}

RandomMhspOptions LargestSuiteOptions() {
  RandomMhspOptions options;
  options.branching = {1, 1, 2, 2};
  options.technologies = 3;
  options.gated_technologies = 1;
  options.scenarios = 3;
  options.hours = 6;
  options.shared_structure = true;
  return options;
}

}  // namespace reorient::mhsp
