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


#include "reorient/stoch/price_tree.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <set>

#include "reorient/errors.h"
#include "reorient/text.h"

namespace reorient::stoch {
namespace {

struct FitNode {
  int parent = mhsp::kNoAncestor;
  int stage = 0;
  std::vector<int> children;
  double value = 0.0;
  long hits = 0;
  double sum = 0.0;
  long count = 0;
};

void CheckInput(const PricePaths& paths, const std::vector<int>& branching,
                const TreeFitOptions& options) {
  if (paths.empty()) throw ValidationError("price tree needs at least one path");
  if (branching.empty() || branching[0] != 1) {
    throw ValidationError("branching must start with a single root");
  }
  for (int b : branching) {
    if (b < 1) throw ValidationError("branching counts must be >= 1");
  }
  if (options.stride < 1 || options.passes < 1) {
    throw ValidationError("stride and pass count must be positive");
  }
  const size_t length = paths.front().size();
  for (const std::vector<double>& p : paths) {
    if (p.size() != length) throw ValidationError("price paths differ in length");
  }
  const size_t needed = (branching.size() - 1) * options.stride + 1;
  if (length < needed) {
    throw ValidationError("price paths have " + std::to_string(length) +
                          " periods, the tree needs " + std::to_string(needed));
  }
}

int NearestChild(const std::vector<FitNode>& nodes, const FitNode& parent, double v) {
  int best = parent.children.front();
  for (int c : parent.children) {
    if (std::abs(nodes[c].value - v) < std::abs(nodes[best].value - v)) best = c;
  }
  return best;
}

}  // namespace

void PriceTree::WritePrices(std::ostream& out) const {
  out << "node stage probability oil gas\n";
  for (int id : tree.InvestmentNodes()) {
    const mhsp::StrategicNode& n = tree.node(id);
    const NodePrice& p = prices.at(id);
    out << id << ' ' << n.stage << ' ' << text::FormatNumber(n.probability) << ' '
        << text::FormatNumber(p.oil) << ' ' << text::FormatNumber(p.gas) << '\n';
  }
}

PriceTree BuildPriceTree(const PricePaths& paths, const std::vector<int>& branching,
                         uint64_t seed, const TreeFitOptions& options) {
  CheckInput(paths, branching, options);
  const int stages = static_cast<int>(branching.size());
  const int n = static_cast<int>(paths.size());
  auto value = [&](int path, int stage) { return paths[path][stage * options.stride]; };

  std::vector<double> stage_mean(stages, 0.0);
  for (int s = 0; s < stages; ++s) {
    for (int p = 0; p < n; ++p) stage_mean[s] += value(p, s);
    stage_mean[s] /= n;
  }

  std::mt19937_64 rng(seed);
  std::vector<FitNode> nodes(1);
  nodes[0].value = stage_mean[0];
  std::vector<int> frontier{0};
  for (int s = 1; s < stages; ++s) {
    std::vector<int> next;
    for (int parent : frontier) {
      for (int b = 0; b < branching[s]; ++b) {
        FitNode child;
        child.parent = parent;
        child.stage = s;
        child.value = b == 0 ? stage_mean[s] : value(static_cast<int>(rng() % n), s);
        nodes[parent].children.push_back(static_cast<int>(nodes.size()));
        next.push_back(static_cast<int>(nodes.size()));
        nodes.push_back(child);
      }
    }
    frontier = std::move(next);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int pass = 0; pass < options.passes; ++pass) {
    std::shuffle(order.begin(), order.end(), rng);
    for (int p : order) {
      int at = 0;
      for (int s = 1; s < stages; ++s) {
        at = NearestChild(nodes, nodes[at], value(p, s));
        FitNode& c = nodes[at];
        c.value += (value(p, s) - c.value) / static_cast<double>(c.hits + 1);
        ++c.hits;
      }
    }
  }

  for (int p = 0; p < n; ++p) {
    int at = 0;
    nodes[0].sum += value(p, 0);
    ++nodes[0].count;
    for (int s = 1; s < stages; ++s) {
      at = NearestChild(nodes, nodes[at], value(p, s));
      nodes[at].sum += value(p, s);
      ++nodes[at].count;
    }
  }

  PriceTree out;
  std::vector<mhsp::StrategicNode> tree_nodes;
  for (size_t id = 0; id < nodes.size(); ++id) {
    FitNode& f = nodes[id];
    if (f.count > 0) f.value = f.sum / static_cast<double>(f.count);
    const double probability = static_cast<double>(f.count) / n;
    tree_nodes.push_back({static_cast<int>(id), mhsp::NodeKind::kInvestment, f.parent,
                          f.stage + 1, probability, {}});
    const double oil = options.oil_scale * f.value;
    out.prices[static_cast<int>(id)] = {oil, options.gas_intercept + options.gas_slope * oil};
  }
  out.tree = mhsp::StrategicTree(std::move(tree_nodes));

  for (int s = 1; s < stages; ++s) {
    int unused = 0, total = 0;
    for (const FitNode& f : nodes) {
      if (f.stage != s || (f.parent != mhsp::kNoAncestor && nodes[f.parent].count == 0)) {
        continue;
      }
      ++total;
      if (f.count == 0) ++unused;
    }
    if (unused > 0) {
      out.warnings.push_back("stage " + std::to_string(s + 1) + ": " +
                             std::to_string(unused) + " of " + std::to_string(total) +
                             " branches have no distinct support and were merged");
    }
  }
  return ReduceTree(out);
}

PriceTree ReduceTree(const PriceTree& in) {
  std::set<int> removed;
  // Canonical order visits ancestors first.
  for (int id : in.tree.CanonicalOrder()) {
    const mhsp::StrategicNode& n = in.tree.node(id);
    if (n.probability <= 0.0 ||
        (n.ancestor != mhsp::kNoAncestor && removed.count(n.ancestor))) {
      removed.insert(id);
    }
  }
  PriceTree out;
  out.warnings = in.warnings;
  std::vector<mhsp::StrategicNode> kept;
  for (const mhsp::StrategicNode& n : in.tree.nodes()) {
    if (!removed.count(n.id)) kept.push_back(n);
  }
  out.tree = mhsp::StrategicTree(std::move(kept));
  for (const auto& [id, price] : in.prices) {
    if (!removed.count(id)) out.prices[id] = price;
  }
  return out;
}

mhsp::StrategicTree AttachOperationalNodes(const mhsp::StrategicTree& tree,
                                           int scenario_count) {
  if (scenario_count < 1) throw ValidationError("need at least one scenario");
  std::vector<mhsp::StrategicNode> nodes = tree.nodes();
  int next = 0;
  for (const mhsp::StrategicNode& n : nodes) next = std::max(next, n.id + 1);
  const std::vector<double> weights(scenario_count, 1.0 / scenario_count);
  for (int id : tree.InvestmentNodes()) {
    const mhsp::StrategicNode& n = tree.node(id);
    nodes.push_back({next++, mhsp::NodeKind::kOperational, id, n.stage, n.probability,
                     weights});
  }
  return mhsp::StrategicTree(std::move(nodes));
}

}  // namespace reorient::stoch
