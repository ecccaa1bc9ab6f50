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


#include "reorient/cli/report.h"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include "reorient/text.h"

namespace reorient::cli {
namespace {

using text::FormatFixed;

double Column(const std::vector<double>& x, int col) {
  return col >= 0 ? x[col] : 0.0;
}

void WriteRow(std::ostream& out, const std::vector<std::string>& cells,
              const std::vector<int>& widths) {
  for (size_t k = 0; k < cells.size(); ++k) {
    if (k > 0) out << ' ';
    const int w = k < widths.size() ? widths[k] : 0;
    if (k + 1 == cells.size()) {
      out << cells[k];
    } else {
      out << std::left << std::setw(w) << cells[k];
    }
  }
  out << std::right << '\n';
}

// Pads every column to its widest cell.
void WriteTable(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<int> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (size_t k = 0; k < row.size(); ++k) {
      widths[k] = std::max(widths[k], static_cast<int>(row[k].size()));
    }
  }
  for (const auto& row : rows) WriteRow(out, row, widths);
}

}  // namespace

std::string Tuple(const std::vector<int>& counts) {
  std::string s = "(";
  for (size_t k = 0; k < counts.size(); ++k) {
    if (k > 0) s += ",";
    s += std::to_string(counts[k]);
  }
  return s + ")";
}

DecisionReport MakeReport(const model::CaseData& data, const model::ReorientModel& model,
                          const SolveOutcome& outcome) {
  DecisionReport r;
  r.case_name = data.name;
  r.algorithm = ToString(outcome.algorithm);
  r.converged = outcome.converged;
  r.objective = outcome.objective;
  r.lower_bound = outcome.lower_bound;
  const std::vector<double>& x = outcome.master_x;
  const model::MasterModel& master = model.master;
  r.investment_cost = x[master.c_inv];
  r.operational_cost = r.objective - r.investment_cost;

  const mhsp::StrategicTree& tree = model.tree;
  const int stages = tree.NumStages();
  for (int s = 1; s <= stages; ++s) {
    r.stage_nodes.push_back(
        static_cast<int>(tree.NodesAtStage(s, mhsp::NodeKind::kInvestment).size()));
  }

  for (const model::Technology& t : data.technologies) {
    if (!model::HasOperationalRole(t.tech_class) &&
        t.tech_class != model::TechClass::kPlatformCluster &&
        t.tech_class != model::TechClass::kGasPipeline) {
      continue;
    }
    CapacityRow row{t.id, model::ToString(t.tech_class), t.region, {}};
    for (int s = 1; s <= stages; ++s) {
      double weighted = 0.0;
      double mass = 0.0;
      for (int o : tree.NodesAtStage(s, mhsp::NodeKind::kOperational)) {
        const double p = tree.node(o).probability;
        double cap = t.hist;
        for (const char* family : {"x_acc", "x_acc_ref", "x_acc_ret"}) {
          const int col = master.Column(family, t.id, o);
          if (col >= 0) cap = x[col];
        }
        if (data.IsRetrofitTarget(t.id) && master.Column("x_acc_ret", t.id, o) < 0) {
          cap = 0.0;
        }
        weighted += p * cap;
        mass += p;
      }
      row.capacity.push_back(mass > 0.0 ? weighted / mass : 0.0);
    }
    r.capacities.push_back(std::move(row));
  }

  for (const model::Retrofit& ret : data.retrofits) {
    IncidenceRow row{ret.source, ret.target, std::vector<int>(stages, 0)};
    for (int i : tree.InvestmentNodes()) {
      if (Column(x, master.Column("y_ret", ret.target, i)) > 0.5) {
        ++row.nodes[tree.node(i).stage - 1];
      }
    }
    r.incidence.push_back(std::move(row));
  }

  for (const model::Region& z : data.regions) r.investment_by_region[z.id] = 0.0;
  for (int i : tree.InvestmentNodes()) {
    const double pi = tree.node(i).probability;
    const int stage = tree.node(i).stage;
    for (const model::Technology& t : data.technologies) {
      r.investment_by_region[t.region] +=
          pi * (t.inv_var.At(stage) * Column(x, master.Column("x_inv", t.id, i)) +
                t.inv_fix.At(stage) * Column(x, master.Column("y_inv", t.id, i)));
    }
    for (const model::Retrofit& ret : data.retrofits) {
      const std::string& region = data.technology(ret.source).region;
      r.investment_by_region[region] +=
          pi * (ret.ret_fix.At(stage) * Column(x, master.Column("y_ret", ret.target, i)) +
                ret.ret_var.At(stage) * Column(x, master.Column("x_ret", ret.target, i)));
    }
  }
  return r;
}

void DecisionReport::Write(std::ostream& out) const {
  out << "# decision report\n";
  out << "case " << case_name << '\n';
  out << "algorithm " << algorithm << '\n';
  out << "status " << (converged ? "converged" : "not-converged (partial)") << '\n';
  out << "objective " << FormatFixed(objective, 3) << '\n';
  out << "lower_bound " << FormatFixed(lower_bound, 3) << '\n';
  out << "investment_cost " << FormatFixed(investment_cost, 3) << '\n';
  out << "operational_cost " << FormatFixed(operational_cost, 3) << '\n';

  out << "\n[stages]\n";
  std::vector<std::vector<std::string>> rows{{"stage", "investment_nodes"}};
  for (size_t s = 0; s < stage_nodes.size(); ++s) {
    rows.push_back({std::to_string(s + 1), std::to_string(stage_nodes[s])});
  }
  WriteTable(out, rows);

  out << "\n[capacity]\n";
  rows = {{"technology", "class", "region"}};
  for (size_t s = 0; s < stage_nodes.size(); ++s) rows[0].push_back("stage" + std::to_string(s + 1));
  for (const CapacityRow& c : capacities) {
    std::vector<std::string> row{c.technology, c.tech_class, c.region};
    for (double v : c.capacity) row.push_back(FormatFixed(v, 4));
    rows.push_back(std::move(row));
  }
  WriteTable(out, rows);

  out << "\n[retrofits]\n";
  rows = {{"source", "target", "nodes_per_stage"}};
  for (const IncidenceRow& i : incidence) rows.push_back({i.source, i.target, Tuple(i.nodes)});
  WriteTable(out, rows);

  out << "\n[investment_by_region]\n";
  rows = {{"region", "cost"}};
  for (const auto& [region, cost] : investment_by_region) {
    rows.push_back({region, FormatFixed(cost, 3)});
  }
  WriteTable(out, rows);
}

}  // namespace reorient::cli
