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



#include "reorient/model/builder.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "reorient/errors.h"
#include "reorient/lp/linear_program.h"
#include "reorient/stoch/price_process.h"

namespace reorient::model {
namespace {

using lp::Entry;
using lp::RowSense;

std::string Label(const std::string& family, const std::string& a, int b) {
  return family + "[" + a + "," + std::to_string(b) + "]";
}

std::string Label(const std::string& family, const std::string& a, int s, int t) {
  return family + "[" + a + "," + std::to_string(s) + "," + std::to_string(t) + "]";
}

bool IsHydrogenClass(TechClass c) {
  return c == TechClass::kHydrogenStorage || c == TechClass::kElectrolyser ||
         c == TechClass::kFuelCell || c == TechClass::kSmrCcs ||
         c == TechClass::kHydrogenPipeline;
}

// Builds the operational template period by period. Columns of a period are
// created first so that storage rows can refer to neighbouring periods.
class SubproblemBuilder {
 public:
  SubproblemBuilder(const CaseData& data, const stoch::OperationalScenarioSet& sc)
      : d_(data), sc_(sc), layout_(LinkLayout(data)) {
    for (int k = 0; k < static_cast<int>(layout_.size()); ++k) {
      const XComponent& x = layout_[k];
      if (!x.technology.empty()) {
        unit_x_[x.technology] = k;
      } else {
        demand_x_[x.kind] = k;
      }
    }
    for (const Region& r : d_.regions) {
      bool hydrogen = d_.series.Has(r.id, "hydrogen");
      for (const Technology& t : d_.technologies) {
        if (!IsHydrogenClass(t.tech_class) || !HasOperationalRole(t.tech_class)) continue;
        if (t.region == r.id || (IsConnection(t.tech_class) && t.to_region == r.id)) {
          hydrogen = true;
        }
      }
      if (hydrogen) hydrogen_regions_.insert(r.id);
    }
  }

  mhsp::SubproblemTemplate Build() {
    t_.name = d_.name.empty() ? "operations" : d_.name;
    t_.x_dimension = static_cast<int>(layout_.size());
    t_.c_dimension = 2;
    for (const XComponent& x : layout_) t_.x_labels.push_back(x.label);
    t_.c_labels = {"base", "co2_price"};
    const int periods = sc_.periods();
    const int scenarios = static_cast<int>(sc_.scenarios.size());
    cols_.assign(scenarios, std::vector<Period>(periods));
    for (int s = 0; s < scenarios; ++s) {
      for (int t = 0; t < periods; ++t) AddColumns(s, t);
    }
    for (int s = 0; s < scenarios; ++s) {
      for (int t = 0; t < periods; ++t) AddPeriodRows(s, t);
      AddSliceRows(s);
      AddEmissionRow(s);
    }
    t_.special_x.assign(t_.x_dimension, 0.0);
    t_.Validate();
    return std::move(t_);
  }

 private:
  struct Period {
    std::map<std::string, std::map<std::string, int>> unit;  // unit -> role -> column
    std::map<std::string, std::map<std::string, int>> region;
  };

  double Weight(int s, int t) const {
    return sc_.weights[s] * sc_.scale[t] * sc_.period_hours[t];
  }

  double Series(int s, const std::string& region, const std::string& name, int t) const {
    if (!d_.series.Has(region, name)) return 0.0;
    return sc_.Value(d_.series, s, region, name, t);
  }

  int Cap(const std::string& unit) const { return unit_x_.at(unit); }

  int AddColumn(const std::string& label, double lower, double upper,
                std::vector<Entry> cost, std::vector<Entry> upper_link) {
    const int j = t_.structure.AddColumn(0.0, lower, upper, label);
    t_.cost_links.push_back(std::move(cost));
    t_.upper_links.push_back(std::move(upper_link));
    return j;
  }

  void AddRow(std::vector<Entry> entries, RowSense sense, double rhs, const std::string& label,
              std::vector<Entry> rhs_link = {}) {
    t_.structure.AddRow(std::move(entries), sense, rhs, label);
    t_.rhs_links.push_back(std::move(rhs_link));
  }

  void AddColumns(int s, int t) {
    Period& p = cols_[s][t];
    const double w = Weight(s, t);
    const bool reserve = d_.scalars.reserve > 0.0;
    for (const Technology& u : d_.technologies) {
      if (!HasOperationalRole(u.tech_class)) continue;
      const std::string& id = u.id;
      const int cap = Cap(id);
      auto& roles = p.unit[id];
      switch (u.tech_class) {
        case TechClass::kThermal:
          roles["gen"] = AddColumn(Label("gen", id, s, t), 0.0, lp::kInfinity,
                                   {{kCostBase, w * u.marginal_cost}, {kCostCo2, w * u.emission}},
                                   {});
          if (reserve) roles["res"] = AddColumn(Label("res", id, s, t), 0.0, lp::kInfinity, {}, {});
          break;
        case TechClass::kRenewable:
          break;
        case TechClass::kHydroRor: {
          const double profile = Series(s, u.region, u.profile, t);
          if (profile < 0.0) throw DataError(id + ": negative profile value");
          roles["hyd"] = AddColumn(Label("hyd", id, s, t), 0.0, 0.0,
                                   {{kCostBase, w * u.marginal_cost}}, {{cap, profile}});
          break;
        }
        case TechClass::kHydroSeasonal:
          roles["hyd"] = AddColumn(Label("hyd", id, s, t), 0.0, 0.0,
                                   {{kCostBase, w * u.marginal_cost}}, {{cap, 1.0}});
          break;
        case TechClass::kElectricStorage:
          roles["chg"] = AddColumn(Label("chg", id, s, t), 0.0, 0.0, {}, {{cap, 1.0}});
          roles["dis"] = AddColumn(Label("dis", id, s, t), 0.0, lp::kInfinity, {}, {});
          if (reserve) roles["res"] = AddColumn(Label("res", id, s, t), 0.0, lp::kInfinity, {}, {});
          roles["lvl"] = AddColumn(Label("soc", id, s, t), 0.0, 0.0, {}, {{cap, u.duration}});
          break;
        case TechClass::kHydrogenStorage:
          roles["inj"] = AddColumn(Label("inj", id, s, t), 0.0, 0.0, {}, {{cap, 1.0 / u.duration}});
          roles["wdr"] = AddColumn(Label("wdr", id, s, t), 0.0, 0.0, {}, {{cap, 1.0 / u.duration}});
          roles["lvl"] = AddColumn(Label("lvl", id, s, t), 0.0, 0.0, {}, {{cap, 1.0}});
          break;
        case TechClass::kElectrolyser:
          roles["ely"] = AddColumn(Label("ely", id, s, t), 0.0, 0.0,
                                   {{kCostBase, w * u.marginal_cost}}, {{cap, 1.0}});
          break;
        case TechClass::kFuelCell:
          roles["fc"] = AddColumn(Label("fc", id, s, t), 0.0, 0.0,
                                  {{kCostBase, w * u.marginal_cost}}, {{cap, 1.0}});
          break;
        case TechClass::kElectricBoiler:
          roles["blr"] = AddColumn(Label("blr", id, s, t), 0.0, 0.0,
                                   {{kCostBase, w * u.marginal_cost}}, {{cap, 1.0}});
          break;
        case TechClass::kSmrCcs:
          roles["smr"] = AddColumn(Label("smr", id, s, t), 0.0, 0.0,
                                   {{kCostBase, w * u.marginal_cost}}, {{cap, 1.0}});
          break;
        case TechClass::kTransmissionLine:
        case TechClass::kHydrogenPipeline:
          roles["flow"] = AddColumn(Label("flow", id, s, t), -lp::kInfinity, lp::kInfinity, {}, {});
          break;
        default:
          break;
      }
    }
    const Scalars& sc = d_.scalars;
    for (const Region& r : d_.regions) {
      auto& roles = p.region[r.id];
      roles["shed_p"] = AddColumn(Label("shed_power", r.id, s, t), 0.0, lp::kInfinity,
                                  {{kCostBase, w * sc.shed_power}}, {});
      roles["gshed_p"] = AddColumn(Label("gshed_power", r.id, s, t), 0.0, lp::kInfinity, {}, {});
      if (hydrogen_regions_.count(r.id)) {
        roles["shed_h2"] = AddColumn(Label("shed_hydrogen", r.id, s, t), 0.0, lp::kInfinity,
                                     {{kCostBase, w * sc.shed_hydrogen}}, {});
        roles["gshed_h2"] =
            AddColumn(Label("gshed_hydrogen", r.id, s, t), 0.0, lp::kInfinity, {}, {});
      }
      if (r.platform) {
        roles["shed_heat"] = AddColumn(Label("shed_heat", r.id, s, t), 0.0, lp::kInfinity,
                                       {{kCostBase, w * sc.shed_heat}}, {});
        roles["gshed_heat"] =
            AddColumn(Label("gshed_heat", r.id, s, t), 0.0, lp::kInfinity, {}, {});
      }
      if (sc.reserve > 0.0 && Series(s, r.id, "load", t) > 0.0) {
        roles["short"] = AddColumn(Label("reserve_short", r.id, s, t), 0.0, lp::kInfinity,
                                   {{kCostBase, w * sc.shed_reserve}}, {});
      }
    }
  }

  bool SliceStart(int t) const { return t % sc_.hours_per_season == 0; }

  void AddPeriodRows(int s, int t) {
    const Period& p = cols_[s][t];
    for (const Technology& u : d_.technologies) {
      if (!HasOperationalRole(u.tech_class)) continue;
      const auto& roles = p.unit.at(u.id);
      const int cap = Cap(u.id);
      switch (u.tech_class) {
        case TechClass::kThermal: {
          std::vector<Entry> out{{roles.at("gen"), 1.0}};
          if (roles.count("res")) out.push_back({roles.at("res"), 1.0});
          AddRow(out, RowSense::kLessEqual, 0.0, Label("gen_cap", u.id, s, t), {{cap, 1.0}});
          if (u.ramp < 1.0 && !SliceStart(t)) {
            const auto& prev = cols_[s][t - 1].unit.at(u.id);
            std::vector<Entry> up = out;
            up.push_back({prev.at("gen"), -1.0});
            if (prev.count("res")) up.push_back({prev.at("res"), -1.0});
            std::vector<Entry> down;
            for (const Entry& e : up) down.push_back({e.index, -e.value});
            AddRow(up, RowSense::kLessEqual, 0.0, Label("ramp_up", u.id, s, t),
                   {{cap, u.ramp}});
            AddRow(down, RowSense::kLessEqual, 0.0, Label("ramp_down", u.id, s, t),
                   {{cap, u.ramp}});
          }
          break;
        }
        case TechClass::kElectricStorage: {
          std::vector<Entry> out{{roles.at("dis"), 1.0}};
          if (roles.count("res")) out.push_back({roles.at("res"), 1.0});
          AddRow(out, RowSense::kLessEqual, 0.0, Label("dis_cap", u.id, s, t), {{cap, 1.0}});
          break;
        }
        case TechClass::kTransmissionLine:
        case TechClass::kHydrogenPipeline:
          AddRow({{roles.at("flow"), 1.0}}, RowSense::kLessEqual, 0.0,
                 Label("flow_fwd", u.id, s, t), {{cap, 1.0}});
          AddRow({{roles.at("flow"), -1.0}}, RowSense::kLessEqual, 0.0,
                 Label("flow_rev", u.id, s, t), {{cap, 1.0}});
          break;
        default:
          break;
      }
    }
    AddStorageRows(s, t);
    for (const Region& r : d_.regions) {
      AddReserveRow(s, t, r);
      AddPowerBalance(s, t, r);
      if (hydrogen_regions_.count(r.id)) AddHydrogenBalance(s, t, r);
      if (r.platform) AddHeatBalance(s, t, r);
    }
  }

  // Level at the next period of the slice, wrapping to the slice start.
  int NextInSlice(int t) const {
    const int h = sc_.hours_per_season;
    return (t + 1) % h == 0 ? t + 1 - h : t + 1;
  }

  void AddStorageRows(int s, int t) {
    const Period& p = cols_[s][t];
    const Period& next = cols_[s][NextInSlice(t)];
    for (const Technology& u : d_.technologies) {
      const double hours = sc_.period_hours[t];
      if (u.tech_class == TechClass::kElectricStorage) {
        const auto& r = p.unit.at(u.id);
        AddRow({{next.unit.at(u.id).at("lvl"), 1.0},
                {r.at("lvl"), -1.0},
                {r.at("chg"), -hours * u.charge_efficiency},
                {r.at("dis"), hours}},
               RowSense::kEqual, 0.0, Label("soc_balance", u.id, s, t));
      } else if (u.tech_class == TechClass::kHydrogenStorage) {
        const auto& r = p.unit.at(u.id);
        AddRow({{next.unit.at(u.id).at("lvl"), 1.0},
                {r.at("lvl"), -1.0},
                {r.at("inj"), -1.0},
                {r.at("wdr"), 1.0}},
               RowSense::kEqual, 0.0, Label("lvl_balance", u.id, s, t));
      }
    }
  }

  void AddReserveRow(int s, int t, const Region& r) {
    const auto& regional = cols_[s][t].region.at(r.id);
    if (!regional.count("short")) return;
    std::vector<Entry> row{{regional.at("short"), 1.0}};
    for (const Technology& u : d_.technologies) {
      if (u.region != r.id || !HasOperationalRole(u.tech_class)) continue;
      const auto& roles = cols_[s][t].unit.at(u.id);
      if (roles.count("res")) row.push_back({roles.at("res"), 1.0});
    }
    AddRow(row, RowSense::kGreaterEqual, d_.scalars.reserve * Series(s, r.id, "load", t),
           Label("reserve", r.id, s, t));
  }

  void AddPowerBalance(int s, int t, const Region& r) {
    const Period& p = cols_[s][t];
    const auto& regional = p.region.at(r.id);
    std::vector<Entry> row{{regional.at("shed_p"), 1.0}, {regional.at("gshed_p"), -1.0}};
    std::vector<Entry> link;
    const double load = Series(s, r.id, "load", t);
    if (load != 0.0) link.push_back({demand_x_.at(XKind::kNegDemandPower), -load});
    for (const Technology& u : d_.technologies) {
      if (!HasOperationalRole(u.tech_class)) continue;
      const auto& roles = p.unit.at(u.id);
      if (u.tech_class == TechClass::kTransmissionLine) {
        if (u.region == r.id) row.push_back({roles.at("flow"), -u.efficiency});
        if (u.to_region == r.id) row.push_back({roles.at("flow"), u.efficiency});
        continue;
      }
      if (u.region != r.id) continue;
      switch (u.tech_class) {
        case TechClass::kThermal:
          row.push_back({roles.at("gen"), 1.0});
          break;
        case TechClass::kRenewable: {
          const double factor = Series(s, u.region, u.profile, t);
          if (factor != 0.0) link.push_back({Cap(u.id), -factor});
          break;
        }
        case TechClass::kHydroRor:
        case TechClass::kHydroSeasonal:
          row.push_back({roles.at("hyd"), 1.0});
          break;
        case TechClass::kElectricStorage:
          row.push_back({roles.at("dis"), 1.0});
          row.push_back({roles.at("chg"), -1.0});
          break;
        case TechClass::kFuelCell:
          row.push_back({roles.at("fc"), 1.0});
          break;
        case TechClass::kElectrolyser:
          row.push_back({roles.at("ely"), -1.0});
          break;
        case TechClass::kElectricBoiler:
          row.push_back({roles.at("blr"), -1.0});
          break;
        default:
          break;
      }
    }
    AddRow(row, RowSense::kEqual, 0.0, Label("power", r.id, s, t), link);
  }

  void AddHydrogenBalance(int s, int t, const Region& r) {
    const Period& p = cols_[s][t];
    const auto& regional = p.region.at(r.id);
    const double hours = sc_.period_hours[t];
    std::vector<Entry> row{{regional.at("shed_h2"), 1.0}, {regional.at("gshed_h2"), -1.0}};
    std::vector<Entry> link;
    const double demand = Series(s, r.id, "hydrogen", t);
    if (demand != 0.0) link.push_back({demand_x_.at(XKind::kNegDemandHydrogen), -demand});
    for (const Technology& u : d_.technologies) {
      if (!HasOperationalRole(u.tech_class)) continue;
      const auto& roles = p.unit.at(u.id);
      if (u.tech_class == TechClass::kHydrogenPipeline) {
        if (u.region == r.id) row.push_back({roles.at("flow"), -1.0});
        if (u.to_region == r.id) row.push_back({roles.at("flow"), 1.0});
        continue;
      }
      if (u.region != r.id) continue;
      switch (u.tech_class) {
        case TechClass::kElectrolyser:
          row.push_back({roles.at("ely"), hours * u.conversion});
          break;
        case TechClass::kSmrCcs:
          row.push_back({roles.at("smr"), 1.0});
          break;
        case TechClass::kFuelCell:
          row.push_back({roles.at("fc"), -hours * u.conversion});
          break;
        case TechClass::kHydrogenStorage:
          row.push_back({roles.at("wdr"), 1.0});
          row.push_back({roles.at("inj"), -1.0});
          break;
        default:
          break;
      }
    }
    AddRow(row, RowSense::kEqual, 0.0, Label("hydrogen", r.id, s, t), link);
  }

  void AddHeatBalance(int s, int t, const Region& r) {
    const Period& p = cols_[s][t];
    const auto& regional = p.region.at(r.id);
    std::vector<Entry> row{{regional.at("shed_heat"), 1.0}, {regional.at("gshed_heat"), -1.0}};
    std::vector<Entry> link;
    const double demand = Series(s, r.id, "heat", t);
    if (demand != 0.0) link.push_back({demand_x_.at(XKind::kNegDemandHeat), -demand});
    for (const Technology& u : d_.technologies) {
      if (u.region != r.id || !HasOperationalRole(u.tech_class)) continue;
      const auto& roles = p.unit.at(u.id);
      if (u.tech_class == TechClass::kThermal && u.heat_recovery > 0.0) {
        row.push_back({roles.at("gen"), u.heat_recovery});
      } else if (u.tech_class == TechClass::kElectricBoiler) {
        row.push_back({roles.at("blr"), u.efficiency});
      }
    }
    AddRow(row, RowSense::kEqual, 0.0, Label("heat", r.id, s, t), link);
  }

  void AddSliceRows(int s) {
    const int h = sc_.hours_per_season;
    for (const Technology& u : d_.technologies) {
      if (u.tech_class != TechClass::kHydroSeasonal) continue;
      for (int n = 0; n < sc_.seasons; ++n) {
        std::vector<Entry> row;
        double inflow = 0.0;
        for (int t = n * h; t < (n + 1) * h; ++t) {
          row.push_back({cols_[s][t].unit.at(u.id).at("hyd"), 1.0});
          inflow += Series(s, u.region, u.profile, t);
        }
        AddRow(row, RowSense::kLessEqual, inflow, Label("inflow", u.id, s, n));
      }
    }
  }

  void AddEmissionRow(int s) {
    if (!demand_x_.count(XKind::kCo2Budget)) return;
    std::vector<Entry> row;
    for (int t = 0; t < sc_.periods(); ++t) {
      const double pi = sc_.scale[t];
      for (const Technology& u : d_.technologies) {
        if (u.emission == 0.0 || !HasOperationalRole(u.tech_class)) continue;
        const auto& roles = cols_[s][t].unit.at(u.id);
        if (u.tech_class == TechClass::kThermal) row.push_back({roles.at("gen"), pi * u.emission});
        if (u.tech_class == TechClass::kSmrCcs) row.push_back({roles.at("smr"), pi * u.emission});
      }
    }
    AddRow(row, RowSense::kLessEqual, 0.0, "co2[" + std::to_string(s) + "]",
           {{demand_x_.at(XKind::kCo2Budget), 1.0}});
  }

  const CaseData& d_;
  const stoch::OperationalScenarioSet& sc_;
  std::vector<XComponent> layout_;
  std::map<std::string, int> unit_x_;
  std::map<XKind, int> demand_x_;
  std::set<std::string> hydrogen_regions_;
  std::vector<std::vector<Period>> cols_;
  mhsp::SubproblemTemplate t_;
};

bool HasSeries(const CaseData& d, const std::string& name, bool platform_only) {
  for (const Region& r : d.regions) {
    if (platform_only && !r.platform) continue;
    if (d.series.Has(r.id, name)) return true;
  }
  return false;
}

}  // namespace

std::vector<XComponent> LinkLayout(const CaseData& data) {
  std::vector<XComponent> out;
  for (const Technology& t : data.technologies) {
    if (!HasOperationalRole(t.tech_class)) continue;
    if (data.IsRetrofitTarget(t.id)) {
      out.push_back({XKind::kRetrofitted, t.id, "acc_ret[" + t.id + "]"});
    } else if (data.IsRetrofitSource(t.id)) {
      out.push_back({XKind::kRemaining, t.id, "acc_ref[" + t.id + "]"});
    } else {
      out.push_back({XKind::kAccumulated, t.id, "acc[" + t.id + "]"});
    }
  }
  if (HasSeries(data, "load", false)) {
    out.push_back({XKind::kNegDemandPower, "", "neg_demand_power"});
  }
  if (HasSeries(data, "hydrogen", false)) {
    out.push_back({XKind::kNegDemandHydrogen, "", "neg_demand_hydrogen"});
  }
  if (HasSeries(data, "heat", true)) {
    out.push_back({XKind::kNegDemandHeat, "", "neg_demand_heat"});
  }
  if (!data.scalars.co2_budget.empty()) out.push_back({XKind::kCo2Budget, "", "co2_budget"});
  return out;
}

mhsp::SubproblemTemplate BuildSubproblem(const CaseData& data,
                                         const stoch::OperationalScenarioSet& scenarios) {
  return SubproblemBuilder(data, scenarios).Build();
}

lp::LinearProgram BindNode(const mhsp::SubproblemTemplate& tmpl, std::span<const double> x,
                           std::span<const double> c) {
  if (static_cast<int>(x.size()) != tmpl.x_dimension) {
    throw StructuralError("node vector has " + std::to_string(x.size()) +
                          " components, template expects " +
                          std::to_string(tmpl.x_dimension));
  }
  if (static_cast<int>(c.size()) != tmpl.c_dimension) {
    throw StructuralError("cost vector has " + std::to_string(c.size()) +
                          " components, template expects " +
                          std::to_string(tmpl.c_dimension));
  }
  return mhsp::BindTemplate(tmpl, x, c);
}

int MasterModel::Column(const std::string& family, const std::string& technology,
                        int node) const {
  auto it = columns.find(Label(family, technology, node));
  return it == columns.end() ? -1 : it->second;
}

double AnnualProfit(const Technology& tech, const NodeScalars& node, double kappa) {
  if (tech.price_kind.empty()) return 0.0;
  const double price = tech.price_kind == "oil" ? node.oil : node.gas;
  const double rate = stoch::ProductionRate(tech.production, kappa * (node.stage - 1));
  return tech.margin * rate * price;
}

MasterModel BuildMaster(const CaseData& data, const mhsp::StrategicTree& tree,
                        const std::map<int, NodeScalars>& scalars,
                        const ModelOptions& options) {
  MasterModel m;
  lp::LinearProgram& lp = m.program.base;
  const double kappa = data.scalars.kappa;
  auto add = [&](const std::string& label, double cost, double lo, double hi, bool binary) {
    const int j = lp.AddColumn(cost, lo, hi, label);
    m.columns[label] = j;
    if (binary) m.program.binary_columns.insert(j);
    return j;
  };
  m.c_inv = add("c_inv", 1.0, -lp::kInfinity, lp::kInfinity, false);
  // c_inv - sum(cost * column) = constant costs.
  std::vector<Entry> cost_row{{m.c_inv, 1.0}};
  double constant_cost = 0.0;
  auto charge = [&](int col, double cost) {
    if (cost != 0.0) cost_row.push_back({col, -cost});
  };

  const std::vector<int> inv_nodes = tree.InvestmentNodes();
  const std::vector<int> ope_nodes = tree.OperationalNodes();
  auto investable = [&](const Technology& t) {
    return t.max_inv > 0.0 && !data.IsRetrofitSource(t.id) && !data.IsRetrofitTarget(t.id);
  };
  auto has_capacity_target = [&](const Retrofit& r) {
    return HasOperationalRole(data.technology(r.target).tech_class);
  };
  const double block = options.investment_only ? 0.0 : 1.0;

  for (int i : inv_nodes) {
    const double pi = tree.node(i).probability;
    const int stage = tree.node(i).stage;
    for (const Technology& t : data.technologies) {
      if (investable(t)) {
        const bool gated = t.inv_fix.At(stage) > 0.0;
        const int x = add(Label("x_inv", t.id, i), 0.0, 0.0, gated ? lp::kInfinity : t.max_inv,
                          false);
        charge(x, pi * t.inv_var.At(stage));
        if (gated) {
          const int y = add(Label("y_inv", t.id, i), 0.0, 0.0, 1.0, true);
          charge(y, pi * t.inv_fix.At(stage));
          lp.AddRow({{x, 1.0}, {y, -t.max_inv}}, RowSense::kLessEqual, 0.0,
                    Label("max_inv", t.id, i));
        }
      }
      if (!data.IsRetrofitSource(t.id)) continue;
      const int yref = add(Label("y_ref", t.id, i), 0.0, 0.0, block, true);
      std::vector<Entry> targets{{yref, -1.0}};
      for (const Retrofit* r : data.RetrofitsOf(t.id)) {
        const int yret = add(Label("y_ret", r->target, i), 0.0, 0.0, block, true);
        charge(yret, pi * r->ret_fix.At(stage));
        targets.push_back({yret, 1.0});
        if (!has_capacity_target(*r)) continue;
        const double cap = std::min(r->max_ret, r->max_acc_ret);
        if (cap >= 1e29) {
          throw DataError("retrofit '" + t.id + "' -> '" + r->target +
                          "' needs a finite max_ret or max_acc_ret");
        }
        const int xret = add(Label("x_ret", r->target, i), 0.0, 0.0, block > 0.0 ? lp::kInfinity : 0.0,
                             false);
        charge(xret, pi * r->ret_var.At(stage));
        lp.AddRow({{xret, 1.0}, {yret, -cap}}, RowSense::kLessEqual, 0.0,
                  Label("max_ret", r->target, i));
      }
      lp.AddRow(targets, RowSense::kEqual, 0.0, Label("one_target", t.id, i));
    }
  }

  // Once-only retrofit, over the whole tree or along every path.
  std::vector<std::vector<int>> groups;
  if (data.scalars.retrofit_once == RetrofitOnce::kGlobal) {
    groups.push_back(inv_nodes);
  } else {
    for (int i : inv_nodes) {
      bool leaf = true;
      for (int c : tree.Children(i)) leaf = leaf && tree.node(c).kind != mhsp::NodeKind::kInvestment;
      if (leaf) groups.push_back(tree.InvestmentPath(i));
    }
  }
  for (const Technology& t : data.technologies) {
    if (!data.IsRetrofitSource(t.id)) continue;
    for (size_t g = 0; g < groups.size(); ++g) {
      std::vector<Entry> row;
      for (int i : groups[g]) row.push_back({m.columns.at(Label("y_ref", t.id, i)), 1.0});
      const std::string label = groups.size() == 1
                                    ? "once[" + t.id + "]"
                                    : Label("once", t.id, groups[g].front());
      lp.AddRow(row, RowSense::kLessEqual, 1.0, label);
    }
  }

  const std::vector<XComponent> layout = LinkLayout(data);
  for (int j : ope_nodes) {
    const mhsp::StrategicNode& node = tree.node(j);
    const NodeScalars& ns = scalars.at(j);
    const double weight = kappa * node.probability;
    const std::vector<int> path = tree.InvestmentPath(j);
    m.beta[j] = add("beta[" + std::to_string(j) + "]", weight, data.scalars.beta_lower,
                    lp::kInfinity, false);
    std::map<std::string, std::pair<int, double>> unit_x;  // column or constant
    for (const Technology& t : data.technologies) {
      if (data.IsRetrofitSource(t.id)) {
        const int col = add(Label("x_acc_ref", t.id, j), 0.0, 0.0, t.hist, false);
        std::vector<Entry> row{{col, 1.0}};
        for (int i : path) row.push_back({m.columns.at(Label("y_ref", t.id, i)), t.hist});
        lp.AddRow(row, RowSense::kEqual, t.hist, Label("acc_ref", t.id, j));
        const double profit = data.scalars.profit_scale * AnnualProfit(t, ns, kappa);
        charge(col, weight * (t.fix_om.At(node.stage) - (t.hist > 0.0 ? profit / t.hist : 0.0)));
        unit_x[t.id] = {col, 0.0};
      } else if (data.IsRetrofitTarget(t.id)) {
        const Retrofit* r = nullptr;
        for (const Retrofit& cand : data.retrofits) {
          if (cand.target == t.id) r = &cand;
        }
        if (!HasOperationalRole(t.tech_class)) continue;
        const int col = add(Label("x_acc_ret", t.id, j), 0.0, 0.0, r->max_acc_ret, false);
        std::vector<Entry> row{{col, 1.0}};
        for (int i : path) {
          if (kappa * (node.stage - tree.node(i).stage) <= t.lifetime) {
            row.push_back({m.columns.at(Label("x_ret", t.id, i)), -1.0});
          }
        }
        lp.AddRow(row, RowSense::kEqual, 0.0, Label("acc_ret", t.id, j));
        charge(col, weight * r->ret_fix_om.At(node.stage));
        unit_x[t.id] = {col, 0.0};
      } else if (investable(t)) {
        const int col = add(Label("x_acc", t.id, j), 0.0, t.hist, t.max_acc, false);
        std::vector<Entry> row{{col, 1.0}};
        for (int i : path) {
          if (kappa * (node.stage - tree.node(i).stage) <= t.lifetime) {
            row.push_back({m.columns.at(Label("x_inv", t.id, i)), -1.0});
          }
        }
        lp.AddRow(row, RowSense::kEqual, t.hist, Label("acc", t.id, j));
        charge(col, weight * t.fix_om.At(node.stage));
        unit_x[t.id] = {col, 0.0};
      } else {
        constant_cost += weight * t.fix_om.At(node.stage) * t.hist;
        unit_x[t.id] = {-1, t.hist};
      }
    }

    mhsp::OperationalLink link;
    link.tree_node = j;
    link.label = "node[" + std::to_string(j) + "]";
    link.template_id = 0;
    link.beta_column = m.beta[j];
    link.weight = weight;
    link.cost = {1.0, ns.co2_price};
    for (const XComponent& x : layout) {
      int col = -1;
      double offset = 0.0;
      switch (x.kind) {
        case XKind::kAccumulated:
        case XKind::kRetrofitted:
        case XKind::kRemaining:
          std::tie(col, offset) = unit_x.at(x.technology);
          break;
        case XKind::kNegDemandPower:
          offset = -ns.demand_power;
          break;
        case XKind::kNegDemandHydrogen:
          offset = -ns.demand_hydrogen;
          break;
        case XKind::kNegDemandHeat:
          offset = -ns.demand_heat;
          break;
        case XKind::kCo2Budget:
          offset = ns.co2_budget;
          break;
      }
      link.x_columns.push_back(col);
      link.x_offsets.push_back(offset);
    }
    m.links.push_back(std::move(link));
  }
  lp.AddRow(cost_row, RowSense::kEqual, constant_cost, "c_inv");
  return m;
}

stoch::PriceTree FitPriceTree(const CaseData& data) {
  const TreeSettings& ts = data.tree;
  const int stages = static_cast<int>(ts.branching.size());
  const int stride = std::max(1, static_cast<int>(std::lround(data.scalars.kappa)));
  const int horizon = 1 + (stages - 1) * stride;
  stoch::StltParams params;
  params.form = ts.price_form;
  const stoch::StltPaths sim = stoch::SimulateStlt(params, horizon, ts.price_paths, ts.price_seed);
  stoch::PricePaths paths(sim.count, std::vector<double>(horizon));
  for (int p = 0; p < sim.count; ++p) {
    for (int t = 1; t <= horizon; ++t) paths[p][t - 1] = sim.Price(p, t);
  }
  stoch::TreeFitOptions options;
  options.stride = stride;
  options.oil_scale = ts.oil_scale;
  options.gas_intercept = ts.gas_intercept;
  options.gas_slope = ts.gas_slope;
  stoch::PriceTree out = stoch::BuildPriceTree(paths, ts.branching, ts.price_seed, options);
  out.tree = stoch::AttachOperationalNodes(out.tree, ts.scenarios);
  return out;
}

std::map<int, NodeScalars> ComputeNodeScalars(const CaseData& data,
                                              const stoch::PriceTree& prices,
                                              const mhsp::StrategicTree& tree) {
  std::map<int, NodeScalars> out;
  const Scalars& s = data.scalars;
  for (const mhsp::StrategicNode& node : tree.nodes()) {
    NodeScalars ns;
    ns.stage = node.stage;
    ns.demand_power = s.demand_power.At(node.stage);
    ns.demand_hydrogen = s.demand_hydrogen.At(node.stage);
    ns.demand_heat = s.demand_heat.At(node.stage);
    ns.co2_price = s.co2_price.At(node.stage);
    if (!s.co2_budget.empty()) {
      const int k = std::clamp(node.stage - 1, 0, static_cast<int>(s.co2_budget.size()) - 1);
      ns.co2_budget = s.co2_budget[k];
    }
    const auto it = prices.prices.find(tree.OwningInvestmentNode(node.id));
    if (it != prices.prices.end()) {
      ns.oil = it->second.oil;
      ns.gas = it->second.gas;
    }
    out[node.id] = ns;
  }
  return out;
}

ReorientModel BuildModel(const CaseData& data, const ModelOptions& options) {
  data.Validate();
  ReorientModel m;
  m.prices = FitPriceTree(data);
  m.tree = m.prices.tree;
  m.scenarios = stoch::SampleOperationalScenarios(data.series, data.tree.hours_per_season,
                                                  data.tree.scenarios, data.tree.scenario_seed);
  m.scalars = ComputeNodeScalars(data, m.prices, m.tree);
  m.master = BuildMaster(data, m.tree, m.scalars, options);
  m.problem.master = m.master.program;
  m.problem.templates.push_back(BuildSubproblem(data, m.scenarios));
  m.problem.links = m.master.links;
  m.problem.beta_lower = data.scalars.beta_lower;
  mhsp::AssignSpecialPoints(m.problem);
  m.problem.Validate();
  const std::vector<std::string> issues = m.problem.OracleAssumptionIssues();
  if (!issues.empty()) throw ValidationError("model violates oracle conditions: " + issues[0]);
  return m;
}

}  // namespace reorient::model
