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



#ifndef REORIENT_MODEL_CASE_H_
#define REORIENT_MODEL_CASE_H_

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "reorient/stoch/price_process.h"
#include "reorient/stoch/time_series.h"

namespace reorient::model {

enum class TechClass {
  kThermal,
  kRenewable,
  kHydroRor,
  kHydroSeasonal,
  kElectricStorage,
  kHydrogenStorage,
  kElectrolyser,
  kFuelCell,
  kElectricBoiler,
  kSmrCcs,
  kTransmissionLine,
  kHydrogenPipeline,
  kPlatformCluster,
  // Existing natural-gas pipeline: a retrofit source with no role in the
  // power, heat and hydrogen balances.
  kGasPipeline,
  // Abandonment target: no operating capability.
  kAbandonment,
};

const char* ToString(TechClass c);
// Throws ValidationError.
TechClass ParseTechClass(const std::string& name);
// Whether the class has variables in the operational subproblem.
bool HasOperationalRole(TechClass c);
bool IsConnection(TechClass c);

// Per-stage values; stages past the end reuse the last entry.
struct StageValue {
  std::vector<double> values{0.0};

  StageValue() = default;
  StageValue(double v) : values{v} {}  // NOLINT: implicit by design
  double At(int stage) const;
};

struct Technology {
  std::string id;
  TechClass tech_class = TechClass::kThermal;
  std::string region;
  // Destination region of lines and pipelines.
  std::string to_region;

  StageValue inv_var;   // per unit of capacity
  StageValue inv_fix;   // per build decision
  StageValue fix_om;    // per unit of accumulated capacity and year
  double lifetime = 1e9;  // years
  double max_inv = 0.0;   // per investment node
  double max_acc = 1e30;
  double hist = 0.0;

  double marginal_cost = 0.0;  // variable plus fuel cost, per MWh or unit
  double emission = 0.0;       // per MWh or unit
  double ramp = 1.0;           // fraction of capacity per period
  double efficiency = 1.0;     // boilers, lines and pipelines
  double conversion = 0.0;     // hydrogen per MWh (electrolyser, fuel cell)
  double heat_recovery = 0.0;  // thermal units in platform regions
  double charge_efficiency = 1.0;
  double duration = 1.0;       // storage energy per unit of power capacity
  std::string profile;         // series name for renewable and hydro units

  // Profit while a retrofit source is in service.
  std::string price_kind;  // "oil", "gas" or empty
  double margin = 0.0;
  stoch::ProductionProfile production;
};

// Retrofit of an existing source technology to a target technology.
struct Retrofit {
  std::string source;
  std::string target;
  StageValue ret_var;
  StageValue ret_fix;
  StageValue ret_fix_om;
  double max_ret = 1e30;
  double max_acc_ret = 1e30;
  // When `reference` is set, the build decision costs `share` times the
  // reference technology's new-build cost at capacity max_ret.
  std::string reference;
  double share = -1.0;
  // Whether any cost field or a reference was given.
  bool priced = false;
  int line = 0;
};

struct Region {
  std::string id;
  bool platform = false;
};

struct TreeSettings {
  std::vector<int> branching{1};
  int scenarios = 1;
  int hours_per_season = 2;
  uint64_t scenario_seed = 1;
  int price_paths = 1000;
  uint64_t price_seed = 1;
  double oil_scale = 1.0;
  double gas_intercept = 0.0;
  double gas_slope = 1.0;
  stoch::StltForm price_form = stoch::StltForm::kStandard;
};

enum class RetrofitOnce { kGlobal, kPath };

struct Scalars {
  double kappa = 1.0;  // years per stage
  double shed_power = 1e4;
  double shed_heat = 1e4;
  double shed_hydrogen = 1e4;
  double shed_reserve = 1e4;
  double reserve = 0.0;
  double beta_lower = 0.0;
  StageValue demand_power = 1.0;
  StageValue demand_hydrogen = 1.0;
  StageValue demand_heat = 1.0;
  StageValue co2_price = 0.0;
  // Empty means no emission constraint.
  std::vector<double> co2_budget;
  double profit_scale = 1.0;
  RetrofitOnce retrofit_once = RetrofitOnce::kGlobal;
};

struct CaseData {
  std::string name;
  TreeSettings tree;
  std::vector<Region> regions;
  std::vector<Technology> technologies;
  std::vector<Retrofit> retrofits;
  // Hourly series keyed by (region, name): "load", "heat", "hydrogen" and
  // the profile names of renewable and hydro units.
  stoch::TimeSeries series;
  Scalars scalars;

  const Region& region(const std::string& id) const;
  bool HasRegion(const std::string& id) const;
  const Technology& technology(const std::string& id) const;
  bool HasTechnology(const std::string& id) const;
  bool IsRetrofitSource(const std::string& id) const;
  bool IsRetrofitTarget(const std::string& id) const;
  // Targets of a source in case order.
  std::vector<const Retrofit*> RetrofitsOf(const std::string& source) const;

  // Resolves share-based retrofit costs. Throws DataError.
  void ResolveRetrofitCosts();
  // Sets the share of every reference-priced retrofit and resolves costs.
  void SetRetrofitShare(double share);
  // Throws DataError for dangling references, ValidationError for values
  // outside their domain.
  void Validate() const;
};

// Sections: [tree] [scalars] [regions] [technologies] [lines] [pipelines]
// [retrofits] [series]. Entity sections take key=value tokens per line;
// [tree] and [scalars] take "key value..." lines. Relative series files are resolved
// against `base_dir`. Throws ParseError, DataError, ValidationError.
CaseData ReadCase(std::istream& in, const std::string& base_dir = ".");
CaseData LoadCase(const std::string& path);

}  // namespace reorient::model

#endif  // REORIENT_MODEL_CASE_H_
