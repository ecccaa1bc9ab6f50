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



#include "reorient/model/case.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <set>
#include <sstream>

#include "reorient/errors.h"
#include "reorient/text.h"

namespace reorient::model {
namespace {

struct ClassName {
  TechClass value;
  const char* name;
};

constexpr ClassName kClassNames[] = {
    {TechClass::kThermal, "thermal"},
    {TechClass::kRenewable, "renewable"},
    {TechClass::kHydroRor, "hydro-ror"},
    {TechClass::kHydroSeasonal, "hydro-seasonal"},
    {TechClass::kElectricStorage, "electric-storage"},
    {TechClass::kHydrogenStorage, "hydrogen-storage"},
    {TechClass::kElectrolyser, "electrolyser"},
    {TechClass::kFuelCell, "fuel-cell"},
    {TechClass::kElectricBoiler, "electric-boiler"},
    {TechClass::kSmrCcs, "smr-ccs"},
    {TechClass::kTransmissionLine, "transmission-line"},
    {TechClass::kHydrogenPipeline, "hydrogen-pipeline"},
    {TechClass::kPlatformCluster, "platform-cluster"},
    {TechClass::kGasPipeline, "gas-pipeline"},
    {TechClass::kAbandonment, "abandonment"},
};

using Fields = std::map<std::string, std::string>;

Fields ParseFields(const std::vector<std::string>& tokens, int line) {
  Fields out;
  for (const std::string& token : tokens) {
    const size_t eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == token.size()) {
      throw ParseError("expected key=value, got '" + token + "'", line);
    }
    const std::string key = token.substr(0, eq);
    if (out.count(key)) throw ParseError("duplicate key '" + key + "'", line);
    out[key] = token.substr(eq + 1);
  }
  return out;
}

StageValue ParseStageValue(const std::string& token, int line) {
  StageValue v;
  v.values.clear();
  std::stringstream in(token);
  for (std::string part; std::getline(in, part, ',');) {
    v.values.push_back(text::ParseNumber(part, line));
  }
  if (v.values.empty()) throw ParseError("empty value list", line);
  return v;
}

bool ParseFlag(const std::string& token, int line) {
  if (token == "1" || token == "yes" || token == "true") return true;
  if (token == "0" || token == "no" || token == "false") return false;
  throw ParseError("bad flag '" + token + "'", line);
}

// Applies every field through the handler table; unknown keys fail.
void Apply(const Fields& fields,
           const std::map<std::string, std::function<void(const std::string&)>>& handlers,
           const std::string& section, int line) {
  for (const auto& [key, value] : fields) {
    auto it = handlers.find(key);
    if (it == handlers.end()) {
      throw ParseError("unknown key '" + key + "' in [" + section + "]", line);
    }
    it->second(value);
  }
}

void ParseTechnology(const Fields& f, Technology& t, int line) {
  auto num = [line](double& target) {
    return [&target, line](const std::string& v) { target = text::ParseNumber(v, line); };
  };
  auto stage = [line](StageValue& target) {
    return [&target, line](const std::string& v) { target = ParseStageValue(v, line); };
  };
  const std::map<std::string, std::function<void(const std::string&)>> handlers{
      {"id", [&t](const std::string& v) { t.id = v; }},
      {"class", [&t](const std::string& v) { t.tech_class = ParseTechClass(v); }},
      {"region", [&t](const std::string& v) { t.region = v; }},
      {"from", [&t](const std::string& v) { t.region = v; }},
      {"to", [&t](const std::string& v) { t.to_region = v; }},
      {"inv_var", stage(t.inv_var)},
      {"inv_fix", stage(t.inv_fix)},
      {"fix_om", stage(t.fix_om)},
      {"lifetime", num(t.lifetime)},
      {"max_inv", num(t.max_inv)},
      {"max_acc", num(t.max_acc)},
      {"hist", num(t.hist)},
      {"capacity", [&t, line](const std::string& v) {
         t.hist = text::ParseNumber(v, line);
         t.max_acc = t.hist;
       }},
      {"cost", num(t.marginal_cost)},
      {"emission", num(t.emission)},
      {"ramp", num(t.ramp)},
      {"efficiency", num(t.efficiency)},
      {"conversion", num(t.conversion)},
      {"heat_recovery", num(t.heat_recovery)},
      {"charge_efficiency", num(t.charge_efficiency)},
      {"duration", num(t.duration)},
      {"profile", [&t](const std::string& v) { t.profile = v; }},
      {"price", [&t, line](const std::string& v) {
         if (v != "oil" && v != "gas") throw ParseError("price must be oil or gas", line);
         t.price_kind = v;
       }},
      {"margin", num(t.margin)},
      {"plateau_rate", num(t.production.plateau_rate)},
      {"plateau_length", num(t.production.plateau_length)},
      {"decline", num(t.production.decline)},
      {"existing", [&t, line](const std::string& v) {
         if (ParseFlag(v, line)) t.tech_class = TechClass::kGasPipeline;
       }},
  };
  Apply(f, handlers, "technologies", line);
  if (t.id.empty()) throw ParseError("entry without id", line);
}

void ParseRetrofit(const Fields& f, Retrofit& r, int line) {
  auto num = [line](double& target) {
    return [&target, line](const std::string& v) { target = text::ParseNumber(v, line); };
  };
  auto stage = [&r, line](StageValue& target) {
    return [&target, &r, line](const std::string& v) {
      target = ParseStageValue(v, line);
      r.priced = true;
    };
  };
  const std::map<std::string, std::function<void(const std::string&)>> handlers{
      {"source", [&r](const std::string& v) { r.source = v; }},
      {"target", [&r](const std::string& v) { r.target = v; }},
      {"ret_var", stage(r.ret_var)},
      {"ret_fix", stage(r.ret_fix)},
      {"ret_fix_om", stage(r.ret_fix_om)},
      {"max_ret", num(r.max_ret)},
      {"max_acc_ret", num(r.max_acc_ret)},
      {"reference", [&r](const std::string& v) {
         r.reference = v;
         r.priced = true;
       }},
      {"share", num(r.share)},
  };
  Apply(f, handlers, "retrofits", line);
  if (r.source.empty() || r.target.empty()) {
    throw ParseError("retrofit needs source and target", line);
  }
  r.line = line;
}

uint64_t ParseSeed(const std::string& token, int line) {
  try {
    size_t used = 0;
    const unsigned long long v = std::stoull(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad seed '" + token + "'", line);
  }
}

void ParseTreeLine(const std::vector<std::string>& tok, CaseData& c, int line) {
  TreeSettings& t = c.tree;
  const std::string& key = tok[0];
  auto one = [&]() -> const std::string& {
    if (tok.size() != 2) throw ParseError("'" + key + "' takes one value", line);
    return tok[1];
  };
  if (key == "name") {
    c.name = one();
  } else if (key == "branching") {
    if (tok.size() < 2) throw ParseError("branching needs values", line);
    t.branching.clear();
    for (size_t k = 1; k < tok.size(); ++k) t.branching.push_back(text::ParseInt(tok[k], line));
  } else if (key == "scenarios") {
    t.scenarios = text::ParseInt(one(), line);
  } else if (key == "hours_per_season") {
    t.hours_per_season = text::ParseInt(one(), line);
  } else if (key == "scenario_seed") {
    t.scenario_seed = ParseSeed(one(), line);
  } else if (key == "price_paths") {
    t.price_paths = text::ParseInt(one(), line);
  } else if (key == "price_seed") {
    t.price_seed = ParseSeed(one(), line);
  } else if (key == "oil_scale") {
    t.oil_scale = text::ParseNumber(one(), line);
  } else if (key == "gas_intercept") {
    t.gas_intercept = text::ParseNumber(one(), line);
  } else if (key == "gas_slope") {
    t.gas_slope = text::ParseNumber(one(), line);
  } else if (key == "price_form") {
    try {
      t.price_form = stoch::ParseStltForm(one());
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line);
    }
  } else {
    throw ParseError("unknown key '" + key + "' in [tree]", line);
  }
}

void ParseScalarLine(const std::vector<std::string>& tok, Scalars& s, int line) {
  const std::string& key = tok[0];
  auto one = [&]() -> double {
    if (tok.size() != 2) throw ParseError("'" + key + "' takes one value", line);
    return text::ParseNumber(tok[1], line);
  };
  auto list = [&]() {
    if (tok.size() < 2) throw ParseError("'" + key + "' needs values", line);
    std::vector<double> v;
    for (size_t k = 1; k < tok.size(); ++k) v.push_back(text::ParseNumber(tok[k], line));
    return v;
  };
  auto stage = [&]() {
    StageValue v;
    v.values = list();
    return v;
  };
  if (key == "kappa") {
    s.kappa = one();
  } else if (key == "shed_power") {
    s.shed_power = one();
  } else if (key == "shed_heat") {
    s.shed_heat = one();
  } else if (key == "shed_hydrogen") {
    s.shed_hydrogen = one();
  } else if (key == "shed_reserve") {
    s.shed_reserve = one();
  } else if (key == "reserve") {
    s.reserve = one();
  } else if (key == "beta_lower") {
    s.beta_lower = one();
  } else if (key == "demand_power") {
    s.demand_power = stage();
  } else if (key == "demand_hydrogen") {
    s.demand_hydrogen = stage();
  } else if (key == "demand_heat") {
    s.demand_heat = stage();
  } else if (key == "co2_price") {
    s.co2_price = stage();
  } else if (key == "co2_budget") {
    s.co2_budget = list();
  } else if (key == "profit_scale") {
    s.profit_scale = one();
  } else if (key == "retrofit_once") {
    if (tok.size() != 2 || (tok[1] != "global" && tok[1] != "path")) {
      throw ParseError("retrofit_once must be global or path", line);
    }
    s.retrofit_once = tok[1] == "global" ? RetrofitOnce::kGlobal : RetrofitOnce::kPath;
  } else {
    throw ParseError("unknown key '" + key + "' in [scalars]", line);
  }
}

void ParseSeriesLine(const std::vector<std::string>& tok, CaseData& c,
                     const std::string& base_dir, int line) {
  const std::string& kind = tok[0];
  if (kind == "profile") {
    if (tok.size() < 4) throw ParseError("profile needs region, series and values", line);
    for (size_t k = 3; k < tok.size(); ++k) {
      c.series.Set(tok[1], tok[2], static_cast<int>(k - 3), text::ParseNumber(tok[k], line));
    }
  } else if (kind == "fill") {
    if (tok.size() != 5) throw ParseError("fill needs region, series, value and hours", line);
    const double value = text::ParseNumber(tok[3], line);
    const int hours = text::ParseInt(tok[4], line);
    if (hours <= 0) throw ParseError("fill needs a positive hour count", line);
    for (int h = 0; h < hours; ++h) c.series.Set(tok[1], tok[2], h, value);
  } else if (kind == "file") {
    if (tok.size() != 2) throw ParseError("file takes one path", line);
    std::filesystem::path p(tok[1]);
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    std::ifstream in(p);
    if (!in) throw DataError("cannot open series file '" + p.string() + "'");
    const stoch::TimeSeries loaded = stoch::TimeSeries::Read(in);
    for (const auto& [region, name] : loaded.Keys()) {
      const std::vector<double>& values = loaded.Profile(region, name);
      for (int h = 0; h < static_cast<int>(values.size()); ++h) {
        if (!std::isnan(values[h])) c.series.Set(region, name, h, values[h]);
      }
    }
  } else {
    throw ParseError("series lines start with profile, fill or file", line);
  }
}

void RequireNonnegative(const StageValue& v, const std::string& what) {
  for (double x : v.values) {
    if (!(x >= 0.0)) throw ValidationError(what + " must be nonnegative");
  }
}

}  // namespace

const char* ToString(TechClass c) {
  for (const ClassName& n : kClassNames) {
    if (n.value == c) return n.name;
  }
  return "unknown";
}

TechClass ParseTechClass(const std::string& name) {
  for (const ClassName& n : kClassNames) {
    if (name == n.name) return n.value;
  }
  throw ValidationError("unknown technology class '" + name + "'");
}

bool HasOperationalRole(TechClass c) {
  return c != TechClass::kPlatformCluster && c != TechClass::kGasPipeline &&
         c != TechClass::kAbandonment;
}

bool IsConnection(TechClass c) {
  return c == TechClass::kTransmissionLine || c == TechClass::kHydrogenPipeline ||
         c == TechClass::kGasPipeline;
}

double StageValue::At(int stage) const {
  if (values.empty()) return 0.0;
  const int k = std::clamp(stage - 1, 0, static_cast<int>(values.size()) - 1);
  return values[k];
}

const Region& CaseData::region(const std::string& id) const {
  for (const Region& r : regions) {
    if (r.id == id) return r;
  }
  throw DataError("unknown region '" + id + "'");
}

bool CaseData::HasRegion(const std::string& id) const {
  return std::any_of(regions.begin(), regions.end(),
                     [&](const Region& r) { return r.id == id; });
}

const Technology& CaseData::technology(const std::string& id) const {
  for (const Technology& t : technologies) {
    if (t.id == id) return t;
  }
  throw DataError("unknown technology '" + id + "'");
}

bool CaseData::HasTechnology(const std::string& id) const {
  return std::any_of(technologies.begin(), technologies.end(),
                     [&](const Technology& t) { return t.id == id; });
}

bool CaseData::IsRetrofitSource(const std::string& id) const {
  return std::any_of(retrofits.begin(), retrofits.end(),
                     [&](const Retrofit& r) { return r.source == id; });
}

bool CaseData::IsRetrofitTarget(const std::string& id) const {
  return std::any_of(retrofits.begin(), retrofits.end(),
                     [&](const Retrofit& r) { return r.target == id; });
}

std::vector<const Retrofit*> CaseData::RetrofitsOf(const std::string& source) const {
  std::vector<const Retrofit*> out;
  for (const Retrofit& r : retrofits) {
    if (r.source == source) out.push_back(&r);
  }
  return out;
}

void CaseData::ResolveRetrofitCosts() {
  for (Retrofit& r : retrofits) {
    if (r.reference.empty()) continue;
    if (!HasTechnology(r.reference)) {
      throw DataError("retrofit of '" + r.source + "' references unknown technology '" +
                      r.reference + "'");
    }
    if (r.share < 0.0) {
      throw DataError("retrofit of '" + r.source + "' has a reference but no share");
    }
    if (!std::isfinite(r.max_ret)) {
      throw DataError("retrofit of '" + r.source + "' needs a finite max_ret");
    }
    const Technology& ref = technology(r.reference);
    const size_t stages = std::max(ref.inv_fix.values.size(), ref.inv_var.values.size());
    r.ret_fix.values.clear();
    for (size_t s = 1; s <= stages; ++s) {
      const int st = static_cast<int>(s);
      r.ret_fix.values.push_back(r.share * (ref.inv_fix.At(st) + ref.inv_var.At(st) * r.max_ret));
    }
    r.ret_var = 0.0;
  }
}

void CaseData::SetRetrofitShare(double share) {
  if (!(share >= 0.0)) throw ValidationError("retrofit share must be nonnegative");
  for (Retrofit& r : retrofits) {
    if (!r.reference.empty()) r.share = share;
  }
  ResolveRetrofitCosts();
}

void CaseData::Validate() const {
  std::set<std::string> ids;
  for (const Region& r : regions) {
    if (!ids.insert(r.id).second) throw DataError("duplicate region '" + r.id + "'");
  }
  if (regions.empty()) throw DataError("case has no regions");
  ids.clear();
  for (const Technology& t : technologies) {
    if (!ids.insert(t.id).second) throw DataError("duplicate technology '" + t.id + "'");
    const std::string kind = IsConnection(t.tech_class) ? "connection" : "technology";
    if (!HasRegion(t.region)) {
      throw DataError(kind + " '" + t.id + "' references undefined region '" + t.region + "'");
    }
    if (IsConnection(t.tech_class)) {
      if (!HasRegion(t.to_region)) {
        throw DataError(kind + " '" + t.id + "' references undefined region '" +
                        t.to_region + "'");
      }
      if (t.to_region == t.region) {
        throw DataError(kind + " '" + t.id + "' connects a region to itself");
      }
    }
    RequireNonnegative(t.inv_var, t.id + ": inv_var");
    RequireNonnegative(t.inv_fix, t.id + ": inv_fix");
    RequireNonnegative(t.fix_om, t.id + ": fix_om");
    if (!(t.marginal_cost >= 0.0)) throw ValidationError(t.id + ": cost must be nonnegative");
    if (!(t.emission >= 0.0)) throw ValidationError(t.id + ": emission must be nonnegative");
    if (!(t.ramp >= 0.0 && t.ramp <= 1.0)) throw ValidationError(t.id + ": ramp outside [0,1]");
    if (!(t.lifetime > 0.0)) throw ValidationError(t.id + ": lifetime must be positive");
    if (!(t.max_inv >= 0.0) || !(t.hist >= 0.0)) {
      throw ValidationError(t.id + ": capacities must be nonnegative");
    }
    if (t.hist > t.max_acc) throw ValidationError(t.id + ": hist exceeds max_acc");
    if (!(t.efficiency > 0.0) || !(t.charge_efficiency > 0.0) || !(t.duration > 0.0)) {
      throw ValidationError(t.id + ": efficiencies and duration must be positive");
    }
    if (!(t.conversion >= 0.0) || !(t.heat_recovery >= 0.0) || !(t.margin >= 0.0)) {
      throw ValidationError(t.id + ": conversion, heat recovery and margin must be nonnegative");
    }
    bool fixed_cost = false;
    for (double v : t.inv_fix.values) fixed_cost = fixed_cost || v > 0.0;
    if (fixed_cost && t.max_inv > 0.0 && !std::isfinite(t.max_inv)) {
      throw ValidationError(t.id + ": a build cost needs a finite max_inv");
    }
    const bool profiled = t.tech_class == TechClass::kRenewable ||
                          t.tech_class == TechClass::kHydroRor ||
                          t.tech_class == TechClass::kHydroSeasonal;
    if (profiled) {
      if (t.profile.empty()) throw DataError(t.id + ": missing profile series name");
      if (!series.Has(t.region, t.profile)) {
        throw DataError(t.id + ": no series '" + t.profile + "' in region '" + t.region + "'");
      }
    }
    if (!t.price_kind.empty()) t.production.Validate();
  }
  std::set<std::string> targets;
  for (const Retrofit& r : retrofits) {
    if (!HasTechnology(r.source)) {
      throw DataError("retrofit source '" + r.source + "' is not a technology");
    }
    if (!HasTechnology(r.target)) {
      throw DataError("retrofit target '" + r.target + "' is not a technology");
    }
    if (!r.priced) {
      throw DataError("retrofit '" + r.source + "' -> '" + r.target + "' has no cost record");
    }
    if (!targets.insert(r.target).second) {
      throw DataError("technology '" + r.target + "' is the target of two retrofits");
    }
    if (IsRetrofitSource(r.target) || IsRetrofitTarget(r.source)) {
      throw DataError("retrofit chains are not supported ('" + r.source + "')");
    }
    if (technology(r.source).max_inv > 0.0 || technology(r.target).max_inv > 0.0) {
      throw DataError("retrofit technologies cannot take new investment ('" + r.source + "')");
    }
    RequireNonnegative(r.ret_var, "retrofit ret_var");
    RequireNonnegative(r.ret_fix, "retrofit ret_fix");
    RequireNonnegative(r.ret_fix_om, "retrofit ret_fix_om");
    if (!(r.max_ret >= 0.0) || !(r.max_acc_ret >= 0.0)) {
      throw ValidationError("retrofit capacities must be nonnegative");
    }
    if (!r.reference.empty()) {
      if (!HasTechnology(r.reference)) {
        throw DataError("retrofit of '" + r.source + "' references unknown technology '" +
                        r.reference + "'");
      }
      if (!(r.share >= 0.0)) throw DataError("retrofit of '" + r.source + "' needs a share");
    }
  }
  const TreeSettings& t = tree;
  if (t.branching.empty() || t.branching[0] != 1) {
    throw ValidationError("branching must start with 1");
  }
  for (int b : t.branching) {
    if (b < 1) throw ValidationError("branching factors must be positive");
  }
  if (t.scenarios < 1 || t.hours_per_season < 1 || t.price_paths < 1) {
    throw ValidationError("scenarios, hours_per_season and price_paths must be positive");
  }
  const Scalars& s = scalars;
  if (!(s.kappa > 0.0)) throw ValidationError("kappa must be positive");
  if (!(s.reserve >= 0.0 && s.reserve <= 1.0)) throw ValidationError("reserve outside [0,1]");
  for (double v : {s.shed_power, s.shed_heat, s.shed_hydrogen, s.shed_reserve}) {
    if (!(v >= 0.0)) throw ValidationError("shedding penalties must be nonnegative");
  }
  RequireNonnegative(s.co2_price, "co2_price");
  RequireNonnegative(s.demand_power, "demand_power");
  RequireNonnegative(s.demand_hydrogen, "demand_hydrogen");
  RequireNonnegative(s.demand_heat, "demand_heat");
  for (double v : s.co2_budget) {
    if (!(v >= 0.0) || std::isinf(v)) throw ValidationError("co2_budget must be finite and >= 0");
  }
  if (!(s.profit_scale >= 0.0)) throw ValidationError("profit_scale must be nonnegative");
  if (series.empty()) throw DataError("case has no series");
}

CaseData ReadCase(std::istream& in, const std::string& base_dir) {
  CaseData c;
  std::string section;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = text::StripComment(raw);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ParseError("bad section header", line);
      section = s.substr(1, s.size() - 2);
      static const std::set<std::string> known{"tree",      "scalars",   "regions",
                                               "technologies", "lines", "pipelines",
                                               "retrofits", "series"};
      if (!known.count(section)) throw ParseError("unknown section [" + section + "]", line);
      continue;
    }
    const std::vector<std::string> tok = text::Split(s);
    if (section.empty()) throw ParseError("entry outside a section", line);
    if (section == "tree") {
      ParseTreeLine(tok, c, line);
    } else if (section == "scalars") {
      ParseScalarLine(tok, c.scalars, line);
    } else if (section == "series") {
      ParseSeriesLine(tok, c, base_dir, line);
    } else if (section == "regions") {
      Region r;
      Apply(ParseFields(tok, line),
            {{"id", [&r](const std::string& v) { r.id = v; }},
             {"platform", [&r, line](const std::string& v) { r.platform = ParseFlag(v, line); }}},
            section, line);
      if (r.id.empty()) throw ParseError("region without id", line);
      c.regions.push_back(r);
    } else if (section == "retrofits") {
      Retrofit r;
      ParseRetrofit(ParseFields(tok, line), r, line);
      if (r.target == "abandon") {
        Technology t;
        t.id = r.source + "_abandon";
        t.tech_class = TechClass::kAbandonment;
        r.target = t.id;
        // Region is filled in once all sections are read.
        t.region = "";
        c.technologies.push_back(t);
      }
      c.retrofits.push_back(r);
    } else {
      Technology t;
      if (section == "lines") t.tech_class = TechClass::kTransmissionLine;
      if (section == "pipelines") t.tech_class = TechClass::kHydrogenPipeline;
      ParseTechnology(ParseFields(tok, line), t, line);
      if (section != "technologies" && !IsConnection(t.tech_class)) {
        throw ParseError("[" + section + "] entries must be connections", line);
      }
      if (IsConnection(t.tech_class) && (t.region.empty() || t.to_region.empty())) {
        throw ParseError("connection '" + t.id + "' needs from and to", line);
      }
      c.technologies.push_back(t);
    }
  }
  for (Technology& t : c.technologies) {
    if (t.tech_class != TechClass::kAbandonment || !t.region.empty()) continue;
    for (const Retrofit& r : c.retrofits) {
      if (r.target == t.id && c.HasTechnology(r.source)) t.region = c.technology(r.source).region;
    }
  }
  c.ResolveRetrofitCosts();
  c.Validate();
  return c;
}

CaseData LoadCase(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open case file '" + path + "'");
  const std::filesystem::path p(path);
  CaseData c = ReadCase(in, p.has_parent_path() ? p.parent_path().string() : ".");
  if (c.name.empty()) c.name = p.stem().string();
  return c;
}

}  // namespace reorient::model
