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


#include "reorient/stoch/price_process.h"

#include <algorithm>
#include <cmath>

#include "reorient/errors.h"

namespace reorient::stoch {
namespace {

constexpr int kBlockSize = 1024;

}  // namespace

const char* ToString(StltForm form) {
  return form == StltForm::kStandard ? "standard" : "as-printed";
}

StltForm ParseStltForm(const std::string& name) {
  if (name == "standard") return StltForm::kStandard;
  if (name == "as-printed") return StltForm::kAsPrinted;
  throw ValidationError("unknown price-process form '" + name + "'");
}

void StltParams::Validate() const {
  if (!(kappa > 0.0)) throw ValidationError("kappa must be positive");
  if (!(sigma_chi >= 0.0) || !(sigma_xi >= 0.0)) {
    throw ValidationError("volatilities must be nonnegative");
  }
  if (!(std::abs(rho) <= 1.0)) throw ValidationError("correlation must lie in [-1, 1]");
  if (!(dt > 0.0)) throw ValidationError("period length must be positive");
  if (!std::isfinite(lambda_chi) || !std::isfinite(mu_xi) || !std::isfinite(chi0) ||
      !std::isfinite(xi0)) {
    throw ValidationError("price-process parameters must be finite");
  }
}

double StltPaths::Price(int path, int t) const {
  return std::exp(Chi(path, t) + Xi(path, t));
}

std::vector<double> StltPaths::PricesAt(int t) const {
  std::vector<double> out(count);
  for (int p = 0; p < count; ++p) out[p] = Price(p, t);
  return out;
}

std::pair<double, double> CorrelatedNormals(double rho, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const double z1 = normal(rng);
  const double z2 = normal(rng);
  return {z1, rho * z1 + std::sqrt(1.0 - rho * rho) * z2};
}

StltPaths SimulateStlt(const StltParams& params, int horizon, int path_count,
                       uint64_t seed) {
  params.Validate();
  if (horizon < 1 || path_count < 1) {
    throw ValidationError("horizon and path count must be positive");
  }
  StltPaths out;
  out.horizon = horizon;
  out.count = path_count;
  out.chi.resize(static_cast<size_t>(horizon) * path_count);
  out.xi.resize(out.chi.size());

  const double decay = std::exp(-params.kappa * params.dt);
  const double chi_sd =
      params.sigma_chi * std::sqrt((1.0 - decay * decay) / (2.0 * params.kappa));
  const double xi_sd = params.sigma_xi * std::sqrt(params.dt);
  const bool standard = params.form == StltForm::kStandard;
  const double damping = standard ? decay : 1.0;
  const double chi_drift = standard
                               ? -(1.0 - decay) * params.lambda_chi / params.kappa
                               : -(1.0 - decay);
  const double xi_drift = params.mu_xi * params.dt;

  for (int first = 0; first < path_count; first += kBlockSize) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                      static_cast<uint32_t>(first / kBlockSize)};
    std::mt19937_64 rng(seq);
    const int last = std::min(path_count, first + kBlockSize);
    for (int p = first; p < last; ++p) {
      double chi = params.chi0, xi = params.xi0;
      for (int t = 0; t < horizon; ++t) {
        const auto [e1, e2] = CorrelatedNormals(params.rho, rng);
        chi = damping * chi + chi_drift + chi_sd * e1;
        xi = xi + xi_drift + xi_sd * e2;
        out.chi[static_cast<size_t>(p) * horizon + t] = chi;
        out.xi[static_cast<size_t>(p) * horizon + t] = xi;
      }
    }
  }
  return out;
}

void ProductionProfile::Validate() const {
  if (!(plateau_rate >= 0.0) || !(plateau_length >= 0.0) || !(decline >= 0.0)) {
    throw ValidationError("production profile parameters must be nonnegative");
  }
}

double ProductionRate(const ProductionProfile& profile, double t) {
  if (t <= profile.plateau_length) return profile.plateau_rate;
  return profile.plateau_rate * std::exp(-profile.decline * (t - profile.plateau_length));
}

}  // namespace reorient::stoch
