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


#ifndef REORIENT_STOCH_PRICE_PROCESS_H_
#define REORIENT_STOCH_PRICE_PROCESS_H_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace reorient::stoch {

// Recursion used for the short-term factor.
enum class StltForm {
  // chi_t = e^{-k dt} chi_{t-1} - (1 - e^{-k dt}) lambda / k + noise.
  kStandard,
  // chi_t = chi_{t-1} - (1 - e^{-k dt}) + noise.
  kAsPrinted,
};

const char* ToString(StltForm form);
// Accepts "standard" and "as-printed"; throws ValidationError otherwise.
StltForm ParseStltForm(const std::string& name);

// Risk-neutral two-factor short-term/long-term price process.
struct StltParams {
  double kappa = 0.407;
  double sigma_chi = 0.273;
  double lambda_chi = -0.147;
  double sigma_xi = 0.149;
  double mu_xi = -0.007;
  double rho = 0.306;
  double dt = 1.0;
  double chi0 = 0.0;
  double xi0 = 0.0;
  StltForm form = StltForm::kStandard;

  // Throws ValidationError.
  void Validate() const;
};

// Simulated factors, path-major: value(p, t) for t = 1..horizon is stored at
// p * horizon + (t - 1).
struct StltPaths {
  int horizon = 0;
  int count = 0;
  std::vector<double> chi;
  std::vector<double> xi;

  double Chi(int path, int t) const { return chi[path * horizon + t - 1]; }
  double Xi(int path, int t) const { return xi[path * horizon + t - 1]; }
  double Price(int path, int t) const;
  // All prices at period t, one per path.
  std::vector<double> PricesAt(int t) const;
};

// Pair of standard normals with correlation rho.
std::pair<double, double> CorrelatedNormals(double rho, std::mt19937_64& rng);

// Paths are simulated in fixed blocks, each with its own generator seeded
// from (seed, block), so results do not depend on how blocks are scheduled.
StltPaths SimulateStlt(const StltParams& params, int horizon, int path_count,
                       uint64_t seed);

struct ProductionProfile {
  double plateau_rate = 0.0;
  double plateau_length = 0.0;
  double decline = 0.0;

  void Validate() const;
};

// Plateau rate up to the plateau length, exponential decline afterwards.
double ProductionRate(const ProductionProfile& profile, double t);

}  // namespace reorient::stoch

#endif  // REORIENT_STOCH_PRICE_PROCESS_H_
