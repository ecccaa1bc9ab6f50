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


#ifndef REORIENT_STOCH_KMEANS_H_
#define REORIENT_STOCH_KMEANS_H_

#include <array>
#include <cstdint>
#include <vector>

namespace reorient::stoch {

struct Location {
  double x = 0.0;
  double y = 0.0;
  // Weight in the distortion and capacity summed per cluster.
  double weight = 1.0;
};

struct Clustering {
  std::vector<int> assignment;
  std::vector<std::array<double, 2>> centroids;
  // Summed weights of the members of each cluster.
  std::vector<double> cluster_weight;
  double distortion = 0.0;
};

// Weighted sum of squared distances to the weighted cluster means of
// `assignment` (empty clusters contribute nothing).
double Distortion(const std::vector<Location>& points,
                  const std::vector<int>& assignment, int k);

// Lloyd iterations from k-means++ starts; the best of `restarts` runs is
// returned. Deterministic for a fixed seed. Throws ValidationError unless
// 1 <= k <= points.size().
Clustering KMeansCluster(const std::vector<Location>& points, int k, uint64_t seed,
                         int restarts = 8);

}  // namespace reorient::stoch

#endif  // REORIENT_STOCH_KMEANS_H_
