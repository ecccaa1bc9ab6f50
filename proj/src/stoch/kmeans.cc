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


#include "reorient/stoch/kmeans.h"

#include <algorithm>
#include <limits>
#include <random>

#include "reorient/errors.h"

namespace reorient::stoch {
namespace {

double Squared(const Location& p, const std::array<double, 2>& c) {
  const double dx = p.x - c[0], dy = p.y - c[1];
  return dx * dx + dy * dy;
}

std::vector<std::array<double, 2>> Means(const std::vector<Location>& points,
                                         const std::vector<int>& assignment, int k,
                                         std::vector<double>& weight) {
  std::vector<std::array<double, 2>> means(k, {0.0, 0.0});
  weight.assign(k, 0.0);
  for (size_t i = 0; i < points.size(); ++i) {
    const int c = assignment[i];
    means[c][0] += points[i].weight * points[i].x;
    means[c][1] += points[i].weight * points[i].y;
    weight[c] += points[i].weight;
  }
  for (int c = 0; c < k; ++c) {
    if (weight[c] > 0.0) {
      means[c][0] /= weight[c];
      means[c][1] /= weight[c];
    }
  }
  return means;
}

// k-means++ seeding on weighted squared distances.
std::vector<std::array<double, 2>> Seed(const std::vector<Location>& points, int k,
                                        std::mt19937_64& rng) {
  const int n = static_cast<int>(points.size());
  std::vector<std::array<double, 2>> centres;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int first = static_cast<int>(rng() % n);
  centres.push_back({points[first].x, points[first].y});
  std::vector<double> d(n, std::numeric_limits<double>::infinity());
  while (static_cast<int>(centres.size()) < k) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      d[i] = std::min(d[i], Squared(points[i], centres.back()));
      total += points[i].weight * d[i];
    }
    int pick = 0;
    if (total > 0.0) {
      double r = unit(rng) * total;
      pick = -1;
      for (int i = 0; i < n; ++i) {
        if (points[i].weight * d[i] <= 0.0) continue;
        pick = i;
        r -= points[i].weight * d[i];
        if (r <= 0.0) break;
      }
    }
    centres.push_back({points[pick].x, points[pick].y});
  }
  return centres;
}

Clustering Lloyd(const std::vector<Location>& points, int k, std::mt19937_64& rng) {
  const int n = static_cast<int>(points.size());
  Clustering out;
  out.centroids = Seed(points, k, rng);
  out.assignment.assign(n, -1);
  for (int iteration = 0; iteration < 1000; ++iteration) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      int best = 0;
      for (int c = 1; c < k; ++c) {
        if (Squared(points[i], out.centroids[c]) < Squared(points[i], out.centroids[best])) {
          best = c;
        }
      }
      if (best != out.assignment[i]) {
        out.assignment[i] = best;
        changed = true;
      }
    }
    std::vector<double> weight;
    std::vector<std::array<double, 2>> means = Means(points, out.assignment, k, weight);
    // An empty cluster takes the point farthest from its centroid.
    for (int c = 0; c < k; ++c) {
      if (weight[c] > 0.0) continue;
      int far = 0;
      double worst = -1.0;
      for (int i = 0; i < n; ++i) {
        const double dist = points[i].weight * Squared(points[i], means[out.assignment[i]]);
        if (dist > worst) {
          worst = dist;
          far = i;
        }
      }
      out.assignment[far] = c;
      means = Means(points, out.assignment, k, weight);
      changed = true;
    }
    out.centroids = means;
    if (!changed) break;
  }
  Means(points, out.assignment, k, out.cluster_weight);
  out.distortion = Distortion(points, out.assignment, k);
  return out;
}

}  // namespace

double Distortion(const std::vector<Location>& points, const std::vector<int>& assignment,
                  int k) {
  std::vector<double> weight;
  const std::vector<std::array<double, 2>> means = Means(points, assignment, k, weight);
  double total = 0.0;
  for (size_t i = 0; i < points.size(); ++i) {
    total += points[i].weight * Squared(points[i], means[assignment[i]]);
  }
  return total;
}

Clustering KMeansCluster(const std::vector<Location>& points, int k, uint64_t seed,
                         int restarts) {
  if (k <= 0 || k > static_cast<int>(points.size())) {
    throw ValidationError("cluster count must lie in [1, number of locations]");
  }
  for (const Location& p : points) {
    if (!(p.weight > 0.0)) throw ValidationError("location weights must be positive");
  }
  std::mt19937_64 rng(seed);
  Clustering best;
  for (int r = 0; r < std::max(1, restarts); ++r) {
    Clustering c = Lloyd(points, k, rng);
    if (r == 0 || c.distortion < best.distortion) best = std::move(c);
  }
  return best;
}

}  // namespace reorient::stoch
