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


#ifndef REORIENT_STOCH_TIME_SERIES_H_
#define REORIENT_STOCH_TIME_SERIES_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace reorient::stoch {

inline constexpr double kHoursPerYear = 8760.0;

// Hourly profiles keyed by (region, series).
class TimeSeries {
 public:
  using Key = std::pair<std::string, std::string>;

  void Set(const std::string& region, const std::string& series, int hour,
           double value);
  bool Has(const std::string& region, const std::string& series) const;
  // Throws DataError if the key or hour is missing.
  double At(const std::string& region, const std::string& series, int hour) const;
  const std::vector<double>& Profile(const std::string& region,
                                     const std::string& series) const;
  std::vector<Key> Keys() const;
  // Length of the shortest fully covered profile (hours 0..n-1).
  int CoveredHours() const;
  bool empty() const { return data_.empty(); }

  // Columns: hour region series value; '#' starts a comment and a first line
  // starting with "hour" is a header. Throws ParseError.
  static TimeSeries Read(std::istream& in);
  void Write(std::ostream& out) const;

 private:
  std::map<Key, std::vector<double>> data_;
  std::map<Key, std::vector<bool>> present_;
};

// One operational scenario: four contiguous season slices concatenated.
struct SampledScenario {
  // Source hour of every period, season by season.
  std::vector<int> source_hours;
};

struct OperationalScenarioSet {
  int seasons = 4;
  int hours_per_season = 0;
  std::vector<SampledScenario> scenarios;
  // Uniform scenario weights.
  std::vector<double> weights;
  // Hours per period (all 1) and the scaling weight of each period, with
  // sum_t scale[t] * period_hours[t] = 8760.
  std::vector<double> period_hours;
  std::vector<double> scale;

  int periods() const { return seasons * hours_per_season; }
  // Series value at period t of scenario s.
  double Value(const TimeSeries& series, int s, const std::string& region,
               const std::string& name, int t) const;
};

// The covered hours are split into four equal seasons; every scenario draws
// a uniform start inside each season. Throws DataError when a season is
// shorter than hours_per_season or the series are empty, ValidationError
// for nonpositive counts.
OperationalScenarioSet SampleOperationalScenarios(const TimeSeries& series,
                                                  int hours_per_season,
                                                  int scenario_count,
                                                  uint64_t seed);

}  // namespace reorient::stoch

#endif  // REORIENT_STOCH_TIME_SERIES_H_
