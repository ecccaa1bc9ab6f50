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


#include "reorient/stoch/time_series.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <random>

#include "reorient/errors.h"
#include "reorient/text.h"

namespace reorient::stoch {

void TimeSeries::Set(const std::string& region, const std::string& series, int hour,
                     double value) {
  if (hour < 0) throw ValidationError("hour must be nonnegative");
  const Key key{region, series};
  std::vector<double>& values = data_[key];
  std::vector<bool>& present = present_[key];
  if (static_cast<int>(values.size()) <= hour) {
    values.resize(hour + 1, std::numeric_limits<double>::quiet_NaN());
    present.resize(hour + 1, false);
  }
  values[hour] = value;
  present[hour] = true;
}

bool TimeSeries::Has(const std::string& region, const std::string& series) const {
  return data_.count({region, series}) > 0;
}

const std::vector<double>& TimeSeries::Profile(const std::string& region,
                                               const std::string& series) const {
  auto it = data_.find({region, series});
  if (it == data_.end()) {
    throw DataError("no series '" + series + "' for region '" + region + "'");
  }
  return it->second;
}

double TimeSeries::At(const std::string& region, const std::string& series,
                      int hour) const {
  const std::vector<double>& values = Profile(region, series);
  const std::vector<bool>& present = present_.at({region, series});
  if (hour < 0 || hour >= static_cast<int>(values.size()) || !present[hour]) {
    throw DataError("series '" + series + "' for region '" + region +
                    "' has no value at hour " + std::to_string(hour));
  }
  return values[hour];
}

std::vector<TimeSeries::Key> TimeSeries::Keys() const {
  std::vector<Key> keys;
  for (const auto& [key, values] : data_) keys.push_back(key);
  return keys;
}

int TimeSeries::CoveredHours() const {
  if (present_.empty()) return 0;
  int covered = std::numeric_limits<int>::max();
  for (const auto& [key, present] : present_) {
    const auto gap = std::find(present.begin(), present.end(), false);
    covered = std::min(covered, static_cast<int>(gap - present.begin()));
  }
  return covered;
}

TimeSeries TimeSeries::Read(std::istream& in) {
  TimeSeries out;
  std::string raw;
  int line = 0;
  bool first = true;
  while (std::getline(in, raw)) {
    ++line;
    const std::vector<std::string> tokens = text::Split(text::StripComment(raw));
    if (tokens.empty()) continue;
    if (first && tokens[0] == "hour") {
      first = false;
      continue;
    }
    first = false;
    if (tokens.size() != 4) {
      throw ParseError("expected 'hour region series value'", line);
    }
    const int hour = text::ParseInt(tokens[0], line);
    if (hour < 0) throw ParseError("hour must be nonnegative", line);
    out.Set(tokens[1], tokens[2], hour, text::ParseNumber(tokens[3], line));
  }
  return out;
}

void TimeSeries::Write(std::ostream& out) const {
  out << "hour region series value\n";
  for (const auto& [key, values] : data_) {
    const std::vector<bool>& present = present_.at(key);
    for (size_t h = 0; h < values.size(); ++h) {
      if (!present[h]) continue;
      out << h << ' ' << key.first << ' ' << key.second << ' '
          << text::FormatNumber(values[h]) << '\n';
    }
  }
}

double OperationalScenarioSet::Value(const TimeSeries& series, int s,
                                     const std::string& region, const std::string& name,
                                     int t) const {
  return series.At(region, name, scenarios.at(s).source_hours.at(t));
}

OperationalScenarioSet SampleOperationalScenarios(const TimeSeries& series,
                                                  int hours_per_season,
                                                  int scenario_count, uint64_t seed) {
  if (hours_per_season < 1 || scenario_count < 1) {
    throw ValidationError("hours per season and scenario count must be positive");
  }
  if (series.empty()) throw DataError("no time series data");
  OperationalScenarioSet out;
  const int covered = series.CoveredHours();
  const int season_length = covered / out.seasons;
  if (season_length < hours_per_season) {
    throw DataError("time series cover " + std::to_string(covered) +
                    " consecutive hours; four seasons of " +
                    std::to_string(hours_per_season) + " hours need at least " +
                    std::to_string(out.seasons * hours_per_season));
  }
  out.hours_per_season = hours_per_season;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> offset(0, season_length - hours_per_season);
  for (int s = 0; s < scenario_count; ++s) {
    SampledScenario sc;
    for (int season = 0; season < out.seasons; ++season) {
      const int start = season * season_length + offset(rng);
      for (int h = 0; h < hours_per_season; ++h) sc.source_hours.push_back(start + h);
    }
    out.scenarios.push_back(std::move(sc));
  }
  out.weights.assign(scenario_count, 1.0 / scenario_count);
  out.period_hours.assign(out.periods(), 1.0);
  out.scale.assign(out.periods(), kHoursPerYear / out.periods());
  return out;
}

}  // namespace reorient::stoch
