/*
 * Copyright 2026 The cdrtool Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cdrtool/error.hpp"
#include "cdrtool/util.hpp"

namespace cdrtool {

// One communication event. `cell_id` holds a dense cell id after ingestion
// and a dense station id once the CDR table has been remapped to merged base
// stations.
struct CdrRecord {
  int64_t ts = 0;  // Unix epoch seconds, UTC
  uint32_t device_id = 0;
  uint32_t cell_id = 0;
  uint32_t tac = 0;
};

enum class Gender : uint8_t { kUnknown = 0, kMale = 1, kFemale = 2 };
enum class CustomerType : uint8_t { kUnknown = 0, kIndividual = 1, kBusiness = 2 };
enum class Subscription : uint8_t { kUnknown = 0, kPrepaid = 1, kPostpaid = 2 };

struct Device {
  uint32_t device_id = 0;
  std::optional<int> age;  // years, in [0, 120] when present
  Gender gender = Gender::kUnknown;
  CustomerType customer_type = CustomerType::kUnknown;
  Subscription subscription = Subscription::kUnknown;
};

struct LatLon {
  double lat = 0.0;
  double lon = 0.0;
};

struct Cell {
  uint32_t cell_id = 0;
  double lat = 0.0;  // decimal degrees, truncated to 6 decimals
  double lon = 0.0;
};

// Insertion-ordered bijection between opaque hash strings and dense ids
// 0..N-1.
class IdDictionary {
 public:
  // Returns the existing id or assigns the next unused one. Throws Error on
  // an empty hash.
  uint32_t intern(std::string_view hash) {
    if (hash.empty()) throw Error("empty id hash");
    auto it = index_.find(hash);
    if (it != index_.end()) return it->second;
    const uint32_t id = static_cast<uint32_t>(by_id_.size());
    by_id_.emplace_back(hash);
    index_.emplace(by_id_.back(), id);
    return id;
  }

  // Lookup without insertion.
  std::optional<uint32_t> find(std::string_view hash) const {
    auto it = index_.find(hash);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& hash_of(uint32_t id) const { return by_id_.at(id); }
  std::size_t size() const { return by_id_.size(); }
  bool empty() const { return by_id_.empty(); }
  const std::vector<std::string>& entries() const { return by_id_; }
  void reserve(std::size_t n) {
    by_id_.reserve(n);
    index_.reserve(n);
  }

  bool operator==(const IdDictionary& other) const { return by_id_ == other.by_id_; }

 private:
  std::vector<std::string> by_id_;
  std::unordered_map<std::string, uint32_t, StringHash, std::equal_to<>> index_;
};

// Merged entity of all cells sharing one site.
struct BaseStation {
  uint32_t station_id = 0;
  double lat = 0.0;
  double lon = 0.0;
  std::vector<uint32_t> member_cell_ids;
};

struct BoundingBox {
  double min_lat = 0.0;
  double max_lat = 0.0;
  double min_lon = 0.0;
  double max_lon = 0.0;

  bool valid() const { return min_lat < max_lat && min_lon < max_lon; }
  bool contains(double lat, double lon) const {
    return lat >= min_lat && lat <= max_lat && lon >= min_lon && lon <= max_lon;
  }
};

// Convex ring of geographic vertices; implicitly closed (the last vertex
// connects back to the first).
struct VoronoiCellPolygon {
  uint32_t station_id = 0;
  std::vector<LatLon> ring;
};

struct YearMonth {
  int year = 1970;
  int month = 1;  // 1..12

  bool valid() const { return month >= 1 && month <= 12; }
  bool operator==(const YearMonth&) const = default;
};

struct PhoneProperty {
  uint32_t tac = 0;
  std::string brand;
  std::string model;
  YearMonth release;
  bool release_valid = true;
  double price_eur = 0.0;
};

// Per-CDR sample after the TAC join. Indicators are absent when the TAC is
// unknown (both) or the release date is unusable (age only).
struct SesSample {
  uint32_t device_id = 0;
  uint32_t station_id = 0;
  int64_t ts = 0;
  std::optional<double> price_eur;
  std::optional<int> age_months;
};

// Attendance definition: spatial station set plus show interval, margin and
// the minimum per-station activity.
struct EventSpec {
  std::vector<uint32_t> stations;
  int64_t t_start = 0;  // show start, epoch seconds
  int64_t t_end = 0;    // show end, epoch seconds
  int64_t margin_s = 1800;
  uint64_t min_activity = 500;
};

struct StationAggregate {
  uint32_t station_id = 0;
  uint64_t n_total = 0;     // all samples (attendance weight)
  uint64_t n_with_ses = 0;  // samples carrying both indicators' inputs
  std::optional<double> mean_price_eur;
  std::optional<double> mean_age_months;
  // Customer-age decade buckets 0-9 .. 110-119; index 12 counts unknown.
  static constexpr int kAgeBuckets = 13;
  uint64_t age_histogram[kAgeBuckets] = {0};
  uint64_t n_male = 0;
  uint64_t n_female = 0;
  uint64_t n_gender_unknown = 0;
};

struct TimeSeries {
  int64_t bin_start = 0;
  int64_t bin_width_s = 3600;
  std::vector<uint64_t> counts;

  uint64_t total() const {
    uint64_t t = 0;
    for (uint64_t c : counts) t += c;
    return t;
  }
};

struct CorrelationPoint {
  uint32_t station_id = 0;
  double mean_price_eur = 0.0;
  double mean_age_months = 0.0;
  std::string area;
};

struct CorrelationReport {
  double r = 0.0;
  std::size_t n = 0;         // stations contributing to r
  std::size_t excluded = 0;  // stations lacking SES means
  std::vector<CorrelationPoint> points;
};

}  // namespace cdrtool
