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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdrtool/datetime.hpp"
#include "cdrtool/types.hpp"

namespace cdrtool {

// Input file headers are contractual; column order is fixed.
inline constexpr std::string_view kCdrHeader = "timestamp,device_hash,cell_hash,tac";
inline constexpr std::string_view kCellHeader = "cell_hash,lat,lon";
inline constexpr std::string_view kDeviceHeader =
    "device_hash,age,gender,customer_type,subscription";

// Strips trailing whitespace (space, tab, CR, LF). Interior content is left
// untouched.
std::string_view clean_line(std::string_view raw);

// Drops fractional digits past `places`, truncating toward zero. Assumes the
// value originated from a decimal literal (as CSV coordinates do), so binary
// representation error is orders of magnitude below half an ulp of the last
// kept digit and is snapped away rather than truncated into the wrong bucket.
double truncate_coord(double value, int places = 6);

// Exactly eight decimal digits after cleanup. Throws Error otherwise.
uint32_t parse_tac(std::string_view field);

struct IngestOptions {
  TimeZone zone = TimeZone::utc();
  // Fatal when reported errors exceed this fraction of data rows.
  double max_error_fraction = 0.01;
  // Optional declared dataset range [first, last] in epoch seconds; rows
  // outside it are kept but counted as range warnings.
  std::optional<std::pair<int64_t, int64_t>> expected_range;
  // CDR foreign keys must resolve against already-ingested cells/devices.
  bool strict_foreign_keys = true;
  int threads = 1;
};

struct RowError {
  std::size_t line = 0;
  std::string reason;
};

struct IngestReport {
  std::size_t rows_in = 0;   // non-blank data rows seen
  std::size_t records = 0;   // rows converted
  std::size_t errors = 0;    // rows rejected
  std::size_t range_warnings = 0;
  std::vector<RowError> error_samples;  // first few, for diagnostics

  void add_error(std::size_t line, std::string reason);
};

// Normalized tables produced by ingestion. CDR cell ids refer to `cells`
// until geo::remap_cdr_cells rewrites them to station ids.
struct Tables {
  std::vector<Cell> cells;
  IdDictionary cell_dict;
  std::vector<Device> devices;
  IdDictionary device_dict;
  std::vector<CdrRecord> cdrs;
};

// Each ingest_* validates the header, converts well-formed rows, reports
// malformed ones, and throws DataQualityError when the error budget is
// exceeded (Error when the file itself is unreadable).
IngestReport ingest_cells(const std::string& path, Tables& tables,
                          const IngestOptions& options);
IngestReport ingest_devices(const std::string& path, Tables& tables,
                            const IngestOptions& options);
IngestReport ingest_cdrs(const std::string& path, Tables& tables,
                         const IngestOptions& options);

}  // namespace cdrtool
