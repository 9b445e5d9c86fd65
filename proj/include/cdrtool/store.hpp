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
#include <span>
#include <string>
#include <vector>

#include "cdrtool/ingest.hpp"
#include "cdrtool/types.hpp"

namespace cdrtool {

// Single-file columnar store for the normalized tables. The CDR table is kept
// sorted by timestamp; equality/range access on device, cell and TAC goes
// through permutation indices ordered by (key, row), so every lookup is a
// binary search plus a contiguous run scan rather than a full-table pass.
//
// On-disk format (little-endian, documented in the README): an 8-byte magic,
// version and endian marker, then tagged sections per table. Indices are not
// persisted; they are rebuilt on load. Writes go through a temporary file
// and a rename, so readers never observe partially-written state.
class Store {
 public:
  // Counts the work a query did: rows_touched is rows materialized or
  // examined, probes is comparator invocations inside binary searches.
  struct ScanCounters {
    uint64_t rows_touched = 0;
    uint64_t probes = 0;
  };

  std::vector<CdrRecord> cdr;
  std::vector<Cell> cells;
  IdDictionary cell_dict;
  std::vector<Device> devices;
  IdDictionary device_dict;
  std::vector<BaseStation> stations;
  std::vector<uint32_t> cell_to_station;  // empty until cells are merged
  bool cdr_uses_station_ids = false;
  std::vector<PhoneProperty> properties;  // sorted by tac

  static Store from_tables(Tables&& tables);

  // Sorts the CDR table by timestamp (stable) and rebuilds all indices.
  // Must be called after any direct mutation of `cdr`.
  void finalize();
  bool finalized() const { return finalized_; }

  void save(const std::string& path) const;
  static Store load(const std::string& path);

  // Records with t0 <= ts < t1 and cell/station id in `ids`, in nondecreasing
  // ts order. Throws ConfigError when t0 >= t1.
  std::vector<CdrRecord> query_window(int64_t t0, int64_t t1,
                                      std::span<const uint32_t> ids,
                                      ScanCounters* counters = nullptr) const;

  // Same window predicate over all cells/stations.
  std::vector<CdrRecord> query_window_all(int64_t t0, int64_t t1,
                                          ScanCounters* counters = nullptr) const;

  std::vector<CdrRecord> query_by_device(uint32_t device_id,
                                         ScanCounters* counters = nullptr) const;
  std::vector<CdrRecord> query_by_tac(uint32_t tac,
                                      ScanCounters* counters = nullptr) const;

  // Binary search over the sorted property table; nullptr when absent.
  const PhoneProperty* find_property(uint32_t tac) const;

  // Replaces the phone property table (sorted by tac, unique).
  void set_properties(std::vector<PhoneProperty> props);

 private:
  void require_finalized() const;
  std::vector<CdrRecord> gather_run(std::span<const uint32_t> index, uint32_t key,
                                    auto key_of, ScanCounters* counters) const;

  bool finalized_ = false;
  std::vector<uint32_t> idx_device_;
  std::vector<uint32_t> idx_cell_;
  std::vector<uint32_t> idx_tac_;
};

}  // namespace cdrtool
