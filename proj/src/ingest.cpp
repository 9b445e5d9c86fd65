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

#include "cdrtool/ingest.hpp"

#include <charconv>
#include <cmath>
#include <cstring>

#include "cdrtool/csv.hpp"

namespace cdrtool {

namespace {

constexpr std::size_t kMaxErrorSamples = 20;

std::string_view trim_field(std::string_view f) {
  while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.remove_prefix(1);
  while (!f.empty() && (f.back() == ' ' || f.back() == '\t')) f.remove_suffix(1);
  return f;
}

bool parse_double_field(std::string_view f, double& out) {
  f = trim_field(f);
  if (f.empty()) return false;
  const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), out);
  return ec == std::errc() && ptr == f.data() + f.size() && std::isfinite(out);
}

bool parse_uint_field(std::string_view f, uint32_t& out) {
  f = trim_field(f);
  if (f.empty()) return false;
  const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), out);
  return ec == std::errc() && ptr == f.data() + f.size();
}

void check_error_budget(const IngestReport& report, const IngestOptions& options,
                        const std::string& path) {
  if (report.rows_in == 0) return;
  const double fraction =
      static_cast<double>(report.errors) / static_cast<double>(report.rows_in);
  if (fraction > options.max_error_fraction) {
    throw DataQualityError("too many malformed rows in " + path + ": " +
                           std::to_string(report.errors) + "/" +
                           std::to_string(report.rows_in));
  }
}

CsvReader open_csv(const std::string& path) {
  try {
    return CsvReader(path);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

// Pre-parsed CDR row from the parallel phase. Hash fields stay views into the
// reader's buffer; interning happens in a second, strictly file-ordered pass.
struct PreRow {
  std::string_view device_hash;
  std::string_view cell_hash;
  int64_t ts = 0;
  uint32_t tac = 0;
  uint32_t line_in_chunk = 0;  // 0-based data line offset within the chunk
  const char* error = nullptr;
};

struct Chunk {
  std::string_view text;
  std::vector<PreRow> rows;
  std::size_t lines = 0;  // physical lines in the chunk, blank ones included
};

std::vector<Chunk> split_chunks(std::string_view body, int threads) {
  std::vector<Chunk> chunks;
  const std::size_t want =
      threads <= 1 ? 1 : std::min<std::size_t>(static_cast<std::size_t>(threads),
                                               std::max<std::size_t>(body.size() / 4096, 1));
  std::size_t begin = 0;
  for (std::size_t i = 0; i < want && begin < body.size(); ++i) {
    std::size_t end;
    if (i + 1 == want) {
      end = body.size();
    } else {
      end = begin + (body.size() - begin) / (want - i);
      const void* nl = std::memchr(body.data() + end, '\n', body.size() - end);
      end = nl == nullptr
                ? body.size()
                : static_cast<std::size_t>(static_cast<const char*>(nl) - body.data()) + 1;
    }
    chunks.push_back(Chunk{body.substr(begin, end - begin), {}, 0});
    begin = end;
  }
  return chunks;
}

void parse_cdr_chunk(Chunk& chunk, const TimeZone& zone) {
  std::string_view rest = chunk.text;
  uint32_t line_index = 0;
  chunk.rows.reserve(rest.size() / 40 + 1);
  while (!rest.empty()) {
    std::string_view line;
    const void* nl = std::memchr(rest.data(), '\n', rest.size());
    if (nl == nullptr) {
      line = rest;
      rest = {};
    } else {
      const std::size_t n = static_cast<std::size_t>(static_cast<const char*>(nl) - rest.data());
      line = rest.substr(0, n);
      rest.remove_prefix(n + 1);
    }
    const uint32_t this_line = line_index++;
    ++chunk.lines;
    line = clean_line(line);
    if (line.empty()) continue;  // blank lines are not rows

    PreRow row;
    row.line_in_chunk = this_line;
    std::string_view fields[4];
    const std::size_t nfields = split_fields(line, ',', fields);
    if (nfields != 4) {
      row.error = "expected 4 fields";
      chunk.rows.push_back(row);
      continue;
    }
    CivilDateTime civil;
    const char* reason = nullptr;
    if (!try_parse_civil(trim_field(fields[0]), civil, &reason)) {
      row.error = reason;
      chunk.rows.push_back(row);
      continue;
    }
    row.ts = zone.to_epoch(civil);
    row.device_hash = fields[1];
    row.cell_hash = fields[2];
    if (row.device_hash.empty()) {
      row.error = "empty device hash";
      chunk.rows.push_back(row);
      continue;
    }
    if (row.cell_hash.empty()) {
      row.error = "empty cell hash";
      chunk.rows.push_back(row);
      continue;
    }
    const std::string_view tac = trim_field(fields[3]);
    bool tac_ok = tac.size() == 8;
    uint32_t tac_value = 0;
    if (tac_ok) {
      for (char c : tac) {
        if (c < '0' || c > '9') {
          tac_ok = false;
          break;
        }
        tac_value = tac_value * 10 + static_cast<uint32_t>(c - '0');
      }
    }
    if (!tac_ok) {
      row.error = "tac is not an 8-digit number";
      chunk.rows.push_back(row);
      continue;
    }
    row.tac = tac_value;
    chunk.rows.push_back(row);
  }
}

}  // namespace

void IngestReport::add_error(std::size_t line, std::string reason) {
  ++errors;
  if (error_samples.size() < kMaxErrorSamples) {
    error_samples.push_back(RowError{line, std::move(reason)});
  }
}

std::string_view clean_line(std::string_view raw) {
  while (!raw.empty()) {
    const char c = raw.back();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      raw.remove_suffix(1);
    } else {
      break;
    }
  }
  return raw;
}

double truncate_coord(double value, int places) {
  if (places < 0) throw Error("truncate_coord: places must be >= 0");
  if (!std::isfinite(value)) throw Error("truncate_coord: non-numeric input");
  const double scale = std::pow(10.0, places);
  const double scaled = value * scale;
  const double nearest = std::round(scaled);
  // Decimal inputs land within ~1e-8 of their exact scaled value; anything
  // that close to an integer is that integer, not a digit to drop.
  const double kept = std::abs(scaled - nearest) <= 1e-6 ? nearest : std::trunc(scaled);
  const double result = kept / scale;
  return result == 0.0 ? 0.0 : result;
}

uint32_t parse_tac(std::string_view field) {
  field = trim_field(field);
  if (field.size() != 8) throw Error("tac must have exactly 8 digits");
  uint32_t value = 0;
  for (char c : field) {
    if (c < '0' || c > '9') throw Error("tac must be numeric");
    value = value * 10 + static_cast<uint32_t>(c - '0');
  }
  return value;
}

IngestReport ingest_cells(const std::string& path, Tables& tables,
                          const IngestOptions& options) {
  CsvReader reader = open_csv(path);
  reader.expect_header(kCellHeader);
  IngestReport report;
  std::string_view line;
  while (reader.next_line(line)) {
    line = clean_line(line);
    if (line.empty()) continue;
    ++report.rows_in;
    const std::size_t lineno = reader.line_number() + 1;  // header occupies line 1

    std::string_view fields[3];
    if (split_fields(line, ',', fields) != 3) {
      report.add_error(lineno, "expected 3 fields");
      continue;
    }
    const std::string_view hash = fields[0];
    if (hash.empty()) {
      report.add_error(lineno, "empty cell hash");
      continue;
    }
    double lat = 0.0, lon = 0.0;
    if (!parse_double_field(fields[1], lat) || !parse_double_field(fields[2], lon)) {
      report.add_error(lineno, "unparseable coordinate");
      continue;
    }
    lat = truncate_coord(lat);
    lon = truncate_coord(lon);
    if (lat < -90.0 || lat > 90.0 || lon < -180.0 || lon > 180.0) {
      report.add_error(lineno, "coordinate out of range");
      continue;
    }
    if (tables.cell_dict.find(hash).has_value()) {
      report.add_error(lineno, "duplicate cell hash");
      continue;
    }
    const uint32_t id = tables.cell_dict.intern(hash);
    tables.cells.push_back(Cell{id, lat, lon});
    ++report.records;
  }
  check_error_budget(report, options, path);
  return report;
}

IngestReport ingest_devices(const std::string& path, Tables& tables,
                            const IngestOptions& options) {
  CsvReader reader = open_csv(path);
  reader.expect_header(kDeviceHeader);
  IngestReport report;
  std::string_view line;
  while (reader.next_line(line)) {
    line = clean_line(line);
    if (line.empty()) continue;
    ++report.rows_in;
    const std::size_t lineno = reader.line_number() + 1;

    std::string_view fields[5];
    if (split_fields(line, ',', fields) != 5) {
      report.add_error(lineno, "expected 5 fields");
      continue;
    }
    const std::string_view hash = fields[0];
    if (hash.empty()) {
      report.add_error(lineno, "empty device hash");
      continue;
    }

    Device device;
    const std::string_view age = trim_field(fields[1]);
    if (!age.empty()) {
      uint32_t years = 0;
      if (!parse_uint_field(age, years) || years > 120) {
        report.add_error(lineno, "age out of range");
        continue;
      }
      device.age = static_cast<int>(years);
    }
    const std::string_view gender = trim_field(fields[2]);
    if (gender == "male") {
      device.gender = Gender::kMale;
    } else if (gender == "female") {
      device.gender = Gender::kFemale;
    } else if (!gender.empty()) {
      report.add_error(lineno, "unknown gender value");
      continue;
    }
    const std::string_view ctype = trim_field(fields[3]);
    if (ctype == "individual") {
      device.customer_type = CustomerType::kIndividual;
    } else if (ctype == "business") {
      device.customer_type = CustomerType::kBusiness;
    } else if (!ctype.empty()) {
      report.add_error(lineno, "unknown customer type");
      continue;
    }
    const std::string_view sub = trim_field(fields[4]);
    if (sub == "prepaid") {
      device.subscription = Subscription::kPrepaid;
    } else if (sub == "postpaid") {
      device.subscription = Subscription::kPostpaid;
    } else if (!sub.empty()) {
      report.add_error(lineno, "unknown subscription type");
      continue;
    }
    if (tables.device_dict.find(hash).has_value()) {
      report.add_error(lineno, "duplicate device hash");
      continue;
    }
    device.device_id = tables.device_dict.intern(hash);
    tables.devices.push_back(device);
    ++report.records;
  }
  check_error_budget(report, options, path);
  return report;
}

IngestReport ingest_cdrs(const std::string& path, Tables& tables,
                         const IngestOptions& options) {
  CsvReader reader = open_csv(path);
  reader.expect_header(kCdrHeader);
  IngestReport report;

  std::vector<Chunk> chunks = split_chunks(reader.body(), options.threads);
  parallel_chunks(chunks.size(), options.threads,
                  [&](std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                      parse_cdr_chunk(chunks[i], options.zone);
                    }
                  });

  // Interning and foreign-key resolution run in file order regardless of how
  // the parse phase was partitioned.
  std::size_t estimated = 0;
  for (const Chunk& c : chunks) estimated += c.rows.size();
  tables.cdrs.reserve(tables.cdrs.size() + estimated);

  std::size_t chunk_first_line = 2;  // line 1 is the header
  for (const Chunk& chunk : chunks) {
    for (const PreRow& row : chunk.rows) {
      ++report.rows_in;
      const std::size_t lineno = chunk_first_line + row.line_in_chunk;
      if (row.error != nullptr) {
        report.add_error(lineno, row.error);
        continue;
      }
      uint32_t device_id, cell_id;
      if (options.strict_foreign_keys) {
        const auto dev = tables.device_dict.find(row.device_hash);
        if (!dev.has_value()) {
          report.add_error(lineno, "unknown device hash");
          continue;
        }
        const auto cell = tables.cell_dict.find(row.cell_hash);
        if (!cell.has_value()) {
          report.add_error(lineno, "unknown cell hash");
          continue;
        }
        device_id = *dev;
        cell_id = *cell;
      } else {
        device_id = tables.device_dict.intern(row.device_hash);
        cell_id = tables.cell_dict.intern(row.cell_hash);
      }
      if (options.expected_range.has_value() &&
          (row.ts < options.expected_range->first ||
           row.ts > options.expected_range->second)) {
        ++report.range_warnings;  // row kept
      }
      tables.cdrs.push_back(CdrRecord{row.ts, device_id, cell_id, row.tac});
      ++report.records;
    }
    chunk_first_line += chunk.lines;
  }
  check_error_budget(report, options, path);
  return report;
}

}  // namespace cdrtool
