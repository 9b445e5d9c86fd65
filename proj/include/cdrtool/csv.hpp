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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cdrtool {

// Splits `line` on `delim` into `out`. Returns the number of fields, which
// may exceed out.size(); only the first out.size() are stored. No quoting:
// the input contract is plain comma-separated text.
std::size_t split_fields(std::string_view line, char delim,
                         std::span<std::string_view> out);

// Whole-file CSV line reader. The file content is held in memory; lines are
// returned as views excluding the terminator. A header line is read eagerly
// and validated lazily via expect_header().
class CsvReader {
 public:
  // Throws Error if the file cannot be read or is empty.
  explicit CsvReader(const std::string& path);

  // Throws Error unless the header equals `expected` byte-for-byte after
  // trailing-whitespace cleanup.
  void expect_header(std::string_view expected) const;

  // Returns false at end of input. Lines keep trailing whitespace; callers
  // clean them (the cleanup itself is an ingest operation under test).
  bool next_line(std::string_view& line);

  // 1-based line number of the line most recently returned.
  std::size_t line_number() const { return line_number_; }

  std::string_view header() const { return header_; }

  // Data region after the header; used for chunked parallel parsing.
  std::string_view body() const;

 private:
  std::string path_;
  std::string content_;
  std::string_view header_;
  std::size_t pos_ = 0;
  std::size_t line_number_ = 0;
};

// Minimal row writer used by generators and report emitters.
class CsvWriter {
 public:
  void row(std::span<const std::string_view> fields);
  void raw_line(std::string_view line);
  const std::string& str() const { return buf_; }
  std::string take() { return std::move(buf_); }

 private:
  std::string buf_;
};

}  // namespace cdrtool
