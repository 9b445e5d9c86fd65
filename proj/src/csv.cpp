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

#include "cdrtool/csv.hpp"

#include <cstring>

#include "cdrtool/error.hpp"
#include "cdrtool/ingest.hpp"
#include "cdrtool/util.hpp"

namespace cdrtool {

std::size_t split_fields(std::string_view line, char delim,
                         std::span<std::string_view> out) {
  std::size_t count = 0;
  std::size_t start = 0;
  while (true) {
    const void* hit = std::memchr(line.data() + start, delim, line.size() - start);
    if (hit == nullptr) break;
    const std::size_t end = static_cast<std::size_t>(static_cast<const char*>(hit) - line.data());
    if (count < out.size()) out[count] = line.substr(start, end - start);
    ++count;
    start = end + 1;
  }
  if (count < out.size()) out[count] = line.substr(start);
  ++count;
  return count;
}

CsvReader::CsvReader(const std::string& path) : path_(path) {
  if (!read_file(path, content_)) throw Error("cannot read file: " + path);
  if (content_.empty()) throw Error("empty file: " + path);
  const std::size_t eol = content_.find('\n');
  if (eol == std::string::npos) {
    header_ = content_;
    pos_ = content_.size();
  } else {
    header_ = std::string_view(content_).substr(0, eol);
    pos_ = eol + 1;
  }
}

void CsvReader::expect_header(std::string_view expected) const {
  if (clean_line(header_) != expected) {
    throw Error("unexpected header in " + path_ + ": got '" + std::string(header_) +
                "', want '" + std::string(expected) + "'");
  }
}

bool CsvReader::next_line(std::string_view& line) {
  while (pos_ < content_.size()) {
    const std::size_t start = pos_;
    const void* hit = std::memchr(content_.data() + start, '\n', content_.size() - start);
    std::size_t end;
    if (hit == nullptr) {
      end = content_.size();
      pos_ = end;
    } else {
      end = static_cast<std::size_t>(static_cast<const char*>(hit) - content_.data());
      pos_ = end + 1;
    }
    ++line_number_;
    line = std::string_view(content_).substr(start, end - start);
    if (line.empty() && pos_ >= content_.size()) return false;  // trailing newline
    return true;
  }
  return false;
}

std::string_view CsvReader::body() const {
  return std::string_view(content_).substr(pos_ == 0 ? 0 : pos_);
}

void CsvWriter::row(std::span<const std::string_view> fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) buf_.push_back(',');
    buf_.append(fields[i]);
  }
  buf_.push_back('\n');
}

void CsvWriter::raw_line(std::string_view line) {
  buf_.append(line);
  buf_.push_back('\n');
}

}  // namespace cdrtool
