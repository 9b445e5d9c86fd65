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
#include <string>
#include <string_view>

namespace cdrtool {

struct CivilDateTime {
  int year = 1970;
  int month = 1;  // 1..12
  int day = 1;    // 1..31
  int hour = 0;
  int minute = 0;
  int second = 0;
};

// Days since 1970-01-01 for a proleptic Gregorian civil date.
int64_t days_from_civil(int year, int month, int day);

// Inverse of days_from_civil.
void civil_from_days(int64_t days, int& year, int& month, int& day);

bool is_leap_year(int year);
int days_in_month(int year, int month);

// Wall-clock time zone. Supports UTC, fixed offsets ("+02:00", "-05:30") and
// "Europe/Budapest" (CET/CEST under the EU daylight-saving rule: DST between
// the last Sundays of March and October, switching at 01:00 UTC).
//
// Local times inside the spring-forward gap resolve with the standard-time
// offset; ambiguous fall-back times resolve to their first occurrence (DST).
class TimeZone {
 public:
  static TimeZone utc();
  static TimeZone fixed(int offset_seconds, std::string name);
  // Accepts "UTC", "Europe/Budapest", or "+HH:MM"/"-HH:MM". Throws ConfigError
  // on anything else.
  static TimeZone named(const std::string& name);

  int64_t to_epoch(const CivilDateTime& local) const;
  CivilDateTime to_civil(int64_t epoch_seconds) const;
  const std::string& name() const { return name_; }

 private:
  enum class Kind { kFixed, kEuCet };
  Kind kind_ = Kind::kFixed;
  int base_offset_s_ = 0;
  std::string name_ = "UTC";
};

// Strict "YYYY-MM-DD HH:MM:SS" parser. Validates calendar ranges (leap days
// included). Returns false with a static reason on malformed input; no
// allocation on either path.
bool try_parse_civil(std::string_view text, CivilDateTime& out, const char** reason);

// Throwing wrapper over try_parse_civil.
CivilDateTime parse_civil(std::string_view text);

// parse_civil + zone conversion to Unix epoch seconds.
int64_t parse_timestamp(std::string_view text, const TimeZone& zone);

// Epoch seconds back to "YYYY-MM-DD HH:MM:SS" wall-clock text in `zone`.
std::string format_timestamp(int64_t epoch_seconds, const TimeZone& zone);

}  // namespace cdrtool
