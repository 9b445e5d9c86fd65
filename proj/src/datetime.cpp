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

#include "cdrtool/datetime.hpp"

#include <cstdio>

#include "cdrtool/error.hpp"

namespace cdrtool {

namespace {

constexpr int64_t kSecondsPerDay = 86400;

int64_t civil_to_epoch_utc(const CivilDateTime& c) {
  const int64_t days = days_from_civil(c.year, c.month, c.day);
  return ((days * 24 + c.hour) * 60 + c.minute) * 60 + c.second;
}

CivilDateTime epoch_utc_to_civil(int64_t epoch) {
  int64_t days = epoch / kSecondsPerDay;
  int64_t rem = epoch % kSecondsPerDay;
  if (rem < 0) {
    rem += kSecondsPerDay;
    --days;
  }
  CivilDateTime c;
  civil_from_days(days, c.year, c.month, c.day);
  c.hour = static_cast<int>(rem / 3600);
  c.minute = static_cast<int>((rem / 60) % 60);
  c.second = static_cast<int>(rem % 60);
  return c;
}

// 0 = Sunday .. 6 = Saturday.
int weekday_from_days(int64_t days) {
  return static_cast<int>(((days % 7) + 11) % 7);  // 1970-01-01 was a Thursday
}

int last_sunday_of_month(int year, int month) {
  const int last = days_in_month(year, month);
  const int w = weekday_from_days(days_from_civil(year, month, last));
  return last - w;
}

// EU rule: DST runs from 01:00 UTC on the last Sunday of March until
// 01:00 UTC on the last Sunday of October.
void eu_dst_bounds_utc(int year, int64_t& start, int64_t& end) {
  start = days_from_civil(year, 3, last_sunday_of_month(year, 3)) * kSecondsPerDay + 3600;
  end = days_from_civil(year, 10, last_sunday_of_month(year, 10)) * kSecondsPerDay + 3600;
}

bool parse_int_field(std::string_view s, std::size_t pos, std::size_t len, int& out) {
  int v = 0;
  for (std::size_t i = pos; i < pos + len; ++i) {
    const char c = s[i];
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

}  // namespace

bool is_leap_year(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
  static const int kDays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2 && is_leap_year(year)) return 29;
  return kDays[month - 1];
}

int64_t days_from_civil(int year, int month, int day) {
  // Howard Hinnant's algorithm, shifted so the era starts on March 1.
  const int y = year - (month <= 2 ? 1 : 0);
  const int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (month + (month > 2 ? -3 : 9)) + 2) / 5 + day - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

void civil_from_days(int64_t days, int& year, int& month, int& day) {
  const int64_t z = days + 719468;
  const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const int64_t y = static_cast<int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  day = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  month = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  year = static_cast<int>(y + (month <= 2 ? 1 : 0));
}

TimeZone TimeZone::utc() { return TimeZone{}; }

TimeZone TimeZone::fixed(int offset_seconds, std::string name) {
  TimeZone z;
  z.kind_ = Kind::kFixed;
  z.base_offset_s_ = offset_seconds;
  z.name_ = std::move(name);
  return z;
}

TimeZone TimeZone::named(const std::string& name) {
  if (name == "UTC" || name == "utc") return utc();
  if (name == "Europe/Budapest") {
    TimeZone z;
    z.kind_ = Kind::kEuCet;
    z.base_offset_s_ = 3600;
    z.name_ = name;
    return z;
  }
  if (name.size() == 6 && (name[0] == '+' || name[0] == '-') && name[3] == ':') {
    int h = 0;
    int m = 0;
    if (parse_int_field(name, 1, 2, h) && parse_int_field(name, 4, 2, m) && h <= 14 &&
        m <= 59) {
      const int sign = name[0] == '+' ? 1 : -1;
      return fixed(sign * (h * 3600 + m * 60), name);
    }
  }
  throw ConfigError("unknown time zone: " + name +
                    " (expected UTC, Europe/Budapest, or +HH:MM)");
}

int64_t TimeZone::to_epoch(const CivilDateTime& local) const {
  const int64_t as_utc = civil_to_epoch_utc(local);
  if (kind_ == Kind::kFixed) return as_utc - base_offset_s_;

  int64_t dst_start, dst_end;
  eu_dst_bounds_utc(local.year, dst_start, dst_end);
  const int64_t epoch_std = as_utc - base_offset_s_;
  const int64_t epoch_dst = as_utc - (base_offset_s_ + 3600);
  const bool dst_valid = epoch_dst >= dst_start && epoch_dst < dst_end;
  const bool std_valid = epoch_std < dst_start || epoch_std >= dst_end;
  if (dst_valid) return epoch_dst;  // ambiguous hour -> first occurrence
  if (std_valid) return epoch_std;
  return epoch_std;  // nonexistent gap time -> standard offset
}

CivilDateTime TimeZone::to_civil(int64_t epoch_seconds) const {
  int offset = base_offset_s_;
  if (kind_ == Kind::kEuCet) {
    const CivilDateTime probe = epoch_utc_to_civil(epoch_seconds);
    int64_t dst_start, dst_end;
    eu_dst_bounds_utc(probe.year, dst_start, dst_end);
    if (epoch_seconds >= dst_start && epoch_seconds < dst_end) offset += 3600;
  }
  return epoch_utc_to_civil(epoch_seconds + offset);
}

bool try_parse_civil(std::string_view text, CivilDateTime& out, const char** reason) {
  // YYYY-MM-DD HH:MM:SS
  if (text.size() != 19 || text[4] != '-' || text[7] != '-' || text[10] != ' ' ||
      text[13] != ':' || text[16] != ':') {
    *reason = "bad timestamp format";
    return false;
  }
  CivilDateTime c;
  if (!parse_int_field(text, 0, 4, c.year) || !parse_int_field(text, 5, 2, c.month) ||
      !parse_int_field(text, 8, 2, c.day) || !parse_int_field(text, 11, 2, c.hour) ||
      !parse_int_field(text, 14, 2, c.minute) || !parse_int_field(text, 17, 2, c.second)) {
    *reason = "non-numeric timestamp field";
    return false;
  }
  if (c.month < 1 || c.month > 12) {
    *reason = "month out of range";
    return false;
  }
  if (c.day < 1 || c.day > days_in_month(c.year, c.month)) {
    *reason = "day out of range";
    return false;
  }
  if (c.hour > 23 || c.minute > 59 || c.second > 59) {
    *reason = "time of day out of range";
    return false;
  }
  out = c;
  return true;
}

CivilDateTime parse_civil(std::string_view text) {
  CivilDateTime c;
  const char* reason = nullptr;
  if (!try_parse_civil(text, c, &reason)) {
    throw Error(std::string(reason) + ": '" + std::string(text) + "'");
  }
  return c;
}

int64_t parse_timestamp(std::string_view text, const TimeZone& zone) {
  return zone.to_epoch(parse_civil(text));
}

std::string format_timestamp(int64_t epoch_seconds, const TimeZone& zone) {
  const CivilDateTime c = zone.to_civil(epoch_seconds);
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d %02d:%02d:%02d", c.year, c.month, c.day,
                c.hour, c.minute, c.second);
  return std::string(buf);
}

}  // namespace cdrtool
