#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fleetic {

/// Wall-clock timestamp as written in an RFC 3339 string. Weekday and time
/// band are taken from the local fields; the offset is kept for output.
struct Timestamp {
  int year = 1970;
  int month = 1;
  int day = 1;
  int hour = 0;
  int minute = 0;
  int second = 0;
  std::optional<int> utc_offset_min;  // nullopt for Z or no offset

  /// Days since 1970-01-01 of the local date.
  std::int64_t day_number() const;
  /// 0 = Monday ... 6 = Sunday.
  int weekday() const;
  int seconds_of_day() const { return hour * 3600 + minute * 60 + second; }

  auto operator<=>(const Timestamp&) const = default;
};

/// Accepts YYYY-MM-DD[T ]HH:MM[:SS[.frac]][Z|+HH:MM|-HH:MM]. Fractional
/// seconds are truncated. Throws ValidationError on malformed input.
Timestamp parse_timestamp(std::string_view text);

/// YYYY-MM-DDTHH:MM:SS followed by Z or the stored offset.
std::string format_timestamp(const Timestamp& ts);

/// Local date for a day number, midnight.
Timestamp timestamp_from_day(std::int64_t day_number);

int weekday_of_day(std::int64_t day_number);

}  // namespace fleetic
