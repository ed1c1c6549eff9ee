#include "fleetic/timestamp.hpp"

#include <cstdio>

#include "fleetic/error.hpp"

namespace fleetic {

namespace {

// Proleptic Gregorian conversions (H. Hinnant's civil-from-days algorithms).
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const auto yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m > 2 ? m - 3 : m + 9) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const auto doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp < 10 ? mp + 3 : mp - 9);
  y = static_cast<int>(static_cast<std::int64_t>(yoe) + era * 400 + (m <= 2));
}

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
  static constexpr int days[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return m == 2 && is_leap(y) ? 29 : days[m - 1];
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  int digits(std::size_t n) {
    int value = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9') fail();
      value = value * 10 + (text_[pos_++] - '0');
    }
    return value;
  }
  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail();
    ++pos_;
  }
  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool done() const { return pos_ == text_.size(); }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  [[noreturn]] void fail() const {
    throw ValidationError("unparseable timestamp '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::int64_t Timestamp::day_number() const {
  return days_from_civil(year, static_cast<unsigned>(month), static_cast<unsigned>(day));
}

int weekday_of_day(std::int64_t day_number) {
  // 1970-01-01 was a Thursday (3 with Monday = 0).
  const std::int64_t w = (day_number + 3) % 7;
  return static_cast<int>(w < 0 ? w + 7 : w);
}

int Timestamp::weekday() const { return weekday_of_day(day_number()); }

Timestamp parse_timestamp(std::string_view text) {
  Cursor c(text);
  Timestamp ts;
  ts.year = c.digits(4);
  c.expect('-');
  ts.month = c.digits(2);
  c.expect('-');
  ts.day = c.digits(2);
  if (!c.accept('T') && !c.accept('t') && !c.accept(' ')) c.fail();
  ts.hour = c.digits(2);
  c.expect(':');
  ts.minute = c.digits(2);
  if (c.accept(':')) {
    ts.second = c.digits(2);
    if (c.accept('.')) {
      c.digits(1);
      while (c.peek() >= '0' && c.peek() <= '9') c.digits(1);
    }
  }
  if (c.accept('Z') || c.accept('z')) {
    ts.utc_offset_min.reset();
  } else if (c.peek() == '+' || c.peek() == '-') {
    const int sign = c.peek() == '-' ? -1 : 1;
    c.accept(c.peek());
    const int hh = c.digits(2);
    c.expect(':');
    const int mm = c.digits(2);
    ts.utc_offset_min = sign * (hh * 60 + mm);
  }
  if (!c.done()) c.fail();
  if (ts.month < 1 || ts.month > 12 || ts.day < 1 || ts.day > days_in_month(ts.year, ts.month) ||
      ts.hour > 23 || ts.minute > 59 || ts.second > 60) {
    c.fail();
  }
  if (ts.second == 60) ts.second = 59;  // leap second
  return ts;
}

std::string format_timestamp(const Timestamp& ts) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d", ts.year, ts.month, ts.day,
                ts.hour, ts.minute, ts.second);
  std::string out = buf;
  if (!ts.utc_offset_min) {
    out += 'Z';
  } else {
    const int off = *ts.utc_offset_min;
    const int a = off < 0 ? -off : off;
    std::snprintf(buf, sizeof(buf), "%c%02d:%02d", off < 0 ? '-' : '+', a / 60, a % 60);
    out += buf;
  }
  return out;
}

Timestamp timestamp_from_day(std::int64_t day_number) {
  Timestamp ts;
  civil_from_days(day_number, ts.year, ts.month, ts.day);
  return ts;
}

}  // namespace fleetic
