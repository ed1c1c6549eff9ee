#include "fleetic/demand.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include "fleetic/csv.hpp"
#include "fleetic/error.hpp"
#include "random.hpp"

namespace fleetic {

double RateTable::rate(const RateKey& key) const {
  auto it = rates.find(key);
  return it == rates.end() ? 0.0 : it->second;
}

namespace {

void check_band_count(int band_count) {
  if (band_count < 1 || 24 % band_count != 0) {
    throw ValidationError("band count " + std::to_string(band_count) + " does not divide 24");
  }
}

}  // namespace

RateTable fit_rates(const std::vector<OccurrenceRecord>& occurrences, const FitOptions& options) {
  check_band_count(options.band_count);
  if (occurrences.empty()) throw ValidationError("cannot fit rates from an empty log");

  RateTable table;
  table.band_count = options.band_count;
  const int band_seconds = table.band_seconds();

  std::int64_t first = occurrences.front().timestamp.day_number();
  std::int64_t last = first;
  std::map<RateKey, std::int64_t> counts;
  std::map<std::string, std::pair<double, std::int64_t>> durations;
  for (const auto& r : occurrences) {
    const std::int64_t day = r.timestamp.day_number();
    first = std::min(first, day);
    last = std::max(last, day);
    const int band = std::min(r.timestamp.seconds_of_day() / band_seconds, table.band_count - 1);
    ++counts[RateKey{r.timestamp.weekday(), band, r.team_type_id, r.neighborhood_id}];
    if (r.service_minutes) {
      if (!(*r.service_minutes > 0.0)) {
        throw ValidationError("record '" + r.id + "' has a non-positive service duration");
      }
      auto& [sum, n] = durations[r.team_type_id];
      sum += *r.service_minutes;
      ++n;
    }
  }
  for (std::int64_t day = first; day <= last; ++day) ++table.observed_days[weekday_of_day(day)];

  for (const auto& [type, fraction] : options.sampling_fraction) {
    if (!(fraction > 0.0 && fraction <= 1.0)) {
      throw ValidationError("sampling fraction for '" + type + "' must lie in (0, 1]");
    }
  }
  for (const auto& [key, count] : counts) {
    double rate = static_cast<double>(count) / table.observed_days[key.weekday];
    if (auto it = options.sampling_fraction.find(key.team_type);
        it != options.sampling_fraction.end()) {
      rate /= it->second;
    }
    table.rates.emplace(key, rate);
  }
  for (const auto& [type, acc] : durations) {
    table.service_mean_minutes[type] = acc.first / static_cast<double>(acc.second);
  }
  return table;
}

GeneratedCalls generate_calls(const RateTable& rates, const GenerateOptions& options) {
  check_band_count(rates.band_count);
  if (options.days < 1) throw ValidationError("days must be at least 1");
  for (const auto& [key, rate] : rates.rates) {
    if (!(rate >= 0.0) || !std::isfinite(rate)) throw ValidationError("rates must be non-negative");
    if (key.weekday < 0 || key.weekday > 6 || key.band < 0 || key.band >= rates.band_count) {
      throw ValidationError("rate key outside the weekday/band grid");
    }
  }

  detail::Random rng(options.seed);
  GeneratedCalls out;
  const int band_seconds = rates.band_seconds();

  auto service_mean = [&](const std::string& type) -> std::optional<double> {
    if (auto it = options.service_mean_minutes.find(type);
        it != options.service_mean_minutes.end()) {
      return it->second;
    }
    if (auto it = rates.service_mean_minutes.find(type); it != rates.service_mean_minutes.end()) {
      return it->second;
    }
    return std::nullopt;
  };

  std::vector<std::pair<int, OccurrenceRecord>> day_records;
  std::uint64_t serial = 0;
  for (int d = 0; d < options.days; ++d) {
    const std::int64_t day = options.start_day + d;
    const int weekday = weekday_of_day(day);
    const Timestamp midnight = timestamp_from_day(day);
    day_records.clear();

    auto it = rates.rates.lower_bound(RateKey{weekday, 0, {}, {}});
    for (; it != rates.rates.end() && it->first.weekday == weekday; ++it) {
      const auto& key = it->first;
      const std::int64_t n = rng.poisson(it->second);
      for (std::int64_t k = 0; k < n; ++k) {
        const int second_of_day =
            key.band * band_seconds + static_cast<int>(rng.below(static_cast<std::uint64_t>(band_seconds)));
        OccurrenceRecord rec;
        rec.neighborhood_id = key.neighborhood;
        rec.team_type_id = key.team_type;
        rec.timestamp = midnight;
        rec.timestamp.hour = second_of_day / 3600;
        rec.timestamp.minute = second_of_day / 60 % 60;
        rec.timestamp.second = second_of_day % 60;
        if (auto mean = service_mean(key.team_type)) {
          // Centiminute resolution keeps CSV round trips exact.
          rec.service_minutes = std::max(0.01, std::round(rng.exponential(*mean) * 100.0) / 100.0);
        }
        day_records.emplace_back(second_of_day, std::move(rec));
      }
    }
    std::stable_sort(day_records.begin(), day_records.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [sec, rec] : day_records) {
      char id[32];
      std::snprintf(id, sizeof(id), "call-%07llu", static_cast<unsigned long long>(++serial));
      rec.id = id;
      ++out.demand[rec.neighborhood_id][rec.team_type_id];
      out.records.push_back(std::move(rec));
    }
  }
  return out;
}

double mean_service_hours(const std::vector<OccurrenceRecord>& occurrences) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& r : occurrences) {
    if (!r.service_minutes) continue;
    sum += *r.service_minutes;
    ++n;
  }
  if (n == 0) throw ValidationError("no record carries a service duration");
  return sum / static_cast<double>(n) / 60.0;
}

std::vector<BusyFractionRow> busy_fraction_report(const std::vector<OccurrenceRecord>& occurrences,
                                                  const std::map<std::string, int>& fleet) {
  if (occurrences.empty()) throw ValidationError("cannot compute busy fractions from an empty log");
  std::int64_t first = occurrences.front().timestamp.day_number();
  std::int64_t last = first;
  for (const auto& r : occurrences) {
    first = std::min(first, r.timestamp.day_number());
    last = std::max(last, r.timestamp.day_number());
  }

  struct Group {
    std::vector<OccurrenceRecord> records;
  };
  std::map<std::pair<std::string, std::string>, Group> groups;
  std::map<std::string, std::int64_t> days_in_period;
  auto period_of = [](const Timestamp& ts) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", ts.year, ts.month);
    return std::string(buf);
  };
  for (std::int64_t day = first; day <= last; ++day) ++days_in_period[period_of(timestamp_from_day(day))];
  for (const auto& r : occurrences) {
    groups[{period_of(r.timestamp), r.team_type_id}].records.push_back(r);
  }

  std::vector<BusyFractionRow> rows;
  for (const auto& [key, group] : groups) {
    auto f = fleet.find(key.second);
    if (f == fleet.end()) {
      throw ValidationError("no fleet size given for team type '" + key.second + "'");
    }
    BusyFractionRow row;
    row.period = key.first;
    row.team_type = key.second;
    row.mean_service_hours = mean_service_hours(group.records);
    row.daily_calls =
        static_cast<double>(group.records.size()) / static_cast<double>(days_in_period[key.first]);
    row.fleet = f->second;
    row.q = busy_fraction({row.mean_service_hours, row.daily_calls, row.fleet});
    for (double theta : kReportThetas) {
      row.b[theta] = row.q > 0.0 && row.q < 1.0 ? std::optional<int>(min_teams(row.q, theta))
                                                : std::nullopt;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<OccurrenceRecord> read_occurrences_csv(const std::filesystem::path& path) {
  const csv::Table table = csv::read_file(path);
  const auto c_id = table.require_column("id");
  const auto c_nb = table.require_column("neighborhood_id");
  const auto c_type = table.require_column("team_type");
  const auto c_ts = table.require_column("timestamp");
  const auto c_dur = table.column("service_minutes");
  std::vector<OccurrenceRecord> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    OccurrenceRecord r;
    r.id = row[c_id];
    r.neighborhood_id = row[c_nb];
    r.team_type_id = row[c_type];
    r.timestamp = parse_timestamp(row[c_ts]);
    if (c_dur && !row[*c_dur].empty()) {
      r.service_minutes = csv::parse_number(row[*c_dur], "service_minutes");
      if (!(*r.service_minutes > 0.0)) {
        throw ValidationError("record '" + r.id + "' has a non-positive service duration");
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

void write_occurrences_csv(const std::vector<OccurrenceRecord>& records, std::ostream& out) {
  csv::write_record(out, {"id", "neighborhood_id", "team_type", "timestamp", "service_minutes"});
  for (const auto& r : records) {
    csv::write_record(out, {r.id, r.neighborhood_id, r.team_type_id, format_timestamp(r.timestamp),
                            r.service_minutes ? csv::format_number(*r.service_minutes) : ""});
  }
}

void write_occurrences_csv(const std::vector<OccurrenceRecord>& records,
                           const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  write_occurrences_csv(records, out);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

RateTable read_rate_table_csv(const std::filesystem::path& path, int band_count) {
  check_band_count(band_count);
  const csv::Table table = csv::read_file(path);
  const auto c_wd = table.require_column("weekday");
  const auto c_band = table.require_column("band");
  const auto c_type = table.require_column("team_type");
  const auto c_nb = table.require_column("neighborhood_id");
  const auto c_rate = table.require_column("rate");
  RateTable out;
  out.band_count = band_count;
  for (const auto& row : table.rows) {
    RateKey key{static_cast<int>(csv::parse_integer(row[c_wd], "weekday")),
                static_cast<int>(csv::parse_integer(row[c_band], "band")), row[c_type], row[c_nb]};
    if (key.weekday < 0 || key.weekday > 6 || key.band < 0 || key.band >= band_count) {
      throw ValidationError("rate row outside the weekday/band grid");
    }
    const double rate = csv::parse_number(row[c_rate], "rate");
    if (!(rate >= 0.0)) throw ValidationError("rates must be non-negative");
    out.rates[key] = rate;
  }
  return out;
}

void write_rate_table_csv(const RateTable& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  csv::write_record(out, {"weekday", "band", "team_type", "neighborhood_id", "rate"});
  for (const auto& [key, rate] : table.rates) {
    csv::write_record(out, {std::to_string(key.weekday), std::to_string(key.band), key.team_type,
                            key.neighborhood, csv::format_number(rate)});
  }
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace fleetic
