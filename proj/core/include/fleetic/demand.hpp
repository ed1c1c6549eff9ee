#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fleetic/availability.hpp"
#include "fleetic/timestamp.hpp"

namespace fleetic {

struct OccurrenceRecord {
  std::string id;
  std::string neighborhood_id;
  std::string team_type_id;
  Timestamp timestamp;
  std::optional<double> service_minutes;  // commit-to-release duration

  bool operator==(const OccurrenceRecord&) const = default;
};

struct RateKey {
  int weekday = 0;  // 0 = Monday
  int band = 0;
  std::string team_type;
  std::string neighborhood;

  auto operator<=>(const RateKey&) const = default;
};

/// Expected calls per occurrence of (weekday, band) for each type and
/// neighborhood. Keys that are absent have rate zero.
struct RateTable {
  int band_count = 6;
  std::map<RateKey, double> rates;
  /// How many times each weekday occurred in the fitted log span.
  std::array<int, 7> observed_days{};
  /// Mean service duration per team type, when the log carried durations.
  std::map<std::string, double> service_mean_minutes;

  double rate(const RateKey& key) const;
  int band_seconds() const { return 86400 / band_count; }
};

struct FitOptions {
  int band_count = 6;
  /// Per type, the fraction of days that were sampled; rates are divided
  /// by it. Types not listed use 1.
  std::map<std::string, double> sampling_fraction;
};

/// rate(cell) = calls in cell / occurrences of the cell's weekday between
/// the first and last logged dates. Throws ValidationError on an empty log
/// or a band count that does not divide 24.
RateTable fit_rates(const std::vector<OccurrenceRecord>& occurrences, const FitOptions& options = {});

struct GenerateOptions {
  int days = 30;
  std::uint64_t seed = 1;
  /// Day number of the first simulated day; default 2017-01-02, a Monday.
  std::int64_t start_day = 17168;
  /// Mean of the exponential service durations per type; falls back to
  /// RateTable::service_mean_minutes, and no duration when neither is set.
  std::map<std::string, double> service_mean_minutes;
};

struct GeneratedCalls {
  std::vector<OccurrenceRecord> records;
  /// neighborhood id -> team type id -> calls
  std::map<std::string, std::map<std::string, std::int64_t>> demand;
};

/// Draws a Poisson count per simulated day and cell from a seeded
/// mt19937_64 stream; timestamps are uniform within the band. Identical
/// options give identical output.
GeneratedCalls generate_calls(const RateTable& rates, const GenerateOptions& options);

/// Mean of service_minutes / 60 over the records that carry a duration.
double mean_service_hours(const std::vector<OccurrenceRecord>& occurrences);

/// Busy fraction per calendar month and team type, with b at the report
/// confidence levels. `fleet` gives the team count per type.
std::vector<BusyFractionRow> busy_fraction_report(const std::vector<OccurrenceRecord>& occurrences,
                                                  const std::map<std::string, int>& fleet);

std::vector<OccurrenceRecord> read_occurrences_csv(const std::filesystem::path& path);
void write_occurrences_csv(const std::vector<OccurrenceRecord>& records,
                           const std::filesystem::path& path);
void write_occurrences_csv(const std::vector<OccurrenceRecord>& records, std::ostream& out);

/// Columns weekday,band,team_type,neighborhood_id,rate.
RateTable read_rate_table_csv(const std::filesystem::path& path, int band_count = 6);
void write_rate_table_csv(const RateTable& table, const std::filesystem::path& path);

}  // namespace fleetic
