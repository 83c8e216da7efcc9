#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "convcast/error.hpp"

namespace convcast {

using Date = std::chrono::sys_days;

Date make_date(int year, unsigned month, unsigned day);
std::optional<Date> parse_date(std::string_view iso);  // strict YYYY-MM-DD
std::string format_date(Date date);

/// Daily conversion-rate series (percent, 0..100) with optional per-day
/// clicks/sales columns of the same length. Immutable after construction.
class TimeSeries {
public:
  TimeSeries(std::vector<double> values, Date start_date);
  TimeSeries(std::vector<double> values, Date start_date,
             std::vector<std::int64_t> clicks, std::vector<std::int64_t> sales);

  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<double>& values() const noexcept { return values_; }
  Date start_date() const noexcept { return start_date_; }
  bool has_exog() const noexcept { return !clicks_.empty(); }
  const std::vector<std::int64_t>& clicks() const noexcept { return clicks_; }
  const std::vector<std::int64_t>& sales() const noexcept { return sales_; }

private:
  std::vector<double> values_;
  Date start_date_{};
  std::vector<std::int64_t> clicks_;
  std::vector<std::int64_t> sales_;
};

/// One day of store data as exported by the analytics pipeline.
struct SiteRecord {
  Date date{};
  std::int64_t clicks = 0;
  std::int64_t sales = 0;
  double conversion = 0.0;  // percent
  std::string language;
  std::string country;
};

/// Allowed gap between the stored conversion and 100*sales/clicks, in
/// percentage points; accommodates rounding in exported data.
inline constexpr double kConversionTolerance = 0.5;

void validate_record(const SiteRecord& record);

TimeSeries series_from_records(std::span<const SiteRecord> records);

struct NormalizerParams {
  double min = 0.0;
  double max = 0.0;
  bool degenerate() const noexcept { return min == max; }
};

NormalizerParams fit_normalizer(std::span<const double> window);

/// Linear map to [0,1] over [min,max]; out-of-range inputs extrapolate.
/// Degenerate params map every input to the window midpoint 0.5.
double normalize(double x, const NormalizerParams& p) noexcept;
double denormalize(double y, const NormalizerParams& p) noexcept;

/// Sample autocorrelation r_0..r_max_lag, biased estimator (denominator over
/// the full sum of squared deviations).
std::vector<double> acf(std::span<const double> values, std::size_t max_lag);
std::vector<double> acf(const TimeSeries& series, std::size_t max_lag);

/// Split at floor(n * train_fraction); both parts must be nonempty.
std::pair<TimeSeries, TimeSeries> split(const TimeSeries& series, double train_fraction);

}  // namespace convcast
