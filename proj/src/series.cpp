#include "convcast/series.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

namespace convcast {

namespace {

void check_values(const std::vector<double>& values) {
  if (values.empty()) {
    throw Error(Errc::invalid_series, "series must contain at least one value");
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error(Errc::invalid_series, "series values must be finite");
    }
    if (v < 0.0 || v > 100.0) {
      throw Error(Errc::invalid_series,
                  "conversion values must lie in [0, 100], got " + std::to_string(v));
    }
  }
}

void check_exog(std::size_t n, const std::vector<std::int64_t>& column, const char* name) {
  if (column.size() != n) {
    throw Error(Errc::invalid_series, std::string(name) + " column length differs from values");
  }
  for (std::int64_t v : column) {
    if (v < 0) {
      throw Error(Errc::invalid_series, std::string(name) + " values must be non-negative");
    }
  }
}

}  // namespace

Date make_date(int year, unsigned month, unsigned day) {
  std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                  std::chrono::day{day}};
  if (!ymd.ok()) {
    throw Error(Errc::invalid_record, "invalid calendar date");
  }
  return Date{ymd};
}

std::optional<Date> parse_date(std::string_view iso) {
  if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') return std::nullopt;
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
    if (!std::isdigit(static_cast<unsigned char>(iso[i]))) return std::nullopt;
  }
  const int y = (iso[0] - '0') * 1000 + (iso[1] - '0') * 100 + (iso[2] - '0') * 10 + (iso[3] - '0');
  const unsigned m = static_cast<unsigned>((iso[5] - '0') * 10 + (iso[6] - '0'));
  const unsigned d = static_cast<unsigned>((iso[8] - '0') * 10 + (iso[9] - '0'));
  std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
  if (!ymd.ok()) return std::nullopt;
  return Date{ymd};
}

std::string format_date(Date date) {
  const std::chrono::year_month_day ymd{date};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(ymd.year()), unsigned(ymd.month()),
                unsigned(ymd.day()));
  return buf;
}

TimeSeries::TimeSeries(std::vector<double> values, Date start_date)
    : values_(std::move(values)), start_date_(start_date) {
  check_values(values_);
}

TimeSeries::TimeSeries(std::vector<double> values, Date start_date,
                       std::vector<std::int64_t> clicks, std::vector<std::int64_t> sales)
    : values_(std::move(values)),
      start_date_(start_date),
      clicks_(std::move(clicks)),
      sales_(std::move(sales)) {
  check_values(values_);
  check_exog(values_.size(), clicks_, "clicks");
  check_exog(values_.size(), sales_, "sales");
}

void validate_record(const SiteRecord& record) {
  if (record.clicks < 0 || record.sales < 0) {
    throw Error(Errc::invalid_record, "clicks and sales must be non-negative");
  }
  if (record.sales > record.clicks) {
    throw Error(Errc::invalid_record, "sales exceed clicks");
  }
  if (!std::isfinite(record.conversion) || record.conversion < 0.0 ||
      record.conversion > 100.0) {
    throw Error(Errc::invalid_record, "conversion must lie in [0, 100]");
  }
  if (record.clicks == 0) {
    if (record.conversion != 0.0) {
      throw Error(Errc::invalid_record, "conversion must be 0 when clicks are 0");
    }
  } else {
    const double implied = 100.0 * static_cast<double>(record.sales) /
                           static_cast<double>(record.clicks);
    if (std::fabs(record.conversion - implied) > kConversionTolerance) {
      throw Error(Errc::invalid_record, "conversion inconsistent with 100*sales/clicks");
    }
  }
}

TimeSeries series_from_records(std::span<const SiteRecord> records) {
  if (records.empty()) {
    throw Error(Errc::empty_input, "no records to build a series from");
  }
  std::vector<double> values;
  std::vector<std::int64_t> clicks;
  std::vector<std::int64_t> sales;
  values.reserve(records.size());
  clicks.reserve(records.size());
  sales.reserve(records.size());
  for (const SiteRecord& r : records) {
    values.push_back(r.conversion);
    clicks.push_back(r.clicks);
    sales.push_back(r.sales);
  }
  return TimeSeries(std::move(values), records.front().date, std::move(clicks),
                    std::move(sales));
}

NormalizerParams fit_normalizer(std::span<const double> window) {
  if (window.empty()) {
    throw Error(Errc::empty_window, "cannot fit a normalizer on an empty window");
  }
  const auto [lo, hi] = std::minmax_element(window.begin(), window.end());
  return NormalizerParams{*lo, *hi};
}

double normalize(double x, const NormalizerParams& p) noexcept {
  if (p.degenerate()) return 0.5;
  return (x - p.min) / (p.max - p.min);
}

double denormalize(double y, const NormalizerParams& p) noexcept {
  if (p.degenerate()) return p.min;
  return p.min + y * (p.max - p.min);
}

std::vector<double> acf(std::span<const double> values, std::size_t max_lag) {
  const std::size_t n = values.size();
  if (max_lag >= n) {
    throw Error(Errc::lag_too_large,
                "max_lag " + std::to_string(max_lag) + " must be below series length " +
                    std::to_string(n));
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);

  double denom = 0.0;
  for (double v : values) denom += (v - mean) * (v - mean);
  if (denom == 0.0) {
    throw Error(Errc::zero_variance, "all values equal; autocorrelation undefined");
  }

  std::vector<double> r(max_lag + 1);
  r[0] = 1.0;
  for (std::size_t k = 1; k <= max_lag; ++k) {
    double num = 0.0;
    for (std::size_t t = 0; t + k < n; ++t) {
      num += (values[t] - mean) * (values[t + k] - mean);
    }
    r[k] = num / denom;
  }
  return r;
}

std::vector<double> acf(const TimeSeries& series, std::size_t max_lag) {
  return acf(std::span<const double>(series.values()), max_lag);
}

std::pair<TimeSeries, TimeSeries> split(const TimeSeries& series, double train_fraction) {
  if (!std::isfinite(train_fraction) || train_fraction <= 0.0 || train_fraction >= 1.0) {
    throw Error(Errc::degenerate_split, "train_fraction must lie in (0, 1)");
  }
  const std::size_t n = series.size();
  // Nudge before flooring so exact products such as 10 * 0.7 do not land a ULP low.
  const std::size_t cut =
      static_cast<std::size_t>(std::floor(train_fraction * static_cast<double>(n) + 1e-9));
  if (cut == 0 || cut >= n) {
    throw Error(Errc::degenerate_split, "split would leave an empty part");
  }

  const auto& v = series.values();
  std::vector<double> head(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(cut));
  std::vector<double> tail(v.begin() + static_cast<std::ptrdiff_t>(cut), v.end());
  const Date tail_start = series.start_date() + std::chrono::days(static_cast<long>(cut));

  if (series.has_exog()) {
    const auto& c = series.clicks();
    const auto& s = series.sales();
    const auto mid_c = c.begin() + static_cast<std::ptrdiff_t>(cut);
    const auto mid_s = s.begin() + static_cast<std::ptrdiff_t>(cut);
    return {TimeSeries(std::move(head), series.start_date(), {c.begin(), mid_c}, {s.begin(), mid_s}),
            TimeSeries(std::move(tail), tail_start, {mid_c, c.end()}, {mid_s, s.end()})};
  }
  return {TimeSeries(std::move(head), series.start_date()),
          TimeSeries(std::move(tail), tail_start)};
}

}  // namespace convcast
