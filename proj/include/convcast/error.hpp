#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace convcast {

enum class Errc {
  // series
  zero_variance,
  lag_too_large,
  degenerate_split,
  empty_window,
  invalid_series,
  invalid_record,
  // metrics
  length_mismatch,
  empty_input,
  all_actuals_zero,
  // smoothing
  empty_series,
  alpha_out_of_range,
  uninitialized,
  series_too_short,
  // tree / lstm
  dimension_mismatch,
  empty_data,
  invalid_data,
  window_length_mismatch,
  // config / backtest
  invalid_config,
  insufficient_data,
  // csv / reports
  malformed_header,
  bad_row,
  non_monotonic_dates,
  consistency_violation,
  empty_reports,
  mismatched_actuals,
  io_error,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

/// Parse-stage failure carrying the 1-based line number of the offending row.
class ParseError : public Error {
public:
  ParseError(Errc code, std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace convcast
