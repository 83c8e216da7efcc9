#include "convcast/metrics.hpp"

#include <cmath>
#include <limits>

namespace convcast {

namespace {

void check_lengths(std::span<const double> actual, std::span<const double> forecast) {
  if (actual.size() != forecast.size()) {
    throw Error(Errc::length_mismatch, "actual and forecast lengths differ");
  }
  if (actual.empty()) {
    throw Error(Errc::empty_input, "metrics need at least one observation");
  }
}

}  // namespace

double mad(std::span<const double> actual, std::span<const double> forecast) {
  check_lengths(actual, forecast);
  double sum = 0.0;
  for (std::size_t t = 0; t < actual.size(); ++t) {
    sum += std::fabs(actual[t] - forecast[t]);
  }
  return sum / static_cast<double>(actual.size());
}

double md(std::span<const double> actual, std::span<const double> forecast) {
  check_lengths(actual, forecast);
  double sum = 0.0;
  for (std::size_t t = 0; t < actual.size(); ++t) {
    sum += actual[t] - forecast[t];
  }
  return sum / static_cast<double>(actual.size());
}

double mse(std::span<const double> actual, std::span<const double> forecast) {
  check_lengths(actual, forecast);
  double sum = 0.0;
  for (std::size_t t = 0; t < actual.size(); ++t) {
    const double d = actual[t] - forecast[t];
    sum += d * d;
  }
  return sum / static_cast<double>(actual.size());
}

std::pair<double, std::size_t> mape(std::span<const double> actual,
                                    std::span<const double> forecast) {
  check_lengths(actual, forecast);
  double sum = 0.0;
  std::size_t used = 0;
  for (std::size_t t = 0; t < actual.size(); ++t) {
    if (actual[t] == 0.0) continue;
    sum += std::fabs((actual[t] - forecast[t]) / actual[t]);
    ++used;
  }
  if (used == 0) {
    throw Error(Errc::all_actuals_zero, "every actual is zero; MAPE undefined");
  }
  return {sum / static_cast<double>(used), used};
}

ErrorTable error_table(std::span<const double> actual, std::span<const double> forecast) {
  ErrorTable table;
  table.mad = mad(actual, forecast);
  table.md = md(actual, forecast);
  table.mse = mse(actual, forecast);
  try {
    const auto [value, used] = mape(actual, forecast);
    table.mape = value;
    table.n_used_mape = used;
  } catch (const Error& e) {
    if (e.code() != Errc::all_actuals_zero) throw;
    table.mape = std::numeric_limits<double>::quiet_NaN();
    table.n_used_mape = 0;
  }
  return table;
}

}  // namespace convcast
