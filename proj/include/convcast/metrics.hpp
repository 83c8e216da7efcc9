#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "convcast/error.hpp"

namespace convcast {

/// The four forecast-error measures over one actual/forecast pairing.
/// mape is a fraction (not percent); terms with a zero actual are skipped and
/// n_used_mape counts the terms that entered the average. When every actual
/// is zero, mape is NaN and n_used_mape is 0.
struct ErrorTable {
  double mad = 0.0;
  double md = 0.0;
  double mse = 0.0;
  double mape = 0.0;
  std::size_t n_used_mape = 0;
};

double mad(std::span<const double> actual, std::span<const double> forecast);

/// Signed mean deviation; positive when forecasts undershoot actuals.
double md(std::span<const double> actual, std::span<const double> forecast);

double mse(std::span<const double> actual, std::span<const double> forecast);

/// Returns (mape, n_used). Throws AllActualsZero when no term qualifies.
std::pair<double, std::size_t> mape(std::span<const double> actual,
                                    std::span<const double> forecast);

ErrorTable error_table(std::span<const double> actual, std::span<const double> forecast);

}  // namespace convcast
