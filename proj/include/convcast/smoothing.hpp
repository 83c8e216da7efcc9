#pragma once

#include <span>
#include <vector>

#include "convcast/error.hpp"

namespace convcast {

/// Simple exponential smoothing: S(1) = Z(0), S(t) = alpha*Z(t-1) +
/// (1-alpha)*S(t-1). Output has the input's length; S(t) is the one-step
/// forecast for index t. alpha in (0, 1]; 1 gives the naive forecast.
std::vector<double> es_smooth(std::span<const double> series, double alpha);

/// One-step smoothing state machine over a fixed alpha.
class EsModel {
public:
  explicit EsModel(double alpha);
  EsModel(double alpha, double initial_smoothed);

  /// Seeds the state by smoothing the training window.
  static EsModel fit(std::span<const double> train, double alpha);

  /// Returns alpha*last_observation + (1-alpha)*last_smoothed and advances
  /// the state to the returned value.
  double forecast_next(double last_observation);

  double alpha() const noexcept { return alpha_; }
  bool initialized() const noexcept { return initialized_; }
  double last_smoothed() const;

private:
  double alpha_;
  double last_smoothed_ = 0.0;
  bool initialized_ = false;
};

struct AlphaSelection {
  double alpha = 0.0;
  double train_mse = 0.0;
};

/// {0.05, 0.10, ..., 0.95}
std::vector<double> default_alpha_grid();

/// Grid value minimizing in-sample one-step MSE over t = 2..n; ties go to
/// the smallest alpha. Grid values must lie strictly inside (0, 1).
AlphaSelection es_select_alpha(std::span<const double> train, std::span<const double> grid);
AlphaSelection es_select_alpha(std::span<const double> train);

}  // namespace convcast
