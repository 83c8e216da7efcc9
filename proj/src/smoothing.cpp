#include "convcast/smoothing.hpp"

#include <cmath>

namespace convcast {

namespace {

void check_alpha(double alpha, bool allow_one) {
  const double upper_ok = allow_one ? (alpha <= 1.0) : (alpha < 1.0);
  if (!std::isfinite(alpha) || alpha <= 0.0 || !upper_ok) {
    throw Error(Errc::alpha_out_of_range,
                "smoothing factor must lie in (0, " + std::string(allow_one ? "1]" : "1)") +
                    ", got " + std::to_string(alpha));
  }
}

}  // namespace

std::vector<double> es_smooth(std::span<const double> series, double alpha) {
  if (series.empty()) {
    throw Error(Errc::empty_series, "cannot smooth an empty series");
  }
  check_alpha(alpha, /*allow_one=*/true);
  std::vector<double> smoothed(series.size());
  smoothed[0] = series[0];
  for (std::size_t t = 1; t < series.size(); ++t) {
    smoothed[t] = alpha * series[t - 1] + (1.0 - alpha) * smoothed[t - 1];
  }
  return smoothed;
}

EsModel::EsModel(double alpha) : alpha_(alpha) { check_alpha(alpha, /*allow_one=*/true); }

EsModel::EsModel(double alpha, double initial_smoothed)
    : alpha_(alpha), last_smoothed_(initial_smoothed), initialized_(true) {
  check_alpha(alpha, /*allow_one=*/true);
}

EsModel EsModel::fit(std::span<const double> train, double alpha) {
  const std::vector<double> smoothed = es_smooth(train, alpha);
  return EsModel(alpha, smoothed.back());
}

double EsModel::forecast_next(double last_observation) {
  if (!initialized_) {
    throw Error(Errc::uninitialized, "model has no smoothed state yet");
  }
  last_smoothed_ = alpha_ * last_observation + (1.0 - alpha_) * last_smoothed_;
  return last_smoothed_;
}

double EsModel::last_smoothed() const {
  if (!initialized_) {
    throw Error(Errc::uninitialized, "model has no smoothed state yet");
  }
  return last_smoothed_;
}

std::vector<double> default_alpha_grid() {
  std::vector<double> grid;
  grid.reserve(19);
  for (int i = 1; i <= 19; ++i) {
    grid.push_back(static_cast<double>(i) * 0.05);
  }
  return grid;
}

AlphaSelection es_select_alpha(std::span<const double> train, std::span<const double> grid) {
  if (train.size() < 3) {
    throw Error(Errc::series_too_short, "alpha selection needs at least 3 observations");
  }
  if (grid.empty()) {
    throw Error(Errc::invalid_config, "alpha grid must be nonempty");
  }
  for (double a : grid) check_alpha(a, /*allow_one=*/false);

  AlphaSelection best;
  bool have = false;
  for (double a : grid) {
    const std::vector<double> smoothed = es_smooth(train, a);
    double sum = 0.0;
    for (std::size_t t = 1; t < train.size(); ++t) {
      const double err = train[t] - smoothed[t];
      sum += err * err;
    }
    const double mse = sum / static_cast<double>(train.size() - 1);
    if (!have || mse < best.train_mse || (mse == best.train_mse && a < best.alpha)) {
      best = {a, mse};
      have = true;
    }
  }
  return best;
}

AlphaSelection es_select_alpha(std::span<const double> train) {
  const std::vector<double> grid = default_alpha_grid();
  return es_select_alpha(train, grid);
}

}  // namespace convcast
