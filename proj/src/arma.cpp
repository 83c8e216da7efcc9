#include "convcast/arma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace convcast {

namespace {

constexpr int kGridSteps = 99;  // coefficients -0.99 .. 0.99 step 0.01

// ARMA(1,1) pairs with |phi + theta| below this margin are within sampling
// error of a common-factor (redundant) parameterization at the screen's
// target sample sizes and are skipped during CSS minimization.
constexpr double kRedundancyMargin = 0.5;

double grid_value(int i) { return static_cast<double>(i) / 100.0; }

std::vector<double> demean(std::span<const double> values, double& mu) {
  mu = 0.0;
  for (double v : values) mu += v;
  mu /= static_cast<double>(values.size());
  std::vector<double> y(values.size());
  for (std::size_t t = 0; t < values.size(); ++t) y[t] = values[t] - mu;
  return y;
}

double css_ma1(const std::vector<double>& y, double theta) {
  double e_prev = y[0];
  double css = e_prev * e_prev;
  for (std::size_t t = 1; t < y.size(); ++t) {
    const double e = y[t] - theta * e_prev;
    css += e * e;
    e_prev = e;
  }
  return css;
}

double css_arma11(const std::vector<double>& y, double phi, double theta) {
  double e_prev = y[0];
  double css = e_prev * e_prev;
  for (std::size_t t = 1; t < y.size(); ++t) {
    const double e = y[t] - phi * y[t - 1] - theta * e_prev;
    css += e * e;
    e_prev = e;
  }
  return css;
}

double aic_of(std::size_t n, double sigma2, int k_params) {
  const double nn = static_cast<double>(n);
  const double guarded = std::max(sigma2, 1e-300);
  return nn * std::log(guarded) + nn * (1.0 + std::log(2.0 * std::numbers::pi)) +
         2.0 * static_cast<double>(k_params);
}

}  // namespace

const char* arma_kind_name(ArmaKind kind) noexcept {
  switch (kind) {
    case ArmaKind::white_noise: return "MAProcess[0]";
    case ArmaKind::ma1: return "MAProcess[1]";
    case ArmaKind::ar1: return "ARProcess[1]";
    case ArmaKind::arma11: return "ARMAProcess[1,1]";
  }
  return "?";
}

ArmaFit fit_candidate(std::span<const double> values, ArmaKind kind) {
  const std::size_t n = values.size();
  if (n < 10) {
    throw Error(Errc::series_too_short, "candidate fitting needs at least 10 observations");
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(Errc::invalid_data, "non-finite value");
  }

  ArmaFit fit;
  fit.kind = kind;
  fit.n = n;

  std::vector<double> y = demean(values, fit.mu);
  double ssq = 0.0;
  for (double v : y) ssq += v * v;
  if (ssq == 0.0) {
    throw Error(Errc::zero_variance, "constant series cannot be screened");
  }

  switch (kind) {
    case ArmaKind::white_noise: {
      fit.sigma2 = ssq / static_cast<double>(n);
      fit.k_params = 2;
      break;
    }
    case ArmaKind::ar1: {
      double num = 0.0;
      for (std::size_t t = 0; t + 1 < n; ++t) num += y[t] * y[t + 1];
      fit.phi = std::clamp(num / ssq, -0.999999, 0.999999);
      double css = y[0] * y[0];
      for (std::size_t t = 1; t < n; ++t) {
        const double e = y[t] - fit.phi * y[t - 1];
        css += e * e;
      }
      fit.sigma2 = css / static_cast<double>(n);
      fit.k_params = 3;
      break;
    }
    case ArmaKind::ma1: {
      double best_css = 0.0;
      double best_theta = 0.0;
      bool have = false;
      for (int i = -kGridSteps; i <= kGridSteps; ++i) {
        const double theta = grid_value(i);
        const double css = css_ma1(y, theta);
        if (!have || css < best_css) {
          best_css = css;
          best_theta = theta;
          have = true;
        }
      }
      fit.theta = best_theta;
      fit.sigma2 = best_css / static_cast<double>(n - 1);
      fit.k_params = 3;
      break;
    }
    case ArmaKind::arma11: {
      double best_css = 0.0;
      double best_phi = 0.0;
      double best_theta = 0.0;
      bool have = false;
      for (int i = -kGridSteps; i <= kGridSteps; ++i) {
        const double phi = grid_value(i);
        for (int j = -kGridSteps; j <= kGridSteps; ++j) {
          const double theta = grid_value(j);
          if (std::fabs(phi + theta) < kRedundancyMargin) continue;
          const double css = css_arma11(y, phi, theta);
          if (!have || css < best_css) {
            best_css = css;
            best_phi = phi;
            best_theta = theta;
            have = true;
          }
        }
      }
      fit.phi = best_phi;
      fit.theta = best_theta;
      fit.sigma2 = best_css / static_cast<double>(n - 2);
      fit.k_params = 4;
      break;
    }
  }

  fit.aic = aic_of(n, fit.sigma2, fit.k_params);
  return fit;
}

ArmaFit fit_candidate(const TimeSeries& series, ArmaKind kind) {
  return fit_candidate(std::span<const double>(series.values()), kind);
}

AicScreenResult screen(std::span<const double> values) {
  AicScreenResult result;
  result.fits = {fit_candidate(values, ArmaKind::white_noise),
                 fit_candidate(values, ArmaKind::ma1), fit_candidate(values, ArmaKind::ar1),
                 fit_candidate(values, ArmaKind::arma11)};

  double wn_aic = 0.0;
  double best_other = 0.0;
  bool have_other = false;
  for (const ArmaFit& fit : result.fits) {
    if (fit.kind == ArmaKind::white_noise) {
      wn_aic = fit.aic;
    } else if (!have_other || fit.aic < best_other) {
      best_other = fit.aic;
      have_other = true;
    }
  }
  std::stable_sort(result.fits.begin(), result.fits.end(),
                   [](const ArmaFit& a, const ArmaFit& b) { return a.aic < b.aic; });
  result.delta_aic_vs_white_noise = wn_aic - best_other;
  result.arma_appropriate = best_other <= wn_aic - 2.0;
  return result;
}

AicScreenResult screen(const TimeSeries& series) {
  return screen(std::span<const double>(series.values()));
}

}  // namespace convcast
