#pragma once

#include <span>
#include <vector>

#include "convcast/error.hpp"
#include "convcast/series.hpp"

namespace convcast {

enum class ArmaKind { white_noise, ma1, ar1, arma11 };

/// Candidate display names: MAProcess[0], MAProcess[1], ARProcess[1],
/// ARMAProcess[1,1].
const char* arma_kind_name(ArmaKind kind) noexcept;

struct ArmaFit {
  ArmaKind kind = ArmaKind::white_noise;
  double mu = 0.0;
  double phi = 0.0;    // 0 for non-AR kinds
  double theta = 0.0;  // 0 for non-MA kinds
  double sigma2 = 0.0;
  int k_params = 2;
  std::size_t n = 0;
  double aic = 0.0;
};

/// Fits one candidate on the demeaned series.
///  - white noise: sigma2 = mean squared deviation
///  - AR(1): phi from the lag-1 autocorrelation (Yule-Walker); sigma2 from
///    the conditional residuals (presample values zero), denominator n
///  - MA(1), ARMA(1,1): conditional sum of squares with presample values and
///    innovations zero, minimized over the 0.01-step coefficient grid in
///    (-1, 1); sigma2 = CSS / (n - #ARMA coefficients)
/// AIC = n*ln(sigma2) + n*(1 + ln 2pi) + 2*k_params.
ArmaFit fit_candidate(std::span<const double> values, ArmaKind kind);
ArmaFit fit_candidate(const TimeSeries& series, ArmaKind kind);

struct AicScreenResult {
  std::vector<ArmaFit> fits;  // ascending by AIC
  bool arma_appropriate = false;
  double delta_aic_vs_white_noise = 0.0;  // white-noise AIC minus best other AIC
};

/// Fits all four candidates and applies the delta-AIC > 2 rule against the
/// white-noise baseline.
AicScreenResult screen(std::span<const double> values);
AicScreenResult screen(const TimeSeries& series);

}  // namespace convcast
