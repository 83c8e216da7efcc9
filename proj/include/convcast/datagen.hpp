#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "convcast/error.hpp"
#include "convcast/series.hpp"

namespace convcast {

/// Zero-inflated mixture for daily conversion percents: an atom at zero, a
/// low band (0, 2], a uniform body and rare bursts, drawn i.i.d. across days.
/// All defaults are tunable artifact choices.
struct GenConfig {
  std::size_t n_days = 0;
  double p_zero = 0.35;
  double low_mode_weight = 0.30;
  double burst_prob = 0.05;
  std::pair<double, double> burst_range{20.0, 60.0};
  std::pair<double, double> body_range{2.0, 15.0};
  double clicks_rate = 50.0;  // Poisson mean clicks per day
  std::uint64_t seed = 0;
  Date start_date = std::chrono::sys_days{std::chrono::year{2023} / 1 / 1};
  void validate() const;
};

TimeSeries gen_conversion_series(const GenConfig& cfg);

/// Per-day records consistent with the generated rate path: clicks are
/// Poisson, sales Binomial(clicks, rate/100), and the stored conversion is
/// recomputed as 100*sales/clicks (0 on zero-click days). The rate path for
/// a given seed matches gen_conversion_series; clicks, sales and the
/// language/country codes come from a derived second stream.
std::vector<SiteRecord> gen_site_records(const GenConfig& cfg);

}  // namespace convcast
