#include "convcast/datagen.hpp"

#include <array>
#include <cmath>
#include <random>

#include "convcast/rng.hpp"

namespace convcast {

namespace {

constexpr std::array<const char*, 5> kLanguages = {"en", "de", "fr", "es", "uk"};
constexpr std::array<const char*, 5> kCountries = {"US", "DE", "FR", "ES", "UA"};

void check_range(std::pair<double, double> range, const char* name) {
  if (!(range.first <= range.second) || range.first < 0.0 || range.second > 100.0) {
    throw Error(Errc::invalid_config,
                std::string(name) + " must be an ordered range inside [0, 100]");
  }
}

std::vector<double> draw_rates(const GenConfig& cfg, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> rates(cfg.n_days);
  for (double& rate : rates) {
    const double u = unit(rng);
    if (u < cfg.p_zero) {
      rate = 0.0;
    } else if (u < cfg.p_zero + cfg.low_mode_weight) {
      rate = 2.0 - 2.0 * unit(rng);  // (0, 2]
    } else if (u < cfg.p_zero + cfg.low_mode_weight + cfg.burst_prob) {
      rate = cfg.burst_range.first +
             (cfg.burst_range.second - cfg.burst_range.first) * unit(rng);
    } else {
      rate = cfg.body_range.first +
             (cfg.body_range.second - cfg.body_range.first) * unit(rng);
    }
  }
  return rates;
}

}  // namespace

void GenConfig::validate() const {
  if (n_days < 1) throw Error(Errc::invalid_config, "n_days must be at least 1");
  for (double p : {p_zero, low_mode_weight, burst_prob}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(Errc::invalid_config, "mixture probabilities must lie in [0, 1]");
    }
  }
  if (p_zero + low_mode_weight + burst_prob > 1.0) {
    throw Error(Errc::invalid_config, "mixture probabilities sum above 1");
  }
  check_range(burst_range, "burst_range");
  check_range(body_range, "body_range");
  if (!(clicks_rate > 0.0)) {
    throw Error(Errc::invalid_config, "clicks_rate must be positive");
  }
}

TimeSeries gen_conversion_series(const GenConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  return TimeSeries(draw_rates(cfg, rng), cfg.start_date);
}

std::vector<SiteRecord> gen_site_records(const GenConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rate_rng(cfg.seed);
  const std::vector<double> rates = draw_rates(cfg, rate_rng);

  std::mt19937_64 rng(derive_seed(cfg.seed, "site-records"));
  std::poisson_distribution<std::int64_t> clicks_dist(cfg.clicks_rate);
  std::uniform_int_distribution<std::size_t> lang_dist(0, kLanguages.size() - 1);
  std::uniform_int_distribution<std::size_t> country_dist(0, kCountries.size() - 1);

  std::vector<SiteRecord> records;
  records.reserve(cfg.n_days);
  for (std::size_t day = 0; day < cfg.n_days; ++day) {
    SiteRecord rec;
    rec.date = cfg.start_date + std::chrono::days(static_cast<long>(day));
    rec.clicks = clicks_dist(rng);
    if (rec.clicks > 0 && rates[day] > 0.0) {
      std::binomial_distribution<std::int64_t> sales_dist(rec.clicks, rates[day] / 100.0);
      rec.sales = sales_dist(rng);
    } else {
      rec.sales = 0;
    }
    rec.conversion = rec.clicks > 0
                         ? 100.0 * static_cast<double>(rec.sales) / static_cast<double>(rec.clicks)
                         : 0.0;
    rec.language = kLanguages[lang_dist(rng)];
    rec.country = kCountries[country_dist(rng)];
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace convcast
