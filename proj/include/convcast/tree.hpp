#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "convcast/error.hpp"
#include "convcast/series.hpp"

namespace convcast {

struct FeatureMatrix {
  std::vector<std::vector<double>> rows;
  std::vector<double> targets;
  std::size_t feature_count() const noexcept { return rows.empty() ? 0 : rows.front().size(); }
};

struct TreeConfig {
  std::size_t max_depth = 4;
  std::size_t min_samples_leaf = 2;
  std::size_t lags = 5;
  bool use_exog = true;  // applied when the series carries exog columns
  void validate() const;
};

/// Row t carries features (x_{t-1}, ..., x_{t-p}) with target x_t; produces
/// n - p rows.
FeatureMatrix lag_embed(std::span<const double> values, std::size_t lags);

/// As above; when use_exog is set and the series has exog columns, appends
/// clicks_{t-1} and sales_{t-1} to each row.
FeatureMatrix lag_embed(const TimeSeries& series, std::size_t lags, bool use_exog);

struct SplitChoice {
  std::size_t feature_index = 0;
  double threshold = 0.0;
  double sse_reduction = 0.0;
};

/// Best (feature, midpoint-threshold) by SSE reduction, or nullopt when no
/// admissible split reduces SSE. Candidates leaving fewer than
/// min_samples_leaf rows on either side are inadmissible. Ties go to the
/// lower feature index, then the lower threshold.
std::optional<SplitChoice> best_split(const FeatureMatrix& data,
                                      std::size_t min_samples_leaf = 1);

struct TreeNode {
  int left = -1;  // child indices into the node vector; -1 marks a leaf
  int right = -1;
  std::size_t feature_index = 0;
  double threshold = 0.0;
  double prediction = 0.0;  // mean of the node's training targets
  std::size_t n_samples = 0;
  bool is_leaf() const noexcept { return left < 0; }
};

/// CART-style regression tree; greedy SSE-reduction splits, rows with
/// x[feature] <= threshold routed left.
class RegressionTree {
public:
  static RegressionTree fit(const FeatureMatrix& data, const TreeConfig& cfg);

  double predict(std::span<const double> x) const;
  const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
  const TreeNode& root() const { return nodes_.front(); }
  std::size_t feature_count() const noexcept { return feature_count_; }
  std::size_t depth() const;
  std::size_t leaf_count() const;

private:
  std::vector<TreeNode> nodes_;
  std::size_t feature_count_ = 0;
};

}  // namespace convcast
