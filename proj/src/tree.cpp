#include "convcast/tree.hpp"

#include <algorithm>
#include <cmath>

namespace convcast {

namespace {

void check_matrix(const FeatureMatrix& data) {
  if (data.rows.empty()) {
    throw Error(Errc::empty_data, "feature matrix has no rows");
  }
  if (data.targets.size() != data.rows.size()) {
    throw Error(Errc::length_mismatch, "targets length differs from row count");
  }
  const std::size_t k = data.rows.front().size();
  if (k == 0) {
    throw Error(Errc::invalid_data, "rows need at least one feature");
  }
  for (const auto& row : data.rows) {
    if (row.size() != k) {
      throw Error(Errc::dimension_mismatch, "ragged feature rows");
    }
    for (double v : row) {
      if (!std::isfinite(v)) throw Error(Errc::invalid_data, "non-finite feature value");
    }
  }
  for (double y : data.targets) {
    if (!std::isfinite(y)) throw Error(Errc::invalid_data, "non-finite target value");
  }
}

double mean_of(const std::vector<double>& targets, std::span<const std::size_t> idx) {
  double sum = 0.0;
  for (std::size_t i : idx) sum += targets[i];
  return sum / static_cast<double>(idx.size());
}

// Two-pass SSE in row order; keeps arithmetic identical to a naive oracle.
double sse_of(const std::vector<double>& targets, std::span<const std::size_t> idx) {
  const double m = mean_of(targets, idx);
  double sse = 0.0;
  for (std::size_t i : idx) {
    const double d = targets[i] - m;
    sse += d * d;
  }
  return sse;
}

std::optional<SplitChoice> best_split_on(const FeatureMatrix& data,
                                         std::span<const std::size_t> idx,
                                         std::size_t min_samples_leaf) {
  if (idx.size() < 2) return std::nullopt;
  const std::size_t k = data.feature_count();
  const double parent_sse = sse_of(data.targets, idx);

  std::optional<SplitChoice> best;
  std::vector<double> values;
  std::vector<std::size_t> left_idx, right_idx;
  for (std::size_t feature = 0; feature < k; ++feature) {
    values.clear();
    for (std::size_t i : idx) values.push_back(data.rows[i][feature]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    for (std::size_t v = 0; v + 1 < values.size(); ++v) {
      const double threshold = (values[v] + values[v + 1]) / 2.0;
      left_idx.clear();
      right_idx.clear();
      for (std::size_t i : idx) {
        (data.rows[i][feature] <= threshold ? left_idx : right_idx).push_back(i);
      }
      if (left_idx.size() < min_samples_leaf || right_idx.size() < min_samples_leaf) {
        continue;
      }
      const double child_sse = sse_of(data.targets, left_idx) + sse_of(data.targets, right_idx);
      const double reduction = parent_sse - child_sse;
      if (reduction <= 0.0) continue;
      if (!best || reduction > best->sse_reduction) {
        best = SplitChoice{feature, threshold, reduction};
      }
    }
  }
  return best;
}

}  // namespace

void TreeConfig::validate() const {
  if (min_samples_leaf < 1) {
    throw Error(Errc::invalid_config, "min_samples_leaf must be at least 1");
  }
  if (lags < 1) {
    throw Error(Errc::invalid_config, "lag order must be at least 1");
  }
}

FeatureMatrix lag_embed(std::span<const double> values, std::size_t lags) {
  if (lags == 0) {
    throw Error(Errc::invalid_config, "lag order must be at least 1");
  }
  if (values.size() <= lags) {
    throw Error(Errc::series_too_short,
                "need more than " + std::to_string(lags) + " observations to lag-embed");
  }
  FeatureMatrix data;
  data.rows.reserve(values.size() - lags);
  data.targets.reserve(values.size() - lags);
  for (std::size_t t = lags; t < values.size(); ++t) {
    std::vector<double> row;
    row.reserve(lags);
    for (std::size_t j = 1; j <= lags; ++j) {
      row.push_back(values[t - j]);
    }
    data.rows.push_back(std::move(row));
    data.targets.push_back(values[t]);
  }
  return data;
}

FeatureMatrix lag_embed(const TimeSeries& series, std::size_t lags, bool use_exog) {
  FeatureMatrix data = lag_embed(std::span<const double>(series.values()), lags);
  if (use_exog && series.has_exog()) {
    for (std::size_t r = 0; r < data.rows.size(); ++r) {
      const std::size_t t = lags + r;
      data.rows[r].push_back(static_cast<double>(series.clicks()[t - 1]));
      data.rows[r].push_back(static_cast<double>(series.sales()[t - 1]));
    }
  }
  return data;
}

std::optional<SplitChoice> best_split(const FeatureMatrix& data, std::size_t min_samples_leaf) {
  check_matrix(data);
  std::vector<std::size_t> idx(data.rows.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return best_split_on(data, idx, min_samples_leaf);
}

RegressionTree RegressionTree::fit(const FeatureMatrix& data, const TreeConfig& cfg) {
  check_matrix(data);
  cfg.validate();

  RegressionTree tree;
  tree.feature_count_ = data.feature_count();

  struct Frame {
    std::vector<std::size_t> idx;
    std::size_t depth;
    int node;
  };

  std::vector<std::size_t> all(data.rows.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  tree.nodes_.push_back(TreeNode{});
  std::vector<Frame> stack;
  stack.push_back(Frame{std::move(all), 0, 0});

  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();

    TreeNode& node = tree.nodes_[static_cast<std::size_t>(frame.node)];
    node.prediction = mean_of(data.targets, frame.idx);
    node.n_samples = frame.idx.size();

    const bool pure = std::all_of(frame.idx.begin(), frame.idx.end(), [&](std::size_t i) {
      return data.targets[i] == data.targets[frame.idx.front()];
    });
    if (frame.depth >= cfg.max_depth || pure) continue;

    const auto choice = best_split_on(data, frame.idx, cfg.min_samples_leaf);
    if (!choice) continue;

    std::vector<std::size_t> left_idx, right_idx;
    for (std::size_t i : frame.idx) {
      (data.rows[i][choice->feature_index] <= choice->threshold ? left_idx : right_idx)
          .push_back(i);
    }

    const int left = static_cast<int>(tree.nodes_.size());
    tree.nodes_.push_back(TreeNode{});
    tree.nodes_.push_back(TreeNode{});
    TreeNode& parent = tree.nodes_[static_cast<std::size_t>(frame.node)];
    parent.left = left;
    parent.right = left + 1;
    parent.feature_index = choice->feature_index;
    parent.threshold = choice->threshold;

    stack.push_back(Frame{std::move(right_idx), frame.depth + 1, left + 1});
    stack.push_back(Frame{std::move(left_idx), frame.depth + 1, left});
  }
  return tree;
}

double RegressionTree::predict(std::span<const double> x) const {
  if (x.size() != feature_count_) {
    throw Error(Errc::dimension_mismatch,
                "expected " + std::to_string(feature_count_) + " features, got " +
                    std::to_string(x.size()));
  }
  const TreeNode* node = &nodes_.front();
  while (!node->is_leaf()) {
    node = &nodes_[static_cast<std::size_t>(x[node->feature_index] <= node->threshold
                                                ? node->left
                                                : node->right)];
  }
  return node->prediction;
}

std::size_t RegressionTree::depth() const {
  std::size_t max_depth = 0;
  struct Item {
    int node;
    std::size_t depth;
  };
  std::vector<Item> stack{{0, 0}};
  while (!stack.empty()) {
    const Item item = stack.back();
    stack.pop_back();
    const TreeNode& node = nodes_[static_cast<std::size_t>(item.node)];
    if (node.is_leaf()) {
      max_depth = std::max(max_depth, item.depth);
    } else {
      stack.push_back({node.left, item.depth + 1});
      stack.push_back({node.right, item.depth + 1});
    }
  }
  return max_depth;
}

std::size_t RegressionTree::leaf_count() const {
  std::size_t count = 0;
  for (const TreeNode& node : nodes_) {
    if (node.is_leaf()) ++count;
  }
  return count;
}

}  // namespace convcast
