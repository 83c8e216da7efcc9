#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "convcast/error.hpp"
#include "convcast/series.hpp"

namespace convcast {

struct LstmConfig {
  std::size_t hidden_size = 8;
  std::size_t window = 5;  // input steps per training pair
  double learning_rate = 0.01;
  std::size_t epochs = 200;
  double grad_clip_norm = 5.0;
  std::uint64_t seed = 0;
  void validate() const;
};

/// Per-gate parameters for hidden size H: one input weight per hidden unit,
/// an H x H recurrent matrix (row-major, row = destination unit) and a bias
/// per hidden unit.
struct GateParams {
  std::vector<double> w_in;
  std::vector<double> u_rec;
  std::vector<double> bias;
};

struct LstmParams {
  std::size_t hidden_size = 0;
  GateParams input_gate;
  GateParams forget_gate;
  GateParams output_gate;
  GateParams candidate;
  std::vector<double> readout_w;
  double readout_b = 0.0;

  std::size_t scalar_count() const noexcept;
  /// Order: per gate (input, forget, output, candidate): w_in, u_rec, bias;
  /// then readout_w, readout_b.
  std::vector<double> flatten() const;
  static LstmParams unflatten(std::size_t hidden_size, std::span<const double> flat);
};

struct LstmState {
  std::vector<double> h;
  std::vector<double> c;
};

/// Weights drawn i.i.d. uniform(-0.1, 0.1) from a generator seeded by
/// cfg.seed, in flatten() order; forget-gate biases start at 1, all other
/// biases at 0.
LstmParams lstm_init(const LstmConfig& cfg);

struct LstmForward {
  double prediction = 0.0;
  std::vector<LstmState> states;  // one per input step
};

/// Runs the gate recurrence from h = c = 0 over a window of normalized
/// inputs; prediction is the linear readout of the final hidden state.
LstmForward lstm_forward(const LstmParams& params, std::span<const double> window);

struct LstmGradients {
  LstmParams grad;  // same shape as the parameters
  double loss = 0.0;
};

/// Reverse-mode gradients of the squared-error loss (prediction - target)^2.
LstmGradients lstm_grads(const LstmParams& params, std::span<const double> window,
                         double target);

struct LstmModel {
  LstmParams params;
  NormalizerParams normalizer;
  std::size_t window = 0;
  std::vector<double> epoch_loss;  // mean per-pair loss per epoch
};

/// Full-batch gradient descent over all (window, next value) pairs of the
/// min-max-normalized training sequence; gradients are averaged across pairs
/// and the global gradient norm is clipped before each update.
LstmModel lstm_train(std::span<const double> train, const LstmConfig& cfg);

/// Normalize the recent observations, run the forward pass, map the
/// prediction back to percent units.
double lstm_predict_next(const LstmParams& params, const NormalizerParams& normalizer,
                         std::span<const double> recent);
double lstm_predict_next(const LstmModel& model, std::span<const double> recent);

}  // namespace convcast
