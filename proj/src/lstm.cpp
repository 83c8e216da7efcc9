#include "convcast/lstm.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace convcast {

namespace {

double logistic(double a) { return 1.0 / (1.0 + std::exp(-a)); }

struct StepTrace {
  double x = 0.0;
  std::vector<double> i, f, o, g, c, tanh_c, h;
};

struct ForwardTrace {
  std::vector<StepTrace> steps;
  double prediction = 0.0;
};

void check_params(const LstmParams& p) {
  const std::size_t h = p.hidden_size;
  if (h == 0) throw Error(Errc::invalid_config, "hidden size must be at least 1");
  for (const GateParams* g : {&p.input_gate, &p.forget_gate, &p.output_gate, &p.candidate}) {
    if (g->w_in.size() != h || g->u_rec.size() != h * h || g->bias.size() != h) {
      throw Error(Errc::dimension_mismatch, "gate parameter shapes inconsistent with hidden size");
    }
  }
  if (p.readout_w.size() != h) {
    throw Error(Errc::dimension_mismatch, "readout shape inconsistent with hidden size");
  }
}

ForwardTrace forward_trace(const LstmParams& p, std::span<const double> window) {
  check_params(p);
  if (window.empty()) {
    throw Error(Errc::window_length_mismatch, "input window is empty");
  }
  const std::size_t H = p.hidden_size;
  ForwardTrace trace;
  trace.steps.reserve(window.size());

  std::vector<double> h_prev(H, 0.0);
  std::vector<double> c_prev(H, 0.0);

  auto preact = [&](const GateParams& g, double x, std::size_t r) {
    double a = g.w_in[r] * x + g.bias[r];
    const double* row = g.u_rec.data() + r * H;
    for (std::size_t j = 0; j < H; ++j) a += row[j] * h_prev[j];
    return a;
  };

  for (double x : window) {
    StepTrace step;
    step.x = x;
    step.i.resize(H);
    step.f.resize(H);
    step.o.resize(H);
    step.g.resize(H);
    step.c.resize(H);
    step.tanh_c.resize(H);
    step.h.resize(H);
    for (std::size_t r = 0; r < H; ++r) {
      step.i[r] = logistic(preact(p.input_gate, x, r));
      step.f[r] = logistic(preact(p.forget_gate, x, r));
      step.o[r] = logistic(preact(p.output_gate, x, r));
      step.g[r] = std::tanh(preact(p.candidate, x, r));
      step.c[r] = step.f[r] * c_prev[r] + step.i[r] * step.g[r];
      step.tanh_c[r] = std::tanh(step.c[r]);
      step.h[r] = step.o[r] * step.tanh_c[r];
    }
    h_prev = step.h;
    c_prev = step.c;
    trace.steps.push_back(std::move(step));
  }

  double pred = p.readout_b;
  for (std::size_t r = 0; r < H; ++r) pred += p.readout_w[r] * h_prev[r];
  trace.prediction = pred;
  return trace;
}

LstmParams zero_like(const LstmParams& p) {
  LstmParams z;
  z.hidden_size = p.hidden_size;
  const std::size_t H = p.hidden_size;
  for (GateParams* g : {&z.input_gate, &z.forget_gate, &z.output_gate, &z.candidate}) {
    g->w_in.assign(H, 0.0);
    g->u_rec.assign(H * H, 0.0);
    g->bias.assign(H, 0.0);
  }
  z.readout_w.assign(H, 0.0);
  z.readout_b = 0.0;
  return z;
}

void axpy_params(LstmParams& acc, const LstmParams& g, double scale) {
  auto axpy = [scale](std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
  };
  const GateParams* src[] = {&g.input_gate, &g.forget_gate, &g.output_gate, &g.candidate};
  GateParams* dst[] = {&acc.input_gate, &acc.forget_gate, &acc.output_gate, &acc.candidate};
  for (int k = 0; k < 4; ++k) {
    axpy(dst[k]->w_in, src[k]->w_in);
    axpy(dst[k]->u_rec, src[k]->u_rec);
    axpy(dst[k]->bias, src[k]->bias);
  }
  axpy(acc.readout_w, g.readout_w);
  acc.readout_b += scale * g.readout_b;
}

double param_norm(const LstmParams& p) {
  double sq = 0.0;
  for (double v : p.flatten()) sq += v * v;
  return std::sqrt(sq);
}

}  // namespace

void LstmConfig::validate() const {
  if (hidden_size < 1) throw Error(Errc::invalid_config, "hidden_size must be at least 1");
  if (window < 1) throw Error(Errc::invalid_config, "window must be at least 1");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw Error(Errc::invalid_config, "learning_rate must be positive");
  }
  if (epochs < 1) throw Error(Errc::invalid_config, "epochs must be at least 1");
  if (!(grad_clip_norm > 0.0)) {
    throw Error(Errc::invalid_config, "grad_clip_norm must be positive");
  }
}

std::size_t LstmParams::scalar_count() const noexcept {
  const std::size_t H = hidden_size;
  return 4 * (H + H * H + H) + H + 1;
}

std::vector<double> LstmParams::flatten() const {
  std::vector<double> flat;
  flat.reserve(scalar_count());
  for (const GateParams* g : {&input_gate, &forget_gate, &output_gate, &candidate}) {
    flat.insert(flat.end(), g->w_in.begin(), g->w_in.end());
    flat.insert(flat.end(), g->u_rec.begin(), g->u_rec.end());
    flat.insert(flat.end(), g->bias.begin(), g->bias.end());
  }
  flat.insert(flat.end(), readout_w.begin(), readout_w.end());
  flat.push_back(readout_b);
  return flat;
}

LstmParams LstmParams::unflatten(std::size_t hidden_size, std::span<const double> flat) {
  LstmParams p;
  p.hidden_size = hidden_size;
  const std::size_t H = hidden_size;
  if (flat.size() != 4 * (H + H * H + H) + H + 1) {
    throw Error(Errc::dimension_mismatch, "flat parameter vector has the wrong length");
  }
  std::size_t pos = 0;
  auto take = [&](std::size_t count) {
    std::vector<double> out(flat.begin() + static_cast<std::ptrdiff_t>(pos),
                            flat.begin() + static_cast<std::ptrdiff_t>(pos + count));
    pos += count;
    return out;
  };
  for (GateParams* g : {&p.input_gate, &p.forget_gate, &p.output_gate, &p.candidate}) {
    g->w_in = take(H);
    g->u_rec = take(H * H);
    g->bias = take(H);
  }
  p.readout_w = take(H);
  p.readout_b = flat[pos];
  return p;
}

LstmParams lstm_init(const LstmConfig& cfg) {
  cfg.validate();
  const std::size_t H = cfg.hidden_size;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> dist(-0.1, 0.1);

  LstmParams p;
  p.hidden_size = H;
  for (GateParams* g : {&p.input_gate, &p.forget_gate, &p.output_gate, &p.candidate}) {
    g->w_in.resize(H);
    for (double& w : g->w_in) w = dist(rng);
    g->u_rec.resize(H * H);
    for (double& w : g->u_rec) w = dist(rng);
    g->bias.assign(H, 0.0);
  }
  p.readout_w.resize(H);
  for (double& w : p.readout_w) w = dist(rng);
  p.readout_b = 0.0;
  std::fill(p.forget_gate.bias.begin(), p.forget_gate.bias.end(), 1.0);
  return p;
}

LstmForward lstm_forward(const LstmParams& params, std::span<const double> window) {
  const ForwardTrace trace = forward_trace(params, window);
  LstmForward out;
  out.prediction = trace.prediction;
  out.states.reserve(trace.steps.size());
  for (const StepTrace& step : trace.steps) {
    out.states.push_back(LstmState{step.h, step.c});
  }
  return out;
}

LstmGradients lstm_grads(const LstmParams& params, std::span<const double> window,
                         double target) {
  const ForwardTrace trace = forward_trace(params, window);
  const std::size_t H = params.hidden_size;
  const std::size_t P = trace.steps.size();

  LstmGradients out;
  out.grad = zero_like(params);
  const double err = trace.prediction - target;
  out.loss = err * err;

  const double dpred = 2.0 * err;
  out.grad.readout_b = dpred;

  std::vector<double> dh(H, 0.0);
  std::vector<double> dc(H, 0.0);
  const std::vector<double>& h_last = trace.steps.back().h;
  for (std::size_t r = 0; r < H; ++r) {
    out.grad.readout_w[r] = dpred * h_last[r];
    dh[r] = dpred * params.readout_w[r];
  }

  std::vector<double> dh_prev(H), da_i(H), da_f(H), da_o(H), da_g(H);
  for (std::size_t t = P; t-- > 0;) {
    const StepTrace& s = trace.steps[t];
    const std::vector<double>* h_prev = t > 0 ? &trace.steps[t - 1].h : nullptr;
    const std::vector<double>* c_prev = t > 0 ? &trace.steps[t - 1].c : nullptr;

    for (std::size_t r = 0; r < H; ++r) {
      const double do_r = dh[r] * s.tanh_c[r];
      da_o[r] = do_r * s.o[r] * (1.0 - s.o[r]);
      dc[r] += dh[r] * s.o[r] * (1.0 - s.tanh_c[r] * s.tanh_c[r]);

      const double di_r = dc[r] * s.g[r];
      da_i[r] = di_r * s.i[r] * (1.0 - s.i[r]);

      const double cp = c_prev ? (*c_prev)[r] : 0.0;
      const double df_r = dc[r] * cp;
      da_f[r] = df_r * s.f[r] * (1.0 - s.f[r]);

      const double dg_r = dc[r] * s.i[r];
      da_g[r] = dg_r * (1.0 - s.g[r] * s.g[r]);
    }

    const GateParams* gates[] = {&params.input_gate, &params.forget_gate, &params.output_gate,
                                 &params.candidate};
    GateParams* grads[] = {&out.grad.input_gate, &out.grad.forget_gate, &out.grad.output_gate,
                           &out.grad.candidate};
    const std::vector<double>* das[] = {&da_i, &da_f, &da_o, &da_g};

    std::fill(dh_prev.begin(), dh_prev.end(), 0.0);
    for (int k = 0; k < 4; ++k) {
      const std::vector<double>& da = *das[k];
      GateParams& grad = *grads[k];
      const GateParams& gate = *gates[k];
      for (std::size_t r = 0; r < H; ++r) {
        grad.w_in[r] += da[r] * s.x;
        grad.bias[r] += da[r];
        if (h_prev) {
          double* grow = grad.u_rec.data() + r * H;
          for (std::size_t j = 0; j < H; ++j) grow[j] += da[r] * (*h_prev)[j];
        }
        const double* row = gate.u_rec.data() + r * H;
        for (std::size_t j = 0; j < H; ++j) dh_prev[j] += row[j] * da[r];
      }
    }

    if (t > 0) {
      for (std::size_t r = 0; r < H; ++r) {
        dc[r] *= s.f[r];
        dh[r] = dh_prev[r];
      }
    }
  }
  return out;
}

LstmModel lstm_train(std::span<const double> train, const LstmConfig& cfg) {
  cfg.validate();
  if (train.size() <= cfg.window) {
    throw Error(Errc::series_too_short,
                "training needs more than " + std::to_string(cfg.window) + " observations");
  }

  LstmModel model;
  model.window = cfg.window;
  model.normalizer = fit_normalizer(train);
  std::vector<double> scaled(train.size());
  for (std::size_t t = 0; t < train.size(); ++t) scaled[t] = normalize(train[t], model.normalizer);

  model.params = lstm_init(cfg);
  const std::size_t pairs = train.size() - cfg.window;
  model.epoch_loss.reserve(cfg.epochs);

  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    LstmParams grad_sum = zero_like(model.params);
    double loss_sum = 0.0;
    for (std::size_t s = 0; s < pairs; ++s) {
      const std::span<const double> window(scaled.data() + s, cfg.window);
      LstmGradients g = lstm_grads(model.params, window, scaled[s + cfg.window]);
      axpy_params(grad_sum, g.grad, 1.0);
      loss_sum += g.loss;
    }
    const double inv = 1.0 / static_cast<double>(pairs);
    LstmParams grad = zero_like(model.params);
    axpy_params(grad, grad_sum, inv);

    const double norm = param_norm(grad);
    double scale = 1.0;
    if (norm > cfg.grad_clip_norm) scale = cfg.grad_clip_norm / norm;
    axpy_params(model.params, grad, -cfg.learning_rate * scale);

    model.epoch_loss.push_back(loss_sum * inv);
  }
  return model;
}

double lstm_predict_next(const LstmParams& params, const NormalizerParams& normalizer,
                         std::span<const double> recent) {
  std::vector<double> scaled(recent.size());
  for (std::size_t t = 0; t < recent.size(); ++t) scaled[t] = normalize(recent[t], normalizer);
  const LstmForward fwd = lstm_forward(params, scaled);
  return denormalize(fwd.prediction, normalizer);
}

double lstm_predict_next(const LstmModel& model, std::span<const double> recent) {
  if (recent.size() != model.window) {
    throw Error(Errc::window_length_mismatch,
                "expected the last " + std::to_string(model.window) + " observations, got " +
                    std::to_string(recent.size()));
  }
  return lstm_predict_next(model.params, model.normalizer, recent);
}

}  // namespace convcast
