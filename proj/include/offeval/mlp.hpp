#ifndef OFFEVAL_MLP_HPP
#define OFFEVAL_MLP_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "offeval/random.hpp"
#include "offeval/training.hpp"

namespace offeval {

inline constexpr int kDefaultHiddenSize = 60;
inline constexpr int kDefaultMlpBatch = 32;
inline constexpr int kDefaultMlpEpochs = 200;

inline double logistic(double z) noexcept {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

/// One hidden layer with logistic activation and a single logistic output.
/// hidden_weights is stored input-major: element (j, f) lives at f * hidden + j,
/// so a sparse input touches contiguous blocks.
struct MlpModel {
  std::size_t input_dim = 0;
  std::size_t hidden = 0;
  std::vector<double> hidden_weights;
  std::vector<double> hidden_bias;
  std::vector<double> output_weights;
  double output_bias = 0.0;

  MlpModel() = default;
  MlpModel(std::size_t in, std::size_t h)
      : input_dim(in), hidden(h), hidden_weights(in * h, 0.0), hidden_bias(h, 0.0),
        output_weights(h, 0.0) {}

  double& w1(std::size_t j, std::size_t f) { return hidden_weights[f * hidden + j]; }
  double w1(std::size_t j, std::size_t f) const { return hidden_weights[f * hidden + j]; }

  void check_shape() const {
    if (hidden < 1) throw DataError("mlp hidden size must be >= 1");
    if (hidden_weights.size() != input_dim * hidden || hidden_bias.size() != hidden ||
        output_weights.size() != hidden)
      throw DataError("mlp parameter shapes are inconsistent");
  }

  bool operator==(const MlpModel&) const = default;
};

struct MlpForward {
  std::vector<double> hidden;
  double logit = 0.0;
  double prob = 0.5;
};

/// w1_scale multiplies the stored hidden weights (the trainer keeps them scaled).
inline MlpForward mlp_forward(const MlpModel& m, const SparseVector& x, double w1_scale = 1.0) {
  check_dimension(x, m.input_dim);
  MlpForward out;
  out.hidden = m.hidden_bias;
  for (const auto& e : x.entries()) {
    const double* col = &m.hidden_weights[e.index * m.hidden];
    const double xw = e.weight * w1_scale;
    for (std::size_t j = 0; j < m.hidden; ++j) out.hidden[j] += xw * col[j];
  }
  out.logit = m.output_bias;
  for (std::size_t j = 0; j < m.hidden; ++j) {
    out.hidden[j] = logistic(out.hidden[j]);
    out.logit += m.output_weights[j] * out.hidden[j];
  }
  out.prob = logistic(out.logit);
  return out;
}

/// OFF iff p > 0.5; score = p - 0.5.
inline Prediction predict_mlp(const MlpModel& m, const SparseVector& x) {
  const double p = mlp_forward(m, x).prob;
  return {p > 0.5 ? Label::OFF : Label::NOT, p - 0.5};
}

/// Error signals of one example under binary cross-entropy (OFF = 1).
struct MlpDeltas {
  MlpForward fwd;
  double output = 0.0;        // dL/dlogit
  std::vector<double> hidden; // dL/d(pre-activation)
};

inline MlpDeltas mlp_backprop(const MlpModel& m, const SparseVector& x, Label label,
                              double w1_scale = 1.0) {
  MlpDeltas d;
  d.fwd = mlp_forward(m, x, w1_scale);
  const double target = label == Label::OFF ? 1.0 : 0.0;
  d.output = d.fwd.prob - target;
  d.hidden.resize(m.hidden);
  for (std::size_t j = 0; j < m.hidden; ++j) {
    const double a = d.fwd.hidden[j];
    d.hidden[j] = d.output * m.output_weights[j] * a * (1.0 - a);
  }
  return d;
}

/// Mean cross-entropy over the set plus (alpha/2)(|W1|^2 + |w2|^2).
inline double mlp_loss(const MlpModel& m, std::span<const SparseVector> X,
                       std::span<const Label> y, double alpha = 0.0) {
  double total = 0.0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    const double z = mlp_forward(m, X[i]).logit;
    const double target = y[i] == Label::OFF ? 1.0 : 0.0;
    // log(1 + e^z) - t z, computed without overflow
    const double softplus = z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
    total += softplus - target * z;
  }
  double loss = X.empty() ? 0.0 : total / static_cast<double>(X.size());
  if (alpha > 0.0) {
    double sq = 0.0;
    for (double w : m.hidden_weights) sq += w * w;
    for (double w : m.output_weights) sq += w * w;
    loss += 0.5 * alpha * sq;
  }
  return loss;
}

/// Gradient of mlp_loss, returned in the same layout as the model.
inline MlpModel mlp_gradient(const MlpModel& m, std::span<const SparseVector> X,
                             std::span<const Label> y, double alpha = 0.0) {
  MlpModel g(m.input_dim, m.hidden);
  const double inv = X.empty() ? 0.0 : 1.0 / static_cast<double>(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) {
    const auto d = mlp_backprop(m, X[i], y[i]);
    g.output_bias += inv * d.output;
    for (std::size_t j = 0; j < m.hidden; ++j) {
      g.output_weights[j] += inv * d.output * d.fwd.hidden[j];
      g.hidden_bias[j] += inv * d.hidden[j];
    }
    for (const auto& e : X[i].entries())
      for (std::size_t j = 0; j < m.hidden; ++j)
        g.hidden_weights[e.index * m.hidden + j] += inv * e.weight * d.hidden[j];
  }
  if (alpha > 0.0) {
    for (std::size_t k = 0; k < g.hidden_weights.size(); ++k)
      g.hidden_weights[k] += alpha * m.hidden_weights[k];
    for (std::size_t j = 0; j < m.hidden; ++j) g.output_weights[j] += alpha * m.output_weights[j];
  }
  return g;
}

/// Glorot-uniform weights in (-r, r), r = sqrt(6 / (fan_in + fan_out)); zero biases.
/// Draw order: hidden weights in storage order, then output weights.
inline MlpModel mlp_init(std::size_t input_dim, std::size_t hidden, Rng& rng) {
  MlpModel m(input_dim, hidden);
  const double r1 = std::sqrt(6.0 / static_cast<double>(input_dim + hidden));
  for (double& w : m.hidden_weights) w = rng.uniform(-r1, r1);
  const double r2 = std::sqrt(6.0 / static_cast<double>(hidden + 1));
  for (double& w : m.output_weights) w = rng.uniform(-r2, r2);
  return m;
}

/// Mini-batch SGD on mlp_loss with a constant step cfg.learning_rate.
/// One generator drives initialization, then the per-epoch shuffles.
inline MlpModel train_mlp(std::span<const SparseVector> X, std::span<const Label> y,
                          std::size_t dim, int hidden_size, const SgdConfig& cfg,
                          int batch_size = kDefaultMlpBatch) {
  validate(cfg);
  check_training_set(X, y, dim);
  if (hidden_size < 1) throw UsageError("hidden size must be >= 1");
  if (batch_size < 1) throw UsageError("batch size must be >= 1");

  const auto h = static_cast<std::size_t>(hidden_size);
  Rng rng(cfg.seed);
  MlpModel m = mlp_init(dim, h, rng);

  // hidden_weights = w1_scale * v; the L2 shrink only touches the scale.
  std::vector<double>& v = m.hidden_weights;
  double w1_scale = 1.0;
  const double eta = cfg.learning_rate;
  const double alpha = cfg.l2_alpha;
  if (eta * alpha >= 1.0) throw UsageError("learning rate * alpha must be < 1");

  std::vector<std::size_t> order(X.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<MlpDeltas> deltas;

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    if (cfg.shuffle) rng.shuffle(std::span(order));
    for (std::size_t start = 0; start < order.size(); start += static_cast<std::size_t>(batch_size)) {
      const std::size_t stop = std::min(order.size(), start + static_cast<std::size_t>(batch_size));
      const double inv = 1.0 / static_cast<double>(stop - start);

      deltas.clear();
      for (std::size_t k = start; k < stop; ++k)
        deltas.push_back(mlp_backprop(m, X[order[k]], y[order[k]], w1_scale));

      // Output layer.
      std::vector<double> g2(h, 0.0);
      double gb2 = 0.0;
      std::vector<double> gb1(h, 0.0);
      for (const auto& d : deltas) {
        gb2 += d.output;
        for (std::size_t j = 0; j < h; ++j) {
          g2[j] += d.output * d.fwd.hidden[j];
          gb1[j] += d.hidden[j];
        }
      }
      for (std::size_t j = 0; j < h; ++j) {
        m.output_weights[j] -= eta * (inv * g2[j] + alpha * m.output_weights[j]);
        m.hidden_bias[j] -= eta * inv * gb1[j];
      }
      m.output_bias -= eta * inv * gb2;

      // Hidden layer: shrink via the scale, then the sparse data gradient.
      if (alpha > 0.0) w1_scale *= (1.0 - eta * alpha);
      const double step = eta * inv / w1_scale;
      for (std::size_t k = start; k < stop; ++k) {
        const auto& d = deltas[k - start];
        for (const auto& e : X[order[k]].entries()) {
          double* col = &v[e.index * h];
          const double c = step * e.weight;
          for (std::size_t j = 0; j < h; ++j) col[j] -= c * d.hidden[j];
        }
      }
      if (w1_scale < 1e-6) {
        for (double& w : v) w *= w1_scale;
        w1_scale = 1.0;
      }
    }
  }
  if (w1_scale != 1.0)
    for (double& w : v) w *= w1_scale;
  return m;
}

} // namespace offeval

#endif
