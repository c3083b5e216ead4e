#ifndef OFFEVAL_LINEAR_HPP
#define OFFEVAL_LINEAR_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "offeval/random.hpp"
#include "offeval/training.hpp"

namespace offeval {

struct LinearModel {
  std::vector<double> weights;
  double bias = 0.0;

  std::size_t dim() const noexcept { return weights.size(); }
  bool operator==(const LinearModel&) const = default;
};

/// score = w.x + b; OFF iff score > 0 (a zero score is NOT).
inline Prediction predict_linear(const LinearModel& m, const SparseVector& x) {
  check_dimension(x, m.dim());
  const double score = x.dot(m.weights) + m.bias;
  return {score > 0.0 ? Label::OFF : Label::NOT, score};
}

/// Online subgradient descent on (alpha/2)|w|^2 + max(0, 1 - y (w.x + b)).
/// Weights are kept as scale * v so the L2 shrink costs O(1) per step.
/// The bias is not regularized.
class LinearSgdTrainer {
public:
  LinearSgdTrainer(std::size_t dim, double alpha) : v_(dim, 0.0), alpha_(alpha) {}

  LinearSgdTrainer(const LinearModel& init, double alpha)
      : v_(init.weights), bias_(init.bias), alpha_(alpha) {}

  /// One update with step size eta; returns the margin y (w.x + b) seen before it.
  double step(const SparseVector& x, Label label, double eta) {
    const double y = signed_target(label);
    const double margin = y * (scale_ * x.dot(v_) + bias_);
    if (alpha_ > 0.0) {
      const double shrink = 1.0 - eta * alpha_;
      if (shrink <= 0.0) {
        std::fill(v_.begin(), v_.end(), 0.0);
        scale_ = 1.0;
      } else {
        scale_ *= shrink;
      }
    }
    if (margin < 1.0) {
      const double g = eta * y / scale_;
      for (const auto& e : x.entries()) v_[e.index] += g * e.weight;
      bias_ += eta * y;
    }
    if (scale_ < 1e-9) rescale();
    return margin;
  }

  LinearModel model() const {
    LinearModel m{v_, bias_};
    if (scale_ != 1.0)
      for (double& w : m.weights) w *= scale_;
    return m;
  }

private:
  void rescale() {
    for (double& w : v_) w *= scale_;
    scale_ = 1.0;
  }

  std::vector<double> v_;
  double scale_ = 1.0;
  double bias_ = 0.0;
  double alpha_;
};

/// Step size at update t (0-based): eta0 / (1 + eta0 * alpha * t).
inline double sgd_learning_rate(const SgdConfig& cfg, std::size_t t) {
  return cfg.learning_rate / (1.0 + cfg.learning_rate * cfg.l2_alpha * static_cast<double>(t));
}

/// Linear classifier trained by SGD with hinge loss. Examples are visited in a
/// fresh seeded permutation each epoch when cfg.shuffle is set.
inline LinearModel train_linear_sgd(std::span<const SparseVector> X, std::span<const Label> y,
                                    std::size_t dim, const SgdConfig& cfg = {}) {
  validate(cfg);
  check_training_set(X, y, dim);
  LinearSgdTrainer trainer(dim, cfg.l2_alpha);
  Rng rng(cfg.seed);
  std::vector<std::size_t> order(X.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::size_t t = 0;
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    if (cfg.shuffle) rng.shuffle(std::span(order));
    for (std::size_t i : order) trainer.step(X[i], y[i], sgd_learning_rate(cfg, t++));
  }
  return trainer.model();
}

} // namespace offeval

#endif
