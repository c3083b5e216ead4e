#ifndef OFFEVAL_SVM_HPP
#define OFFEVAL_SVM_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "offeval/linear.hpp"

namespace offeval {

struct SvmOptions {
  double c = 1.0;
  double tolerance = 1e-4;
  int max_passes = 1000;
};

/// C matching the SGD objective: (alpha/2)|w|^2 + mean hinge  <=>  C = 1 / (alpha n).
inline SvmOptions svm_options_from(const SgdConfig& cfg, std::size_t n) {
  if (!(cfg.l2_alpha > 0.0)) throw UsageError("svm needs alpha > 0 to derive C");
  return {1.0 / (cfg.l2_alpha * static_cast<double>(n)), 1e-4, 1000};
}

namespace detail {

/// Dual coordinate descent for 0.5 |w|^2 + C sum max(0, 1 - y (w.x + bias))
/// with the bias held fixed. alpha and w are warm-start state, updated in place.
/// Coordinates are swept in index order; stops once the spread of projected
/// gradients over a full pass is below tolerance.
inline void dcd_fixed_bias(std::span<const SparseVector> X, std::span<const Label> y,
                           std::span<const double> qdiag, double bias, const SvmOptions& opts,
                           std::vector<double>& alpha, std::vector<double>& w) {
  const std::size_t n = X.size();
  for (int pass = 0; pass < opts.max_passes; ++pass) {
    double pg_max = -std::numeric_limits<double>::infinity();
    double pg_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const double yi = signed_target(y[i]);
      const double g = yi * (X[i].dot(w) + bias) - 1.0;
      double pg = g;
      if (alpha[i] == 0.0)
        pg = std::min(g, 0.0);
      else if (alpha[i] == opts.c)
        pg = std::max(g, 0.0);
      pg_max = std::max(pg_max, pg);
      pg_min = std::min(pg_min, pg);
      if (std::abs(pg) <= 1e-12) continue;
      const double old = alpha[i];
      if (qdiag[i] > 0.0)
        alpha[i] = std::clamp(old - g / qdiag[i], 0.0, opts.c);
      else
        alpha[i] = g < 0.0 ? opts.c : 0.0;  // empty x: objective linear in alpha_i
      const double d = (alpha[i] - old) * yi;
      for (const auto& e : X[i].entries()) w[e.index] += d * e.weight;
    }
    if (pg_max - pg_min < opts.tolerance) break;
  }
}

} // namespace detail

/// Linear SVM, 0.5 |w|^2 + C sum hinge, with an unregularized bias.
/// For a fixed bias the dual is solved by coordinate descent; the bias is the
/// root of sum_i alpha_i y_i (the dual equality constraint, and minus the
/// derivative of the optimal value in the bias), located by bisection.
inline LinearModel train_svm_linear(std::span<const SparseVector> X, std::span<const Label> y,
                                    std::size_t dim, const SvmOptions& opts) {
  check_training_set(X, y, dim);
  if (!(opts.c > 0.0)) throw UsageError("svm C must be positive");
  const std::size_t n = X.size();
  std::vector<double> qdiag(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double nx = X[i].norm();
    qdiag[i] = nx * nx;
  }
  std::vector<double> alpha(n, 0.0);
  std::vector<double> w(dim, 0.0);

  // Nonincreasing in the bias: positive far left, negative far right.
  auto balance = [&](double bias) {
    detail::dcd_fixed_bias(X, y, qdiag, bias, opts, alpha, w);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += alpha[i] * signed_target(y[i]);
    return s;
  };

  double lo = -1.0, hi = 1.0;
  while (balance(lo) < 0.0) lo *= 2.0;
  while (balance(hi) > 0.0) hi *= 2.0;
  double bias = 0.5 * (lo + hi);
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    bias = 0.5 * (lo + hi);
    const double s = balance(bias);
    if (s > 0.0)
      lo = bias;
    else if (s < 0.0)
      hi = bias;
    else
      break;
  }
  balance(bias);
  return {std::move(w), bias};
}

inline LinearModel train_svm_linear(std::span<const SparseVector> X, std::span<const Label> y,
                                    std::size_t dim, const SgdConfig& cfg = {}) {
  return train_svm_linear(X, y, dim, svm_options_from(cfg, X.size()));
}

} // namespace offeval

#endif
