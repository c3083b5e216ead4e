#ifndef OFFEVAL_TRAINING_HPP
#define OFFEVAL_TRAINING_HPP

#include <cstdint>
#include <span>
#include <string>

#include "offeval/errors.hpp"
#include "offeval/label.hpp"
#include "offeval/vectorizer.hpp"

namespace offeval {

/// Shared SGD hyperparameters. learning_rate is the initial step eta0.
struct SgdConfig {
  int epochs = 50;
  double learning_rate = 0.1;
  double l2_alpha = 1e-4;
  std::uint64_t seed = 42;
  bool shuffle = true;

  bool operator==(const SgdConfig&) const = default;
};

inline void validate(const SgdConfig& cfg) {
  if (cfg.epochs < 1) throw UsageError("epochs must be >= 1");
  if (!(cfg.learning_rate > 0.0)) throw UsageError("learning rate must be positive");
  if (!(cfg.l2_alpha >= 0.0)) throw UsageError("alpha must be nonnegative");
}

/// score > 0 means OFF for every classifier.
struct Prediction {
  Label label;
  double score;
};

/// Checks |X| = |y| >= 1, both classes present and every index < dim.
inline void check_training_set(std::span<const SparseVector> X, std::span<const Label> y,
                               std::size_t dim) {
  if (X.size() != y.size())
    throw DataError("feature/label count mismatch: " + std::to_string(X.size()) + " vs " +
                    std::to_string(y.size()));
  if (X.empty()) throw DataError("empty training set");
  bool off = false, nott = false;
  for (Label l : y) (l == Label::OFF ? off : nott) = true;
  if (!off || !nott) throw DataError("training set contains a single class");
  for (const auto& x : X)
    if (x.extent() > dim)
      throw DataError("dimension mismatch: feature index " + std::to_string(x.extent() - 1) +
                      " >= " + std::to_string(dim));
}

inline void check_dimension(const SparseVector& x, std::size_t dim) {
  if (x.extent() > dim)
    throw DataError("dimension mismatch: feature index " + std::to_string(x.extent() - 1) +
                    " out of range for model of dimension " + std::to_string(dim));
}

} // namespace offeval

#endif
