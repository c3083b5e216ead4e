#ifndef OFFEVAL_ENSEMBLE_HPP
#define OFFEVAL_ENSEMBLE_HPP

#include <cstddef>
#include <span>
#include <type_traits>
#include <variant>
#include <vector>

#include "offeval/linear.hpp"
#include "offeval/mlp.hpp"

namespace offeval {

/// Any trained base predictor. Linear SGD and SVM share LinearModel.
using Classifier = std::variant<LinearModel, MlpModel>;

inline Prediction predict(const LinearModel& m, const SparseVector& x) {
  return predict_linear(m, x);
}
inline Prediction predict(const MlpModel& m, const SparseVector& x) { return predict_mlp(m, x); }

inline Prediction predict(const Classifier& c, const SparseVector& x) {
  return std::visit([&](const auto& m) { return predict(m, x); }, c);
}

inline std::size_t input_dim(const Classifier& c) {
  return std::visit(
      [](const auto& m) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, LinearModel>)
          return m.dim();
        else
          return m.input_dim;
      },
      c);
}

/// Majority label; an exact tie goes to NOT.
inline Label hard_vote(std::span<const Label> votes) {
  if (votes.empty()) throw UsageError("hard_vote needs at least one vote");
  std::size_t off = 0;
  for (Label l : votes) off += l == Label::OFF;
  return 2 * off > votes.size() ? Label::OFF : Label::NOT;
}

/// Label by hard_vote; score = (OFF votes) / |votes| - 0.5.
inline Prediction vote_prediction(std::span<const Label> votes) {
  const Label label = hard_vote(votes);
  std::size_t off = 0;
  for (Label l : votes) off += l == Label::OFF;
  return {label, static_cast<double>(off) / static_cast<double>(votes.size()) - 0.5};
}

/// Hard-voting combination of base classifiers over one feature space.
class VotingEnsemble {
public:
  explicit VotingEnsemble(std::vector<Classifier> members) : members_(std::move(members)) {
    if (members_.empty()) throw UsageError("voting ensemble needs at least one member");
    const std::size_t d = offeval::input_dim(members_.front());
    for (const auto& m : members_)
      if (offeval::input_dim(m) != d) throw DataError("ensemble members disagree on feature dimension");
  }

  Prediction predict(const SparseVector& x) const {
    std::vector<Label> votes;
    votes.reserve(members_.size());
    for (const auto& m : members_) votes.push_back(offeval::predict(m, x).label);
    return vote_prediction(votes);
  }

  const std::vector<Classifier>& members() const noexcept { return members_; }
  std::size_t input_dim() const { return offeval::input_dim(members_.front()); }

private:
  std::vector<Classifier> members_;
};

inline Prediction ensemble_predict(const VotingEnsemble& e, const SparseVector& x) {
  return e.predict(x);
}

} // namespace offeval

#endif
