#include <gtest/gtest.h>

#include "offeval/svm.hpp"
#include "support/toy_data.hpp"

using namespace offeval;

namespace {

std::vector<Label> labels_on(const LinearModel& m, const toy::Set& s) {
  std::vector<Label> out;
  for (const auto& x : s.X) out.push_back(predict_linear(m, x).label);
  return out;
}

SvmOptions with_c(double c) {
  SvmOptions o;
  o.c = c;
  return o;
}

} // namespace

TEST(TrainSvm, LargeCGivesUnitMarginOnEveryPoint) {
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    auto s = trial == 0 ? toy::plus_minus_e1(10) : toy::separable(rng, 30, 2, 0.2);
    const auto m = train_svm_linear(s.X, s.y, s.dim, with_c(100.0));
    for (std::size_t i = 0; i < s.X.size(); ++i) {
      const auto p = predict_linear(m, s.X[i]);
      EXPECT_EQ(p.label, s.y[i]);
      EXPECT_GE(signed_target(s.y[i]) * p.score, 1.0 - 1e-3);
    }
  }
}

TEST(TrainSvm, DuplicatedDataWithHalvedCKeepsDecisions) {
  Rng rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = toy::separable(rng, 25, 3, 0.0);
    toy::Set twice = s;
    twice.X.insert(twice.X.end(), s.X.begin(), s.X.end());
    twice.y.insert(twice.y.end(), s.y.begin(), s.y.end());
    const double c = 0.5 + trial;
    const auto a = train_svm_linear(s.X, s.y, s.dim, with_c(c));
    const auto b = train_svm_linear(twice.X, twice.y, twice.dim, with_c(c / 2));
    EXPECT_EQ(labels_on(a, s), labels_on(b, s));
  }
}

TEST(TrainSvm, SymmetricPairGivesWeightAlongE1) {
  const auto s = toy::plus_minus_e1(5);
  const auto m = train_svm_linear(s.X, s.y, s.dim, with_c(1.0));
  EXPECT_GT(m.weights[0], 0.0);
  EXPECT_NEAR(m.weights[1], 0.0, 1e-8);
  EXPECT_NEAR(m.bias, 0.0, 1e-8);
}

TEST(TrainSvm, CFromAlpha) {
  SgdConfig cfg;
  cfg.l2_alpha = 1e-4;
  EXPECT_DOUBLE_EQ(svm_options_from(cfg, 7000).c, 1.0 / 0.7);
  cfg.l2_alpha = 0.0;
  EXPECT_THROW(svm_options_from(cfg, 10), UsageError);
}

TEST(TrainSvm, RandomSeparableSetsReachFullAccuracy) {
  Rng rng(33);
  SgdConfig cfg;
  cfg.l2_alpha = 1e-4;
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = toy::separable(rng, 10 + rng.below(41), 2 + rng.below(4));
    const auto m = train_svm_linear(s.X, s.y, s.dim, cfg);
    EXPECT_EQ(toy::accuracy(m, s, [](const LinearModel& mm, const SparseVector& x) {
                return predict_linear(mm, x);
              }),
              1.0)
        << "trial " << trial;
  }
}

TEST(TrainSvm, InputScalingWithInverseSquareC) {
  Rng rng(34);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = toy::separable(rng, 20, 2, 0.0);
    for (double k : {0.5, 2.0, 4.0}) {
      toy::Set scaled = s;
      for (auto& x : scaled.X) x = x.scaled(k);
      const double c = 1.0;
      const auto a = train_svm_linear(s.X, s.y, s.dim, with_c(c));
      const auto b = train_svm_linear(scaled.X, scaled.y, s.dim, with_c(c / (k * k)));
      EXPECT_EQ(labels_on(a, s), labels_on(b, scaled)) << "trial " << trial << " k " << k;
    }
  }
}

TEST(TrainSvm, Deterministic) {
  Rng rng(35);
  const auto s = toy::separable(rng, 30, 3, 0.0);
  EXPECT_EQ(train_svm_linear(s.X, s.y, s.dim, with_c(2.0)),
            train_svm_linear(s.X, s.y, s.dim, with_c(2.0)));
}

TEST(TrainSvm, Errors) {
  const auto s = toy::plus_minus_e1(2);
  std::vector<Label> one(s.y.size(), Label::NOT);
  EXPECT_THROW(train_svm_linear(s.X, one, s.dim, with_c(1.0)), DataError);
  EXPECT_THROW(train_svm_linear(s.X, s.y, 0, with_c(1.0)), DataError);
  EXPECT_THROW(train_svm_linear(s.X, s.y, s.dim, with_c(0.0)), UsageError);
}
