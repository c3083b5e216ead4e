#ifndef OFFEVAL_TESTS_TOY_DATA_HPP
#define OFFEVAL_TESTS_TOY_DATA_HPP

#include <cmath>
#include <vector>

#include "offeval/label.hpp"
#include "offeval/random.hpp"
#include "offeval/vectorizer.hpp"

namespace toy {

struct Set {
  std::vector<offeval::SparseVector> X;
  std::vector<offeval::Label> y;
  std::size_t dim = 0;
};

inline offeval::SparseVector dense(const std::vector<double>& v) {
  std::vector<offeval::SparseEntry> e;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0.0) e.push_back({i, v[i]});
  return offeval::SparseVector(std::move(e));
}

/// (+1 at e1) and (-1 at -e1), each repeated `copies` times, in 2D.
inline Set plus_minus_e1(int copies = 10, double scale = 1.0) {
  Set s;
  s.dim = 2;
  for (int i = 0; i < copies; ++i) {
    s.X.push_back(dense({scale, 0.0}));
    s.y.push_back(offeval::Label::OFF);
    s.X.push_back(dense({-scale, 0.0}));
    s.y.push_back(offeval::Label::NOT);
  }
  return s;
}

/// Points in [-1,1]^dim labeled by a random hyperplane, keeping only points
/// at distance >= gap from it. Both classes are always present.
inline Set separable(offeval::Rng& rng, std::size_t n, std::size_t dim, double gap = 0.1) {
  for (;;) {
    std::vector<double> w(dim);
    double norm = 0;
    for (auto& c : w) {
      c = rng.uniform(-1, 1);
      norm += c * c;
    }
    norm = std::sqrt(norm);
    for (auto& c : w) c /= norm;
    const double b = rng.uniform(-0.3, 0.3);
    Set s;
    s.dim = dim;
    int off = 0;
    for (int attempts = 0; s.X.size() < n && attempts < 100000; ++attempts) {
      std::vector<double> x(dim);
      double m = b;
      for (std::size_t k = 0; k < dim; ++k) {
        x[k] = rng.uniform(-1, 1);
        m += w[k] * x[k];
      }
      if (std::abs(m) < gap) continue;
      s.X.push_back(dense(x));
      s.y.push_back(m > 0 ? offeval::Label::OFF : offeval::Label::NOT);
      off += m > 0;
    }
    if (off > 0 && off < static_cast<int>(s.X.size())) return s;
  }
}

/// XOR on {0,1}^2 shifted so every coordinate is nonzero: (+-1, +-1).
inline Set xor_set() {
  Set s;
  s.dim = 2;
  const double pts[4][2] = {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
  for (auto& p : pts) {
    s.X.push_back(dense({p[0], p[1]}));
    s.y.push_back((p[0] > 0) != (p[1] > 0) ? offeval::Label::OFF : offeval::Label::NOT);
  }
  return s;
}

template <class Model, class Predict>
double accuracy(const Model& m, const Set& s, Predict predict) {
  std::size_t ok = 0;
  for (std::size_t i = 0; i < s.X.size(); ++i) ok += predict(m, s.X[i]).label == s.y[i];
  return double(ok) / double(s.X.size());
}

} // namespace toy

#endif
