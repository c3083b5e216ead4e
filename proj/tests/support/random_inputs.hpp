#ifndef OFFEVAL_TESTS_RANDOM_INPUTS_HPP
#define OFFEVAL_TESTS_RANDOM_INPUTS_HPP

#include <string>
#include <vector>

#include "offeval/mlp.hpp"
#include "offeval/random.hpp"
#include "offeval/unicode.hpp"
#include "support/toy_data.hpp"

namespace random_inputs {

// Random strings over a pool mixing Arabic, Latin, digits, punctuation,
// emoji, whitespace, placeholder fragments and repeated letters.
inline std::string text(offeval::Rng& rng) {
  static const std::vector<std::string> pool = {
      "ا", "ب", "و", "ك", "ل", "a", "B", "U", "R", "L", "S", "E", "@", "<", ">", "F",
      "@USER", "URL", "<LF>", "0", "٥", "۳", "!", "؟", "،", "_", "#", "$", "😂", " ", "  ",
      "\t", "\n", " ", "ـ", "ً", "‍", "ووو", "aaaa", "é", "中"};
  std::string s;
  const auto n = rng.below(40);
  for (std::uint64_t i = 0; i < n; ++i) s += pool[rng.below(pool.size())];
  return s;
}

// Random valid scalar values, surrogates excluded.
inline std::string codepoints(offeval::Rng& rng) {
  std::u32string s;
  const auto n = rng.below(30);
  for (std::uint64_t i = 0; i < n; ++i) {
    char32_t c;
    do c = static_cast<char32_t>(rng.below(rng.bernoulli(0.7) ? 0x800 : 0x110000));
    while (c >= 0xD800 && c <= 0xDFFF);
    s.push_back(c);
  }
  return offeval::unicode::encode(s);
}

inline offeval::MlpModel mlp_model(offeval::Rng& rng, std::size_t in, std::size_t h) {
  offeval::MlpModel m(in, h);
  for (auto& w : m.hidden_weights) w = rng.uniform(-1, 1);
  for (auto& w : m.hidden_bias) w = rng.uniform(-1, 1);
  for (auto& w : m.output_weights) w = rng.uniform(-1, 1);
  m.output_bias = rng.uniform(-1, 1);
  return m;
}

inline toy::Set sparse_set(offeval::Rng& rng, std::size_t n, std::size_t dim) {
  toy::Set s;
  s.dim = dim;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x(dim, 0.0);
    for (auto& v : x)
      if (rng.bernoulli(0.5)) v = rng.uniform(-1, 1);
    s.X.push_back(toy::dense(x));
    s.y.push_back(rng.bernoulli(0.5) ? offeval::Label::OFF : offeval::Label::NOT);
  }
  return s;
}

// Visits every parameter by reference, in a fixed order.
template <class F>
void for_each_param(offeval::MlpModel& m, F f) {
  for (auto& w : m.hidden_weights) f(w);
  for (auto& w : m.hidden_bias) f(w);
  for (auto& w : m.output_weights) f(w);
  f(m.output_bias);
}

} // namespace random_inputs

#endif
