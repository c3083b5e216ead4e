#ifndef OFFEVAL_VECTORIZER_HPP
#define OFFEVAL_VECTORIZER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "offeval/errors.hpp"
#include "offeval/preprocess.hpp"

namespace offeval {

struct NgramRange {
  int n_min = 1;
  int n_max = 3;

  bool operator==(const NgramRange&) const = default;
};

inline void validate(const NgramRange& r) {
  if (r.n_min < 1 || r.n_max < r.n_min)
    throw UsageError("invalid n-gram range (" + std::to_string(r.n_min) + ", " +
                     std::to_string(r.n_max) + ")");
}

struct SparseEntry {
  std::size_t index;
  double weight;

  bool operator==(const SparseEntry&) const = default;
};

/// Sorted (index, weight) pairs with no explicit zeros.
class SparseVector {
public:
  SparseVector() = default;

  /// Entries must already be sorted by strictly increasing index.
  explicit SparseVector(std::vector<SparseEntry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 1; i < entries_.size(); ++i)
      if (entries_[i - 1].index >= entries_[i].index)
        throw std::invalid_argument("SparseVector indices must be strictly increasing");
    std::erase_if(entries_, [](const SparseEntry& e) { return e.weight == 0.0; });
  }

  std::span<const SparseEntry> entries() const noexcept { return entries_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// One past the largest stored index (0 when empty).
  std::size_t extent() const noexcept { return empty() ? 0 : entries_.back().index + 1; }

  double norm() const noexcept {
    double s = 0.0;
    for (const auto& e : entries_) s += e.weight * e.weight;
    return std::sqrt(s);
  }

  double dot(std::span<const double> dense) const {
    double s = 0.0;
    for (const auto& e : entries_) s += e.weight * dense[e.index];
    return s;
  }

  SparseVector scaled(double c) const {
    SparseVector out = *this;
    for (auto& e : out.entries_) e.weight *= c;
    std::erase_if(out.entries_, [](const SparseEntry& e) { return e.weight == 0.0; });
    return out;
  }

  bool operator==(const SparseVector&) const = default;

private:
  std::vector<SparseEntry> entries_;
};

/// Every contiguous n-token window for n in [n_min, n_max], grouped by n,
/// each group in left-to-right order. Tokens are joined by a single space.
inline std::vector<std::string> extract_ngrams(const TokenSequence& tokens,
                                               NgramRange range = {}) {
  validate(range);
  std::vector<std::string> out;
  const auto k = static_cast<int>(tokens.size());
  for (int n = range.n_min; n <= range.n_max; ++n) {
    for (int start = 0; start + n <= k; ++start) {
      std::string g = tokens[static_cast<std::size_t>(start)];
      for (int j = 1; j < n; ++j) {
        g += ' ';
        g += tokens[static_cast<std::size_t>(start + j)];
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

/// Word n-gram TF-IDF space. Weight of term t in a document is
/// count(t) * (ln((1 + N) / (1 + df(t))) + 1), then the vector is L2-normalized.
/// Column indices follow lexicographic (byte) order of the n-gram strings.
class TfidfVectorizer {
public:
  TfidfVectorizer() = default;

  /// Rebuilds a fitted vectorizer from stored state (used when loading models).
  TfidfVectorizer(std::vector<std::string> terms, std::vector<double> idf, NgramRange range,
                  std::size_t doc_count)
      : terms_(std::move(terms)), idf_(std::move(idf)), range_(range), doc_count_(doc_count) {
    validate(range_);
    if (terms_.size() != idf_.size())
      throw DataError("vocabulary and idf table differ in size");
    if (!std::is_sorted(terms_.begin(), terms_.end()) ||
        std::adjacent_find(terms_.begin(), terms_.end()) != terms_.end())
      throw DataError("vocabulary terms must be strictly sorted");
    for (double w : idf_)
      if (!(w > 0.0) || !std::isfinite(w)) throw DataError("idf values must be positive");
    build_index();
  }

  static TfidfVectorizer fit(const std::vector<TokenSequence>& corpus, NgramRange range = {}) {
    validate(range);
    if (corpus.empty()) throw DataError("cannot fit a vectorizer on an empty corpus");
    std::map<std::string, std::size_t> df;
    for (const auto& doc : corpus) {
      auto grams = extract_ngrams(doc, range);
      std::sort(grams.begin(), grams.end());
      grams.erase(std::unique(grams.begin(), grams.end()), grams.end());
      for (auto& g : grams) ++df[std::move(g)];
    }
    TfidfVectorizer v;
    v.range_ = range;
    v.doc_count_ = corpus.size();
    v.terms_.reserve(df.size());
    v.idf_.reserve(df.size());
    const double n = static_cast<double>(corpus.size());
    for (const auto& [term, count] : df) {
      v.terms_.push_back(term);
      v.idf_.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(count))) + 1.0);
    }
    v.build_index();
    return v;
  }

  SparseVector transform(const TokenSequence& tokens) const {
    std::map<std::size_t, double> counts;
    for (const auto& g : extract_ngrams(tokens, range_)) {
      if (auto idx = index_of(g)) counts[*idx] += 1.0;
    }
    std::vector<SparseEntry> entries;
    entries.reserve(counts.size());
    double sq = 0.0;
    for (const auto& [idx, tf] : counts) {
      const double w = tf * idf_[idx];
      entries.push_back({idx, w});
      sq += w * w;
    }
    if (sq > 0.0) {
      const double inv = 1.0 / std::sqrt(sq);
      for (auto& e : entries) e.weight *= inv;
    }
    return SparseVector(std::move(entries));
  }

  std::vector<SparseVector> transform_corpus(const std::vector<TokenSequence>& corpus) const {
    std::vector<SparseVector> out;
    out.reserve(corpus.size());
    for (const auto& doc : corpus) out.push_back(transform(doc));
    return out;
  }

  std::optional<std::size_t> index_of(const std::string& term) const {
    auto it = index_.find(term);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<std::string>& terms() const noexcept { return terms_; }
  const std::vector<double>& idf() const noexcept { return idf_; }
  NgramRange range() const noexcept { return range_; }
  std::size_t doc_count() const noexcept { return doc_count_; }

  bool operator==(const TfidfVectorizer& o) const {
    return terms_ == o.terms_ && idf_ == o.idf_ && range_ == o.range_ &&
           doc_count_ == o.doc_count_;
  }

private:
  void build_index() {
    index_.clear();
    index_.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i], i);
  }

  std::vector<std::string> terms_;
  std::vector<double> idf_;
  NgramRange range_{};
  std::size_t doc_count_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

} // namespace offeval

#endif
