#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "offeval/random.hpp"
#include "offeval/vectorizer.hpp"
#include "support/oracles.hpp"

using namespace offeval;

namespace {
const TokenSequence kSentence = {"الدورى", "يا", "زمالك"};
}

TEST(ExtractNgrams, WorkedSentenceYieldsSixFeatures) {
  const auto grams = extract_ngrams(kSentence, {1, 3});
  const std::set<std::string> got(grams.begin(), grams.end());
  const std::set<std::string> want = {"الدورى", "يا", "زمالك", "الدورى يا", "يا زمالك",
                                      "الدورى يا زمالك"};
  EXPECT_EQ(grams.size(), 6u);
  EXPECT_EQ(got, want);
}

TEST(ExtractNgrams, ShortInputs) {
  EXPECT_EQ(extract_ngrams({"a"}, {1, 3}), (std::vector<std::string>{"a"}));
  EXPECT_EQ(extract_ngrams({"a", "b"}, {1, 3}), (std::vector<std::string>{"a", "b", "a b"}));
  EXPECT_TRUE(extract_ngrams({}, {1, 3}).empty());
  EXPECT_EQ(extract_ngrams({"a", "b", "c"}, {2, 2}), (std::vector<std::string>{"a b", "b c"}));
  EXPECT_THROW(extract_ngrams({"a"}, {0, 2}), UsageError);
  EXPECT_THROW(extract_ngrams({"a"}, {3, 2}), UsageError);
}

TEST(ExtractNgrams, CountMatchesBruteForce) {
  for (int k = 0; k <= 10; ++k) {
    TokenSequence toks;
    for (int i = 0; i < k; ++i) toks.push_back("t" + std::to_string(i % 4));
    for (int lo = 1; lo <= 3; ++lo)
      for (int hi = lo; hi <= 4; ++hi) {
        auto fast = extract_ngrams(toks, {lo, hi});
        auto slow = oracle::ngrams_brute(toks, lo, hi);
        EXPECT_EQ(fast, slow);
        std::size_t expected = 0;
        for (int n = lo; n <= hi; ++n) expected += static_cast<std::size_t>(std::max(0, k - n + 1));
        EXPECT_EQ(fast.size(), expected);
      }
    if (k >= 3) EXPECT_EQ(extract_ngrams(toks, {1, 3}).size(), static_cast<std::size_t>(3 * k - 3));
  }
}

TEST(TfidfFit, IdenticalDocumentsGiveUnitIdf) {
  const auto v = TfidfVectorizer::fit({{"a"}, {"a"}});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.index_of("a"), 0u);
  EXPECT_DOUBLE_EQ(v.idf()[0], 1.0);
  EXPECT_EQ(v.doc_count(), 2u);
}

TEST(TfidfFit, DistinctDocuments) {
  const auto v = TfidfVectorizer::fit({{"a"}, {"b"}});
  ASSERT_EQ(v.size(), 2u);
  // ln(3/2) + 1, evaluated independently
  EXPECT_NEAR(v.idf()[0], 1.4054651081081644, 1e-15);
  EXPECT_NEAR(v.idf()[1], 1.4054651081081644, 1e-15);
}

TEST(TfidfFit, WorkedSentenceVocabulary) {
  const auto v = TfidfVectorizer::fit({kSentence});
  EXPECT_EQ(v.size(), 6u);
  EXPECT_TRUE(std::is_sorted(v.terms().begin(), v.terms().end()));
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v.index_of(v.terms()[i]), i);
}

TEST(TfidfFit, EmptyCorpusRejected) {
  EXPECT_THROW(TfidfVectorizer::fit({}), DataError);
}

TEST(TfidfTransform, UniformWeightsOnOwnDocument) {
  const auto v = TfidfVectorizer::fit({kSentence});
  const auto x = v.transform(kSentence);
  ASSERT_EQ(x.nnz(), 6u);
  for (const auto& e : x.entries()) EXPECT_NEAR(e.weight, 0.4082482904638631, 1e-12);
}

TEST(TfidfTransform, OutOfVocabularyAndEmpty) {
  const auto v = TfidfVectorizer::fit({kSentence});
  EXPECT_TRUE(v.transform({"zzz"}).empty());
  EXPECT_TRUE(v.transform({}).empty());
  // Known unigram inside unknown context keeps only the known feature.
  const auto x = v.transform({"zzz", "يا"});
  ASSERT_EQ(x.nnz(), 1u);
  EXPECT_EQ(x.entries()[0].index, *v.index_of("يا"));
  EXPECT_DOUBLE_EQ(x.entries()[0].weight, 1.0);
}

TEST(TfidfTransform, HandComputedWeights) {
  // df(a)=2, df(b)=1, N=2: idf(a)=1, idf(b)=ln(3/2)+1
  const auto v = TfidfVectorizer::fit({{"a", "b"}, {"a"}}, {1, 1});
  const auto x = v.transform({"a", "a", "b"});
  const double wa = 2.0 * 1.0, wb = 1.0 * (std::log(1.5) + 1.0);
  const double n = std::sqrt(wa * wa + wb * wb);
  ASSERT_EQ(x.nnz(), 2u);
  EXPECT_NEAR(x.entries()[0].weight, wa / n, 1e-12);
  EXPECT_NEAR(x.entries()[1].weight, wb / n, 1e-12);
}

TEST(TfidfTransform, CorpusPreservesOrder) {
  const auto v = TfidfVectorizer::fit({{"a"}, {"b"}});
  EXPECT_TRUE(v.transform_corpus({}).empty());
  const auto xs = v.transform_corpus({{"b"}, {"a"}});
  ASSERT_EQ(xs.size(), 2u);
  EXPECT_EQ(xs[0], v.transform({"b"}));
  EXPECT_EQ(xs[1], v.transform({"a"}));
}

namespace {

std::vector<TokenSequence> random_corpus(Rng& rng, std::size_t docs) {
  std::vector<TokenSequence> c;
  for (std::size_t d = 0; d < docs; ++d) {
    TokenSequence t;
    const auto n = rng.below(12);
    for (std::uint64_t i = 0; i < n; ++i) t.push_back("w" + std::to_string(rng.below(15)));
    c.push_back(t);
  }
  return c;
}

} // namespace

TEST(TfidfProperty, UnitNormSortedSupportInVocab) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto corpus = random_corpus(rng, 1 + rng.below(20));
    const auto v = TfidfVectorizer::fit(corpus);
    for (double w : v.idf()) EXPECT_GT(w, 0.0);
    for (const auto& doc : corpus) {
      const auto x = v.transform(doc);
      if (x.empty()) {
        EXPECT_TRUE(doc.empty());
        continue;
      }
      EXPECT_NEAR(x.norm(), 1.0, 1e-9);
      EXPECT_LE(x.extent(), v.size());
      for (std::size_t i = 1; i < x.nnz(); ++i)
        EXPECT_LT(x.entries()[i - 1].index, x.entries()[i].index);
      for (const auto& e : x.entries()) EXPECT_NE(e.weight, 0.0);
    }
  }
}

namespace {

std::size_t doc_freq(const std::vector<TokenSequence>& corpus, const std::string& term) {
  std::size_t df = 0;
  for (const auto& doc : corpus) {
    const auto grams = oracle::ngrams_brute(doc, 1, 3);
    df += std::find(grams.begin(), grams.end(), term) != grams.end();
  }
  return df;
}

} // namespace

TEST(TfidfProperty, AddingDocumentNeverLowersDf) {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    auto corpus = random_corpus(rng, 1 + rng.below(10));
    const auto before = TfidfVectorizer::fit(corpus);
    const auto added = random_corpus(rng, 1).front();
    corpus.push_back(added);
    const auto after = TfidfVectorizer::fit(corpus);
    const auto added_grams = oracle::ngrams_brute(added, 1, 3);
    for (std::size_t i = 0; i < before.size(); ++i) {
      const auto& term = before.terms()[i];
      const auto j = after.index_of(term);
      ASSERT_TRUE(j.has_value());
      std::vector<TokenSequence> old(corpus.begin(), corpus.end() - 1);
      EXPECT_GE(doc_freq(corpus, term), doc_freq(old, term));
      // idf can only drop for terms the new document contains; for the rest
      // N grows while df stays, so the smoothed idf rises.
      if (std::find(added_grams.begin(), added_grams.end(), term) != added_grams.end())
        EXPECT_LE(after.idf()[*j], before.idf()[i]);
      else
        EXPECT_GT(after.idf()[*j], before.idf()[i]);
    }
  }
}

TEST(TfidfProperty, RepeatedUnigramDocumentIsScaleConsistent) {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto corpus = random_corpus(rng, 1 + rng.below(10));
    const auto v = TfidfVectorizer::fit(corpus, {1, 1});
    for (const auto& doc : corpus) {
      TokenSequence twice = doc;
      twice.insert(twice.end(), doc.begin(), doc.end());
      const auto a = v.transform(doc), b = v.transform(twice);
      ASSERT_EQ(a.nnz(), b.nnz());
      for (std::size_t i = 0; i < a.nnz(); ++i) {
        EXPECT_EQ(a.entries()[i].index, b.entries()[i].index);
        EXPECT_NEAR(a.entries()[i].weight, b.entries()[i].weight, 1e-12);
      }
    }
  }
  // Single distinct n-gram per order under the default range.
  const auto v = TfidfVectorizer::fit({{"a"}, {"b"}});
  EXPECT_EQ(v.transform({"a"}), v.transform({"a", "a"}));
}
