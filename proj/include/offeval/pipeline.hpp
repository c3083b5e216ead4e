#ifndef OFFEVAL_PIPELINE_HPP
#define OFFEVAL_PIPELINE_HPP

#include <string>
#include <vector>

#include "offeval/bundle.hpp"
#include "offeval/corpus_io.hpp"
#include "offeval/metrics.hpp"
#include "offeval/svm.hpp"

namespace offeval {

inline std::vector<TokenSequence> preprocess_all(const Dataset& ds) {
  std::vector<TokenSequence> docs;
  docs.reserve(ds.size());
  for (const auto& ex : ds.examples) docs.push_back(preprocess(ex.text));
  return docs;
}

inline Classifier train_member(ClassifierKind kind, std::span<const SparseVector> X,
                               std::span<const Label> y, std::size_t dim,
                               const TrainingConfig& cfg) {
  switch (kind) {
    case ClassifierKind::linear_sgd: return train_linear_sgd(X, y, dim, cfg.linear);
    case ClassifierKind::svm: return train_svm_linear(X, y, dim, cfg.linear);
    case ClassifierKind::mlp: return train_mlp(X, y, dim, cfg.hidden, cfg.mlp, cfg.batch);
    case ClassifierKind::voting: break;
  }
  throw UsageError("voting is not a base classifier");
}

inline constexpr ClassifierKind kVotingMembers[] = {ClassifierKind::linear_sgd,
                                                    ClassifierKind::svm, ClassifierKind::mlp};

/// Fits the vectorizer on the training split and trains `kind`
/// (voting trains linear SGD, SVM and MLP).
inline ModelBundle train_bundle(const Dataset& train, ClassifierKind kind,
                                const TrainingConfig& cfg = {}) {
  const auto y = labels_of(train);
  ModelBundle b;
  b.kind = kind;
  b.config = cfg;
  const auto docs = preprocess_all(train);
  b.vectorizer = TfidfVectorizer::fit(docs, cfg.ngrams);
  const auto X = b.vectorizer.transform_corpus(docs);
  const std::size_t dim = b.vectorizer.size();
  if (kind == ClassifierKind::voting) {
    for (auto k : kVotingMembers) b.members.push_back({k, train_member(k, X, y, dim, cfg)});
  } else {
    b.members.push_back({kind, train_member(kind, X, y, dim, cfg)});
  }
  return b;
}

inline std::vector<Label> predict_labels(const ModelBundle& b, const Dataset& ds) {
  std::vector<Label> out;
  out.reserve(ds.size());
  for (const auto& ex : ds.examples) out.push_back(b.predict_text(ex.text).label);
  return out;
}

inline EvalReport evaluate_bundle(const ModelBundle& b, const Dataset& ds) {
  const auto gold = labels_of(ds);
  return evaluate(predict_labels(b, ds), gold);
}

struct CompareRow {
  std::string system;
  EvalReport report;
};

/// Trains the three base systems once, derives the voting ensemble from
/// them, and scores all four on `eval`. Rows: linear, svm, mlp, voting.
inline std::vector<CompareRow> run_compare(const Dataset& train, const Dataset& eval,
                                           const TrainingConfig& cfg = {}) {
  const auto y = labels_of(train);
  const auto gold = labels_of(eval);
  const auto docs = preprocess_all(train);
  const auto vec = TfidfVectorizer::fit(docs, cfg.ngrams);
  const auto X = vec.transform_corpus(docs);
  const auto Xe = vec.transform_corpus(preprocess_all(eval));

  std::vector<Classifier> members;
  std::vector<CompareRow> rows;
  const char* names[] = {"linear", "svm", "mlp"};
  for (std::size_t k = 0; k < 3; ++k) {
    members.push_back(train_member(kVotingMembers[k], X, y, vec.size(), cfg));
    std::vector<Label> preds;
    preds.reserve(Xe.size());
    for (const auto& x : Xe) preds.push_back(predict(members.back(), x).label);
    rows.push_back({names[k], evaluate(preds, gold)});
  }
  const VotingEnsemble ens(std::move(members));
  std::vector<Label> preds;
  preds.reserve(Xe.size());
  for (const auto& x : Xe) preds.push_back(ens.predict(x).label);
  rows.push_back({"voting", evaluate(preds, gold)});
  return rows;
}

inline std::string render_compare(const std::vector<CompareRow>& rows) {
  std::string out = "system   macro-F1  F1(OFF)   F1(NOT)\n";
  char buf[96];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-8s %.4f    %.4f    %.4f\n", r.system.c_str(),
                  r.report.macro_f1, r.report.off.f1, r.report.not_off.f1);
    out += buf;
  }
  return out;
}

} // namespace offeval

#endif
