#ifndef OFFEVAL_BUNDLE_HPP
#define OFFEVAL_BUNDLE_HPP

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "offeval/ensemble.hpp"
#include "offeval/errors.hpp"
#include "offeval/preprocess.hpp"
#include "offeval/vectorizer.hpp"

// Model file layout (UTF-8 text, one item per line):
//
//   offeval-model
//   format_version 1
//   classifier <linear_sgd|svm|mlp|voting>
//   [config]            key value lines
//   [vectorizer]        doc_count, ngram range, then "<idf>\t<term>" per term
//   [member <kind>]     one section per base classifier
//   end
//
// Reals are written in shortest round-trip form, so a reloaded bundle
// predicts bit-identically.

namespace offeval {

inline constexpr int kModelFormatVersion = 1;

enum class ClassifierKind { linear_sgd, svm, mlp, voting };

inline constexpr std::string_view to_string(ClassifierKind k) noexcept {
  switch (k) {
    case ClassifierKind::linear_sgd: return "linear_sgd";
    case ClassifierKind::svm: return "svm";
    case ClassifierKind::mlp: return "mlp";
    case ClassifierKind::voting: return "voting";
  }
  return "?";
}

inline std::optional<ClassifierKind> parse_classifier_kind(std::string_view s) {
  if (s == "linear_sgd" || s == "linear") return ClassifierKind::linear_sgd;
  if (s == "svm") return ClassifierKind::svm;
  if (s == "mlp") return ClassifierKind::mlp;
  if (s == "voting") return ClassifierKind::voting;
  return std::nullopt;
}

/// Hyperparameters for every trainer, stored with the model.
struct TrainingConfig {
  NgramRange ngrams{};
  SgdConfig linear{};
  SgdConfig mlp{kDefaultMlpEpochs, 0.1, 1e-4, 42, true};
  int hidden = kDefaultHiddenSize;
  int batch = kDefaultMlpBatch;

  bool operator==(const TrainingConfig&) const = default;
};

struct BundleMember {
  ClassifierKind kind;
  Classifier model;
};

/// Fitted vectorizer plus trained classifier(s): everything needed to label raw text.
struct ModelBundle {
  int format_version = kModelFormatVersion;
  TfidfVectorizer vectorizer;
  ClassifierKind kind = ClassifierKind::linear_sgd;
  std::vector<BundleMember> members;
  TrainingConfig config;

  Prediction predict(const SparseVector& x) const {
    if (members.empty()) throw ModelFileError("model has no classifier");
    if (kind != ClassifierKind::voting) return offeval::predict(members.front().model, x);
    std::vector<Label> votes;
    votes.reserve(members.size());
    for (const auto& m : members) votes.push_back(offeval::predict(m.model, x).label);
    return vote_prediction(votes);
  }

  Prediction predict_tokens(const TokenSequence& tokens) const {
    return predict(vectorizer.transform(tokens));
  }

  Prediction predict_text(std::string_view text) const {
    return predict_tokens(preprocess(text));
  }
};

namespace detail {

inline void put_real(std::ostream& out, double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.write(buf, ptr - buf);
}

inline void put_vector(std::ostream& out, std::string_view key, const std::vector<double>& v) {
  out << key << ' ' << v.size() << '\n';
  for (double x : v) {
    put_real(out, x);
    out << '\n';
  }
}

class BundleReader {
public:
  explicit BundleReader(std::istream& in) : in_(in) {}

  [[noreturn]] void fail(const std::string& why) const {
    throw ModelFileError("unreadable model (line " + std::to_string(line_no_) + "): " + why);
  }

  std::string line() {
    std::string s;
    if (!std::getline(in_, s)) fail("unexpected end of file");
    ++line_no_;
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
  }

  void expect(std::string_view want) {
    if (line() != want) fail("expected '" + std::string(want) + "'");
  }

  /// Reads "key value" and returns value.
  std::string field(std::string_view key) {
    const std::string s = line();
    if (s.size() <= key.size() || s.compare(0, key.size(), key) != 0 || s[key.size()] != ' ')
      fail("expected field '" + std::string(key) + "'");
    return s.substr(key.size() + 1);
  }

  template <class T>
  T number(std::string_view text) const {
    T v{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
      fail("bad number '" + std::string(text) + "'");
    return v;
  }

  template <class T>
  T number_field(std::string_view key) {
    return number<T>(field(key));
  }

  std::vector<double> vector_field(std::string_view key, std::size_t expected) {
    const auto n = number_field<std::size_t>(key);
    if (n != expected) fail("'" + std::string(key) + "' has wrong length");
    std::vector<double> v(n);
    for (auto& x : v) x = number<double>(line());
    return v;
  }

private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

inline void write_sgd(std::ostream& out, std::string_view prefix, const SgdConfig& c) {
  out << prefix << ".epochs " << c.epochs << '\n';
  out << prefix << ".learning_rate ";
  put_real(out, c.learning_rate);
  out << '\n' << prefix << ".l2_alpha ";
  put_real(out, c.l2_alpha);
  out << '\n' << prefix << ".seed " << c.seed << '\n';
  out << prefix << ".shuffle " << (c.shuffle ? 1 : 0) << '\n';
}

inline SgdConfig read_sgd(BundleReader& r, const std::string& prefix) {
  SgdConfig c;
  c.epochs = r.number_field<int>(prefix + ".epochs");
  c.learning_rate = r.number_field<double>(prefix + ".learning_rate");
  c.l2_alpha = r.number_field<double>(prefix + ".l2_alpha");
  c.seed = r.number_field<std::uint64_t>(prefix + ".seed");
  c.shuffle = r.number_field<int>(prefix + ".shuffle") != 0;
  return c;
}

} // namespace detail

inline void save_bundle(std::ostream& out, const ModelBundle& b) {
  using detail::put_real;
  out << "offeval-model\n";
  out << "format_version " << b.format_version << '\n';
  out << "classifier " << to_string(b.kind) << '\n';

  out << "[config]\n";
  out << "ngram_min " << b.config.ngrams.n_min << '\n';
  out << "ngram_max " << b.config.ngrams.n_max << '\n';
  detail::write_sgd(out, "linear", b.config.linear);
  detail::write_sgd(out, "mlp", b.config.mlp);
  out << "mlp.hidden " << b.config.hidden << '\n';
  out << "mlp.batch " << b.config.batch << '\n';

  const auto& v = b.vectorizer;
  out << "[vectorizer]\n";
  out << "ngram_min " << v.range().n_min << '\n';
  out << "ngram_max " << v.range().n_max << '\n';
  out << "doc_count " << v.doc_count() << '\n';
  out << "terms " << v.size() << '\n';
  for (std::size_t i = 0; i < v.size(); ++i) {
    put_real(out, v.idf()[i]);
    out << '\t' << v.terms()[i] << '\n';
  }

  out << "members " << b.members.size() << '\n';
  for (const auto& m : b.members) {
    out << "[member " << to_string(m.kind) << "]\n";
    if (const auto* lin = std::get_if<LinearModel>(&m.model)) {
      out << "bias ";
      put_real(out, lin->bias);
      out << '\n';
      detail::put_vector(out, "weights", lin->weights);
    } else {
      const auto& mlp = std::get<MlpModel>(m.model);
      out << "input_dim " << mlp.input_dim << '\n';
      out << "hidden " << mlp.hidden << '\n';
      out << "output_bias ";
      put_real(out, mlp.output_bias);
      out << '\n';
      detail::put_vector(out, "output_weights", mlp.output_weights);
      detail::put_vector(out, "hidden_bias", mlp.hidden_bias);
      detail::put_vector(out, "hidden_weights", mlp.hidden_weights);
    }
  }
  out << "end\n";
}

inline ModelBundle load_bundle(std::istream& in) {
  detail::BundleReader r(in);
  ModelBundle b;
  if (r.line() != "offeval-model") r.fail("not an offeval model file");
  b.format_version = r.number_field<int>("format_version");
  if (b.format_version != kModelFormatVersion)
    throw ModelFileError("unsupported model format version " + std::to_string(b.format_version) +
                         " (expected " + std::to_string(kModelFormatVersion) + ")");
  const std::string kind_name = r.field("classifier");
  const auto kind = parse_classifier_kind(kind_name);
  if (!kind || to_string(*kind) != kind_name) r.fail("unknown classifier '" + kind_name + "'");
  b.kind = *kind;

  r.expect("[config]");
  b.config.ngrams.n_min = r.number_field<int>("ngram_min");
  b.config.ngrams.n_max = r.number_field<int>("ngram_max");
  b.config.linear = detail::read_sgd(r, "linear");
  b.config.mlp = detail::read_sgd(r, "mlp");
  b.config.hidden = r.number_field<int>("mlp.hidden");
  b.config.batch = r.number_field<int>("mlp.batch");

  r.expect("[vectorizer]");
  NgramRange range;
  range.n_min = r.number_field<int>("ngram_min");
  range.n_max = r.number_field<int>("ngram_max");
  const auto docs = r.number_field<std::size_t>("doc_count");
  const auto n_terms = r.number_field<std::size_t>("terms");
  std::vector<std::string> terms;
  std::vector<double> idf;
  terms.reserve(n_terms);
  idf.reserve(n_terms);
  for (std::size_t i = 0; i < n_terms; ++i) {
    const std::string s = r.line();
    const auto tab = s.find('\t');
    if (tab == std::string::npos) r.fail("vocabulary line without tab");
    idf.push_back(r.number<double>(std::string_view(s).substr(0, tab)));
    terms.push_back(s.substr(tab + 1));
  }
  try {
    b.vectorizer = TfidfVectorizer(std::move(terms), std::move(idf), range, docs);
  } catch (const std::exception& e) {
    r.fail(e.what());
  }
  const std::size_t dim = b.vectorizer.size();

  const auto n_members = r.number_field<std::size_t>("members");
  const std::size_t want = b.kind == ClassifierKind::voting ? n_members : 1;
  if (n_members == 0 || n_members != want) r.fail("wrong number of members");
  for (std::size_t i = 0; i < n_members; ++i) {
    const std::string header = r.line();
    const std::string_view prefix = "[member ";
    if (!header.starts_with(prefix) || !header.ends_with("]")) r.fail("expected member section");
    const auto mk = parse_classifier_kind(
        std::string_view(header).substr(prefix.size(), header.size() - prefix.size() - 1));
    if (!mk || *mk == ClassifierKind::voting) r.fail("bad member kind");
    if (b.kind != ClassifierKind::voting && *mk != b.kind) r.fail("member kind mismatch");
    if (*mk == ClassifierKind::mlp) {
      MlpModel m;
      m.input_dim = r.number_field<std::size_t>("input_dim");
      m.hidden = r.number_field<std::size_t>("hidden");
      if (m.input_dim != dim) r.fail("mlp input dimension does not match vocabulary");
      if (m.hidden < 1) r.fail("mlp hidden size must be >= 1");
      m.output_bias = r.number_field<double>("output_bias");
      m.output_weights = r.vector_field("output_weights", m.hidden);
      m.hidden_bias = r.vector_field("hidden_bias", m.hidden);
      m.hidden_weights = r.vector_field("hidden_weights", m.hidden * m.input_dim);
      b.members.push_back({*mk, std::move(m)});
    } else {
      LinearModel m;
      m.bias = r.number_field<double>("bias");
      m.weights = r.vector_field("weights", dim);
      b.members.push_back({*mk, std::move(m)});
    }
  }
  r.expect("end");
  return b;
}

inline void save_bundle(const std::filesystem::path& path, const ModelBundle& b) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ModelFileError("cannot write model '" + path.string() + "'");
  save_bundle(out, b);
  if (!out) throw ModelFileError("failed writing model '" + path.string() + "'");
}

inline ModelBundle load_bundle(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelFileError("unreadable model: cannot open '" + path.string() + "'");
  return load_bundle(in);
}

} // namespace offeval

#endif
