#ifndef OFFEVAL_COMMANDS_HPP
#define OFFEVAL_COMMANDS_HPP

#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include "offeval/pipeline.hpp"

// Command implementations behind the `offeval` executable. Each returns the
// process exit code: 0 ok, 1 usage error, 2 data error, 3 model-file error.

namespace offeval::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kModel = 3 };

struct DataSource {
  std::filesystem::path path;
  Schema schema;
  bool has_header = true;
};

inline std::string defaults_table() {
  const TrainingConfig d;
  std::string s = "Hyperparameter defaults:\n";
  s += "  --ngram-min / --ngram-max  " + std::to_string(d.ngrams.n_min) + " / " +
       std::to_string(d.ngrams.n_max) + "\n";
  s += "  --epochs                   " + std::to_string(d.linear.epochs) + " (linear SGD), " +
       std::to_string(d.mlp.epochs) + " (MLP)\n";
  s += "  --lr                       0.1 (initial step; decays as lr/(1+lr*alpha*t) for linear SGD)\n";
  s += "  --alpha                    0.0001 (L2; SVM uses C = 1/(alpha*n))\n";
  s += "  --hidden                   " + std::to_string(d.hidden) + "\n";
  s += "  --batch                    " + std::to_string(d.batch) + " (MLP mini-batch)\n";
  s += "  --seed                     " + std::to_string(d.linear.seed) + "\n";
  s += "  SVM solver                 dual coordinate descent, tol 1e-4, max 1000 passes\n";
  return s;
}

/// Runs `body`, translating the error families into exit codes.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ModelFileError& e) {
    err << "error: " << e.what() << '\n';
    return kModel;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  }
}

inline Dataset load(const DataSource& src) {
  return load_tsv(src.path, src.schema, src.has_header);
}

inline void print_warnings(const EvalReport& r, std::ostream& err) {
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';
}

inline int cmd_stats(const DataSource& src, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!src.schema.has_label()) throw DataError("labels required: no label column configured");
    const auto c = dataset_stats(load(src));
    out << "OFF\t" << c.off << "\nNOT\t" << c.not_off << "\nTotal\t" << c.total << '\n';
    return kOk;
  });
}

/// One line per input: tokens joined by single spaces.
inline int cmd_preprocess(const std::optional<std::string>& text,
                          const std::optional<DataSource>& src, std::ostream& out,
                          std::ostream& err) {
  return guarded(err, [&] {
    if (text.has_value() == src.has_value())
      throw UsageError("preprocess needs exactly one of --text or an input file");
    if (text) {
      out << join_tokens(preprocess(*text)) << '\n';
      return kOk;
    }
    DataSource s = *src;
    s.schema.label_col.reset();
    for (const auto& ex : load(s).examples)
      out << ex.id << '\t' << join_tokens(preprocess(ex.text)) << '\n';
    return kOk;
  });
}

struct TrainArgs {
  DataSource data;
  std::string classifier = "linear";
  TrainingConfig config;
  std::filesystem::path out_model;
};

inline int cmd_train(const TrainArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto kind = parse_classifier_kind(args.classifier);
    if (!kind) throw UsageError("unknown classifier '" + args.classifier + "'");
    if (args.out_model.empty()) throw UsageError("--out is required");
    const auto train = load(args.data);
    const auto t0 = std::chrono::steady_clock::now();
    const auto bundle = train_bundle(train, *kind, args.config);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    save_bundle(args.out_model, bundle);
    const auto report = evaluate_bundle(bundle, train);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "trained %s on %zu examples (%zu features) in %.2fs; training accuracy %.4f\n",
                  std::string(to_string(*kind)).c_str(), train.size(), bundle.vectorizer.size(),
                  secs, report.accuracy);
    out << buf;
    return kOk;
  });
}

inline int cmd_evaluate(const std::filesystem::path& model, const DataSource& data, bool kv,
                        std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto bundle = load_bundle(model);
    const auto ds = load(data);
    const auto report = evaluate_bundle(bundle, ds);
    print_warnings(report, err);
    out << (kv ? render_kv(report) : render_table(report));
    return kOk;
  });
}

/// Either a single --text (prints "label<TAB>score") or a TSV of tweets
/// (writes "id<TAB>label" rows, in input order, to out_path or stdout).
inline int cmd_predict(const std::filesystem::path& model, const std::optional<DataSource>& input,
                       const std::optional<std::string>& text,
                       const std::optional<std::filesystem::path>& out_path, std::ostream& out,
                       std::ostream& err) {
  return guarded(err, [&] {
    if (input.has_value() == text.has_value())
      throw UsageError("predict needs exactly one of --text or an input file");
    const auto bundle = load_bundle(model);
    if (text) {
      const auto p = bundle.predict_text(*text);
      char buf[64];
      std::snprintf(buf, sizeof buf, "\t%.6f\n", p.score);
      out << to_string(p.label) << buf;
      return kOk;
    }
    DataSource s = *input;
    s.schema.label_col.reset();
    const auto ds = load(s);
    std::ofstream file;
    if (out_path) {
      file.open(*out_path, std::ios::binary);
      if (!file) throw DataError("cannot write '" + out_path->string() + "'");
    }
    std::ostream& sink = out_path ? static_cast<std::ostream&>(file) : out;
    sink << "id\tlabel\n";
    for (const auto& ex : ds.examples)
      sink << ex.id << '\t' << to_string(bundle.predict_text(ex.text).label) << '\n';
    return kOk;
  });
}

inline int cmd_compare(const DataSource& train, const DataSource& eval,
                       const TrainingConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto rows = run_compare(load(train), load(eval), cfg);
    for (const auto& r : rows)
      for (const auto& w : r.report.warnings) err << "warning: " << r.system << ": " << w << '\n';
    out << render_compare(rows);
    return kOk;
  });
}

} // namespace offeval::cli

#endif
