// offeval: offensive-tweet classification pipeline (stats, preprocess, train,
// evaluate, predict, compare).

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "offeval/commands.hpp"

namespace {

using offeval::cli::DataSource;

struct SchemaFlags {
  std::string id = "id";
  std::string text = "tweet";
  std::string label = "subtask_a";
  bool no_header = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--id-col", id, "id column name (or position without header)")
        ->capture_default_str();
    cmd->add_option("--text-col", text, "text column")->capture_default_str();
    cmd->add_option("--label-col", label, "label column; empty for unlabeled files")
        ->capture_default_str();
    cmd->add_flag("--no-header", no_header, "file has no header; columns are positions");
  }

  DataSource source(const std::string& path) const {
    DataSource s;
    s.path = path;
    s.schema.id_col = id;
    s.schema.text_col = text;
    if (label.empty())
      s.schema.label_col.reset();
    else
      s.schema.label_col = label;
    s.has_header = !no_header;
    return s;
  }
};

struct HyperFlags {
  offeval::TrainingConfig cfg;
  std::optional<int> epochs;
  std::optional<double> lr;
  std::optional<double> alpha;
  std::optional<std::uint64_t> seed;

  void attach(CLI::App* cmd) {
    cmd->add_option("--ngram-min", cfg.ngrams.n_min, "smallest n-gram")->capture_default_str();
    cmd->add_option("--ngram-max", cfg.ngrams.n_max, "largest n-gram")->capture_default_str();
    cmd->add_option("--epochs", epochs, "epochs for SGD trainers (linear 50, MLP 200)");
    cmd->add_option("--lr", lr, "initial learning rate (0.1)");
    cmd->add_option("--alpha", alpha, "L2 strength (1e-4)");
    cmd->add_option("--hidden", cfg.hidden, "MLP hidden units")->capture_default_str();
    cmd->add_option("--batch", cfg.batch, "MLP mini-batch size")->capture_default_str();
    cmd->add_option("--seed", seed, "random seed (42)");
  }

  offeval::TrainingConfig resolve() const {
    auto c = cfg;
    for (auto* s : {&c.linear, &c.mlp}) {
      if (epochs) s->epochs = *epochs;
      if (lr) s->learning_rate = *lr;
      if (alpha) s->l2_alpha = *alpha;
      if (seed) s->seed = *seed;
    }
    return c;
  }
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Offensive tweet detection: TF-IDF n-grams with linear, SVM, MLP and voting "
               "classifiers"};
  app.footer(offeval::cli::defaults_table());
  app.require_subcommand(1);

  auto& out = std::cout;
  auto& err = std::cerr;
  int code = 0;

  // stats
  auto* stats = app.add_subcommand("stats", "per-class counts of a labeled TSV file");
  std::string stats_path;
  SchemaFlags stats_schema;
  stats->add_option("data", stats_path, "dataset TSV")->required();
  stats_schema.attach(stats);
  stats->callback([&] { code = offeval::cli::cmd_stats(stats_schema.source(stats_path), out, err); });

  // preprocess
  auto* prep = app.add_subcommand("preprocess", "print normalized tokens");
  std::optional<std::string> prep_text;
  std::string prep_path;
  SchemaFlags prep_schema;
  prep->add_option("--text", prep_text, "single tweet");
  prep->add_option("input", prep_path, "TSV of tweets");
  prep_schema.attach(prep);
  prep->callback([&] {
    std::optional<DataSource> src;
    if (!prep_path.empty()) src = prep_schema.source(prep_path);
    code = offeval::cli::cmd_preprocess(prep_text, src, out, err);
  });

  // train
  auto* train = app.add_subcommand("train", "fit vectorizer and classifier, write a model file");
  std::string train_path;
  SchemaFlags train_schema;
  HyperFlags train_hyper;
  offeval::cli::TrainArgs train_args;
  std::string train_out;
  train->add_option("data", train_path, "training TSV")->required();
  train->add_option("--classifier", train_args.classifier, "linear | svm | mlp | voting")
      ->capture_default_str();
  train->add_option("--out,--model", train_out, "model file to write")->required();
  train_schema.attach(train);
  train_hyper.attach(train);
  train->callback([&] {
    train_args.data = train_schema.source(train_path);
    train_args.config = train_hyper.resolve();
    train_args.out_model = train_out;
    code = offeval::cli::cmd_train(train_args, out, err);
  });

  // evaluate
  auto* eval = app.add_subcommand("evaluate", "per-class P/R/F1 and macro-F1 on a labeled TSV");
  std::string eval_model, eval_path;
  bool eval_kv = false;
  SchemaFlags eval_schema;
  eval->add_option("--model", eval_model, "model file")->required();
  eval->add_option("data", eval_path, "labeled TSV")->required();
  eval->add_flag("--kv", eval_kv, "key/value output for scripts");
  eval_schema.attach(eval);
  eval->callback([&] {
    code = offeval::cli::cmd_evaluate(eval_model, eval_schema.source(eval_path), eval_kv, out,
                                      err);
  });

  // predict
  auto* pred = app.add_subcommand("predict", "label tweets with a trained model");
  std::string pred_model, pred_path;
  std::optional<std::string> pred_text, pred_out;
  SchemaFlags pred_schema;
  pred->add_option("--model", pred_model, "model file")->required();
  pred->add_option("input", pred_path, "TSV of tweets");
  pred->add_option("--text", pred_text, "single tweet");
  pred->add_option("--out", pred_out, "output TSV (default stdout)");
  pred_schema.attach(pred);
  pred->callback([&] {
    std::optional<DataSource> src;
    if (!pred_path.empty()) src = pred_schema.source(pred_path);
    std::optional<std::filesystem::path> op;
    if (pred_out) op = *pred_out;
    code = offeval::cli::cmd_predict(pred_model, src, pred_text, op, out, err);
  });

  // compare
  auto* cmp = app.add_subcommand("compare", "train all four systems and tabulate macro-F1");
  std::string cmp_train, cmp_eval;
  SchemaFlags cmp_schema;
  HyperFlags cmp_hyper;
  cmp->add_option("train", cmp_train, "training TSV")->required();
  cmp->add_option("eval", cmp_eval, "evaluation TSV")->required();
  cmp_schema.attach(cmp);
  cmp_hyper.attach(cmp);
  cmp->callback([&] {
    code = offeval::cli::cmd_compare(cmp_schema.source(cmp_train), cmp_schema.source(cmp_eval),
                                     cmp_hyper.resolve(), out, err);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return offeval::cli::kUsage;
  }
  return code;
}
