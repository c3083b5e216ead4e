#ifndef OFFEVAL_METRICS_HPP
#define OFFEVAL_METRICS_HPP

#include <cstddef>
#include <cstdio>
#include <span>
#include <string>
#include <vector>

#include "offeval/errors.hpp"
#include "offeval/label.hpp"

namespace offeval {

/// OFF is the positive class.
struct ConfusionMatrix {
  std::size_t tp_off = 0;
  std::size_t fp_off = 0;
  std::size_t fn_off = 0;
  std::size_t tn_off = 0;

  std::size_t total() const noexcept { return tp_off + fp_off + fn_off + tn_off; }
  bool operator==(const ConfusionMatrix&) const = default;
};

struct ClassScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  bool operator==(const ClassScores&) const = default;
};

struct EvalReport {
  ClassScores off;
  ClassScores not_off;
  double macro_f1 = 0.0;
  double accuracy = 0.0;
  ConfusionMatrix counts;
  /// One entry per 0/0 that was defined as 0.
  std::vector<std::string> warnings;
};

namespace detail {

inline double ratio_or_zero(double num, double den, const char* what,
                            std::vector<std::string>& warnings) {
  if (den == 0.0) {
    warnings.emplace_back(std::string(what) + " is 0/0, reported as 0");
    return 0.0;
  }
  return num / den;
}

inline ClassScores class_scores(std::size_t tp, std::size_t fp, std::size_t fn,
                                const std::string& cls, std::vector<std::string>& warnings) {
  ClassScores s;
  s.precision = ratio_or_zero(double(tp), double(tp + fp), (cls + " precision").c_str(), warnings);
  s.recall = ratio_or_zero(double(tp), double(tp + fn), (cls + " recall").c_str(), warnings);
  s.f1 = ratio_or_zero(2.0 * s.precision * s.recall, s.precision + s.recall,
                       (cls + " F1").c_str(), warnings);
  return s;
}

} // namespace detail

/// Per-class precision / recall / F1 and their unweighted (macro) mean.
inline EvalReport evaluate(std::span<const Label> preds, std::span<const Label> gold) {
  if (preds.size() != gold.size())
    throw DataError("prediction/gold length mismatch: " + std::to_string(preds.size()) +
                    " vs " + std::to_string(gold.size()));
  if (preds.empty()) throw DataError("cannot evaluate an empty prediction set");
  EvalReport r;
  auto& c = r.counts;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    const bool p = preds[i] == Label::OFF;
    const bool g = gold[i] == Label::OFF;
    if (p && g) ++c.tp_off;
    else if (p) ++c.fp_off;
    else if (g) ++c.fn_off;
    else ++c.tn_off;
  }
  r.off = detail::class_scores(c.tp_off, c.fp_off, c.fn_off, "OFF", r.warnings);
  r.not_off = detail::class_scores(c.tn_off, c.fn_off, c.fp_off, "NOT", r.warnings);
  r.macro_f1 = (r.off.f1 + r.not_off.f1) / 2.0;
  r.accuracy = double(c.tp_off + c.tn_off) / double(c.total());
  return r;
}

/// Fixed-order human-readable table.
inline std::string render_table(const EvalReport& r) {
  char buf[128];
  std::string out = "class   precision  recall     f1\n";
  std::snprintf(buf, sizeof buf, "OFF     %-10.4f %-10.4f %.4f\n", r.off.precision, r.off.recall,
                r.off.f1);
  out += buf;
  std::snprintf(buf, sizeof buf, "NOT     %-10.4f %-10.4f %.4f\n", r.not_off.precision,
                r.not_off.recall, r.not_off.f1);
  out += buf;
  std::snprintf(buf, sizeof buf, "macro-F1 %.4f   accuracy %.4f\n", r.macro_f1, r.accuracy);
  out += buf;
  std::snprintf(buf, sizeof buf, "confusion (OFF positive): tp=%zu fp=%zu fn=%zu tn=%zu\n",
                r.counts.tp_off, r.counts.fp_off, r.counts.fn_off, r.counts.tn_off);
  out += buf;
  return out;
}

/// One "key value" pair per line, for scripts.
inline std::string render_kv(const EvalReport& r) {
  std::string out;
  char buf[96];
  auto put = [&](const char* key, double v) {
    std::snprintf(buf, sizeof buf, "%s %.6f\n", key, v);
    out += buf;
  };
  auto put_count = [&](const char* key, std::size_t v) {
    std::snprintf(buf, sizeof buf, "%s %zu\n", key, v);
    out += buf;
  };
  put("off_precision", r.off.precision);
  put("off_recall", r.off.recall);
  put("off_f1", r.off.f1);
  put("not_precision", r.not_off.precision);
  put("not_recall", r.not_off.recall);
  put("not_f1", r.not_off.f1);
  put("macro_f1", r.macro_f1);
  put("accuracy", r.accuracy);
  put_count("tp_off", r.counts.tp_off);
  put_count("fp_off", r.counts.fp_off);
  put_count("fn_off", r.counts.fn_off);
  put_count("tn_off", r.counts.tn_off);
  return out;
}

} // namespace offeval

#endif
