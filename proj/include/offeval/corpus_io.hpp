#ifndef OFFEVAL_CORPUS_IO_HPP
#define OFFEVAL_CORPUS_IO_HPP

#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "offeval/errors.hpp"
#include "offeval/label.hpp"
#include "offeval/unicode.hpp"

namespace offeval {

struct LabeledExample {
  std::string id;
  std::string text;
  std::optional<Label> label;

  bool operator==(const LabeledExample&) const = default;
};

/// A named split (train / dev / test) in file order.
struct Dataset {
  std::string name;
  std::vector<LabeledExample> examples;

  std::size_t size() const noexcept { return examples.size(); }
  bool empty() const noexcept { return examples.empty(); }
  bool operator==(const Dataset&) const = default;
};

struct ClassCounts {
  std::size_t off = 0;
  std::size_t not_off = 0;
  std::size_t total = 0;

  bool operator==(const ClassCounts&) const = default;
};

/// Column mapping. With a header the entries are column names; for
/// header-less files they are zero-based column positions ("0", "1", ...).
/// An empty or absent label column means the split is unlabeled.
struct Schema {
  std::string id_col = "id";
  std::string text_col = "tweet";
  std::optional<std::string> label_col = "subtask_a";

  bool has_label() const { return label_col.has_value() && !label_col->empty(); }
};

namespace detail {

inline std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

inline std::size_t resolve_column(const std::string& col,
                                  const std::vector<std::string_view>& header,
                                  bool has_header, const std::string& source) {
  if (has_header) {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == col) return i;
    throw DataError(source + ": column '" + col + "' not found in header");
  }
  std::size_t pos = 0;
  const auto* first = col.data();
  const auto* last = col.data() + col.size();
  auto [ptr, ec] = std::from_chars(first, last, pos);
  if (ec != std::errc{} || ptr != last)
    throw DataError(source + ": header-less files need numeric column positions, got '" +
                    col + "'");
  if (pos >= header.size())
    throw DataError(source + ": column position " + col + " out of range");
  return pos;
}

inline void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

} // namespace detail

/// Reads a tab-separated split. Rows keep file order; blank lines are skipped.
inline Dataset load_tsv(std::istream& in, const Schema& schema, bool has_header = true,
                        std::string name = "dataset") {
  Dataset ds;
  ds.name = std::move(name);
  const std::string& src = ds.name;

  std::string line;
  std::size_t line_no = 0;
  std::size_t expected_cols = 0;
  std::size_t id_idx = 0, text_idx = 0, label_idx = 0;
  bool resolved = false;
  std::unordered_set<std::string> seen;

  auto resolve = [&](const std::vector<std::string_view>& first_row) {
    expected_cols = first_row.size();
    id_idx = detail::resolve_column(schema.id_col, first_row, has_header, src);
    text_idx = detail::resolve_column(schema.text_col, first_row, has_header, src);
    if (schema.has_label())
      label_idx = detail::resolve_column(*schema.label_col, first_row, has_header, src);
    resolved = true;
  };

  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (line.empty()) continue;
    const auto fields = detail::split_tabs(line);
    if (!resolved) {
      resolve(fields);
      if (has_header) continue;
    }
    const auto at = [&] { return src + ":" + std::to_string(line_no) + ": "; };
    if (fields.size() != expected_cols)
      throw DataError(at() + "expected " + std::to_string(expected_cols) + " columns, found " +
                      std::to_string(fields.size()));
    LabeledExample ex;
    ex.id = std::string(fields[id_idx]);
    ex.text = std::string(fields[text_idx]);
    if (!unicode::is_valid_utf8(ex.id) || !unicode::is_valid_utf8(ex.text))
      throw DataError(at() + "invalid UTF-8");
    if (ex.text.empty()) throw DataError(at() + "empty text for id '" + ex.id + "'");
    if (schema.has_label()) {
      try {
        ex.label = parse_label(fields[label_idx]);
      } catch (const DataError& e) {
        throw DataError(at() + e.what());
      }
    }
    if (!seen.insert(ex.id).second) throw DataError(at() + "duplicate id '" + ex.id + "'");
    ds.examples.push_back(std::move(ex));
  }
  return ds;
}

inline Dataset load_tsv(const std::filesystem::path& path, const Schema& schema,
                        bool has_header = true) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open dataset '" + path.string() + "'");
  return load_tsv(in, schema, has_header, path.filename().string());
}

/// Writes a header line plus one row per example. The schema's column names
/// become the header; labels are written iff the schema has a label column.
inline void write_tsv(std::ostream& out, const Dataset& ds, const Schema& schema) {
  out << schema.id_col << '\t' << schema.text_col;
  if (schema.has_label()) out << '\t' << *schema.label_col;
  out << '\n';
  for (const auto& ex : ds.examples) {
    for (const std::string* f : {&ex.id, &ex.text})
      if (f->find_first_of("\t\r\n") != std::string::npos)
        throw DataError("field of id '" + ex.id + "' contains a tab or line break");
    out << ex.id << '\t' << ex.text;
    if (schema.has_label()) {
      if (!ex.label) throw DataError("example '" + ex.id + "' has no label");
      out << '\t' << to_string(*ex.label);
    }
    out << '\n';
  }
}

inline void write_tsv(const std::filesystem::path& path, const Dataset& ds,
                      const Schema& schema) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  write_tsv(out, ds, schema);
}

/// Per-class counts; every example must carry a label.
inline ClassCounts dataset_stats(const Dataset& ds) {
  ClassCounts c;
  for (const auto& ex : ds.examples) {
    if (!ex.label) throw DataError("labels required: example '" + ex.id + "' is unlabeled");
    (*ex.label == Label::OFF ? c.off : c.not_off) += 1;
  }
  c.total = c.off + c.not_off;
  return c;
}

/// Gold labels in dataset order.
inline std::vector<Label> labels_of(const Dataset& ds) {
  std::vector<Label> y;
  y.reserve(ds.size());
  for (const auto& ex : ds.examples) {
    if (!ex.label) throw DataError("labels required: example '" + ex.id + "' is unlabeled");
    y.push_back(*ex.label);
  }
  return y;
}

} // namespace offeval

#endif
