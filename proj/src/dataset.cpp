#include "ftsel/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "ftsel/rng.hpp"

namespace ftsel {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view cell, double& out) {
  cell = trim(cell);
  if (cell.empty()) return false;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (*first == '+') ++first;  // from_chars rejects a leading plus
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

std::vector<std::string> split_line(const std::string& line, char delimiter) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(delimiter, start);
    if (pos == std::string::npos) {
      cells.emplace_back(line.substr(start));
      break;
    }
    cells.emplace_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return cells;
}

std::string cell_position(std::size_t row, std::size_t col) {
  std::ostringstream os;
  os << "(" << row << "," << col << ")";
  return os.str();
}

}  // namespace

FeatureMatrix::FeatureMatrix(std::size_t n_samples, std::size_t n_features,
                             std::vector<double> values)
    : n_samples_(n_samples), n_features_(n_features), values_(std::move(values)) {
  if (n_samples_ < 2) throw DataError("fewer than 2 samples");
  if (n_features_ < 1) throw DataError("no feature columns");
  if (values_.size() != n_samples_ * n_features_)
    throw std::invalid_argument("value buffer size does not match n_samples * n_features");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]))
      throw DataError("non-finite value at " +
                      cell_position(i % n_samples_, i / n_samples_));
  }
}

FeatureMatrix FeatureMatrix::from_columns(const std::vector<std::vector<double>>& columns) {
  if (columns.empty()) throw DataError("no feature columns");
  const std::size_t n = columns.front().size();
  std::vector<double> values;
  values.reserve(n * columns.size());
  for (const auto& col : columns) {
    if (col.size() != n) throw std::invalid_argument("columns have unequal lengths");
    values.insert(values.end(), col.begin(), col.end());
  }
  return FeatureMatrix(n, columns.size(), std::move(values));
}

Target Target::categorical(std::vector<int> labels, int n_classes,
                           std::vector<std::string> class_names) {
  if (labels.empty()) throw DataError("empty target");
  if (n_classes < 2) throw DataError("categorical target with < 2 distinct labels");
  if (!class_names.empty() && class_names.size() != static_cast<std::size_t>(n_classes))
    throw std::invalid_argument("class_names size must equal n_classes");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n_classes), 0);
  for (int id : labels) {
    if (id < 0 || id >= n_classes) throw DataError("class id out of range");
    ++counts[static_cast<std::size_t>(id)];
  }
  for (std::int64_t c : counts)
    if (c == 0) throw DataError("a class id in [0, n_classes) never occurs");
  Target t;
  t.kind_ = Kind::categorical;
  t.n_classes_ = n_classes;
  t.labels_ = std::move(labels);
  t.class_names_ = std::move(class_names);
  return t;
}

Target Target::continuous(std::vector<double> values) {
  if (values.empty()) throw DataError("empty target");
  for (double v : values)
    if (!std::isfinite(v)) throw DataError("non-finite target value");
  Target t;
  t.kind_ = Kind::continuous;
  t.values_ = std::move(values);
  return t;
}

LoadedDataset load_csv(const std::filesystem::path& path, const std::string& label_column,
                       Target::Kind target_kind, char delimiter) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path.string());

  std::string line;
  if (!std::getline(in, line)) throw DataError("empty file: " + path.string());
  std::vector<std::string> header = split_line(line, delimiter);
  for (auto& name : header) name = std::string(trim(name));
  const std::size_t n_cols = header.size();

  // Resolve the label column: exact header match wins, then a numeric index.
  std::size_t label_idx = n_cols;
  for (std::size_t j = 0; j < n_cols; ++j) {
    if (header[j] == label_column) {
      label_idx = j;
      break;
    }
  }
  if (label_idx == n_cols) {
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(label_column.data(),
                                     label_column.data() + label_column.size(), idx);
    if (ec == std::errc{} && ptr == label_column.data() + label_column.size() && idx < n_cols)
      label_idx = idx;
  }
  if (label_idx == n_cols) throw DataError("label column absent: " + label_column);
  if (n_cols < 2) throw DataError("no feature columns");

  std::vector<std::vector<double>> columns(n_cols - 1);
  std::vector<std::string> raw_labels;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<std::string> cells = split_line(line, delimiter);
    if (cells.size() != n_cols) {
      std::ostringstream os;
      os << "row " << row << " has " << cells.size() << " cells, expected " << n_cols;
      throw DataError(os.str());
    }
    std::size_t out_col = 0;
    for (std::size_t j = 0; j < n_cols; ++j) {
      if (j == label_idx) {
        raw_labels.emplace_back(trim(cells[j]));
        continue;
      }
      double v = 0;
      if (!parse_double(cells[j], v))
        throw DataError("non-numeric value \"" + std::string(trim(cells[j])) + "\" at " +
                        cell_position(row, j));
      if (!std::isfinite(v)) throw DataError("non-finite value at " + cell_position(row, j));
      columns[out_col].push_back(v);
      ++out_col;
    }
    ++row;
  }
  if (row < 2) throw DataError("fewer than 2 samples");

  std::vector<std::string> feature_names;
  feature_names.reserve(n_cols - 1);
  for (std::size_t j = 0; j < n_cols; ++j)
    if (j != label_idx) feature_names.push_back(header[j]);

  Target target = [&] {
    if (target_kind == Target::Kind::categorical) {
      std::unordered_map<std::string, int> ids;
      std::vector<std::string> class_names;
      std::vector<int> labels;
      labels.reserve(raw_labels.size());
      for (const auto& text : raw_labels) {
        auto [it, inserted] = ids.emplace(text, static_cast<int>(class_names.size()));
        if (inserted) class_names.push_back(text);
        labels.push_back(it->second);
      }
      return Target::categorical(std::move(labels), static_cast<int>(class_names.size()),
                                 std::move(class_names));
    }
    std::vector<double> values;
    values.reserve(raw_labels.size());
    for (std::size_t n = 0; n < raw_labels.size(); ++n) {
      double v = 0;
      if (!parse_double(raw_labels[n], v))
        throw DataError("non-numeric value \"" + raw_labels[n] + "\" at " +
                        cell_position(n, label_idx));
      if (!std::isfinite(v))
        throw DataError("non-finite value at " + cell_position(n, label_idx));
      values.push_back(v);
    }
    return Target::continuous(std::move(values));
  }();

  return LoadedDataset{FeatureMatrix::from_columns(columns), std::move(target),
                       std::move(feature_names), header[label_idx], std::move(raw_labels)};
}

DatasetSummary summarize(const FeatureMatrix& matrix, const Target& target) {
  if (matrix.n_samples() != target.size())
    throw std::invalid_argument("matrix/target length mismatch");
  DatasetSummary summary;
  summary.features.reserve(matrix.n_features());
  const double n = static_cast<double>(matrix.n_samples());
  for (std::size_t i = 0; i < matrix.n_features(); ++i) {
    const auto col = matrix.column(i);
    FeatureStats st;
    st.min = col[0];
    st.max = col[0];
    double sum = 0;
    for (double v : col) {
      st.min = std::min(st.min, v);
      st.max = std::max(st.max, v);
      sum += v;
    }
    st.mean = sum / n;
    double ss = 0;
    for (double v : col) {
      const double d = v - st.mean;
      ss += d * d;
    }
    st.variance = ss / (n - 1.0);
    summary.features.push_back(st);
  }
  if (target.kind() == Target::Kind::categorical) {
    summary.class_counts.assign(static_cast<std::size_t>(target.n_classes()), 0);
    for (int id : target.labels()) ++summary.class_counts[static_cast<std::size_t>(id)];
  }
  return summary;
}

FeatureMatrix add_gaussian_noise(const FeatureMatrix& matrix, double sigma, std::uint64_t seed) {
  if (sigma < 0) throw std::invalid_argument("sigma must be non-negative");
  if (sigma == 0) return matrix;
  Rng rng(seed);
  const auto data = matrix.data();
  std::vector<double> values(data.begin(), data.end());
  for (double& v : values) v += rng.normal(0.0, sigma);
  return FeatureMatrix(matrix.n_samples(), matrix.n_features(), std::move(values));
}

}  // namespace ftsel
