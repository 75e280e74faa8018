#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ftsel/errors.hpp"

namespace ftsel {

// Dense sample-by-feature table, stored column-major so per-feature scans are
// contiguous. Validated on construction (finite entries, at least 2 samples
// and 1 feature) and immutable afterwards, so it is safe to share across
// concurrent readers.
class FeatureMatrix {
 public:
  // `values` holds column i at [i * n_samples, (i + 1) * n_samples).
  FeatureMatrix(std::size_t n_samples, std::size_t n_features, std::vector<double> values);

  static FeatureMatrix from_columns(const std::vector<std::vector<double>>& columns);

  std::size_t n_samples() const { return n_samples_; }
  std::size_t n_features() const { return n_features_; }

  double operator()(std::size_t row, std::size_t col) const {
    return values_[col * n_samples_ + row];
  }

  std::span<const double> column(std::size_t i) const {
    return {values_.data() + i * n_samples_, n_samples_};
  }

  // Full column-major storage.
  std::span<const double> data() const { return values_; }

 private:
  std::size_t n_samples_;
  std::size_t n_features_;
  std::vector<double> values_;
};

// Supervision target: dense class ids for classification or real values for
// regression. Categorical ids are contiguous in [0, n_classes), n_classes >= 2,
// and every class occurs at least once. Immutable after construction.
class Target {
 public:
  enum class Kind { categorical, continuous };

  // `class_names` maps id -> original label text; may be empty.
  static Target categorical(std::vector<int> labels, int n_classes,
                            std::vector<std::string> class_names = {});
  static Target continuous(std::vector<double> values);

  Kind kind() const { return kind_; }
  std::size_t size() const {
    return kind_ == Kind::categorical ? labels_.size() : values_.size();
  }
  int n_classes() const { return n_classes_; }
  std::span<const int> labels() const { return labels_; }
  std::span<const double> values() const { return values_; }
  const std::vector<std::string>& class_names() const { return class_names_; }

 private:
  Target() = default;

  Kind kind_ = Kind::continuous;
  int n_classes_ = 0;
  std::vector<int> labels_;
  std::vector<double> values_;
  std::vector<std::string> class_names_;
};

struct FeatureStats {
  double min = 0;
  double max = 0;
  double mean = 0;
  double variance = 0;  // unbiased sample variance (N-1 denominator)
};

struct DatasetSummary {
  std::vector<FeatureStats> features;
  std::vector<std::int64_t> class_counts;  // empty for continuous targets
};

// A loaded delimited file: the numeric matrix plus everything needed to write
// derived files (header names and the label column's original text).
struct LoadedDataset {
  FeatureMatrix matrix;
  Target target;
  std::vector<std::string> feature_names;
  std::string label_name;
  std::vector<std::string> raw_labels;  // label cells verbatim, row order
};

// Loads a UTF-8 delimited text file with a header row, one sample per row.
// `label_column` is matched against header names first; when nothing matches
// and it parses as a non-negative integer it is taken as a column index.
// Categorical labels are mapped to dense ids in order of first appearance.
LoadedDataset load_csv(const std::filesystem::path& path, const std::string& label_column,
                       Target::Kind target_kind, char delimiter = ',');

DatasetSummary summarize(const FeatureMatrix& matrix, const Target& target);

// Returns a copy with i.i.d. N(0, sigma^2) noise added entrywise, drawn from
// Rng(seed) in column-major order. sigma = 0 returns the input unchanged.
FeatureMatrix add_gaussian_noise(const FeatureMatrix& matrix, double sigma, std::uint64_t seed);

}  // namespace ftsel
