#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ftsel/dataset.hpp"

namespace ftsel {

struct BinningConfig {
  std::size_t n_bins = 16;  // B >= 2
};

// The B-1 equally spaced split candidates over a feature's observed range:
// thresholds[b-1] = min + (b/B) * (max - min) for b = 1..B-1. Empty when the
// range is degenerate (min == max). For B = 2^j the candidate set is a subset
// of the candidate set for 2B, bit-exactly.
struct CandidateThresholds {
  std::vector<double> thresholds;
  double feature_min = 0;
  double feature_max = 0;

  bool degenerate() const { return thresholds.empty(); }
};

CandidateThresholds candidate_thresholds(double feature_min, double feature_max,
                                         const BinningConfig& config);

struct BinMoments {
  std::int64_t count = 0;
  double sum = 0;
  double sum_sq = 0;
};

// Per-bin sufficient statistics of one feature column: class counts for
// categorical targets, (count, sum, sum of squares) of the target value for
// continuous ones. Prefix sums over bins reproduce the left-subset statistics
// of every candidate threshold under the split rule "x < threshold goes left,
// x >= threshold goes right".
class BinHistogram {
 public:
  Target::Kind kind() const { return kind_; }
  std::size_t n_bins() const { return n_bins_; }
  int n_classes() const { return n_classes_; }
  std::int64_t total_count() const { return total_count_; }
  const CandidateThresholds& thresholds() const { return thresholds_; }

  std::int64_t class_count(std::size_t bin, int cls) const {
    return class_counts_[bin * static_cast<std::size_t>(n_classes_) + static_cast<std::size_t>(cls)];
  }
  const BinMoments& moments(std::size_t bin) const { return moments_[bin]; }

  // Bin of a value: the number of candidate thresholds <= x. Equal to
  // floor(B * (x - min) / (max - min)) clamped to [0, B-1] in exact
  // arithmetic; counting thresholds keeps prefix sums consistent with the
  // strict-< partition even where that expression rounds differently.
  // A degenerate range maps every sample to the top bin.
  std::size_t bin_index(double x) const;

 private:
  friend BinHistogram build_histogram(std::span<const double> feature_column,
                                      const Target& target, const BinningConfig& config);
  BinHistogram() = default;

  Target::Kind kind_ = Target::Kind::categorical;
  std::size_t n_bins_ = 0;
  int n_classes_ = 0;
  std::int64_t total_count_ = 0;
  CandidateThresholds thresholds_;
  std::vector<std::int64_t> class_counts_;  // bin-major, n_bins * n_classes
  std::vector<BinMoments> moments_;         // n_bins entries
};

// Single pass over the column; every sample lands in exactly one bin.
BinHistogram build_histogram(std::span<const double> feature_column, const Target& target,
                             const BinningConfig& config);

}  // namespace ftsel
