#include "ftsel/binning.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ftsel {

CandidateThresholds candidate_thresholds(double feature_min, double feature_max,
                                         const BinningConfig& config) {
  if (config.n_bins < 2) throw std::invalid_argument("bins must be >= 2");
  if (!std::isfinite(feature_min) || !std::isfinite(feature_max) || feature_min > feature_max)
    throw std::invalid_argument("invalid feature range");
  CandidateThresholds out;
  out.feature_min = feature_min;
  out.feature_max = feature_max;
  if (feature_min == feature_max) return out;
  const double range = feature_max - feature_min;
  const double bins = static_cast<double>(config.n_bins);
  out.thresholds.reserve(config.n_bins - 1);
  for (std::size_t b = 1; b < config.n_bins; ++b)
    out.thresholds.push_back(feature_min + (static_cast<double>(b) / bins) * range);
  return out;
}

std::size_t BinHistogram::bin_index(double x) const {
  if (thresholds_.degenerate()) return n_bins_ - 1;
  const auto& t = thresholds_.thresholds;
  return static_cast<std::size_t>(std::upper_bound(t.begin(), t.end(), x) - t.begin());
}

BinHistogram build_histogram(std::span<const double> feature_column, const Target& target,
                             const BinningConfig& config) {
  if (feature_column.size() != target.size())
    throw std::invalid_argument("feature/target length mismatch");
  if (feature_column.size() < 2) throw std::invalid_argument("need at least 2 samples");

  double lo = feature_column[0];
  double hi = feature_column[0];
  for (double v : feature_column) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite feature value");
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }

  BinHistogram h;
  h.kind_ = target.kind();
  h.n_bins_ = config.n_bins;
  h.thresholds_ = candidate_thresholds(lo, hi, config);
  h.total_count_ = static_cast<std::int64_t>(feature_column.size());

  if (target.kind() == Target::Kind::categorical) {
    h.n_classes_ = target.n_classes();
    h.class_counts_.assign(h.n_bins_ * static_cast<std::size_t>(h.n_classes_), 0);
    const auto labels = target.labels();
    for (std::size_t n = 0; n < feature_column.size(); ++n) {
      const std::size_t bin = h.bin_index(feature_column[n]);
      ++h.class_counts_[bin * static_cast<std::size_t>(h.n_classes_) +
                        static_cast<std::size_t>(labels[n])];
    }
  } else {
    h.moments_.assign(h.n_bins_, BinMoments{});
    const auto values = target.values();
    for (std::size_t n = 0; n < feature_column.size(); ++n) {
      BinMoments& m = h.moments_[h.bin_index(feature_column[n])];
      ++m.count;
      m.sum += values[n];
      m.sum_sq += values[n] * values[n];
    }
  }
  return h;
}

}  // namespace ftsel
